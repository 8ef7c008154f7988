// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "strobj/object.hpp"

namespace strobj {

/// Brute-force ground truth at desk scale: bounded concretization, best
/// abstraction of finite sets, unavoidability testing, and the randomized
/// harness the property suites are built on.

inline constexpr std::size_t kGammaGuardrail = 12;

struct BoundedLanguage {
    std::vector<Word> words; // sorted, unique; epsilon included when admitted
    std::size_t max_len = 0;

    [[nodiscard]] bool contains(const Word& w) const;
};

/// Exactly the words of length <= max_len satisfying every constraint of the
/// object. Throws on a guardrail violation.
BoundedLanguage enumerate_gamma(const Session& s, const StringObject& o, std::size_t max_len);
BoundedLanguage enumerate_gamma_prop(const Session& s, const StringPropertyValue& p,
                                     std::size_t max_len);
/// Bounded solutions of a bare lower bound (non-empty words only).
BoundedLanguage enumerate_bound(const Alphabet& sigma, const LowerBound& b, std::size_t max_len);

/// Best abstraction of a finite word set over the session's property set.
StringObject alpha_of_set(const Session& s, const std::vector<Word>& words);
/// Property-level best abstraction (used for morphic images).
StringPropertyValue alpha_of_prop_set(bool unary, const std::vector<Word>& words);

/// Unavoidability of `candidate` in the solutions of `b`.
struct UnavoidableVerdict {
    enum Kind { Unavoidable, WitnessFound, Inconclusive } kind = Inconclusive;
    Word witness; // set when a witness was found
};
UnavoidableVerdict brute_unavoidable(const LowerBound& b, const Word& candidate,
                                     const Alphabet& sigma, std::size_t max_len);

/// Randomized check harness with reproducible seeds and counterexample
/// shrinking (shorter words first, then fewer factors, then fewer letters).
struct CheckResult {
    bool pass = true;
    std::uint64_t trials = 0;
    std::string name;
    std::string counterexample; // human-readable, shrunk
};

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next(std::uint64_t bound); // uniform in [0, bound)
    bool coin() { return next(2) == 1; }

  private:
    std::mt19937_64 engine_;
};

Word random_word(Rng& rng, const Alphabet& sigma, std::size_t max_len);
LowerBound random_reduced_bound(Rng& rng, const Alphabet& sigma, std::size_t members,
                                std::size_t max_word);
StringObject random_reduced_object(const Session& s, Rng& rng, std::size_t max_word);

/// Runs `trial` (returning an empty string on success, a description on
/// failure) `trials` times; reports the first failure.
CheckResult run_check(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                      const std::function<std::string(Rng&)>& trial);

/// Prebuilt suites behind `strobj check`.
std::vector<CheckResult> oracle_suites(std::size_t max_len, std::uint64_t seed,
                                       std::uint64_t trials);

} // namespace strobj
