// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strobj {

/// A letter is a Unicode code point; words compare by numeric code order.
using Letter = char32_t;
using Word = std::u32string;

/// Reserved code-0 letter that unary length images are written in. It never
/// occurs in user words and is implicitly part of every session alphabet.
inline constexpr Letter kLengthLetter = U'\0';

/// Thrown for user-facing diagnostics (bad input, bad config, guardrails).
/// Internal invariant violations use std::logic_error instead.
class DiagError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define STROBJ_REQUIRE(cond, msg)                                                                  \
    do {                                                                                           \
        if (!(cond)) {                                                                             \
            throw std::logic_error(std::string("internal invariant: ") + (msg));                   \
        }                                                                                          \
    } while (0)

/// Session alphabet: the ordered finite set of letters every word is drawn
/// from. Declared up front because reduction behaviour depends on its size.
struct Alphabet {
    std::vector<Letter> letters; // sorted, unique, all > 0

    static Alphabet of(const Word& ls);

    [[nodiscard]] bool contains(Letter c) const;
    [[nodiscard]] std::size_t size() const { return letters.size(); }
    [[nodiscard]] bool empty() const { return letters.empty(); }

    /// Union with every letter of `w`; used when inferring the alphabet.
    void absorb(const Word& w);

    bool operator==(const Alphabet&) const = default;
};

/// True iff `needle` occurs contiguously in `hay`; the empty word occurs
/// everywhere.
bool is_factor(const Word& needle, const Word& hay);

/// Length of the longest suffix of `u` that is a prefix of `v`.
std::size_t longest_overlap(const Word& u, const Word& v);

/// All distinct non-empty factors of `w`, sorted.
std::vector<Word> all_factors(const Word& w);

/// Antichain of non-empty words under the factor relation. Members are kept
/// sorted so equal codes compare equal structurally.
struct FactorCode {
    std::vector<Word> members;

    static FactorCode of(std::initializer_list<Word> ws);

    [[nodiscard]] bool empty() const { return members.empty(); }
    [[nodiscard]] bool contains_factor_of_member(const Word& w) const;

    bool operator==(const FactorCode&) const = default;
};

/// Insert `w` keeping the antichain invariant: a no-op when `w` is already a
/// factor of a member, otherwise `w` supersedes every member that is a factor
/// of it.
FactorCode antichain_insert(FactorCode code, const Word& w);

/// The factor-code join: maximal words that are factors of some member of `a`
/// and of some member of `b`. Empty result is the top of the lattice.
FactorCode common_maximal_factors(const FactorCode& a, const FactorCode& b);

// UTF-8 boundary helpers for file and JSON I/O.
Word utf8_decode(std::string_view s);
std::string utf8_encode(const Word& w);

} // namespace strobj
