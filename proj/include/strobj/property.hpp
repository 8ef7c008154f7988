// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "strobj/unary.hpp"
#include "strobj/word.hpp"

namespace strobj {

/// Reduced equation system describing a lower string-interval bound. Each
/// field is one component of the product of the constant, prefix, suffix and
/// factor-code lattices; an absent field is that component's top.
///
/// Reduced-form invariants (maintained by basic_reduce):
///  - bottom implies all other fields empty,
///  - a present constant equals prefix and suffix and is covered by factors,
///  - prefix and suffix are factors of some factor-code member,
///  - factors is an antichain.
struct LowerBound {
    bool bottom = false;
    std::optional<Word> constant;
    std::optional<Word> prefix; // non-empty when present
    std::optional<Word> suffix; // non-empty when present
    FactorCode factors;

    static LowerBound make_bottom();
    static LowerBound top();
    static LowerBound of_constant(Word w); // reduced singleton form

    [[nodiscard]] bool is_top() const;
    /// True iff the non-empty word `w` solves every equation of the bound.
    [[nodiscard]] bool admits(const Word& w) const;
    /// Letters occurring in any equation word.
    [[nodiscard]] Alphabet letters() const;

    bool operator==(const LowerBound&) const = default;
};

/// Join in the prefix lattice. An absent argument is the lattice bottom and
/// is absorbed; an absent result means top (no prefix constraint). The suffix
/// lattice mirrors this on reversed words.
std::optional<Word> prefix_join(const std::optional<Word>& p1, const std::optional<Word>& p2);

/// Meet in the prefix lattice: absent arguments are neutral (top); a
/// mismatch yields nullopt with `ok=false`, signalling the empty bound.
struct PrefixMeet {
    bool ok = true;
    std::optional<Word> value;
};
PrefixMeet prefix_meet(const std::optional<Word>& p1, const std::optional<Word>& p2);

/// Componentwise lattice operations followed by basic reduction.
LowerBound bound_join(const LowerBound& b1, const LowerBound& b2);
LowerBound bound_meet(const LowerBound& b1, const LowerBound& b2);

/// The per-bound reduction: collapse component bottoms, check and expand a
/// constant, and fold prefix/suffix into the factor code. Idempotent.
LowerBound basic_reduce(LowerBound b);

/// Lemma-style standalone reduction: over a two-letter alphabet, inserts the
/// unavoidable words of the forms x^k y and y x^k implied by the equations;
/// a no-op for other alphabet sizes. Iterates to fixpoint.
LowerBound standalone_reduce(LowerBound b, std::size_t sigma_size);

/// A single string property: the epsilon tracker plus either an equation
/// bound (non-unary image alphabet) or a unary interval.
struct NonUnaryProp {
    bool eps = false; // epsilon possibly in gamma
    LowerBound bound;

    bool operator==(const NonUnaryProp&) const = default;
};

struct StringPropertyValue {
    std::variant<NonUnaryProp, UnaryInterval> v;

    static StringPropertyValue non_unary(bool eps, LowerBound b);
    static StringPropertyValue unary(UnaryInterval u);

    [[nodiscard]] bool is_unary() const { return std::holds_alternative<UnaryInterval>(v); }
    [[nodiscard]] const NonUnaryProp& nu() const { return std::get<NonUnaryProp>(v); }
    [[nodiscard]] NonUnaryProp& nu() { return std::get<NonUnaryProp>(v); }
    [[nodiscard]] const UnaryInterval& un() const { return std::get<UnaryInterval>(v); }
    [[nodiscard]] UnaryInterval& un() { return std::get<UnaryInterval>(v); }

    /// Gamma is empty: no epsilon and no non-empty member.
    [[nodiscard]] bool gamma_empty() const;
    [[nodiscard]] bool is_top() const;
    /// Membership of a concrete image word in gamma.
    [[nodiscard]] bool admits(const Word& w) const;

    bool operator==(const StringPropertyValue&) const = default;
};

StringPropertyValue prop_join(const StringPropertyValue& a, const StringPropertyValue& b);
StringPropertyValue prop_meet(const StringPropertyValue& a, const StringPropertyValue& b);

/// Lemma-style cross-reduction threshold: when the length lower bound is at
/// least this value, the value and length are already reduced against each
/// other and exact re-enumeration can be skipped.
std::uint64_t cross_reduction_threshold(const LowerBound& b);

/// Exact value/length reduction by bounded enumeration. When the length has
/// a finite upper bound and the candidate space fits the budget, enumerates
/// gamma exactly and recomputes the bound components and the exact length
/// interval; otherwise returns the inputs unchanged. Never changes gamma.
struct PerfectReduceResult {
    bool eps = false;
    LowerBound bound;
    UnaryInterval length;
};
PerfectReduceResult perfect_reduce_budgeted(bool eps, const LowerBound& b,
                                            const UnaryInterval& len, const Alphabet& sigma,
                                            std::uint64_t budget);

} // namespace strobj
