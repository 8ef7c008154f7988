// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

namespace strobj {

/// Property value over a unary image alphabet: an epsilon flag plus a
/// half-open positive interval of image lengths. The length property and any
/// single-letter-image custom property live here; unary image words are
/// stored as their lengths.
struct UnaryInterval {
    bool bottom = false;
    bool eps = false;        // 0 (the empty image) possible
    bool has_range = false;  // interval [lo, hi) present
    std::uint64_t lo = 0;    // closed, >= 1 when has_range
    std::optional<std::uint64_t> hi; // open; nullopt = +infinity

    static UnaryInterval make_bottom();
    static UnaryInterval eps_only();
    static UnaryInterval top();
    static UnaryInterval exact(std::uint64_t n);
    static UnaryInterval at_least(std::uint64_t n);
    static UnaryInterval range(std::uint64_t lo, std::optional<std::uint64_t> hi,
                               bool eps = false);

    [[nodiscard]] bool is_top() const;
    [[nodiscard]] bool admits(std::uint64_t n) const;
    /// Largest finite length admitted, if the interval is finite.
    [[nodiscard]] std::optional<std::uint64_t> max_finite() const;

    bool operator==(const UnaryInterval&) const = default;
};

/// Join: eps-or plus interval hull. Meet: eps-and plus interval intersection;
/// an empty intersection drops the interval and an all-empty result reduces
/// to bottom.
UnaryInterval unary_join(const UnaryInterval& a, const UnaryInterval& b);
UnaryInterval unary_meet(const UnaryInterval& a, const UnaryInterval& b);

/// Length of a concatenation: the sumset of the two gamma sets, re-abstracted.
UnaryInterval unary_add(const UnaryInterval& a, const UnaryInterval& b);

/// Normalizes a raw flag/interval combination (lo >= hi drops the interval,
/// nothing left collapses to bottom).
UnaryInterval unary_normalize(bool eps, bool has_range, std::uint64_t lo,
                              std::optional<std::uint64_t> hi);

/// Raise the closed lower bound to at least `n`; may collapse to bottom.
UnaryInterval raise_lo(UnaryInterval u, std::uint64_t n);
/// Lower the open upper bound to at most `n`; may collapse to bottom.
UnaryInterval lower_hi(UnaryInterval u, std::uint64_t n);
/// Drop 0 from gamma; may collapse to bottom.
UnaryInterval drop_eps(UnaryInterval u);

} // namespace strobj
