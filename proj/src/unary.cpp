// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/unary.hpp"

#include <algorithm>

namespace strobj {

UnaryInterval UnaryInterval::make_bottom() {
    UnaryInterval u;
    u.bottom = true;
    return u;
}

UnaryInterval UnaryInterval::eps_only() {
    UnaryInterval u;
    u.eps = true;
    return u;
}

UnaryInterval UnaryInterval::top() { return range(1, std::nullopt, true); }

UnaryInterval UnaryInterval::exact(std::uint64_t n) {
    return n == 0 ? eps_only() : range(n, n + 1);
}

UnaryInterval UnaryInterval::at_least(std::uint64_t n) {
    return range(std::max<std::uint64_t>(n, 1), std::nullopt, n == 0);
}

UnaryInterval UnaryInterval::range(std::uint64_t lo, std::optional<std::uint64_t> hi, bool eps) {
    return unary_normalize(eps, true, lo, hi);
}

bool UnaryInterval::is_top() const {
    return !bottom && eps && has_range && lo == 1 && !hi.has_value();
}

bool UnaryInterval::admits(std::uint64_t n) const {
    if (bottom) {
        return false;
    }
    if (n == 0) {
        return eps;
    }
    return has_range && n >= lo && (!hi || n < *hi);
}

std::optional<std::uint64_t> UnaryInterval::max_finite() const {
    if (bottom || !has_range || !hi) {
        return std::nullopt;
    }
    return *hi - 1;
}

UnaryInterval unary_normalize(bool eps, bool has_range, std::uint64_t lo,
                              std::optional<std::uint64_t> hi) {
    UnaryInterval u;
    if (has_range) {
        lo = std::max<std::uint64_t>(lo, 1);
        if (hi && *hi <= lo) {
            has_range = false;
        }
    }
    if (!eps && !has_range) {
        return UnaryInterval::make_bottom();
    }
    u.eps = eps;
    u.has_range = has_range;
    if (has_range) {
        u.lo = lo;
        u.hi = hi;
    }
    return u;
}

UnaryInterval unary_join(const UnaryInterval& a, const UnaryInterval& b) {
    if (a.bottom) {
        return b;
    }
    if (b.bottom) {
        return a;
    }
    bool has = a.has_range || b.has_range;
    std::uint64_t lo = 0;
    std::optional<std::uint64_t> hi;
    if (a.has_range && b.has_range) {
        lo = std::min(a.lo, b.lo);
        hi = (a.hi && b.hi) ? std::optional(std::max(*a.hi, *b.hi)) : std::nullopt;
    } else if (a.has_range) {
        lo = a.lo;
        hi = a.hi;
    } else if (b.has_range) {
        lo = b.lo;
        hi = b.hi;
    }
    return unary_normalize(a.eps || b.eps, has, lo, hi);
}

UnaryInterval unary_meet(const UnaryInterval& a, const UnaryInterval& b) {
    if (a.bottom || b.bottom) {
        return UnaryInterval::make_bottom();
    }
    bool has = a.has_range && b.has_range;
    std::uint64_t lo = 0;
    std::optional<std::uint64_t> hi;
    if (has) {
        lo = std::max(a.lo, b.lo);
        if (a.hi && b.hi) {
            hi = std::min(*a.hi, *b.hi);
        } else {
            hi = a.hi ? a.hi : b.hi;
        }
    }
    return unary_normalize(a.eps && b.eps, has, lo, hi);
}

UnaryInterval unary_add(const UnaryInterval& a, const UnaryInterval& b) {
    if (a.bottom || b.bottom) {
        return UnaryInterval::make_bottom();
    }
    // Candidate pieces of the sumset: 0 (both eps), a's range (b eps), b's
    // range (a eps), and the range sum.
    UnaryInterval out = UnaryInterval::make_bottom();
    if (a.eps && b.eps) {
        out = unary_join(out, UnaryInterval::eps_only());
    }
    if (a.has_range && b.eps) {
        out = unary_join(out, unary_normalize(false, true, a.lo, a.hi));
    }
    if (b.has_range && a.eps) {
        out = unary_join(out, unary_normalize(false, true, b.lo, b.hi));
    }
    if (a.has_range && b.has_range) {
        std::optional<std::uint64_t> hi;
        if (a.hi && b.hi) {
            hi = *a.hi + *b.hi - 1;
        }
        out = unary_join(out, unary_normalize(false, true, a.lo + b.lo, hi));
    }
    return out;
}

UnaryInterval raise_lo(UnaryInterval u, std::uint64_t n) {
    if (u.bottom || !u.has_range) {
        return u;
    }
    return unary_normalize(u.eps, true, std::max(u.lo, n), u.hi);
}

UnaryInterval lower_hi(UnaryInterval u, std::uint64_t n) {
    if (u.bottom || !u.has_range) {
        return u;
    }
    std::optional<std::uint64_t> hi = u.hi ? std::min(*u.hi, n) : n;
    return unary_normalize(u.eps, true, u.lo, hi);
}

UnaryInterval drop_eps(UnaryInterval u) {
    if (u.bottom) {
        return u;
    }
    return unary_normalize(false, u.has_range, u.lo, u.hi);
}

} // namespace strobj
