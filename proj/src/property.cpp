// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/property.hpp"

#include <algorithm>

namespace strobj {

LowerBound LowerBound::make_bottom() {
    LowerBound b;
    b.bottom = true;
    return b;
}

LowerBound LowerBound::top() { return {}; }

LowerBound LowerBound::of_constant(Word w) {
    STROBJ_REQUIRE(!w.empty(), "constant bound needs a non-empty word");
    LowerBound b;
    b.constant = w;
    b.prefix = w;
    b.suffix = w;
    b.factors = antichain_insert({}, w);
    return b;
}

bool LowerBound::is_top() const {
    return !bottom && !constant && !prefix && !suffix && factors.empty();
}

bool LowerBound::admits(const Word& w) const {
    if (bottom || w.empty()) {
        return false;
    }
    if (constant && w != *constant) {
        return false;
    }
    if (prefix && w.compare(0, prefix->size(), *prefix) != 0) {
        return false;
    }
    if (suffix && (w.size() < suffix->size() ||
                   w.compare(w.size() - suffix->size(), suffix->size(), *suffix) != 0)) {
        return false;
    }
    return std::all_of(factors.members.begin(), factors.members.end(),
                       [&](const Word& m) { return is_factor(m, w); });
}

Alphabet LowerBound::letters() const {
    Alphabet a;
    if (constant) {
        a.absorb(*constant);
    }
    if (prefix) {
        a.absorb(*prefix);
    }
    if (suffix) {
        a.absorb(*suffix);
    }
    for (const Word& m : factors.members) {
        a.absorb(m);
    }
    return a;
}

std::optional<Word> prefix_join(const std::optional<Word>& p1, const std::optional<Word>& p2) {
    if (!p1) {
        return p2;
    }
    if (!p2) {
        return p1;
    }
    std::size_t i = 0;
    while (i < p1->size() && i < p2->size() && (*p1)[i] == (*p2)[i]) {
        ++i;
    }
    if (i == 0) {
        return std::nullopt; // empty common prefix = top
    }
    return p1->substr(0, i);
}

PrefixMeet prefix_meet(const std::optional<Word>& p1, const std::optional<Word>& p2) {
    if (!p1) {
        return {true, p2};
    }
    if (!p2) {
        return {true, p1};
    }
    const Word& shorter = p1->size() <= p2->size() ? *p1 : *p2;
    const Word& longer = p1->size() <= p2->size() ? *p2 : *p1;
    if (longer.compare(0, shorter.size(), shorter) != 0) {
        return {false, std::nullopt};
    }
    return {true, longer};
}

namespace {

Word reversed(const Word& w) { return {w.rbegin(), w.rend()}; }

std::optional<Word> reversed(const std::optional<Word>& w) {
    return w ? std::optional(reversed(*w)) : std::nullopt;
}

std::optional<Word> suffix_join(const std::optional<Word>& s1, const std::optional<Word>& s2) {
    return reversed(prefix_join(reversed(s1), reversed(s2)));
}

PrefixMeet suffix_meet(const std::optional<Word>& s1, const std::optional<Word>& s2) {
    PrefixMeet m = prefix_meet(reversed(s1), reversed(s2));
    m.value = reversed(m.value);
    return m;
}

} // namespace

LowerBound basic_reduce(LowerBound b) {
    if (b.bottom) {
        return LowerBound::make_bottom();
    }
    if (b.prefix && b.prefix->empty()) {
        b.prefix.reset();
    }
    if (b.suffix && b.suffix->empty()) {
        b.suffix.reset();
    }
    if (b.constant) {
        const Word& c = *b.constant;
        if (c.empty()) {
            return LowerBound::make_bottom(); // no non-empty word equals epsilon
        }
        bool ok = (!b.prefix || c.compare(0, b.prefix->size(), *b.prefix) == 0) &&
                  (!b.suffix || (c.size() >= b.suffix->size() &&
                                 c.compare(c.size() - b.suffix->size(), b.suffix->size(),
                                           *b.suffix) == 0));
        ok = ok && std::all_of(b.factors.members.begin(), b.factors.members.end(),
                               [&](const Word& m) { return is_factor(m, c); });
        if (!ok) {
            return LowerBound::make_bottom();
        }
        b.prefix = c;
        b.suffix = c;
        b.factors = antichain_insert(std::move(b.factors), c);
    }
    if (b.prefix) {
        b.factors = antichain_insert(std::move(b.factors), *b.prefix);
    }
    if (b.suffix) {
        b.factors = antichain_insert(std::move(b.factors), *b.suffix);
    }
    return b;
}

LowerBound bound_join(const LowerBound& b1, const LowerBound& b2) {
    if (b1.bottom) {
        return b2;
    }
    if (b2.bottom) {
        return b1;
    }
    LowerBound out;
    if (b1.constant && b2.constant && *b1.constant == *b2.constant) {
        out.constant = b1.constant;
    }
    out.prefix = (b1.prefix && b2.prefix) ? prefix_join(b1.prefix, b2.prefix) : std::nullopt;
    out.suffix = (b1.suffix && b2.suffix) ? suffix_join(b1.suffix, b2.suffix) : std::nullopt;
    out.factors = common_maximal_factors(b1.factors, b2.factors);
    return basic_reduce(std::move(out));
}

LowerBound bound_meet(const LowerBound& b1, const LowerBound& b2) {
    if (b1.bottom || b2.bottom) {
        return LowerBound::make_bottom();
    }
    LowerBound out;
    if (b1.constant && b2.constant) {
        if (*b1.constant != *b2.constant) {
            return LowerBound::make_bottom();
        }
        out.constant = b1.constant;
    } else {
        out.constant = b1.constant ? b1.constant : b2.constant;
    }
    PrefixMeet p = prefix_meet(b1.prefix, b2.prefix);
    if (!p.ok) {
        return LowerBound::make_bottom();
    }
    out.prefix = p.value;
    PrefixMeet s = suffix_meet(b1.suffix, b2.suffix);
    if (!s.ok) {
        return LowerBound::make_bottom();
    }
    out.suffix = s.value;
    out.factors = b1.factors;
    for (const Word& m : b2.factors.members) {
        out.factors = antichain_insert(std::move(out.factors), m);
    }
    return basic_reduce(std::move(out));
}

StringPropertyValue StringPropertyValue::non_unary(bool eps, LowerBound b) {
    return {NonUnaryProp{eps, std::move(b)}};
}

StringPropertyValue StringPropertyValue::unary(UnaryInterval u) { return {std::move(u)}; }

bool StringPropertyValue::gamma_empty() const {
    if (is_unary()) {
        return un().bottom;
    }
    return !nu().eps && nu().bound.bottom;
}

bool StringPropertyValue::is_top() const {
    if (is_unary()) {
        return un().is_top();
    }
    return nu().eps && nu().bound.is_top();
}

bool StringPropertyValue::admits(const Word& w) const {
    if (is_unary()) {
        return un().admits(w.size());
    }
    if (w.empty()) {
        return nu().eps;
    }
    return nu().bound.admits(w);
}

StringPropertyValue prop_join(const StringPropertyValue& a, const StringPropertyValue& b) {
    STROBJ_REQUIRE(a.is_unary() == b.is_unary(), "property kinds must match");
    if (a.is_unary()) {
        return StringPropertyValue::unary(unary_join(a.un(), b.un()));
    }
    // An empty-gamma bound side is neutral regardless of its eps flag.
    if (a.gamma_empty()) {
        return b;
    }
    if (b.gamma_empty()) {
        return a;
    }
    return StringPropertyValue::non_unary(a.nu().eps || b.nu().eps,
                                          bound_join(a.nu().bound, b.nu().bound));
}

StringPropertyValue prop_meet(const StringPropertyValue& a, const StringPropertyValue& b) {
    STROBJ_REQUIRE(a.is_unary() == b.is_unary(), "property kinds must match");
    if (a.is_unary()) {
        return StringPropertyValue::unary(unary_meet(a.un(), b.un()));
    }
    return StringPropertyValue::non_unary(a.nu().eps && b.nu().eps,
                                          bound_meet(a.nu().bound, b.nu().bound));
}

std::uint64_t cross_reduction_threshold(const LowerBound& b) {
    STROBJ_REQUIRE(!b.bottom, "threshold of a bottom bound");
    if (b.constant) {
        return 0; // already exact
    }
    auto covered = [&](const Word& m) {
        return (b.prefix && is_factor(m, *b.prefix)) || (b.suffix && is_factor(m, *b.suffix));
    };
    std::uint64_t sum = 0;
    std::uint64_t k = 0;
    for (const Word& m : b.factors.members) {
        if (!covered(m)) {
            sum += m.size();
            ++k;
        }
    }
    const std::uint64_t p = b.prefix ? b.prefix->size() : 0;
    const std::uint64_t s = b.suffix ? b.suffix->size() : 0;
    std::uint64_t t = sum + p + s + std::min<std::uint64_t>(p, 1) + std::min<std::uint64_t>(s, 1);
    t += k;
    return t == 0 ? 0 : t - 1;
}

namespace {

// Enumerates all words over `letters` of length < limit (plus epsilon when
// `with_eps`), calling `f` on each.
template <typename F>
void for_each_word(const std::vector<Letter>& letters, std::uint64_t limit, F&& f) {
    Word w;
    auto rec = [&](auto&& self) -> void {
        f(const_cast<const Word&>(w));
        if (w.size() + 1 >= limit) {
            return;
        }
        for (Letter c : letters) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    if (limit > 0) {
        rec(rec);
    }
}

} // namespace

PerfectReduceResult perfect_reduce_budgeted(bool eps, const LowerBound& b,
                                            const UnaryInterval& len, const Alphabet& sigma,
                                            std::uint64_t budget) {
    PerfectReduceResult unchanged{eps, b, len};
    if (b.bottom || len.bottom) {
        return unchanged;
    }
    if (!len.has_range || !len.hi) {
        return unchanged; // infinite upper bound: nothing enumerable
    }
    const std::uint64_t limit = *len.hi;
    Alphabet used = b.letters();
    std::vector<Letter> enum_letters = used.letters;
    bool collapsed = false; // one fresh letter stands for several session letters
    std::size_t extra = 0;
    for (Letter c : sigma.letters) {
        if (!used.contains(c)) {
            ++extra;
        }
    }
    if (extra > 0) {
        Letter fresh = 0;
        for (Letter c : sigma.letters) {
            if (!used.contains(c)) {
                fresh = c;
                break;
            }
        }
        enum_letters.push_back(fresh);
        std::sort(enum_letters.begin(), enum_letters.end());
        collapsed = extra > 1;
    }
    // Candidate count: sum over l < limit of |letters|^l.
    std::uint64_t count = 1;
    std::uint64_t pow = 1;
    for (std::uint64_t l = 1; l < limit; ++l) {
        if (pow > budget / std::max<std::uint64_t>(enum_letters.size(), 1)) {
            return unchanged;
        }
        pow *= enum_letters.size();
        count += pow;
        if (count > budget) {
            return unchanged;
        }
    }

    std::vector<Word> gamma;
    bool gamma_eps = false;
    for_each_word(enum_letters, limit, [&](const Word& w) {
        if (w.empty()) {
            gamma_eps = eps && len.eps;
            return;
        }
        if (len.admits(w.size()) && b.admits(w)) {
            gamma.push_back(w);
        }
    });

    if (gamma.empty()) {
        PerfectReduceResult out;
        out.eps = gamma_eps;
        out.bound = LowerBound::make_bottom();
        out.length = gamma_eps ? UnaryInterval::eps_only() : UnaryInterval::make_bottom();
        return out;
    }

    auto fresh_free = [&](const Word& w) {
        return std::all_of(w.begin(), w.end(), [&](Letter c) { return used.contains(c); });
    };

    LowerBound exact;
    std::optional<Word> pfx = gamma.front();
    std::optional<Word> sfx = gamma.front();
    FactorCode common = antichain_insert({}, gamma.front());
    std::uint64_t min_len = gamma.front().size();
    std::uint64_t max_len = gamma.front().size();
    for (std::size_t i = 1; i < gamma.size(); ++i) {
        // Keep the folds sticky at top: prefix_join absorbs an absent side.
        if (pfx) {
            pfx = prefix_join(pfx, gamma[i]);
        }
        if (sfx) {
            sfx = suffix_join(sfx, gamma[i]);
        }
        common = common_maximal_factors(common, antichain_insert({}, gamma[i]));
        min_len = std::min<std::uint64_t>(min_len, gamma[i].size());
        max_len = std::max<std::uint64_t>(max_len, gamma[i].size());
    }
    if (gamma.size() == 1 && (!collapsed || fresh_free(gamma.front()))) {
        exact = LowerBound::of_constant(gamma.front());
    } else {
        if (collapsed && pfx) {
            // Trim at the first position standing for an unknown session letter.
            std::size_t i = 0;
            while (i < pfx->size() && used.contains((*pfx)[i])) {
                ++i;
            }
            pfx = i == 0 ? std::nullopt : std::optional(pfx->substr(0, i));
        }
        if (collapsed && sfx) {
            std::size_t i = sfx->size();
            while (i > 0 && used.contains((*sfx)[i - 1])) {
                --i;
            }
            sfx = i == sfx->size() ? std::nullopt : std::optional(sfx->substr(i));
        }
        exact.prefix = pfx && !pfx->empty() ? pfx : std::nullopt;
        exact.suffix = sfx && !sfx->empty() ? sfx : std::nullopt;
        FactorCode kept = b.factors;
        for (const Word& m : common.members) {
            if (!collapsed || fresh_free(m)) {
                kept = antichain_insert(std::move(kept), m);
            }
        }
        exact.factors = std::move(kept);
        exact = basic_reduce(std::move(exact));
    }

    PerfectReduceResult out;
    out.eps = gamma_eps;
    out.bound = std::move(exact);
    out.length = unary_normalize(gamma_eps, true, min_len, max_len + 1);
    return out;
}

} // namespace strobj
