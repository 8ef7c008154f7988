// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/ops.hpp"

#include <algorithm>
#include <set>

namespace strobj {

Word concrete_concat(const Word& a, const Word& b) { return a + b; }

Word concrete_substring(const Word& w, std::int64_t n) {
    if (n <= 0) {
        return w;
    }
    if (n >= static_cast<std::int64_t>(w.size())) {
        return {};
    }
    return w.substr(static_cast<std::size_t>(n));
}

std::int64_t concrete_index_of(const Word& hay, const Word& needle) {
    std::size_t pos = hay.find(needle);
    return pos == Word::npos ? -1 : static_cast<std::int64_t>(pos);
}

Word concrete_replace(const Word& w, const Word& pattern, const Word& replacement) {
    if (pattern.empty()) {
        return replacement + w;
    }
    std::size_t pos = w.find(pattern);
    if (pos == Word::npos) {
        return w;
    }
    return w.substr(0, pos) + replacement + w.substr(pos + pattern.size());
}

Word concrete_char_at(const Word& w, std::int64_t n) {
    if (n < 0 || n >= static_cast<std::int64_t>(w.size())) {
        return {};
    }
    return Word(1, w[static_cast<std::size_t>(n)]);
}

IntAbstract IntAbstract::of_literal(std::int64_t k) {
    IntAbstract v;
    if (k < 0) {
        v.neg_one = k == -1;
        return v;
    }
    v.has_range = true;
    v.lo = static_cast<std::uint64_t>(k);
    v.hi = v.lo + 1;
    return v;
}

bool IntAbstract::admits(std::int64_t n) const {
    if (n < 0) {
        return n == -1 && neg_one;
    }
    auto u = static_cast<std::uint64_t>(n);
    return has_range && u >= lo && (!hi || u < *hi);
}

std::optional<std::uint64_t> IntAbstract::constant() const {
    if (!neg_one && has_range && hi && *hi == lo + 1) {
        return lo;
    }
    return std::nullopt;
}

CmpRel negate_rel(CmpRel rel) {
    switch (rel) {
    case CmpRel::Eq: return CmpRel::Ne;
    case CmpRel::Ne: return CmpRel::Eq;
    case CmpRel::Ge: return CmpRel::Lt;
    case CmpRel::Lt: return CmpRel::Ge;
    }
    return CmpRel::Eq;
}

namespace {

IntAbstract int_normalize(IntAbstract v) {
    if (v.has_range && v.hi && *v.hi <= v.lo) {
        v.has_range = false;
        v.lo = 0;
        v.hi.reset();
    }
    return v;
}

} // namespace

IntAbstract int_meet_rel(IntAbstract v, CmpRel rel, std::int64_t k) {
    switch (rel) {
    case CmpRel::Eq:
        return v.admits(k) ? IntAbstract::of_literal(k) : IntAbstract::bottom();
    case CmpRel::Ne:
        if (k == -1) {
            v.neg_one = false;
        } else if (k >= 0 && v.has_range) {
            auto u = static_cast<std::uint64_t>(k);
            if (u == v.lo) {
                v.lo += 1;
            } else if (v.hi && u + 1 == *v.hi) {
                v.hi = u;
            }
        }
        return int_normalize(v);
    case CmpRel::Ge:
        if (k >= 0) {
            v.neg_one = false;
            if (v.has_range) {
                v.lo = std::max(v.lo, static_cast<std::uint64_t>(k));
            }
        }
        return int_normalize(v);
    case CmpRel::Lt:
        if (k <= -1) {
            return IntAbstract::bottom();
        }
        if (v.has_range) {
            auto u = static_cast<std::uint64_t>(k);
            v.hi = v.hi ? std::min(*v.hi, u) : u;
        }
        return int_normalize(v);
    }
    return v;
}

namespace {

bool is_eps_only(const StringObject& o) {
    return !o.bottom && !o.value.is_unary() && o.value.nu().eps && o.value.nu().bound.bottom;
}

/// The value component as an exact constant, when gamma(value) is a
/// singleton non-empty word.
std::optional<Word> exact_const(const StringObject& o) {
    if (o.bottom || o.value.is_unary()) {
        return std::nullopt;
    }
    const NonUnaryProp& v = o.value.nu();
    if (!v.eps && !v.bound.bottom && v.bound.constant) {
        return v.bound.constant;
    }
    return std::nullopt;
}

bool value_eps(const StringObject& o) { return !o.value.is_unary() && o.value.nu().eps; }

std::optional<Word> eff_prefix(const LowerBound& b) {
    return b.constant ? b.constant : b.prefix;
}

std::optional<Word> eff_suffix(const LowerBound& b) {
    return b.constant ? b.constant : b.suffix;
}

/// Concatenation of two bounds that both describe non-empty words.
LowerBound cat_bound(const LowerBound& b1, const LowerBound& b2) {
    if (b1.constant && b2.constant) {
        return LowerBound::of_constant(*b1.constant + *b2.constant);
    }
    LowerBound out;
    if (b1.constant) {
        out.prefix = b2.prefix ? *b1.constant + *b2.prefix : *b1.constant;
    } else {
        out.prefix = b1.prefix;
    }
    if (b2.constant) {
        out.suffix = b1.suffix ? *b1.suffix + *b2.constant : *b2.constant;
    } else {
        out.suffix = b2.suffix;
    }
    out.factors = b1.factors;
    for (const Word& m : b2.factors.members) {
        out.factors = antichain_insert(std::move(out.factors), m);
    }
    // Boundary factor: the junction word is always present.
    std::optional<Word> l = eff_suffix(b1);
    std::optional<Word> r = eff_prefix(b2);
    if (l && r) {
        out.factors = antichain_insert(std::move(out.factors), *l + *r);
    }
    return basic_reduce(std::move(out));
}

} // namespace

StringPropertyValue concat_prop(const Session& s, const StandardMorphism& m,
                                const StringPropertyValue& a, const StringPropertyValue& b) {
    if (a.is_unary() || b.is_unary()) {
        STROBJ_REQUIRE(a.is_unary() && b.is_unary(), "property kinds must match");
        return StringPropertyValue::unary(unary_add(a.un(), b.un()));
    }
    const NonUnaryProp& pa = a.nu();
    const NonUnaryProp& pb = b.nu();
    bool eps_r = pa.eps && pb.eps;
    // Join the reachable shape cases: both parts non-empty, left empty, right
    // empty. A bottom bound on one side excludes its non-empty case.
    LowerBound out = LowerBound::make_bottom();
    bool any = false;
    auto add = [&](LowerBound piece) {
        out = any ? bound_join(out, piece) : std::move(piece);
        any = true;
    };
    if (!pa.bound.bottom && !pb.bound.bottom) {
        add(cat_bound(pa.bound, pb.bound));
    }
    if (pa.eps && !pb.bound.bottom) {
        add(pb.bound);
    }
    if (pb.eps && !pa.bound.bottom) {
        add(pa.bound);
    }
    if (!any) {
        out = LowerBound::make_bottom();
    }
    std::size_t n = m.is_identity() ? s.sigma.size() : m.image_alphabet(s.sigma).size();
    return StringPropertyValue::non_unary(eps_r, standalone_reduce(std::move(out), n));
}

StringObject abs_concat(const Session& s, const StringObject& o1, const StringObject& o2) {
    if (o1.bottom || o2.bottom) {
        return object_bottom();
    }
    StringObject out;
    out.value = concat_prop(s, StandardMorphism::identity(), o1.value, o2.value);
    out.length = unary_add(o1.length, o2.length);
    for (const StandardMorphism& eta : combined_props(s, o1, o2)) {
        StringPropertyValue a = component(s, o1, eta);
        StringPropertyValue b = component(s, o2, eta);
        if (a.is_unary() != b.is_unary()) {
            continue;
        }
        out.customs.emplace_back(eta, concat_prop(s, eta, a, b));
    }
    std::sort(out.customs.begin(), out.customs.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    // Concatenation is natural: only the unary rules run, no cross-reduction.
    out = unary_bounds_reduce(s, out);
    return prune_redundant(s, out);
}

namespace {

struct SubstringCtx {
    const IntAbstract& n;
    std::optional<std::uint64_t> n_const;
    std::uint64_t n_lo = 0;
    std::optional<std::uint64_t> n_max; // n.hi - 1 when finite
    bool may_eps = false;               // result may be the empty word
};

/// Minimum image length a non-unary bound forces.
std::uint64_t bound_min_len(const LowerBound& b) {
    std::uint64_t n = 0;
    if (b.prefix) {
        n = std::max<std::uint64_t>(n, b.prefix->size());
    }
    if (b.suffix) {
        n = std::max<std::uint64_t>(n, b.suffix->size());
    }
    for (const Word& m : b.factors.members) {
        n = std::max<std::uint64_t>(n, m.size());
    }
    return n;
}

StringPropertyValue substring_prop(const Session& s [[maybe_unused]], const SubstringCtx& c,
                                   const StringObject& o, const StandardMorphism& m,
                                   const StringPropertyValue& p) {
    if (p.is_unary()) {
        // Only the length property flows through here; custom unary
        // properties are dropped by the caller.
        const UnaryInterval& u = p.un();
        if (u.bottom || !u.has_range) {
            return StringPropertyValue::unary(c.may_eps ? UnaryInterval::eps_only()
                                                        : UnaryInterval::make_bottom());
        }
        std::uint64_t lo = 1;
        if (c.n_max && u.lo > *c.n_max) {
            lo = u.lo - *c.n_max;
        }
        std::optional<std::uint64_t> hi;
        if (u.hi) {
            hi = *u.hi > c.n_lo ? *u.hi - c.n_lo : 1;
        }
        return StringPropertyValue::unary(unary_normalize(c.may_eps, true, lo, hi));
    }
    const NonUnaryProp& np = p.nu();
    if (np.bound.bottom) {
        return StringPropertyValue::non_unary(true, LowerBound::make_bottom());
    }
    const LowerBound& b = np.bound;
    const bool erasing = m.is_erasing();

    // Image letters stripped from the front: exact when the removed concrete
    // segment is pinned by the value prefix, else bounded by n's maximum.
    std::optional<std::uint64_t> strip;
    if (c.n_const) {
        if (!erasing) {
            strip = *c.n_const;
        } else if (!o.value.is_unary() && !o.value.nu().bound.bottom) {
            const std::optional<Word>& vp = eff_prefix(o.value.nu().bound);
            if (vp && vp->size() >= *c.n_const) {
                strip = m(vp->substr(0, *c.n_const)).size();
            }
        }
    }

    LowerBound out;
    if (b.constant && strip) {
        // The image is exactly the constant with `strip` letters removed.
        if (*strip < b.constant->size()) {
            out = LowerBound::of_constant(b.constant->substr(*strip));
        } else {
            out = LowerBound::make_bottom();
        }
        bool eps_r = np.eps || c.may_eps || out.bottom;
        return StringPropertyValue::non_unary(eps_r, out);
    }

    const std::optional<Word> pfx = eff_prefix(b);
    const std::optional<Word> sfx = eff_suffix(b);
    if (pfx && strip) {
        bool consistent = true;
        if (erasing && !o.value.is_unary()) {
            const std::optional<Word>& vp = eff_prefix(o.value.nu().bound);
            Word img = m(vp->substr(0, *c.n_const));
            consistent = img.size() <= pfx->size() && pfx->compare(0, img.size(), img) == 0;
        }
        if (consistent && *strip < pfx->size()) {
            out.prefix = pfx->substr(*strip);
        }
    }
    if (sfx) {
        if (!erasing) {
            // The object length bounds the image length one-for-one.
            if (c.n_max && o.length.has_range &&
                o.length.lo >= *c.n_max + sfx->size()) {
                out.suffix = sfx;
            }
        } else {
            std::uint64_t lmin = bound_min_len(b);
            std::optional<std::uint64_t> removed = strip;
            if (!removed) {
                removed = c.n_max; // image removal cannot exceed n
            }
            if (removed && lmin >= *removed) {
                std::uint64_t keep =
                    std::min<std::uint64_t>(sfx->size(), lmin - *removed);
                if (keep > 0) {
                    out.suffix = sfx->substr(sfx->size() - keep);
                }
            }
        }
    }
    for (const Word& w : b.factors.members) {
        if (out.suffix && is_factor(w, *out.suffix)) {
            out.factors = antichain_insert(std::move(out.factors), w);
        }
    }
    bool eps_r = c.may_eps || np.eps;
    if (erasing) {
        std::uint64_t lmin = bound_min_len(b);
        std::optional<std::uint64_t> removed = strip ? strip : c.n_max;
        eps_r = eps_r || !removed || lmin <= *removed;
    }
    return StringPropertyValue::non_unary(eps_r, basic_reduce(std::move(out)));
}

} // namespace

StringObject abs_substring(const Session& s, const StringObject& o, const IntAbstract& n) {
    if (n.neg_one) {
        throw DiagError("substring index must be refined to be non-negative");
    }
    if (o.bottom || n.is_bottom()) {
        return object_bottom();
    }
    SubstringCtx c{n, n.constant(), n.has_range ? n.lo : 0,
                   n.hi ? std::optional(*n.hi - 1) : std::nullopt, false};
    if (c.n_const && *c.n_const == 0) {
        return o; // identity
    }
    if (is_eps_only(o)) {
        return o;
    }
    c.may_eps = value_eps(o) || !o.length.has_range || !c.n_max ||
                (o.length.has_range && *c.n_max >= o.length.lo);

    StringObject out;
    out.value = substring_prop(s, c, o, StandardMorphism::identity(), o.value);
    out.length =
        substring_prop(s, c, o, s.len_morphism(), StringPropertyValue::unary(o.length)).un();
    for (const auto& [m, p] : o.customs) {
        if (p.is_unary()) {
            continue; // counts of surviving letters are not tracked through cuts
        }
        out.customs.emplace_back(m, substring_prop(s, c, o, m, p));
    }
    return prune_redundant(s, out);
}

namespace {

/// True when the properties of `o` prove that `w` cannot occur in any word
/// of gamma(o) (the empty word never hosts an occurrence either).
bool occurrence_refuted(const Session& s, const StringObject& o, const Word& w) {
    if (w.empty()) {
        return false;
    }
    std::vector<StandardMorphism> ms{StandardMorphism::identity(), s.len_morphism()};
    for (const StandardMorphism& m : s.props) {
        ms.push_back(m);
    }
    for (const auto& [m, p] : o.customs) {
        ms.push_back(m);
    }
    for (const StandardMorphism& m : ms) {
        Word img = m(w);
        StringPropertyValue p = component(s, o, m);
        if (p.is_unary()) {
            if (auto mx = p.un().max_finite(); mx && img.size() > *mx) {
                return true;
            }
            continue;
        }
        if (img.empty()) {
            continue;
        }
        const NonUnaryProp& np = p.nu();
        if (np.bound.bottom) {
            return true; // every image is empty, w's image is not
        }
        if (np.bound.constant && !is_factor(img, *np.bound.constant)) {
            return true;
        }
    }
    return false;
}

/// True when `w` occurs in every non-empty word of gamma(o).
bool occurrence_guaranteed(const StringObject& o, const Word& w) {
    if (o.bottom || o.value.is_unary() || w.empty()) {
        return false;
    }
    const LowerBound& b = o.value.nu().bound;
    if (b.bottom) {
        return false;
    }
    if (b.factors.contains_factor_of_member(w)) {
        return true;
    }
    return (b.prefix && is_factor(w, *b.prefix)) || (b.suffix && is_factor(w, *b.suffix));
}

} // namespace

IntAbstract abs_index_of(const Session& s, const StringObject& o1, const StringObject& o2) {
    if (o1.bottom || o2.bottom) {
        return IntAbstract::bottom();
    }
    if (is_eps_only(o2)) {
        return IntAbstract::of_literal(0); // the empty pattern matches at 0
    }
    IntAbstract out = IntAbstract::any_index();
    std::uint64_t min2 = value_eps(o2) ? 0 : std::max<std::uint64_t>(1, o2.length.lo);
    if (o1.length.hi) {
        out.hi = *o1.length.hi > min2 ? *o1.length.hi - min2 : 1;
    }
    std::optional<Word> w2 = exact_const(o2);
    if (w2) {
        if (occurrence_refuted(s, o1, *w2)) {
            IntAbstract neg;
            neg.neg_one = true;
            return neg;
        }
        if (!value_eps(o1) && occurrence_guaranteed(o1, *w2)) {
            out.neg_one = false;
        }
    }
    // Index 0 is refuted when some morphic image of o2 is an exact constant
    // mismatching o1's image prefix.
    std::vector<StandardMorphism> ms{StandardMorphism::identity()};
    for (const StandardMorphism& m : s.props) {
        ms.push_back(m);
    }
    for (const auto& [m, p] : o1.customs) {
        ms.push_back(m);
    }
    for (const auto& [m, p] : o2.customs) {
        ms.push_back(m);
    }
    for (const StandardMorphism& m : ms) {
        StringPropertyValue c2 = component(s, o2, m);
        StringPropertyValue c1 = component(s, o1, m);
        if (c2.is_unary() || c1.is_unary()) {
            continue;
        }
        if (c2.nu().eps || c2.nu().bound.bottom || !c2.nu().bound.constant) {
            continue;
        }
        if (c1.nu().bound.bottom) {
            continue;
        }
        const Word& k2 = *c2.nu().bound.constant;
        const std::optional<Word> p1 = eff_prefix(c1.nu().bound);
        if (!p1) {
            continue;
        }
        std::size_t n = std::min(k2.size(), p1->size());
        if (k2.compare(0, n, *p1, 0, n) != 0) {
            out.lo = std::max<std::uint64_t>(out.lo, 1);
        }
    }
    if (out.has_range && out.hi && *out.hi <= out.lo) {
        out.has_range = false;
        out.lo = 0;
        out.hi.reset();
    }
    return out;
}

namespace {

/// First position where `pattern` could start given that the word begins
/// with `prefix` and is unknown beyond it.
std::size_t first_possible_start(const Word& prefix, const Word& pattern) {
    for (std::size_t q = 0; q < prefix.size(); ++q) {
        std::size_t n = std::min(pattern.size(), prefix.size() - q);
        if (prefix.compare(q, n, pattern, 0, n) == 0) {
            return q;
        }
    }
    return prefix.size();
}

} // namespace

StringObject abs_replace(const Session& s, const StringObject& o1, const StringObject& o2,
                         const StringObject& o3) {
    if (o1.bottom || o2.bottom || o3.bottom) {
        return object_bottom();
    }
    std::optional<Word> w2 =
        is_eps_only(o2) ? std::optional<Word>(Word{}) : exact_const(o2);
    std::optional<Word> w3 =
        is_eps_only(o3) ? std::optional<Word>(Word{}) : exact_const(o3);
    if (w2 && w2->empty()) {
        return abs_concat(s, o3, o1); // empty pattern prepends
    }
    if (w2 && occurrence_refuted(s, o1, *w2)) {
        return o1; // no-occurrence branch only
    }
    if (!w2 || !w3) {
        // Non-constant arguments degrade to a top value with a length hull.
        StringObject out = object_top(s);
        UnaryInterval occ = unary_add(o1.length, o3.length);
        if (!o2.length.bottom) {
            // The occurrence branch removes up to hi2-1 letters; an unbounded
            // pattern can shrink the host to the replacement alone.
            std::uint64_t lo = 1;
            if (occ.has_range && o2.length.has_range && o2.length.hi &&
                occ.lo > *o2.length.hi - 1) {
                lo = occ.lo - (*o2.length.hi - 1);
            }
            std::optional<std::uint64_t> hi;
            if (occ.hi) {
                std::uint64_t min2 = o2.length.has_range && !o2.length.eps ? o2.length.lo : 0;
                hi = *occ.hi > min2 ? *occ.hi - min2 : 1;
            }
            occ = unary_normalize(true, occ.has_range, lo, hi);
        }
        out.length = unary_join(o1.length, occ);
        return out;
    }
    if (std::optional<Word> c1 = exact_const(o1)) {
        return atom_object(s, concrete_replace(*c1, *w2, *w3));
    }

    // Occurrence branch.
    StringObject occ;
    LowerBound vb;
    const LowerBound& b1 = o1.value.is_unary() ? LowerBound::top() : o1.value.nu().bound;
    if (const std::optional<Word> pfx = eff_prefix(b1)) {
        std::size_t q = first_possible_start(*pfx, *w2);
        if (q > 0) {
            vb.prefix = pfx->substr(0, q);
        }
    }
    if (const std::optional<Word> sfx = eff_suffix(b1)) {
        if (!is_factor(*w2, *sfx) && longest_overlap(*w2, *sfx) == 0 &&
            longest_overlap(*sfx, *w2) == 0) {
            vb.suffix = sfx;
        }
    }
    for (const Word& m : b1.factors.members) {
        if (!is_factor(*w2, m) && longest_overlap(m, *w2) == 0 && longest_overlap(*w2, m) == 0) {
            vb.factors = antichain_insert(std::move(vb.factors), m);
        }
    }
    if (!w3->empty()) {
        vb.factors = antichain_insert(std::move(vb.factors), *w3);
    }
    std::size_t n = s.sigma.size();
    bool occ_eps = w3->empty();
    occ.value = StringPropertyValue::non_unary(
        occ_eps, standalone_reduce(basic_reduce(std::move(vb)), n));
    std::uint64_t base_lo =
        std::max<std::uint64_t>(o1.length.has_range ? o1.length.lo : 1, w2->size());
    std::int64_t d = static_cast<std::int64_t>(w3->size()) - static_cast<std::int64_t>(w2->size());
    auto shift = [&](std::uint64_t v) -> std::uint64_t {
        auto r = static_cast<std::int64_t>(v) + d;
        return r < 1 ? 1 : static_cast<std::uint64_t>(r);
    };
    std::optional<std::uint64_t> occ_hi;
    if (o1.length.hi) {
        occ_hi = shift(*o1.length.hi - 1) + 1;
    }
    occ.length = unary_normalize(occ_eps, true, shift(base_lo), occ_hi);

    if (!value_eps(o1) && occurrence_guaranteed(o1, *w2)) {
        return prune_redundant(s, unary_bounds_reduce(s, occ));
    }
    return object_join(s, o1, occ);
}

StringObject abs_char_at(const Session& s, const StringObject& o, const IntAbstract& n) {
    if (n.neg_one) {
        throw DiagError("charAt index must be refined to be non-negative");
    }
    if (o.bottom || n.is_bottom()) {
        return object_bottom();
    }
    if (is_eps_only(o)) {
        return atom_object(s, Word{});
    }
    const bool out_guaranteed =
        !o.length.has_range ||
        (o.length.hi && n.has_range && n.lo >= *o.length.hi - 1);
    if (out_guaranteed) {
        return atom_object(s, Word{});
    }
    bool in_guaranteed = !value_eps(o) && !o.length.eps && o.length.has_range && n.hi &&
                         o.length.lo > *n.hi - 1;

    StringObject one;
    std::optional<std::uint64_t> k = n.constant();
    std::optional<Word> vp;
    if (!o.value.is_unary() && !o.value.nu().bound.bottom) {
        vp = eff_prefix(o.value.nu().bound);
    }
    if (k && vp && *k < vp->size()) {
        one = atom_object(s, Word(1, (*vp)[*k]));
    } else {
        one.value = StringPropertyValue::non_unary(false, LowerBound::top());
        one.length = UnaryInterval::exact(1);
    }
    if (in_guaranteed) {
        return one;
    }
    return object_join(s, one, atom_object(s, Word{}));
}

StringObject assume_truthy(const Session& s, const StringObject& o) {
    StringObject pat = object_top(s);
    pat.value = StringPropertyValue::non_unary(false, LowerBound::top());
    pat.length = UnaryInterval::range(1, std::nullopt, false);
    return object_meet(s, o, pat);
}

StringObject assume_falsy(const Session& s, const StringObject& o) {
    return object_meet(s, o, atom_object(s, Word{}));
}

std::pair<StringObject, StringObject> assume_index_cmp(const Session& s, const StringObject& o1,
                                                       const StringObject& o2, CmpRel rel,
                                                       std::int64_t k) {
    IntAbstract idx = int_meet_rel(abs_index_of(s, o1, o2), rel, k);
    if (idx.is_bottom()) {
        return {object_bottom(), object_bottom()};
    }
    StringObject r1 = o1;
    if (rel == CmpRel::Eq && k == 0 && !value_eps(o2) && !o2.value.is_unary() &&
        !o2.value.nu().bound.bottom) {
        if (const std::optional<Word> p2 = eff_prefix(o2.value.nu().bound)) {
            StringObject pat = object_top(s);
            LowerBound b;
            b.prefix = p2;
            pat.value = StringPropertyValue::non_unary(true, basic_reduce(std::move(b)));
            r1 = object_meet(s, r1, pat);
        }
    }
    bool occurrence = (rel == CmpRel::Ge && k >= 0) || (rel == CmpRel::Eq && k >= 0);
    if (occurrence) {
        if (std::optional<Word> w2 = exact_const(o2)) {
            StringObject pat = object_top(s);
            LowerBound b;
            b.factors = antichain_insert({}, *w2);
            pat.value = StringPropertyValue::non_unary(true, std::move(b));
            pat.length = UnaryInterval::range(w2->size(), std::nullopt, false);
            r1 = object_meet(s, r1, pat);
        } else if (!value_eps(o2)) {
            r1 = assume_truthy(s, r1); // a non-empty pattern needs a non-empty host
        }
    }
    if (r1.bottom) {
        return {object_bottom(), object_bottom()};
    }
    return {r1, o2};
}

} // namespace strobj
