// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/object.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strobj {

namespace {

constexpr int kPipelineCap = 32;

void sort_customs(StringObject& o) {
    std::sort(o.customs.begin(), o.customs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

const StringPropertyValue* find_custom(const StringObject& o, const StandardMorphism& m) {
    for (const auto& [sm, p] : o.customs) {
        if (sm == m) {
            return &p;
        }
    }
    return nullptr;
}

bool component_empty(const StringObject& o) {
    if (o.value.gamma_empty() || o.length.bottom) {
        return true;
    }
    return std::any_of(o.customs.begin(), o.customs.end(),
                       [](const auto& c) { return c.second.gamma_empty(); });
}

/// Uniform view of every stored property as (morphism, value) with identity
/// and length included.
struct PropRef {
    StandardMorphism m;
    StringPropertyValue p;
};

std::vector<PropRef> all_props(const Session& s, const StringObject& o) {
    std::vector<PropRef> out;
    out.push_back({StandardMorphism::identity(), o.value});
    out.push_back({s.len_morphism(), StringPropertyValue::unary(o.length)});
    for (const auto& [m, p] : o.customs) {
        out.push_back({m, p});
    }
    return out;
}

void store_back(const Session& s, StringObject& o, const std::vector<PropRef>& props) {
    o.customs.clear();
    for (const auto& pr : props) {
        if (pr.m.is_identity()) {
            o.value = pr.p;
        } else if (pr.m == s.len_morphism()) {
            o.length = pr.p.un();
        } else {
            o.customs.emplace_back(pr.m, pr.p);
        }
    }
    sort_customs(o);
}

bool value_forces_letter_outside(const StringObject& o, const StandardMorphism& m) {
    if (o.value.is_unary() || o.value.nu().bound.bottom) {
        return false;
    }
    const Alphabet used = o.value.nu().bound.letters();
    return std::any_of(used.letters.begin(), used.letters.end(),
                       [&](Letter c) { return !m.erases(c); });
}

/// When no non-empty word fits (the length interval vanished, the value
/// bound is bottom, or a non-erasing property became empty), the object is
/// either the canonical empty-word object or bottom.
StringObject normalize_non_eps(StringObject o) {
    bool noneps = !o.value.is_unary() && !o.value.nu().bound.bottom && o.length.has_range;
    for (const auto& [m, p] : o.customs) {
        if (p.is_unary()) {
            noneps = noneps && (p.un().has_range || (p.un().eps && m.is_erasing()));
        } else {
            noneps = noneps && (!p.nu().bound.bottom || (p.nu().eps && m.is_erasing()));
        }
    }
    if (noneps) {
        return o;
    }
    bool eps_obj = o.length.eps && (o.value.is_unary() ? o.value.un().eps : o.value.nu().eps);
    for (const auto& [m, p] : o.customs) {
        eps_obj = eps_obj && (p.is_unary() ? p.un().eps : p.nu().eps);
    }
    if (!eps_obj) {
        return object_bottom();
    }
    // Canonical empty-word object; stored custom slots stay, pinned to their
    // empty-word content, so raw (unpruned) results are reduction-stable.
    StringObject out;
    out.value = StringPropertyValue::non_unary(true, LowerBound::make_bottom());
    out.length = UnaryInterval::eps_only();
    for (const auto& [m, p] : o.customs) {
        out.customs.emplace_back(
            m, p.is_unary()
                   ? StringPropertyValue::unary(UnaryInterval::eps_only())
                   : StringPropertyValue::non_unary(true, LowerBound::make_bottom()));
    }
    return out;
}

/// Align every property's epsilon flag with the object-level fact that the
/// empty word is (or is not) in gamma.
StringObject harmonize_eps(StringObject o) {
    bool eps_obj = o.length.eps;
    auto prop_eps = [](const StringPropertyValue& p) {
        return p.is_unary() ? p.un().eps : p.nu().eps;
    };
    eps_obj = eps_obj && prop_eps(o.value);
    for (const auto& [m, p] : o.customs) {
        eps_obj = eps_obj && prop_eps(p);
    }
    if (!o.value.is_unary()) {
        o.value.nu().eps = eps_obj;
    }
    o.length = unary_normalize(eps_obj, o.length.has_range, o.length.lo, o.length.hi);
    for (auto& [m, p] : o.customs) {
        bool lower = !m.is_erasing() || value_forces_letter_outside(o, m);
        if (p.is_unary()) {
            const UnaryInterval& u = p.un();
            bool e = (lower || eps_obj) ? eps_obj : u.eps;
            p = StringPropertyValue::unary(unary_normalize(e, u.has_range, u.lo, u.hi));
        } else if (lower || eps_obj) {
            p.nu().eps = eps_obj;
        }
    }
    return o;
}

} // namespace

Session Session::make(Alphabet sigma, std::vector<StandardMorphism> props) {
    if (sigma.size() < 2) {
        throw DiagError("session alphabet must have at least two letters");
    }
    Session s;
    s.sigma = std::move(sigma);
    StandardMorphism len = StandardMorphism::length_of(s.sigma);
    StandardMorphism top = top_morphism(s.sigma);
    std::erase_if(props, [&](const StandardMorphism& m) {
        return m.is_identity() || m == len || m == top;
    });
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    s.props = std::move(props);
    return s;
}

StringObject object_bottom() {
    StringObject o;
    o.bottom = true;
    o.value = StringPropertyValue::non_unary(false, LowerBound::make_bottom());
    o.length = UnaryInterval::make_bottom();
    return o;
}

StringObject object_top(const Session& s) {
    (void)s;
    StringObject o;
    o.value = StringPropertyValue::non_unary(true, LowerBound::top());
    o.length = UnaryInterval::top();
    return o;
}

StringObject atom_object(const Session& s, const Word& w) {
    StringObject o;
    if (w.empty()) {
        o.value = StringPropertyValue::non_unary(true, LowerBound::make_bottom());
        o.length = UnaryInterval::eps_only();
        return o;
    }
    o.value = StringPropertyValue::non_unary(false, LowerBound::of_constant(w));
    o.length = UnaryInterval::exact(w.size());
    return prune_redundant(s, o); // configured images are implied by the constant
}

bool satisfies(const Session& s, const StringObject& o, const Word& w) {
    (void)s;
    if (o.bottom) {
        return false;
    }
    if (!o.value.admits(w) || !o.length.admits(w.size())) {
        return false;
    }
    return std::all_of(o.customs.begin(), o.customs.end(),
                       [&](const auto& c) { return c.second.admits(c.first(w)); });
}

StringPropertyValue component(const Session& s, const StringObject& o,
                              const StandardMorphism& eta) {
    if (eta.is_identity()) {
        return o.value;
    }
    if (eta == s.len_morphism()) {
        return StringPropertyValue::unary(o.length);
    }
    if (const StringPropertyValue* p = find_custom(o, eta)) {
        return *p;
    }
    // Largest stored strictly-smaller property, the value as fallback.
    StandardMorphism best = StandardMorphism::identity();
    StringPropertyValue best_p = o.value;
    for (const auto& [m, p] : o.customs) {
        if (!p.is_unary() && leq(m, eta, s.sigma) && leq(best, m, s.sigma)) {
            best = m;
            best_p = p;
        }
    }
    if (best_p.is_unary()) {
        return StringPropertyValue::non_unary(true, LowerBound::top());
    }
    // Normalize like stored properties so a pruned component materializes to
    // exactly the value that was pruned.
    StringPropertyValue img = apply_to_prop(eta, best_p, s.sigma);
    if (!img.is_unary() && !img.nu().bound.bottom) {
        img.nu().bound = standalone_reduce(img.nu().bound, eta.image_alphabet(s.sigma).size());
    }
    return img;
}

std::vector<StandardMorphism> combined_props(const Session& s, const StringObject& o1,
                                             const StringObject& o2) {
    // The configured properties always take part: a pruned component
    // re-materializes to exactly the value that was pruned, so binary ops
    // stay associative across pruning.
    std::set<StandardMorphism> set;
    for (const StandardMorphism& m : s.props) {
        set.insert(m);
    }
    for (const auto& [m, p] : o1.customs) {
        set.insert(m);
    }
    for (const auto& [m, p] : o2.customs) {
        set.insert(m);
    }
    std::vector<StandardMorphism> stored1{StandardMorphism::identity()};
    std::vector<StandardMorphism> stored2{StandardMorphism::identity()};
    for (const auto& [m, p] : o1.customs) {
        stored1.push_back(m);
    }
    for (const auto& [m, p] : o2.customs) {
        stored2.push_back(m);
    }
    for (const StandardMorphism& a : stored1) {
        for (const StandardMorphism& b : stored2) {
            set.insert(join(a, b, s.sigma));
        }
    }
    set.erase(StandardMorphism::identity());
    set.erase(s.len_morphism());
    set.erase(top_morphism(s.sigma));
    return {set.begin(), set.end()};
}

namespace {

StringObject raw_binop(const Session& s, const StringObject& o1, const StringObject& o2,
                       bool is_join) {
    if (is_join) {
        if (o1.bottom) {
            return o2;
        }
        if (o2.bottom) {
            return o1;
        }
    } else if (o1.bottom || o2.bottom) {
        return object_bottom();
    }
    StringObject out;
    auto op = [&](const StringPropertyValue& a, const StringPropertyValue& b) {
        return is_join ? prop_join(a, b) : prop_meet(a, b);
    };
    out.value = op(o1.value, o2.value);
    out.length = is_join ? unary_join(o1.length, o2.length) : unary_meet(o1.length, o2.length);
    for (const StandardMorphism& eta : combined_props(s, o1, o2)) {
        StringPropertyValue a = component(s, o1, eta);
        StringPropertyValue b = component(s, o2, eta);
        if (a.is_unary() != b.is_unary()) {
            continue; // kind mismatch can only arise from hand-written inputs
        }
        out.customs.emplace_back(eta, op(a, b));
    }
    sort_customs(out);
    return out;
}

} // namespace

StringObject raw_join(const Session& s, const StringObject& o1, const StringObject& o2) {
    return raw_binop(s, o1, o2, true);
}

StringObject raw_meet(const Session& s, const StringObject& o1, const StringObject& o2) {
    return raw_binop(s, o1, o2, false);
}

StringObject object_join(const Session& s, const StringObject& o1, const StringObject& o2) {
    return prune_redundant(s, reduce_object(s, raw_join(s, o1, o2)));
}

StringObject object_meet(const Session& s, const StringObject& o1, const StringObject& o2) {
    return prune_redundant(s, reduce_object(s, raw_meet(s, o1, o2)));
}

bool object_leq(const Session& s, const StringObject& a, const StringObject& b) {
    return object_join(s, a, b) == prune_redundant(s, reduce_object(s, b));
}

StringObject propagate_upwards(const Session& s, StringObject o) {
    if (o.bottom) {
        return object_bottom();
    }
    std::vector<PropRef> props = all_props(s, o);
    for (const PropRef& src : props) {
        if (src.p.is_unary()) {
            continue;
        }
        for (PropRef& dst : props) {
            if (dst.m == src.m || !leq(src.m, dst.m, s.sigma)) {
                continue;
            }
            dst.p = prop_meet(dst.p, apply_to_prop(dst.m, src.p, s.sigma));
        }
    }
    store_back(s, o, props);
    return o;
}

StringObject propagate_preserved(const Session& s, StringObject o) {
    if (o.bottom) {
        return object_bottom();
    }
    std::vector<PropRef> props = all_props(s, o);
    for (const PropRef& src : props) {
        if (src.p.is_unary() || src.p.nu().bound.bottom) {
            continue;
        }
        if (src.p.nu().eps && src.m.is_erasing()) {
            continue; // the source image may vanish, its bound binds nothing
        }
        for (PropRef& dst : props) {
            if (dst.m == src.m || dst.p.is_unary()) {
                continue;
            }
            for (const Word& w : src.p.nu().bound.factors.members) {
                if (preserves(w, src.m, dst.m, s.sigma)) {
                    LowerBound b = dst.p.nu().bound;
                    if (!b.bottom) {
                        b.factors = antichain_insert(std::move(b.factors), w);
                        dst.p.nu().bound = basic_reduce(std::move(b));
                    }
                }
            }
        }
    }
    store_back(s, o, props);
    return o;
}

StringObject propagate_gap_subwords(const Session& s, StringObject o) {
    if (o.bottom) {
        return object_bottom();
    }
    std::vector<PropRef> props = all_props(s, o);
    for (const PropRef& src : props) {
        if (src.p.is_unary() || !src.m.is_erasing() || src.p.nu().bound.bottom ||
            src.p.nu().eps) {
            continue; // erasing source with a possible empty image binds nothing
        }
        for (const Word& w : src.p.nu().bound.factors.members) {
            std::vector<Letter> deltas{w.front()};
            if (w.back() != w.front()) {
                deltas.push_back(w.back());
            }
            for (Letter delta : deltas) {
                std::size_t i = 0;
                while (i < w.size() && w[i] == delta) {
                    ++i;
                }
                std::size_t j = 0;
                while (j + i < w.size() && w[w.size() - 1 - j] == delta) {
                    ++j;
                }
                Word mid = w.substr(i, w.size() - i - j);
                for (PropRef& dst : props) {
                    if (dst.m == src.m || dst.p.is_unary() || dst.p.nu().bound.bottom) {
                        continue;
                    }
                    // Every letter the source may interleave or collapse into
                    // the delta runs must land on the target image of delta.
                    std::vector<Letter> around = src.m.erase_set(s.sigma);
                    if (auto di = src.m.image(delta)) {
                        for (Letter c : src.m.preimage_class(*di, s.sigma)) {
                            around.push_back(c);
                        }
                    }
                    bool uniform = std::all_of(around.begin(), around.end(), [&](Letter c) {
                        return dst.m.image(c) == dst.m.image(delta);
                    });
                    if (!uniform || (!mid.empty() && !preserves(mid, src.m, dst.m, s.sigma))) {
                        continue;
                    }
                    Word img = dst.m(w);
                    if (!img.empty()) {
                        LowerBound b = dst.p.nu().bound;
                        b.factors = antichain_insert(std::move(b.factors), img);
                        dst.p.nu().bound = basic_reduce(std::move(b));
                    }
                }
            }
        }
    }
    store_back(s, o, props);
    return o;
}

namespace {

/// One directional pass of the positional constraint resolver. Sources are
/// the constant-or-prefix words of every non-unary property; returns the
/// forced word, or nullopt on contradiction.
struct PrefixSource {
    const StandardMorphism* m;
    Word image; // constant or prefix image word
    bool exact; // constant: beyond the image only erased letters may follow
    std::size_t cursor = 0;
};

std::optional<Word> resolve_forced(const Session& s, std::vector<PrefixSource>&& sources) {
    Word forced;
    for (;;) {
        bool pending = std::any_of(sources.begin(), sources.end(), [](const PrefixSource& p) {
            return p.cursor < p.image.size();
        });
        if (!pending) {
            return forced;
        }
        std::vector<Letter> cand;
        for (Letter c : s.sigma.letters) {
            bool ok = true;
            for (const PrefixSource& p : sources) {
                if (p.cursor < p.image.size()) {
                    bool erased = p.m->erases(c);
                    bool in_class = p.m->image(c) == std::optional(p.image[p.cursor]);
                    if (!erased && !in_class) {
                        ok = false;
                        break;
                    }
                } else if (p.exact && !p.m->erases(c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                cand.push_back(c);
            }
        }
        if (cand.empty()) {
            return std::nullopt; // the word cannot extend, but some image is owed
        }
        if (cand.size() > 1) {
            return forced;
        }
        Letter c = cand.front();
        bool advanced = false;
        for (PrefixSource& p : sources) {
            if (p.cursor < p.image.size() && !p.m->erases(c)) {
                ++p.cursor;
                advanced = true;
            }
        }
        if (!advanced) {
            return std::nullopt; // only erased letters admissible forever
        }
        forced.push_back(c);
    }
}

} // namespace

StringObject resolve_letter_constraints(const Session& s, StringObject o) {
    if (o.bottom) {
        return object_bottom();
    }
    std::vector<PropRef> props = all_props(s, o);
    std::vector<PrefixSource> fwd;
    std::vector<PrefixSource> bwd;
    for (const PropRef& pr : props) {
        if (pr.p.is_unary() || pr.p.nu().bound.bottom) {
            continue;
        }
        if (pr.p.nu().eps && pr.m.is_erasing()) {
            continue; // a vanishing image imposes no positional constraints
        }
        const LowerBound& b = pr.p.nu().bound;
        const std::optional<Word>& front = b.constant ? b.constant : b.prefix;
        if (front) {
            fwd.push_back({&pr.m, *front, b.constant.has_value()});
        }
        // Letterwise morphisms constrain reversed words just the same, so the
        // suffix pass reuses the morphism on reversed images.
        const std::optional<Word>& back = b.constant ? b.constant : b.suffix;
        if (back) {
            bwd.push_back({&pr.m, Word(back->rbegin(), back->rend()), b.constant.has_value()});
        }
    }
    if (o.value.is_unary() || o.value.nu().bound.bottom) {
        return o; // nothing to strengthen: gamma has no non-empty members
    }
    std::optional<Word> fp = resolve_forced(s, std::move(fwd));
    std::optional<Word> sp = resolve_forced(s, std::move(bwd));
    if (!fp || !sp) {
        // Contradictory position constraints: no non-empty word fits. The
        // empty word may still be admitted by every property.
        bool eps_ok = o.value.nu().eps;
        o.value = StringPropertyValue::non_unary(eps_ok, LowerBound::make_bottom());
        return o;
    }
    LowerBound b = o.value.nu().bound;
    if (!fp->empty()) {
        PrefixMeet m = prefix_meet(b.prefix, *fp);
        if (!m.ok) {
            o.value.nu().bound = LowerBound::make_bottom();
            return o;
        }
        b.prefix = m.value;
    }
    if (!sp->empty()) {
        std::optional<Word> rs = b.suffix ? std::optional(Word(b.suffix->rbegin(), b.suffix->rend()))
                                          : std::nullopt;
        PrefixMeet m = prefix_meet(rs, *sp);
        if (!m.ok) {
            o.value.nu().bound = LowerBound::make_bottom();
            return o;
        }
        b.suffix = m.value ? std::optional(Word(m.value->rbegin(), m.value->rend())) : std::nullopt;
    }
    o.value.nu().bound = basic_reduce(std::move(b));
    return o;
}

StringObject unary_bounds_reduce(const Session& s, StringObject o) {
    if (o.bottom) {
        return object_bottom();
    }
    std::vector<PropRef> props = all_props(s, o);
    for (PropRef& dst : props) {
        if (!dst.p.is_unary()) {
            continue;
        }
        std::vector<Letter> dst_erase = dst.m.erase_set(s.sigma);
        auto compatible = [&](const StandardMorphism& m) {
            std::vector<Letter> e = m.erase_set(s.sigma);
            return std::includes(e.begin(), e.end(), dst_erase.begin(), dst_erase.end());
        };
        UnaryInterval u = dst.p.un();
        if (u.bottom) {
            continue;
        }
        std::uint64_t lo = 0;
        std::optional<std::uint64_t> cap;
        for (const PropRef& src : props) {
            // A lower bound on the source image constrains non-empty words
            // unless an erasing source may map them to the empty image; the
            // empty word itself lives in the epsilon flags.
            if (src.p.is_unary()) {
                const UnaryInterval& su = src.p.un();
                bool usable = !su.eps || !src.m.is_erasing();
                if (compatible(src.m) && usable && su.has_range) {
                    lo = std::max(lo, su.lo);
                }
                continue;
            }
            const NonUnaryProp& np = src.p.nu();
            if (np.bound.bottom) {
                continue;
            }
            const LowerBound& b = np.bound;
            bool usable = !np.eps || !src.m.is_erasing();
            if (usable && compatible(src.m)) {
                std::uint64_t n = 0;
                if (b.prefix) {
                    n = std::max<std::uint64_t>(n, b.prefix->size());
                }
                if (b.suffix) {
                    n = std::max<std::uint64_t>(n, b.suffix->size());
                }
                if (b.prefix && b.suffix) {
                    n = std::max<std::uint64_t>(n, b.prefix->size() + b.suffix->size() -
                                                       longest_overlap(*b.prefix, *b.suffix));
                }
                for (const Word& m : b.factors.members) {
                    n = std::max<std::uint64_t>(n, m.size());
                }
                n = std::max<std::uint64_t>(n, b.letters().size()); // alphabetic argument
                lo = std::max(lo, n);
            }
            if (b.constant && !src.m.is_erasing()) {
                // A non-erasing constant image pins the concrete length.
                cap = cap ? std::min(*cap, b.constant->size() + 1) : b.constant->size() + 1;
                if (dst.m == s.len_morphism() || compatible(src.m)) {
                    lo = std::max<std::uint64_t>(lo, b.constant->size());
                }
            }
        }
        u = raise_lo(u, lo);
        if (cap && !u.bottom) {
            u = lower_hi(u, *cap);
        }
        dst.p = StringPropertyValue::unary(u);
    }
    store_back(s, o, props);
    return o;
}

namespace {

StringObject standalone_pass(const Session& s, StringObject o) {
    std::vector<PropRef> props = all_props(s, o);
    for (PropRef& pr : props) {
        if (pr.p.is_unary() || pr.p.nu().bound.bottom) {
            continue;
        }
        std::size_t n = pr.m.is_identity() ? s.sigma.size()
                                           : pr.m.image_alphabet(s.sigma).size();
        pr.p.nu().bound = standalone_reduce(pr.p.nu().bound, n);
    }
    store_back(s, o, props);
    return o;
}

StringObject perfect_pass(const Session& s, StringObject o, bool& changed) {
    changed = false;
    if (o.value.is_unary() || o.value.nu().bound.bottom || o.length.bottom ||
        !o.length.has_range || !o.length.hi) {
        return o;
    }
    if (o.length.lo >= cross_reduction_threshold(o.value.nu().bound)) {
        return o;
    }
    PerfectReduceResult r = perfect_reduce_budgeted(o.value.nu().eps, o.value.nu().bound,
                                                    o.length, s.sigma, s.budget);
    StringPropertyValue v = StringPropertyValue::non_unary(r.eps, r.bound);
    if (!(v == o.value) || !(r.length == o.length)) {
        changed = true;
        o.value = v;
        o.length = r.length;
    }
    return o;
}

} // namespace

StringObject reduce_object(const Session& s, StringObject o) {
    if (o.bottom) {
        return object_bottom();
    }
    for (int outer = 0; outer < kPipelineCap; ++outer) {
        for (int round = 0; round < kPipelineCap; ++round) {
            StringObject before = o;
            o = standalone_pass(s, o);
            o = resolve_letter_constraints(s, o);
            o = propagate_preserved(s, o);
            o = propagate_upwards(s, o);
            o = propagate_gap_subwords(s, o);
            o = unary_bounds_reduce(s, o);
            o = harmonize_eps(o);
            o = normalize_non_eps(std::move(o));
            if (o.bottom || component_empty(o)) {
                return o.bottom ? o : object_bottom();
            }
            if (o == before) {
                break;
            }
        }
        bool changed = false;
        o = perfect_pass(s, o, changed);
        if (component_empty(o)) {
            return object_bottom();
        }
        if (!changed) {
            return o;
        }
    }
    STROBJ_REQUIRE(false, "object reduction did not stabilize");
    return o;
}

StringObject prune_redundant(const Session& s, StringObject o) {
    if (o.bottom) {
        return object_bottom();
    }
    // Images are normalized like stored properties before the comparison, so
    // a stored value whose extra content is only the standalone closure of
    // the image still counts as redundant.
    auto image_of = [&](const StandardMorphism& m, const StringPropertyValue& src) {
        StringPropertyValue img = apply_to_prop(m, src, s.sigma);
        if (!img.is_unary() && !img.nu().bound.bottom) {
            img.nu().bound =
                standalone_reduce(img.nu().bound, m.image_alphabet(s.sigma).size());
        }
        return img;
    };
    for (;;) {
        bool dropped = false;
        for (std::size_t i = 0; i < o.customs.size(); ++i) {
            const auto& [m, p] = o.customs[i];
            bool redundant = p.is_top();
            if (!redundant && !o.value.is_unary()) {
                redundant = image_of(m, o.value) == p;
            }
            if (!redundant) {
                for (std::size_t j = 0; j < o.customs.size() && !redundant; ++j) {
                    const auto& [m2, p2] = o.customs[j];
                    if (i != j && !p2.is_unary() && leq(m2, m, s.sigma) && !(m2 == m)) {
                        redundant = image_of(m, p2) == p;
                    }
                }
            }
            if (redundant) {
                o.customs.erase(o.customs.begin() + static_cast<std::ptrdiff_t>(i));
                dropped = true;
                break;
            }
        }
        if (!dropped) {
            return o;
        }
    }
}

StringObject widen_object(const Session& s, const StringObject& prev, const StringObject& next,
                          bool delay_exhausted) {
    StringObject j = object_join(s, prev, next);
    if (!delay_exhausted || prev.bottom || j.bottom) {
        return j;
    }
    auto blow = [](const UnaryInterval& was, UnaryInterval now) {
        if (now.has_range && now.hi && (!was.has_range || !was.hi || *now.hi > *was.hi)) {
            now.hi = std::nullopt;
        }
        return now;
    };
    j.length = blow(prev.length, j.length);
    for (auto& [m, p] : j.customs) {
        if (!p.is_unary()) {
            continue;
        }
        if (const StringPropertyValue* was = find_custom(prev, m); was && was->is_unary()) {
            p = StringPropertyValue::unary(blow(was->un(), p.un()));
        } else {
            UnaryInterval u = p.un();
            u.hi = std::nullopt;
            p = StringPropertyValue::unary(unary_normalize(u.eps, u.has_range, u.lo, u.hi));
        }
    }
    return j;
}

} // namespace strobj
