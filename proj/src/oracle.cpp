// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "strobj/ops.hpp"

namespace strobj {

bool BoundedLanguage::contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

namespace {

template <typename Pred>
BoundedLanguage enumerate(const Alphabet& sigma, std::size_t max_len, Pred&& admit) {
    if (max_len > kGammaGuardrail) {
        throw DiagError("gamma enumeration beyond the guardrail");
    }
    BoundedLanguage out;
    out.max_len = max_len;
    Word w;
    auto rec = [&](auto&& self) -> void {
        if (admit(const_cast<const Word&>(w))) {
            out.words.push_back(w);
        }
        if (w.size() >= max_len) {
            return;
        }
        for (Letter c : sigma.letters) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
    std::sort(out.words.begin(), out.words.end());
    return out;
}

} // namespace

BoundedLanguage enumerate_gamma(const Session& s, const StringObject& o, std::size_t max_len) {
    return enumerate(s.sigma, max_len, [&](const Word& w) { return satisfies(s, o, w); });
}

BoundedLanguage enumerate_gamma_prop(const Session& s, const StringPropertyValue& p,
                                     std::size_t max_len) {
    return enumerate(s.sigma, max_len, [&](const Word& w) { return p.admits(w); });
}

BoundedLanguage enumerate_bound(const Alphabet& sigma, const LowerBound& b, std::size_t max_len) {
    return enumerate(sigma, max_len, [&](const Word& w) { return b.admits(w); });
}

StringPropertyValue alpha_of_prop_set(bool unary, const std::vector<Word>& words) {
    bool eps = std::any_of(words.begin(), words.end(), [](const Word& w) { return w.empty(); });
    std::vector<Word> rest;
    for (const Word& w : words) {
        if (!w.empty()) {
            rest.push_back(w);
        }
    }
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    if (unary) {
        if (rest.empty()) {
            return StringPropertyValue::unary(eps ? UnaryInterval::eps_only()
                                                  : UnaryInterval::make_bottom());
        }
        std::uint64_t lo = rest.front().size();
        std::uint64_t hi = 0;
        for (const Word& w : rest) {
            lo = std::min<std::uint64_t>(lo, w.size());
            hi = std::max<std::uint64_t>(hi, w.size());
        }
        return StringPropertyValue::unary(unary_normalize(eps, true, lo, hi + 1));
    }
    if (rest.empty()) {
        return StringPropertyValue::non_unary(eps, LowerBound::make_bottom());
    }
    if (rest.size() == 1) {
        return StringPropertyValue::non_unary(eps, LowerBound::of_constant(rest.front()));
    }
    LowerBound b;
    std::optional<Word> pfx = rest.front();
    std::optional<Word> sfx = rest.front();
    FactorCode common = antichain_insert({}, rest.front());
    for (std::size_t i = 1; i < rest.size(); ++i) {
        // Sticky folds: an empty common prefix stays empty.
        if (pfx) {
            pfx = prefix_join(pfx, rest[i]);
        }
        if (sfx) {
            Word a(sfx->rbegin(), sfx->rend());
            Word c(rest[i].rbegin(), rest[i].rend());
            std::optional<Word> r = prefix_join(a, c);
            sfx = r ? std::optional(Word(r->rbegin(), r->rend())) : std::nullopt;
        }
        common = common_maximal_factors(common, antichain_insert({}, rest[i]));
    }
    b.prefix = pfx && !pfx->empty() ? pfx : std::nullopt;
    b.suffix = sfx && !sfx->empty() ? sfx : std::nullopt;
    b.factors = common;
    return StringPropertyValue::non_unary(eps, basic_reduce(std::move(b)));
}

StringObject alpha_of_set(const Session& s, const std::vector<Word>& words) {
    if (words.empty()) {
        return object_bottom();
    }
    StringObject o;
    o.value = alpha_of_prop_set(false, words);
    std::vector<Word> lens;
    bool eps = false;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool any = false;
    for (const Word& w : words) {
        if (w.empty()) {
            eps = true;
            continue;
        }
        lo = any ? std::min<std::uint64_t>(lo, w.size()) : w.size();
        hi = std::max<std::uint64_t>(hi, w.size());
        any = true;
    }
    o.length = any ? unary_normalize(eps, true, lo, hi + 1)
                   : (eps ? UnaryInterval::eps_only() : UnaryInterval::make_bottom());
    for (const StandardMorphism& m : s.props) {
        std::vector<Word> imgs;
        imgs.reserve(words.size());
        for (const Word& w : words) {
            imgs.push_back(m(w));
        }
        o.customs.emplace_back(m, alpha_of_prop_set(m.unary_image(s.sigma), imgs));
    }
    // Minimal among reduced objects: fold the cross-property implications in.
    return prune_redundant(s, reduce_object(s, o));
}

UnavoidableVerdict brute_unavoidable(const LowerBound& b, const Word& candidate,
                                     const Alphabet& sigma, std::size_t max_len) {
    UnavoidableVerdict v;
    if (b.bottom) {
        v.kind = UnavoidableVerdict::Unavoidable; // vacuously
        return v;
    }
    if (!candidate.empty() && b.factors.contains_factor_of_member(candidate)) {
        v.kind = UnavoidableVerdict::Unavoidable; // a factor of an equation word
        return v;
    }
    // Ascending search for a solution avoiding the candidate.
    Word w;
    bool found = false;
    auto rec = [&](auto&& self) -> bool {
        if (b.admits(w) && !is_factor(candidate, w)) {
            v.witness = w;
            return true;
        }
        if (w.size() >= max_len) {
            return false;
        }
        for (Letter c : sigma.letters) {
            w.push_back(c);
            if (self(self)) {
                return true;
            }
            w.pop_back();
        }
        return false;
    };
    found = rec(rec);
    if (found) {
        v.kind = UnavoidableVerdict::WitnessFound;
        return v;
    }
    // The delimiter construction bounds witness lengths: constants joined by
    // runs of length p+1, with one delimiter slot around every piece.
    std::uint64_t consts = 0;
    std::uint64_t k = 0;
    for (const Word& m : b.factors.members) {
        consts += m.size();
        ++k;
    }
    std::uint64_t p = consts + (b.prefix ? b.prefix->size() : 0) +
                      (b.suffix ? b.suffix->size() : 0) + 1;
    std::uint64_t bound = consts + (k + 2) * (p + 1);
    v.kind = max_len >= bound ? UnavoidableVerdict::Unavoidable : UnavoidableVerdict::Inconclusive;
    return v;
}

std::uint64_t Rng::next(std::uint64_t bound) {
    if (bound == 0) {
        return 0;
    }
    return engine_() % bound;
}

Word random_word(Rng& rng, const Alphabet& sigma, std::size_t max_len) {
    std::size_t len = rng.next(max_len + 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        w.push_back(sigma.letters[rng.next(sigma.size())]);
    }
    return w;
}

LowerBound random_reduced_bound(Rng& rng, const Alphabet& sigma, std::size_t members,
                                std::size_t max_word) {
    LowerBound b;
    std::size_t n = 1 + rng.next(members);
    for (std::size_t i = 0; i < n; ++i) {
        Word w = random_word(rng, sigma, max_word);
        if (!w.empty()) {
            b.factors = antichain_insert(std::move(b.factors), w);
        }
    }
    if (rng.next(3) == 0) {
        Word w = random_word(rng, sigma, max_word);
        if (!w.empty()) {
            b.prefix = w;
        }
    }
    if (rng.next(3) == 0) {
        Word w = random_word(rng, sigma, max_word);
        if (!w.empty()) {
            b.suffix = w;
        }
    }
    if (b.factors.empty() && !b.prefix && !b.suffix && rng.coin()) {
        Word w = random_word(rng, sigma, max_word);
        if (!w.empty()) {
            b.constant = w;
        }
    }
    return basic_reduce(std::move(b));
}

StringObject random_reduced_object(const Session& s, Rng& rng, std::size_t max_word) {
    std::size_t n = 1 + rng.next(3);
    std::vector<Word> set;
    for (std::size_t i = 0; i < n; ++i) {
        set.push_back(random_word(rng, s.sigma, max_word));
    }
    StringObject o = alpha_of_set(s, set);
    if (rng.coin()) {
        // Loosen the exact length to exercise non-atom shapes.
        UnaryInterval u = o.length;
        if (u.has_range) {
            if (rng.coin()) {
                u.hi = std::nullopt;
            } else if (u.hi) {
                u.hi = *u.hi + rng.next(3);
            }
            u = unary_normalize(u.eps || rng.next(4) == 0, true, u.lo, u.hi);
            o.length = u;
        }
    }
    if (rng.coin()) {
        std::vector<Word> other;
        std::size_t m = 1 + rng.next(2);
        for (std::size_t i = 0; i < m; ++i) {
            other.push_back(random_word(rng, s.sigma, max_word));
        }
        o = (rng.coin() ? object_join : object_meet)(s, o, alpha_of_set(s, other));
    }
    return prune_redundant(s, reduce_object(s, o));
}

CheckResult run_check(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                      const std::function<std::string(Rng&)>& trial) {
    CheckResult r;
    r.name = name;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(seed + i);
        std::string fail = trial(rng);
        ++r.trials;
        if (!fail.empty()) {
            r.pass = false;
            r.counterexample = fail + " (seed " + std::to_string(seed + i) + ")";
            return r;
        }
    }
    return r;
}

namespace {

std::string show(const Word& w) { return "\"" + utf8_encode(w) + "\""; }

Session small_session(std::size_t letters) {
    Word ls;
    for (std::size_t i = 0; i < letters; ++i) {
        ls.push_back(static_cast<Letter>(U'a' + i));
    }
    return Session::make(Alphabet::of(ls));
}

} // namespace

std::vector<CheckResult> oracle_suites(std::size_t max_len, std::uint64_t seed,
                                       std::uint64_t trials) {
    std::vector<CheckResult> out;
    const std::size_t cap = std::min<std::size_t>(max_len, kGammaGuardrail);

    out.push_back(run_check("galois-alpha-gamma", trials, seed, [&](Rng& rng) -> std::string {
        Session s = small_session(2 + rng.next(2));
        std::vector<Word> set;
        std::size_t n = 1 + rng.next(4);
        for (std::size_t i = 0; i < n; ++i) {
            set.push_back(random_word(rng, s.sigma, 4));
        }
        StringObject o = alpha_of_set(s, set);
        for (const Word& w : set) {
            if (!satisfies(s, o, w)) {
                return "alpha not covering " + show(w);
            }
        }
        return {};
    }));

    out.push_back(run_check("atomisticity", trials, seed + 1, [&](Rng& rng) -> std::string {
        Session s = small_session(2 + rng.next(2));
        Word w = random_word(rng, s.sigma, std::min<std::size_t>(cap, 8));
        StringObject o = alpha_of_set(s, {w});
        BoundedLanguage g = enumerate_gamma(s, o, std::min<std::size_t>(cap, 8));
        if (g.words.size() != 1 || g.words.front() != w) {
            return "atom of " + show(w) + " concretizes to " + std::to_string(g.words.size()) +
                   " words";
        }
        return {};
    }));

    out.push_back(run_check("bound-lattice-laws", trials, seed + 2, [&](Rng& rng) -> std::string {
        Session s = small_session(3);
        LowerBound x = random_reduced_bound(rng, s.sigma, 3, 3);
        LowerBound y = random_reduced_bound(rng, s.sigma, 3, 3);
        LowerBound z = random_reduced_bound(rng, s.sigma, 3, 3);
        if (!(bound_join(x, y) == bound_join(y, x))) {
            return "join not commutative";
        }
        if (!(bound_meet(x, y) == bound_meet(y, x))) {
            return "meet not commutative";
        }
        if (!(bound_join(x, bound_join(y, z)) == bound_join(bound_join(x, y), z))) {
            return "join not associative";
        }
        if (!(bound_meet(x, bound_meet(y, z)) == bound_meet(bound_meet(x, y), z))) {
            return "meet not associative";
        }
        if (!(bound_join(x, bound_meet(x, y)) == x)) {
            return "join absorption fails";
        }
        if (!(bound_meet(x, bound_join(x, y)) == x)) {
            return "meet absorption fails";
        }
        return {};
    }));

    out.push_back(
        run_check("reduction-gamma-preserving", trials, seed + 3, [&](Rng& rng) -> std::string {
            Session s = small_session(2);
            LowerBound b = random_reduced_bound(rng, s.sigma, 3, 4);
            LowerBound r = standalone_reduce(b, s.sigma.size());
            std::size_t depth = std::min<std::size_t>(cap, 10);
            BoundedLanguage g1 = enumerate_bound(s.sigma, b, depth);
            BoundedLanguage g2 = enumerate_bound(s.sigma, r, depth);
            if (!(g1.words == g2.words)) {
                return "standalone reduction changed gamma";
            }
            return {};
        }));

    out.push_back(run_check("concat-soundness", trials, seed + 4, [&](Rng& rng) -> std::string {
        Session s = small_session(2);
        StringObject a = random_reduced_object(s, rng, 3);
        StringObject b = random_reduced_object(s, rng, 3);
        StringObject c = abs_concat(s, a, b);
        BoundedLanguage ga = enumerate_gamma(s, a, 4);
        BoundedLanguage gb = enumerate_gamma(s, b, 4);
        for (const Word& x : ga.words) {
            for (const Word& y : gb.words) {
                if (!satisfies(s, c, x + y)) {
                    return "concat misses " + show(x + y);
                }
            }
        }
        return {};
    }));

    return out;
}

} // namespace strobj
