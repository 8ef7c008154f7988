// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace strobj;
using namespace strobj::test;

namespace {

StringPropertyValue nu(LowerBound b, bool eps = false) {
    return StringPropertyValue::non_unary(eps, std::move(b));
}

} // namespace

TEST_CASE("enumerate_gamma") {
    Session s = S("ab");
    StringObject o;
    o.value = nu(bound("", "", {"a", "b"}));
    o.length = UnaryInterval::range(1, std::nullopt);
    BoundedLanguage g = enumerate_gamma(s, o, 2);
    CHECK(g.words == WS({"ab", "ba"}));

    StringObject ex;
    ex.value = nu(bound("", "", {"abbab", "abab"}));
    ex.length = UnaryInterval::range(6, 8);
    BoundedLanguage g2 = enumerate_gamma(s, ex, 7);
    CHECK(g2.words == WS({"ababbab", "abbabab"}));

    CHECK(enumerate_gamma(s, object_bottom(), 4).words.empty());
    CHECK_THROWS_AS(enumerate_gamma(s, o, 13), DiagError);
}

TEST_CASE("alpha_of_set") {
    Session s = S("ab");
    StringObject atom = alpha_of_set(s, WS({"aba"}));
    CHECK(atom.value == nu(bound("", "", {}, "aba")));
    CHECK(atom.length == UnaryInterval::range(3, 4));

    StringObject two = alpha_of_set(s, WS({"abbabab", "ababbab"}));
    CHECK(two.value.nu().bound.prefix == OW("ab"));
    CHECK(two.value.nu().bound.suffix == OW("bab"));
    CHECK(two.value.nu().bound.factors.contains_factor_of_member(W("abbab")));
    CHECK(two.value.nu().bound.factors.contains_factor_of_member(W("abab")));
    CHECK(two.length == UnaryInterval::range(7, 8));

    StringObject eps = alpha_of_set(s, WS({""}));
    CHECK(eps.value.nu().eps);
    CHECK(eps.value.nu().bound.bottom);
    CHECK(eps.length == UnaryInterval::eps_only());
}

TEST_CASE("brute_unavoidable on the sample systems") {
    Alphabet sigma = Alphabet::of(W("ab"));
    UnavoidableVerdict v =
        brute_unavoidable(bound("", "", {"abaa", "bbaa"}), W("aab"), sigma, 12);
    // No witness below the guardrail; the construction bound exceeds it, so
    // no theorem is claimed either.
    CHECK(v.kind != UnavoidableVerdict::WitnessFound);

    UnavoidableVerdict w =
        brute_unavoidable(bound("", "", {"bbaaa", "bbbaa"}), W("aab"), sigma, 10);
    REQUIRE(w.kind == UnavoidableVerdict::WitnessFound);
    LowerBound b = bound("", "", {"bbaaa", "bbbaa"});
    CHECK(b.admits(w.witness));
    CHECK_FALSE(is_factor(W("aab"), w.witness));

    // Small systems fit under the construction bound and can be certified.
    UnavoidableVerdict u = brute_unavoidable(bound("", "", {"ab"}), W("ab"), sigma, 10);
    CHECK(u.kind == UnavoidableVerdict::Unavoidable);

    Alphabet abc = Alphabet::of(W("abc"));
    UnavoidableVerdict t = brute_unavoidable(bound("", "", {"ab", "ba"}), W("aa"), abc, 8);
    REQUIRE(t.kind == UnavoidableVerdict::WitnessFound);
    CHECK_FALSE(is_factor(W("aa"), t.witness));
}

TEST_CASE("run_check reports and shrinks failures") {
    // Harness self-test: a deliberately broken meet must produce a
    // counterexample.
    CheckResult ok = run_check("noop", 50, 3, [](Rng&) { return std::string{}; });
    CHECK(ok.pass);
    CHECK(ok.trials == 50);

    CheckResult broken = run_check("broken-meet", 200, 3, [](Rng& rng) -> std::string {
        Alphabet sigma = Alphabet::of(utf8_decode("ab"));
        LowerBound x = random_reduced_bound(rng, sigma, 2, 3);
        LowerBound y = random_reduced_bound(rng, sigma, 2, 3);
        // A "meet" that forgets the second argument's factors.
        LowerBound bad = x;
        if (!(bound_meet(x, y) == bad)) {
            return "meet mismatch";
        }
        return {};
    });
    CHECK_FALSE(broken.pass);
    CHECK_FALSE(broken.counterexample.empty());
}

TEST_CASE("galois inclusion and best abstraction") {
    Rng rng(79);
    Session s = Session::make(Alphabet::of(W("abc")), {morphism({}, "c")});
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Word> set;
        std::size_t n = 1 + rng.next(4);
        for (std::size_t i = 0; i < n; ++i) {
            set.push_back(random_word(rng, s.sigma, 4));
        }
        StringObject o = alpha_of_set(s, set);
        for (const Word& w : set) {
            CHECK(satisfies(s, o, w));
        }
        // alpha(gamma(o)) is no coarser than o.
        BoundedLanguage g = enumerate_gamma(s, o, 5);
        if (!g.words.empty() && g.words.size() <= 24) {
            StringObject back = alpha_of_set(s, g.words);
            for (const Word& w : enumerate_gamma(s, back, 5).words) {
                CHECK(satisfies(s, o, w));
            }
        }
    }
}

TEST_CASE("atomisticity") {
    Session s = S("ab");
    std::vector<Word> words;
    Word w;
    auto gen = [&](auto&& self) -> void {
        words.push_back(w);
        if (w.size() >= 6) {
            return;
        }
        for (Letter c : s.sigma.letters) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    gen(gen);
    for (const Word& x : words) {
        StringObject atom = alpha_of_set(s, {x});
        BoundedLanguage g = enumerate_gamma(s, atom, 6);
        REQUIRE(g.words.size() == 1);
        CHECK(g.words.front() == x);
    }
}

TEST_CASE("enumerate_gamma is monotone in depth and antitone in the order") {
    Rng rng(83);
    Session s = S("ab");
    for (int trial = 0; trial < 60; ++trial) {
        StringObject a = random_reduced_object(s, rng, 3);
        StringObject b = random_reduced_object(s, rng, 3);
        BoundedLanguage g4 = enumerate_gamma(s, a, 4);
        BoundedLanguage g6 = enumerate_gamma(s, a, 6);
        CHECK(std::includes(g6.words.begin(), g6.words.end(), g4.words.begin(), g4.words.end()));
        StringObject j = object_join(s, a, b);
        BoundedLanguage gj = enumerate_gamma(s, j, 5);
        BoundedLanguage ga = enumerate_gamma(s, a, 5);
        CHECK(std::includes(gj.words.begin(), gj.words.end(), ga.words.begin(), ga.words.end()));
    }
}

TEST_CASE("oracle suites pass at small scale") {
    for (const CheckResult& r : oracle_suites(6, 5, 60)) {
        INFO(r.name << ": " << r.counterexample);
        CHECK(r.pass);
    }
}
