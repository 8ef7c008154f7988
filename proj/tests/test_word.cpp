// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace strobj;
using namespace strobj::test;

TEST_CASE("is_factor basics") {
    CHECK(is_factor(W("ab"), W("abaa")));
    CHECK_FALSE(is_factor(W("aab"), W("abaa")));
    CHECK(is_factor(W(""), W("x")));
    CHECK(is_factor(W(""), W("")));
}

TEST_CASE("longest_overlap basics") {
    CHECK(longest_overlap(W("ab"), W("ba")) == 1);
    CHECK(longest_overlap(W("aba"), W("aba")) == 3);
    CHECK(longest_overlap(W("aa"), W("bb")) == 0);
}

TEST_CASE("overlap characterizes the shortest join of two words") {
    // For all u, v: |u|+|v|-overlap(u,v) is the length of the shortest word
    // that starts with u and ends with v, checked by brute enumeration.
    Alphabet sigma = Alphabet::of(W("ab"));
    std::vector<Word> words;
    Word w;
    auto gen = [&](auto&& self) -> void {
        words.push_back(w);
        if (w.size() >= 4) {
            return;
        }
        for (Letter c : sigma.letters) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    gen(gen);
    for (const Word& u : words) {
        for (const Word& v : words) {
            if (u.empty() || v.empty()) {
                continue;
            }
            std::size_t expected = u.size() + v.size() - longest_overlap(u, v);
            std::size_t shortest = 0;
            for (std::size_t len = std::max(u.size(), v.size()); len <= u.size() + v.size();
                 ++len) {
                bool ok = true;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    std::size_t from_end = len - i;
                    if (from_end <= v.size() && u[i] != v[v.size() - from_end]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    shortest = len;
                    break;
                }
            }
            CHECK(shortest == expected);
        }
    }
}

TEST_CASE("antichain_insert keeps the factor antichain") {
    CHECK(antichain_insert(FC({"aba"}), W("ab")) == FC({"aba"}));
    CHECK(antichain_insert(FC({"ab"}), W("aba")) == FC({"aba"}));
    CHECK(antichain_insert(FC({"ab"}), W("ba")) == FC({"ab", "ba"}));
}

TEST_CASE("antichain fold is idempotent and order-insensitive") {
    Rng rng(7);
    Alphabet sigma = Alphabet::of(W("abc"));
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Word> ws;
        std::size_t n = 1 + rng.next(6);
        for (std::size_t i = 0; i < n; ++i) {
            Word w = random_word(rng, sigma, 4);
            if (!w.empty()) {
                ws.push_back(w);
            }
        }
        FactorCode fwd;
        for (const Word& x : ws) {
            fwd = antichain_insert(std::move(fwd), x);
        }
        FactorCode rev;
        for (auto it = ws.rbegin(); it != ws.rend(); ++it) {
            rev = antichain_insert(std::move(rev), *it);
        }
        CHECK(fwd == rev);
        FactorCode again = fwd;
        for (const Word& x : ws) {
            again = antichain_insert(std::move(again), x);
        }
        CHECK(again == fwd);
    }
}

TEST_CASE("common_maximal_factors on the two-letter example") {
    CHECK(common_maximal_factors(FC({"ab"}), FC({"ba"})) == FC({"a", "b"}));
    CHECK(common_maximal_factors(FC({"aba"}), FC({"aba"})) == FC({"aba"}));
}

TEST_CASE("common_maximal_factors agrees with substring enumeration") {
    // Independent oracle: enumerate all common substrings of the two words
    // and keep the maximal ones.
    auto oracle = [](const Word& a, const Word& b) {
        std::set<Word> sa;
        for (const Word& f : all_factors(a)) {
            sa.insert(f);
        }
        std::set<Word> common;
        for (const Word& f : all_factors(b)) {
            if (sa.count(f)) {
                common.insert(f);
            }
        }
        FactorCode out;
        for (const Word& f : common) {
            bool maximal = std::none_of(common.begin(), common.end(), [&](const Word& g) {
                return g != f && is_factor(f, g);
            });
            if (maximal) {
                out = antichain_insert(std::move(out), f);
            }
        }
        return out;
    };
    // Frozen from the oracle ("ab" and "ba" are both factors of "bab").
    CHECK(oracle(W("abbab"), W("abab")) == FC({"bab"}));
    CHECK(common_maximal_factors(FC({"abbab"}), FC({"abab"})) == FC({"bab"}));

    Rng rng(11);
    Alphabet sigma = Alphabet::of(W("ab"));
    for (int trial = 0; trial < 200; ++trial) {
        Word a = random_word(rng, sigma, 5);
        Word b = random_word(rng, sigma, 5);
        if (a.empty() || b.empty()) {
            continue;
        }
        CHECK(common_maximal_factors(FactorCode{}, antichain_insert({}, a)) == FactorCode{});
        CHECK(common_maximal_factors(antichain_insert({}, a), antichain_insert({}, b)) ==
              oracle(a, b));
    }
}

TEST_CASE("factor-code join laws") {
    Rng rng(13);
    Alphabet sigma = Alphabet::of(W("abc"));
    auto random_code = [&](Rng& r) {
        FactorCode c;
        std::size_t n = 1 + r.next(3);
        for (std::size_t i = 0; i < n; ++i) {
            Word w = random_word(r, sigma, 4);
            if (!w.empty()) {
                c = antichain_insert(std::move(c), w);
            }
        }
        return c;
    };
    for (int trial = 0; trial < 300; ++trial) {
        FactorCode x = random_code(rng);
        FactorCode y = random_code(rng);
        FactorCode z = random_code(rng);
        CHECK(common_maximal_factors(x, y) == common_maximal_factors(y, x));
        CHECK(common_maximal_factors(x, x) == x);
        CHECK(common_maximal_factors(x, common_maximal_factors(y, z)) ==
              common_maximal_factors(common_maximal_factors(x, y), z));
    }
}

TEST_CASE("utf8 round trip") {
    for (const std::string& s : {"", "abc", "<tag>", "\xC3\xA9\xE2\x82\xAC"}) {
        CHECK(utf8_encode(utf8_decode(s)) == s);
    }
    CHECK_THROWS_AS(utf8_decode("\xFF"), DiagError);
}
