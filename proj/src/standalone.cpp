// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/property.hpp"

#include <algorithm>

// Standalone reduction of a lower bound over a two-letter alphabet: find the
// unavoidable words of the forms x^k y and y x^k that the equation system
// implies but no single equation word covers, and fold them into the factor
// code. Over larger alphabets a fresh delimiter letter always yields a
// counterexample, so nothing is ever added.

namespace strobj {

namespace {

std::size_t leading_run(const Word& w, Letter x) {
    std::size_t k = 0;
    while (k < w.size() && w[k] == x) {
        ++k;
    }
    return k;
}

std::size_t trailing_run(const Word& w, Letter x) {
    std::size_t k = 0;
    while (k < w.size() && w[w.size() - 1 - k] == x) {
        ++k;
    }
    return k;
}

bool contains_letter(const Word& w, Letter y) { return w.find(y) != Word::npos; }

Word run_word(Letter c, std::size_t k) { return Word(k, c); }

bool is_suffix(const Word& a, const Word& b) { // a suffix of b
    return a.size() <= b.size() && b.compare(b.size() - a.size(), a.size(), a) == 0;
}

bool is_prefix(const Word& a, const Word& b) {
    return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

struct RunSplit {
    bool has = false;
    std::size_t k = 0; // length of the x-run
    Word rest;         // remainder without the run and without the adjacent y
};

// Splits m = rest . y . x^k (trailing form); requires k >= 1 and a y before
// the run.
RunSplit split_trailing(const Word& m, Letter x, Letter y) {
    RunSplit r;
    std::size_t k = trailing_run(m, x);
    if (k == 0 || k == m.size()) {
        return r;
    }
    if (m[m.size() - 1 - k] != y) {
        return r;
    }
    r.has = true;
    r.k = k;
    r.rest = m.substr(0, m.size() - k - 1);
    return r;
}

// Splits m = x^k . y . rest (leading form).
RunSplit split_leading(const Word& m, Letter x, Letter y) {
    RunSplit r;
    std::size_t k = leading_run(m, x);
    if (k == 0 || k == m.size()) {
        return r;
    }
    if (m[k] != y) {
        return r;
    }
    r.has = true;
    r.k = k;
    r.rest = m.substr(k + 1);
    return r;
}

// One pass over a fixed letter pair (x, y). Collects unavoidable words into
// `found`.
void collect(const LowerBound& b, const std::vector<Word>& internal, Letter x, Letter y,
             std::vector<Word>& found) {
    // Internal pair rules: two equation words ending in (resp. starting with)
    // an x-run preceded (followed) by y whose remainders are not
    // suffix-(prefix-)comparable force x^min y (y x^min).
    for (std::size_t i = 0; i < internal.size(); ++i) {
        for (std::size_t j = i + 1; j < internal.size(); ++j) {
            RunSplit a = split_trailing(internal[i], x, y);
            RunSplit c = split_trailing(internal[j], x, y);
            if (a.has && c.has && !is_suffix(a.rest, c.rest) && !is_suffix(c.rest, a.rest)) {
                found.push_back(run_word(x, std::min(a.k, c.k)) + Word(1, y));
            }
            a = split_leading(internal[i], x, y);
            c = split_leading(internal[j], x, y);
            if (a.has && c.has && !is_prefix(a.rest, c.rest) && !is_prefix(c.rest, a.rest)) {
                found.push_back(Word(1, y) + run_word(x, std::min(a.k, c.k)));
            }
        }
    }
    // Prefix-equation rule: a prefix ending with x^k plus another equation
    // word containing y that cannot sit inside prefix.x* forces x^k y. The
    // embedding check keeps words like "baa" under prefix "ba" from firing.
    if (b.prefix) {
        std::size_t k = trailing_run(*b.prefix, x);
        if (k >= 1) {
            auto witness = [&](const Word& m) {
                return contains_letter(m, y) && !is_factor(m, *b.prefix + run_word(x, m.size()));
            };
            bool fire = std::any_of(internal.begin(), internal.end(), witness) ||
                        (b.suffix && witness(*b.suffix));
            if (fire) {
                found.push_back(run_word(x, k) + Word(1, y));
            }
        }
    }
    // Suffix-equation rule, mirrored.
    if (b.suffix) {
        std::size_t k = leading_run(*b.suffix, x);
        if (k >= 1) {
            auto witness = [&](const Word& m) {
                return contains_letter(m, y) && !is_factor(m, run_word(x, m.size()) + *b.suffix);
            };
            bool fire = std::any_of(internal.begin(), internal.end(), witness) ||
                        (b.prefix && witness(*b.prefix));
            if (fire) {
                found.push_back(Word(1, y) + run_word(x, k));
            }
        }
    }
}

} // namespace

LowerBound standalone_reduce(LowerBound b, std::size_t sigma_size) {
    if (b.bottom || b.constant || sigma_size != 2) {
        return b;
    }
    Alphabet used = b.letters();
    if (used.size() < 2) {
        return b;
    }
    STROBJ_REQUIRE(used.size() == 2, "binary standalone reduction on wider bound");
    const Letter a = used.letters[0];
    const Letter c = used.letters[1];
    for (int round = 0; round < 64; ++round) {
        std::vector<Word> internal;
        for (const Word& m : b.factors.members) {
            bool covered = (b.prefix && is_factor(m, *b.prefix)) ||
                           (b.suffix && is_factor(m, *b.suffix));
            if (!covered) {
                internal.push_back(m);
            }
        }
        std::vector<Word> found;
        collect(b, internal, a, c, found);
        collect(b, internal, c, a, found);
        bool changed = false;
        for (const Word& w : found) {
            FactorCode next = antichain_insert(b.factors, w);
            if (!(next == b.factors)) {
                b.factors = std::move(next);
                changed = true;
            }
        }
        if (!changed) {
            return b;
        }
    }
    STROBJ_REQUIRE(false, "standalone reduction did not stabilize");
    return b;
}

} // namespace strobj
