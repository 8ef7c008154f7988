// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "strobj/object.hpp"
#include "strobj/oracle.hpp"

namespace strobj::test {

inline Word W(const std::string& s) { return utf8_decode(s); }

inline std::optional<Word> OW(const std::string& s) { return utf8_decode(s); }

inline FactorCode FC(std::initializer_list<std::string> ws) {
    FactorCode c;
    for (const std::string& w : ws) {
        c = antichain_insert(std::move(c), W(w));
    }
    return c;
}

inline std::vector<Word> WS(std::initializer_list<std::string> ws) {
    std::vector<Word> out;
    for (const std::string& w : ws) {
        out.push_back(W(w));
    }
    return out;
}

inline Session S(const std::string& letters) { return Session::make(Alphabet::of(W(letters))); }

inline StandardMorphism morphism(std::initializer_list<std::pair<char, char>> classes,
                                 const std::string& erase = "") {
    std::map<Letter, std::optional<Letter>> raw;
    for (auto [src, img] : classes) {
        raw[static_cast<Letter>(src)] = static_cast<Letter>(img);
    }
    for (char c : erase) {
        raw[static_cast<Letter>(c)] = std::nullopt;
    }
    return StandardMorphism::normalize(raw);
}

inline LowerBound bound(const std::string& prefix, const std::string& suffix,
                        std::initializer_list<std::string> factors,
                        const std::string& constant = "") {
    LowerBound b;
    if (!constant.empty()) {
        b.constant = W(constant);
    }
    if (!prefix.empty()) {
        b.prefix = W(prefix);
    }
    if (!suffix.empty()) {
        b.suffix = W(suffix);
    }
    for (const std::string& f : factors) {
        b.factors = antichain_insert(std::move(b.factors), W(f));
    }
    return basic_reduce(std::move(b));
}

} // namespace strobj::test
