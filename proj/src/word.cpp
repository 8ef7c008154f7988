// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/word.hpp"

#include <algorithm>
#include <set>

namespace strobj {

Alphabet Alphabet::of(const Word& ls) {
    Alphabet a;
    a.absorb(ls);
    if (a.letters.empty()) {
        throw DiagError("alphabet must be non-empty");
    }
    return a;
}

bool Alphabet::contains(Letter c) const {
    return std::binary_search(letters.begin(), letters.end(), c);
}

void Alphabet::absorb(const Word& w) {
    for (Letter c : w) {
        if (c == kLengthLetter) {
            throw DiagError("code point 0 is reserved");
        }
        letters.push_back(c);
    }
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
}

bool is_factor(const Word& needle, const Word& hay) {
    return hay.find(needle) != Word::npos;
}

std::size_t longest_overlap(const Word& u, const Word& v) {
    std::size_t max = std::min(u.size(), v.size());
    for (std::size_t len = max; len > 0; --len) {
        if (u.compare(u.size() - len, len, v, 0, len) == 0) {
            return len;
        }
    }
    return 0;
}

std::vector<Word> all_factors(const Word& w) {
    std::set<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; len + i <= w.size(); ++len) {
            out.insert(w.substr(i, len));
        }
    }
    return {out.begin(), out.end()};
}

FactorCode FactorCode::of(std::initializer_list<Word> ws) {
    FactorCode code;
    for (const Word& w : ws) {
        code = antichain_insert(std::move(code), w);
    }
    return code;
}

bool FactorCode::contains_factor_of_member(const Word& w) const {
    return std::any_of(members.begin(), members.end(),
                       [&](const Word& m) { return is_factor(w, m); });
}

FactorCode antichain_insert(FactorCode code, const Word& w) {
    STROBJ_REQUIRE(!w.empty(), "factor-code members are non-empty");
    if (code.contains_factor_of_member(w)) {
        return code;
    }
    std::erase_if(code.members, [&](const Word& m) { return is_factor(m, w); });
    code.members.insert(std::upper_bound(code.members.begin(), code.members.end(), w), w);
    return code;
}

FactorCode common_maximal_factors(const FactorCode& a, const FactorCode& b) {
    std::set<Word> of_a;
    for (const Word& m : a.members) {
        for (Word& f : all_factors(m)) {
            of_a.insert(std::move(f));
        }
    }
    std::vector<Word> common;
    std::set<Word> seen;
    for (const Word& m : b.members) {
        for (Word& f : all_factors(m)) {
            if (of_a.count(f) && seen.insert(f).second) {
                common.push_back(std::move(f));
            }
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
}

Word utf8_decode(std::string_view s) {
    Word out;
    std::size_t i = 0;
    auto cont = [&](std::size_t k) {
        return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0u) == 0x80u;
    };
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = 0;
        std::size_t n = 0;
        if (b0 < 0x80u) {
            cp = b0;
            n = 1;
        } else if ((b0 & 0xE0u) == 0xC0u && cont(1)) {
            cp = (b0 & 0x1Fu);
            n = 2;
        } else if ((b0 & 0xF0u) == 0xE0u && cont(1) && cont(2)) {
            cp = (b0 & 0x0Fu);
            n = 3;
        } else if ((b0 & 0xF8u) == 0xF0u && cont(1) && cont(2) && cont(3)) {
            cp = (b0 & 0x07u);
            n = 4;
        } else {
            throw DiagError("invalid UTF-8 input");
        }
        for (std::size_t k = 1; k < n; ++k) {
            cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3Fu);
        }
        out.push_back(cp);
        i += n;
    }
    return out;
}

std::string utf8_encode(const Word& w) {
    std::string out;
    for (char32_t cp : w) {
        if (cp < 0x80u) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800u) {
            out.push_back(static_cast<char>(0xC0u | (cp >> 6)));
            out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
        } else if (cp < 0x10000u) {
            out.push_back(static_cast<char>(0xE0u | (cp >> 12)));
            out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
            out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
        } else {
            out.push_back(static_cast<char>(0xF0u | (cp >> 18)));
            out.push_back(static_cast<char>(0x80u | ((cp >> 12) & 0x3Fu)));
            out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
            out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
        }
    }
    return out;
}

} // namespace strobj
