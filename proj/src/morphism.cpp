// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/morphism.hpp"

#include <algorithm>
#include <numeric>

namespace strobj {

namespace {

std::vector<Letter> full_letters(const Alphabet& sigma) {
    std::vector<Letter> out;
    out.reserve(sigma.size() + 1);
    out.push_back(kLengthLetter);
    out.insert(out.end(), sigma.letters.begin(), sigma.letters.end());
    return out;
}

} // namespace

StandardMorphism StandardMorphism::length_of(const Alphabet& sigma) {
    StandardMorphism m;
    for (Letter c : sigma.letters) {
        m.map_[c] = kLengthLetter;
    }
    return m;
}

StandardMorphism StandardMorphism::normalize(const std::map<Letter, std::optional<Letter>>& raw) {
    for (const auto& [src, img] : raw) {
        if (img && *img > src) {
            throw DiagError("morphism image exceeds its source letter");
        }
    }
    auto step = [&](Letter c) -> std::optional<Letter> {
        auto it = raw.find(c);
        if (it == raw.end()) {
            return c;
        }
        return it->second;
    };
    StandardMorphism m;
    for (const auto& [src, unused] : raw) {
        (void)unused;
        std::optional<Letter> cur = src;
        // Strictly decreasing chain; terminates at a fixpoint or erasure.
        while (cur) {
            std::optional<Letter> next = step(*cur);
            if (next == cur) {
                break;
            }
            cur = next;
        }
        if (!cur) {
            m.map_[src] = kErased;
            m.erasing_ = true;
        } else if (*cur != src) {
            m.map_[src] = *cur;
        }
    }
    return m;
}

bool StandardMorphism::erases(Letter c) const {
    auto it = map_.find(c);
    return it != map_.end() && it->second == kErased;
}

std::optional<Letter> StandardMorphism::image(Letter c) const {
    auto it = map_.find(c);
    if (it == map_.end()) {
        return c;
    }
    if (it->second == kErased) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<Letter> StandardMorphism::erase_set(const Alphabet& sigma) const {
    std::vector<Letter> out;
    for (Letter c : sigma.letters) {
        if (erases(c)) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<Letter> StandardMorphism::preimage_class(Letter img, const Alphabet& sigma) const {
    std::vector<Letter> out;
    for (Letter c : sigma.letters) {
        if (image(c) == std::optional(img)) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<Letter> StandardMorphism::image_alphabet(const Alphabet& sigma) const {
    std::vector<Letter> out;
    for (Letter c : sigma.letters) {
        if (auto i = image(c)) {
            out.push_back(*i);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool StandardMorphism::unary_image(const Alphabet& sigma) const {
    return image_alphabet(sigma).size() <= 1;
}

Word StandardMorphism::operator()(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter c : w) {
        if (auto i = image(c)) {
            out.push_back(*i);
        }
    }
    return out;
}

bool leq(const StandardMorphism& m1, const StandardMorphism& m2, const Alphabet& sigma) {
    for (Letter c : full_letters(sigma)) {
        std::optional<Letter> lhs = m1.image(c);
        if (lhs) {
            lhs = m2.image(*lhs);
        }
        if (lhs != m2.image(c)) {
            return false;
        }
    }
    return true;
}

StandardMorphism join(const StandardMorphism& m1, const StandardMorphism& m2,
                      const Alphabet& sigma) {
    const std::vector<Letter> letters = full_letters(sigma);
    std::vector<std::size_t> parent(letters.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    auto unite = [&](std::size_t i, std::size_t j) { parent[find(i)] = find(j); };
    auto index_of = [&](Letter c) {
        auto it = std::lower_bound(letters.begin(), letters.end(), c);
        STROBJ_REQUIRE(it != letters.end() && *it == c, "letter outside session alphabet");
        return static_cast<std::size_t>(it - letters.begin());
    };

    std::vector<bool> erased(letters.size(), false);
    for (std::size_t i = 0; i < letters.size(); ++i) {
        for (const StandardMorphism* m : {&m1, &m2}) {
            if (auto img = m->image(letters[i])) {
                unite(i, index_of(*img));
            } else {
                erased[i] = true;
            }
        }
    }
    std::vector<bool> class_erased(letters.size(), false);
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (erased[i]) {
            class_erased[find(i)] = true;
        }
    }
    std::vector<std::optional<Letter>> class_min(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        std::size_t r = find(i);
        if (!class_min[r] || letters[i] < *class_min[r]) {
            class_min[r] = letters[i];
        }
    }
    std::map<Letter, std::optional<Letter>> raw;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        Letter c = letters[i];
        if (c == kLengthLetter) {
            continue;
        }
        std::size_t r = find(i);
        if (class_erased[r]) {
            raw[c] = std::nullopt;
        } else if (*class_min[r] != c) {
            raw[c] = *class_min[r];
        }
    }
    return StandardMorphism::normalize(raw);
}

StandardMorphism top_morphism(const Alphabet& sigma) {
    std::map<Letter, std::optional<Letter>> raw;
    for (Letter c : sigma.letters) {
        raw[c] = std::nullopt;
    }
    return StandardMorphism::normalize(raw);
}

bool preserves(const Word& w, const StandardMorphism& m2, const StandardMorphism& m1,
               const Alphabet& sigma) {
    if (w.empty()) {
        return true;
    }
    if (m1(w) != w || m2(w) != w) {
        return false;
    }
    std::set<Letter> distinct(w.begin(), w.end());
    bool classes_match = std::all_of(distinct.begin(), distinct.end(), [&](Letter c) {
        return m1.preimage_class(c, sigma) == m2.preimage_class(c, sigma);
    });
    if (classes_match && m1.erase_set(sigma) == m2.erase_set(sigma)) {
        return true; // full preimage sets coincide
    }
    return w.size() == 1 && classes_match;
}

StringPropertyValue apply_to_bound(const StandardMorphism& m, bool eps, const LowerBound& b,
                                   const Alphabet& sigma) {
    const bool unary = m.unary_image(sigma);
    auto eps_only = [&]() {
        if (unary) {
            return StringPropertyValue::unary(UnaryInterval::eps_only());
        }
        return StringPropertyValue::non_unary(true, LowerBound::make_bottom());
    };
    if (b.bottom) {
        return eps_only();
    }
    std::optional<Word> c_img = b.constant ? std::optional(m(*b.constant)) : std::nullopt;
    if (c_img && c_img->empty()) {
        return eps_only();
    }
    std::optional<Word> p_img = b.prefix ? std::optional(m(*b.prefix)) : std::nullopt;
    std::optional<Word> s_img = b.suffix ? std::optional(m(*b.suffix)) : std::nullopt;
    if (p_img && p_img->empty()) {
        p_img.reset();
    }
    if (s_img && s_img->empty()) {
        s_img.reset();
    }
    std::vector<Word> f_img;
    for (const Word& w : b.factors.members) {
        Word i = m(w);
        if (!i.empty()) {
            f_img.push_back(std::move(i));
        }
    }
    const bool surviving = c_img || p_img || s_img || !f_img.empty();
    const bool eps_r = eps || (m.is_erasing() && !surviving);

    if (unary) {
        if (c_img) {
            return StringPropertyValue::unary(
                unary_normalize(eps_r, true, c_img->size(), c_img->size() + 1));
        }
        std::uint64_t lo = 1;
        if (p_img) {
            lo = std::max<std::uint64_t>(lo, p_img->size());
        }
        if (s_img) {
            lo = std::max<std::uint64_t>(lo, s_img->size());
        }
        for (const Word& w : f_img) {
            lo = std::max<std::uint64_t>(lo, w.size());
        }
        return StringPropertyValue::unary(unary_normalize(eps_r, true, lo, std::nullopt));
    }

    LowerBound out;
    out.constant = c_img;
    out.prefix = p_img;
    out.suffix = s_img;
    for (Word& w : f_img) {
        out.factors = antichain_insert(std::move(out.factors), w);
    }
    return StringPropertyValue::non_unary(eps_r, basic_reduce(std::move(out)));
}

StringPropertyValue apply_to_prop(const StandardMorphism& m, const StringPropertyValue& p,
                                  const Alphabet& sigma) {
    STROBJ_REQUIRE(!p.is_unary(), "cannot push a unary property through a morphism");
    return apply_to_bound(m, p.nu().eps, p.nu().bound, sigma);
}

namespace {

void partitions_rec(const std::vector<Letter>& rest, std::size_t i,
                    std::vector<std::vector<Letter>>& classes, std::vector<Letter>& erase,
                    std::vector<StandardMorphism>& out) {
    if (i == rest.size()) {
        std::map<Letter, std::optional<Letter>> raw;
        for (Letter c : erase) {
            raw[c] = std::nullopt;
        }
        for (const auto& cls : classes) {
            Letter mn = *std::min_element(cls.begin(), cls.end());
            for (Letter c : cls) {
                if (c != mn) {
                    raw[c] = mn;
                }
            }
        }
        out.push_back(StandardMorphism::normalize(raw));
        return;
    }
    Letter c = rest[i];
    erase.push_back(c);
    partitions_rec(rest, i + 1, classes, erase, out);
    erase.pop_back();
    for (auto& cls : classes) {
        cls.push_back(c);
        partitions_rec(rest, i + 1, classes, erase, out);
        cls.pop_back();
    }
    classes.push_back({c});
    partitions_rec(rest, i + 1, classes, erase, out);
    classes.pop_back();
}

} // namespace

std::vector<StandardMorphism> all_standard_morphisms(const Alphabet& sigma) {
    std::vector<StandardMorphism> out;
    std::vector<std::vector<Letter>> classes;
    std::vector<Letter> erase;
    partitions_rec(sigma.letters, 0, classes, erase, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const StandardMorphism& a, const StandardMorphism& b) {
                              return a == b;
                          }),
              out.end());
    return out;
}

} // namespace strobj
