// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "strobj/property.hpp"
#include "strobj/word.hpp"

namespace strobj {

/// Idempotent, letterwise non-increasing morphism induced by an alphabet
/// partition: every class maps to its minimal letter or is erased; letters
/// not mentioned map to themselves. The code-0 length letter is implicitly
/// identity-mapped, so the all-to-length morphism is standard over the
/// session alphabet extended with it.
class StandardMorphism {
  public:
    StandardMorphism() = default;

    /// Identity morphism.
    static StandardMorphism identity() { return {}; }

    /// The length morphism over `sigma`: every letter to the code-0 letter.
    static StandardMorphism length_of(const Alphabet& sigma);

    /// Canonicalize a raw letterwise map (images must not exceed their
    /// sources in code order; nullopt erases). Iterates to its fixpoint.
    static StandardMorphism normalize(const std::map<Letter, std::optional<Letter>>& raw);

    [[nodiscard]] bool is_identity() const { return map_.empty(); }
    [[nodiscard]] bool is_erasing() const { return erasing_; }
    [[nodiscard]] bool erases(Letter c) const;
    /// Image of one letter; nullopt when erased.
    [[nodiscard]] std::optional<Letter> image(Letter c) const;
    /// Letters of `sigma` erased by this morphism.
    [[nodiscard]] std::vector<Letter> erase_set(const Alphabet& sigma) const;
    /// Preimage class of an image letter within `sigma` (plus the length
    /// letter when applicable).
    [[nodiscard]] std::vector<Letter> preimage_class(Letter img, const Alphabet& sigma) const;
    /// Distinct images of `sigma`'s letters (erased letters excluded).
    [[nodiscard]] std::vector<Letter> image_alphabet(const Alphabet& sigma) const;
    [[nodiscard]] bool unary_image(const Alphabet& sigma) const;

    Word operator()(const Word& w) const;

    bool operator==(const StandardMorphism&) const = default;
    /// Arbitrary total order for canonical container keys.
    bool operator<(const StandardMorphism& o) const { return map_ < o.map_; }

  private:
    // Non-identity entries only; kErased marks erasure.
    static constexpr Letter kErased = static_cast<Letter>(0xFFFFFFFFu);
    std::map<Letter, Letter> map_;
    bool erasing_ = false;
};

/// apply(m, w): letterwise image with erased letters deleted.
inline Word apply(const StandardMorphism& m, const Word& w) { return m(w); }

/// The property preorder: m1 <= m2 iff m2 . m1 == m2 on every letter.
bool leq(const StandardMorphism& m1, const StandardMorphism& m2, const Alphabet& sigma);

/// Least upper bound: the finest common coarsening of the two partitions. A
/// merged class is erased when it meets either erase set, else it maps to
/// its minimal letter.
StandardMorphism join(const StandardMorphism& m1, const StandardMorphism& m2,
                      const Alphabet& sigma);

/// The all-to-epsilon top morphism over `sigma` (its property is trivial).
StandardMorphism top_morphism(const Alphabet& sigma);

/// Whether `m2` preserves `w` with respect to `m1`: both fix `w` and their
/// preimage structures for `w` agree (for one-letter words, agreement of the
/// one-letter preimage sets suffices).
bool preserves(const Word& w, const StandardMorphism& m2, const StandardMorphism& m1,
               const Alphabet& sigma);

/// Image of a whole lower bound under `m`: constant, prefix, suffix and
/// factors map to their (contiguous) images, basic-reduced; unary-image
/// morphisms yield the implied interval. The epsilon flag widens when the
/// image can vanish.
StringPropertyValue apply_to_bound(const StandardMorphism& m, bool eps, const LowerBound& b,
                                   const Alphabet& sigma);

/// Morphic image of a whole property value.
StringPropertyValue apply_to_prop(const StandardMorphism& m, const StringPropertyValue& p,
                                  const Alphabet& sigma);

/// All standard morphisms over `sigma` (for exhaustive lattice checks).
std::vector<StandardMorphism> all_standard_morphisms(const Alphabet& sigma);

} // namespace strobj
