// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "strobj/morphism.hpp"
#include "strobj/property.hpp"

namespace strobj {

/// Analysis session: the declared alphabet, the configured custom property
/// morphisms, and tunables. Passed to every object-level operation.
struct Session {
    Alphabet sigma;
    std::vector<StandardMorphism> props; // custom morphisms, sorted, no id/len/top
    int widen_delay = 3;
    std::uint64_t budget = 1'000'000;

    static Session make(Alphabet sigma, std::vector<StandardMorphism> props = {});

    [[nodiscard]] StandardMorphism len_morphism() const {
        return StandardMorphism::length_of(sigma);
    }
};

/// Abstract string object: the reduced product of the value property, the
/// length property and the stored custom morphism-indexed properties. A
/// custom whose content is exactly the image of a smaller stored property is
/// pruned; operations re-materialize such components on demand.
struct StringObject {
    bool bottom = false;
    StringPropertyValue value; // identity-indexed
    UnaryInterval length;      // length-morphism-indexed
    std::vector<std::pair<StandardMorphism, StringPropertyValue>> customs; // sorted

    bool operator==(const StringObject&) const = default;
};

StringObject object_bottom();
StringObject object_top(const Session& s);
/// Best abstraction of a singleton word (epsilon included).
StringObject atom_object(const Session& s, const Word& w);

/// Gamma membership of a concrete word.
bool satisfies(const Session& s, const StringObject& o, const Word& w);

/// The stored-or-materialized component for a morphism: a stored property if
/// present, otherwise the image of the largest stored smaller property.
StringPropertyValue component(const Session& s, const StringObject& o,
                              const StandardMorphism& eta);

/// The combined property set two operands are computed over: stored customs
/// of both, the session's configured properties, and pairwise joins of
/// stored customs (identity, length and the trivial top excluded).
std::vector<StandardMorphism> combined_props(const Session& s, const StringObject& o1,
                                             const StringObject& o2);

/// Componentwise join/meet over the combined property set, no reduction.
StringObject raw_join(const Session& s, const StringObject& o1, const StringObject& o2);
StringObject raw_meet(const Session& s, const StringObject& o1, const StringObject& o2);

/// Lattice operations: componentwise op, then the object reduction, then
/// redundancy pruning.
StringObject object_join(const Session& s, const StringObject& o1, const StringObject& o2);
StringObject object_meet(const Session& s, const StringObject& o1, const StringObject& o2);

/// Abstract inclusion, decided through the lattice operations.
bool object_leq(const Session& s, const StringObject& a, const StringObject& b);

/// The object reduction: standalone reduction of binary-alphabet bounds,
/// letter-constraint resolution, preserved/upward/gap-subword propagation,
/// the unary bounds rules, and finally budgeted exact reduction of the value
/// against a finite length. Idempotent and gamma-preserving; collapses to
/// bottom on any contradiction.
StringObject reduce_object(const Session& s, StringObject o);

// Pipeline pieces, exposed for direct testing. Each is gamma-preserving.
StringObject propagate_upwards(const Session& s, StringObject o);
StringObject propagate_preserved(const Session& s, StringObject o);
StringObject propagate_gap_subwords(const Session& s, StringObject o);
StringObject resolve_letter_constraints(const Session& s, StringObject o);
StringObject unary_bounds_reduce(const Session& s, StringObject o);

/// Drop customs whose content equals the image of a smaller stored property.
StringObject prune_redundant(const Session& s, StringObject o);

/// Loop-head extrapolation: object_join, plus blowing a grown unary upper
/// bound to infinity once the widening delay is exhausted.
StringObject widen_object(const Session& s, const StringObject& prev, const StringObject& next,
                          bool delay_exhausted);

} // namespace strobj
