// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>

#include "strobj/object.hpp"

namespace strobj {

// Concrete reference semantics of the basic string operations. substring
// clamps negative indices to identity and out-of-range ones to epsilon;
// indexOf finds the first occurrence; replace of an empty pattern prepends.
Word concrete_concat(const Word& a, const Word& b);
Word concrete_substring(const Word& w, std::int64_t n);
std::int64_t concrete_index_of(const Word& hay, const Word& needle);
Word concrete_replace(const Word& w, const Word& pattern, const Word& replacement);
Word concrete_char_at(const Word& w, std::int64_t n);

/// Abstract integer used for string indices: -1 possible plus a half-open
/// interval of non-negative values.
struct IntAbstract {
    bool neg_one = false;
    bool has_range = false;
    std::uint64_t lo = 0;
    std::optional<std::uint64_t> hi; // open; nullopt = +infinity

    static IntAbstract bottom() { return {}; }
    static IntAbstract of_literal(std::int64_t k);
    static IntAbstract any_index() { return {true, true, 0, std::nullopt}; }

    [[nodiscard]] bool is_bottom() const { return !neg_one && !has_range; }
    [[nodiscard]] bool admits(std::int64_t n) const;
    /// Exactly one non-negative value.
    [[nodiscard]] std::optional<std::uint64_t> constant() const;

    bool operator==(const IntAbstract&) const = default;
};

enum class CmpRel { Eq, Ne, Ge, Lt };

CmpRel negate_rel(CmpRel rel);
IntAbstract int_meet_rel(IntAbstract v, CmpRel rel, std::int64_t k);

/// Abstract transformers over string objects. Arguments are assumed reduced;
/// substring and charAt require an index abstraction without -1.
StringObject abs_concat(const Session& s, const StringObject& o1, const StringObject& o2);
StringObject abs_substring(const Session& s, const StringObject& o, const IntAbstract& n);
IntAbstract abs_index_of(const Session& s, const StringObject& o1, const StringObject& o2);
StringObject abs_replace(const Session& s, const StringObject& o1, const StringObject& o2,
                         const StringObject& o3);
StringObject abs_char_at(const Session& s, const StringObject& o, const IntAbstract& n);

/// Guard refinements. Truthiness of a string is non-emptiness.
StringObject assume_truthy(const Session& s, const StringObject& o);
StringObject assume_falsy(const Session& s, const StringObject& o);

/// Refinement under `indexOf(o1, o2) rel k`; both refined objects are
/// bottom when the comparison is unsatisfiable.
std::pair<StringObject, StringObject> assume_index_cmp(const Session& s, const StringObject& o1,
                                                       const StringObject& o2, CmpRel rel,
                                                       std::int64_t k);

/// Property-level concatenation, exposed for naturality checks.
StringPropertyValue concat_prop(const Session& s, const StandardMorphism& m,
                                const StringPropertyValue& a, const StringPropertyValue& b);

} // namespace strobj
