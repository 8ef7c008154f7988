// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "strobj/object.hpp"

namespace strobj {

using Json = nlohmann::json;

// Object and property serialization. Defaults are omitted: absent fields,
// false flags, empty factor lists, empty custom lists.
Json prop_to_json(const StringPropertyValue& p);
StringPropertyValue prop_from_json(const Json& j);

Json unary_to_json(const UnaryInterval& u);
UnaryInterval unary_from_json(const Json& j);

Json morphism_to_json(const Session& s, const StandardMorphism& m);
StandardMorphism morphism_from_json(const Session& s, const Json& j);

Json object_to_json(const Session& s, const StringObject& o);
StringObject object_from_json(const Session& s, const Json& j);

/// One property description from a configuration file, before the session
/// alphabet is known ("*" entries are resolved against it later).
struct PropertyConfig {
    std::string name;
    std::vector<Word> classes;
    Word erase;
    Word identity;
    bool erase_rest = false;
    bool identity_rest = false;
};

std::vector<PropertyConfig> parse_property_config(const std::string& text);
/// Letters a configuration mentions explicitly (alphabet inference).
Alphabet config_letters(const std::vector<PropertyConfig>& cfgs);
/// Builds the normalized morphism; rejects overlapping classes, erased class
/// letters and non-standard raw maps.
StandardMorphism realize_property(const PropertyConfig& cfg, const Alphabet& sigma);

} // namespace strobj
