// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/json_io.hpp"

#include <algorithm>
#include <set>

namespace strobj {

namespace {

std::string str(const Word& w) { return utf8_encode(w); }

Word word(const Json& j) {
    if (!j.is_string()) {
        throw DiagError("expected a string value in JSON input");
    }
    return utf8_decode(j.get<std::string>());
}

} // namespace

Json unary_to_json(const UnaryInterval& u) {
    Json j = Json::object();
    if (u.bottom) {
        j["bottom"] = true;
        return j;
    }
    if (u.eps) {
        j["eps"] = true;
    }
    if (u.has_range) {
        j["lo"] = u.lo;
        j["hi"] = u.hi ? Json(*u.hi) : Json(nullptr);
    }
    return j;
}

UnaryInterval unary_from_json(const Json& j) {
    if (j.value("bottom", false)) {
        return UnaryInterval::make_bottom();
    }
    bool eps = j.value("eps", false);
    if (!j.contains("lo")) {
        return eps ? UnaryInterval::eps_only() : UnaryInterval::make_bottom();
    }
    std::uint64_t lo = j.at("lo").get<std::uint64_t>();
    std::optional<std::uint64_t> hi;
    if (j.contains("hi") && !j.at("hi").is_null()) {
        hi = j.at("hi").get<std::uint64_t>();
    }
    return unary_normalize(eps, true, lo, hi);
}

Json prop_to_json(const StringPropertyValue& p) {
    if (p.is_unary()) {
        return unary_to_json(p.un());
    }
    const NonUnaryProp& np = p.nu();
    Json j = Json::object();
    if (np.eps) {
        j["eps"] = true;
    }
    if (np.bound.bottom) {
        j["bottom"] = true;
        return j;
    }
    if (np.bound.constant) {
        j["const"] = str(*np.bound.constant);
    }
    if (np.bound.prefix) {
        j["prefix"] = str(*np.bound.prefix);
    }
    if (np.bound.suffix) {
        j["suffix"] = str(*np.bound.suffix);
    }
    if (!np.bound.factors.empty()) {
        Json fs = Json::array();
        for (const Word& m : np.bound.factors.members) {
            fs.push_back(str(m));
        }
        j["factors"] = fs;
    }
    return j;
}

StringPropertyValue prop_from_json(const Json& j) {
    if (j.contains("lo")) {
        return StringPropertyValue::unary(unary_from_json(j));
    }
    bool eps = j.value("eps", false);
    if (j.value("bottom", false)) {
        return StringPropertyValue::non_unary(eps, LowerBound::make_bottom());
    }
    LowerBound b;
    if (j.contains("const")) {
        b.constant = word(j.at("const"));
    }
    if (j.contains("prefix")) {
        b.prefix = word(j.at("prefix"));
    }
    if (j.contains("suffix")) {
        b.suffix = word(j.at("suffix"));
    }
    if (j.contains("factors")) {
        for (const Json& f : j.at("factors")) {
            b.factors = antichain_insert(std::move(b.factors), word(f));
        }
    }
    return StringPropertyValue::non_unary(eps, basic_reduce(std::move(b)));
}

Json morphism_to_json(const Session& s, const StandardMorphism& m) {
    Json j = Json::object();
    std::map<Letter, Word> classes;
    Word erase;
    for (Letter c : s.sigma.letters) {
        if (m.erases(c)) {
            erase.push_back(c);
        } else if (auto img = m.image(c); img && *img != c) {
            classes[*img].push_back(c);
        }
    }
    Json cs = Json::array();
    for (auto& [img, members] : classes) {
        cs.push_back(str(Word(1, img) + members));
    }
    j["classes"] = cs;
    j["erase"] = str(erase);
    return j;
}

StandardMorphism morphism_from_json(const Session& s, const Json& j) {
    std::map<Letter, std::optional<Letter>> raw;
    for (const Json& cls : j.value("classes", Json::array())) {
        Word letters = word(cls);
        if (letters.empty()) {
            throw DiagError("empty morphism class");
        }
        Letter min = *std::min_element(letters.begin(), letters.end());
        for (Letter c : letters) {
            if (c != min) {
                raw[c] = min;
            }
        }
    }
    if (j.contains("erase")) {
        for (Letter c : word(j.at("erase"))) {
            raw[c] = std::nullopt;
        }
    }
    (void)s;
    return StandardMorphism::normalize(raw);
}

Json object_to_json(const Session& s, const StringObject& o) {
    Json j = Json::object();
    if (o.bottom) {
        j["bottom"] = true;
        return j;
    }
    j["value"] = prop_to_json(o.value);
    j["length"] = unary_to_json(o.length);
    if (!o.customs.empty()) {
        Json cs = Json::array();
        for (const auto& [m, p] : o.customs) {
            Json c = Json::object();
            c["morphism"] = morphism_to_json(s, m);
            c["prop"] = prop_to_json(p);
            cs.push_back(c);
        }
        j["customs"] = cs;
    }
    return j;
}

StringObject object_from_json(const Session& s, const Json& j) {
    if (j.value("bottom", false)) {
        return object_bottom();
    }
    StringObject o;
    o.value = j.contains("value") ? prop_from_json(j.at("value"))
                                  : StringPropertyValue::non_unary(true, LowerBound::top());
    o.length = j.contains("length") ? unary_from_json(j.at("length")) : UnaryInterval::top();
    if (o.value.is_unary()) {
        throw DiagError("the value property must not be unary");
    }
    for (const Json& c : j.value("customs", Json::array())) {
        StandardMorphism m = morphism_from_json(s, c.at("morphism"));
        o.customs.emplace_back(m, prop_from_json(c.at("prop")));
    }
    std::sort(o.customs.begin(), o.customs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return o;
}

std::vector<PropertyConfig> parse_property_config(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DiagError(std::string("property config: ") + e.what());
    }
    if (!j.is_object() || !j.contains("properties") || !j.at("properties").is_array()) {
        throw DiagError("property config: expected {\"properties\": [...]}");
    }
    std::vector<PropertyConfig> out;
    for (const Json& p : j.at("properties")) {
        PropertyConfig cfg;
        cfg.name = p.value("name", std::string{});
        for (const Json& cls : p.value("classes", Json::array())) {
            if (!cls.is_object() || !cls.contains("chars")) {
                throw DiagError("property config: classes need a \"chars\" field (at properties." +
                                cfg.name + ".classes)");
            }
            Word chars = word(cls.at("chars"));
            if (chars.empty()) {
                throw DiagError("property config: empty class (at properties." + cfg.name + ")");
            }
            cfg.classes.push_back(chars);
        }
        auto star_or_letters = [&](const char* field, Word& letters, bool& rest) {
            if (!p.contains(field)) {
                return;
            }
            std::string v = p.at(field).get<std::string>();
            if (v == "*") {
                rest = true;
            } else {
                letters = utf8_decode(v);
            }
        };
        star_or_letters("erase", cfg.erase, cfg.erase_rest);
        star_or_letters("identity", cfg.identity, cfg.identity_rest);
        if (cfg.erase_rest && cfg.identity_rest) {
            throw DiagError("property config: only one of erase/identity may be \"*\" (at "
                            "properties." +
                            cfg.name + ")");
        }
        out.push_back(std::move(cfg));
    }
    return out;
}

Alphabet config_letters(const std::vector<PropertyConfig>& cfgs) {
    Alphabet a;
    for (const PropertyConfig& cfg : cfgs) {
        for (const Word& cls : cfg.classes) {
            a.absorb(cls);
        }
        a.absorb(cfg.erase);
        a.absorb(cfg.identity);
    }
    return a;
}

StandardMorphism realize_property(const PropertyConfig& cfg, const Alphabet& sigma) {
    std::set<Letter> mentioned;
    auto mention = [&](Letter c, const char* what) {
        if (!sigma.contains(c)) {
            throw DiagError("property config: letter outside the alphabet in " + cfg.name);
        }
        if (!mentioned.insert(c).second) {
            throw DiagError(std::string("property config: letter mentioned twice (") + what +
                            ") in " + cfg.name);
        }
    };
    std::map<Letter, std::optional<Letter>> raw;
    for (const Word& cls : cfg.classes) {
        Letter min = *std::min_element(cls.begin(), cls.end());
        for (Letter c : cls) {
            mention(c, "class");
            if (c != min) {
                raw[c] = min;
            }
        }
    }
    for (Letter c : cfg.erase) {
        mention(c, "erase");
        raw[c] = std::nullopt;
    }
    for (Letter c : cfg.identity) {
        mention(c, "identity");
    }
    if (cfg.erase_rest || cfg.identity_rest) {
        for (Letter c : sigma.letters) {
            if (!mentioned.count(c) && cfg.erase_rest) {
                raw[c] = std::nullopt;
            }
        }
    }
    return StandardMorphism::normalize(raw);
}

} // namespace strobj
