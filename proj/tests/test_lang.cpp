// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "strobj/interp.hpp"
#include "strobj/json_io.hpp"

using namespace strobj;
using namespace strobj::test;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(STROBJ_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("parser shapes") {
    Program p = parse_program("let z = '?';");
    REQUIRE(p.body.size() == 1);
    const auto* let = std::get_if<LetStmt>(&p.body[0]->v);
    REQUIRE(let);
    CHECK(let->name == "z");
    CHECK(std::holds_alternative<StrLit>(let->expr->v));

    Program q = parse_program("let x = unknown();\nx = (x ? '<tag>' + x : '');");
    const auto* assign = std::get_if<AssignStmt>(&q.body[1]->v);
    REQUIRE(assign);
    const auto* tern = std::get_if<TernaryExpr>(&assign->expr->v);
    REQUIRE(tern);
    CHECK(std::holds_alternative<ConcatExpr>(tern->then_e->v));

    Program r = parse_program(
        "let z = 'a';\nlet w = 'b';\nwhile (z.indexOf(w) >= 0)\n  z = 'a';\nreturn z;");
    const auto* wh = std::get_if<WhileStmt>(&r.body[2]->v);
    REQUIRE(wh);
    const auto* cmp = std::get_if<IndexCmpCond>(&wh->cond->v);
    REQUIRE(cmp);
    CHECK(cmp->rel == Rel::Ge);
    CHECK(cmp->k == 0);
}

TEST_CASE("parser diagnostics carry positions") {
    try {
        parse_program("let z = ;");
        FAIL("expected a diagnostic");
    } catch (const DiagError& e) {
        CHECK(std::string(e.what()).find("1:9") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_program("z = 'a';"), DiagError);          // undefined variable
    CHECK_THROWS_AS(parse_program("let z = 'a'.charAt('x');"), DiagError);
    CHECK_THROWS_AS(parse_program("let z = 'a'.replace('b');"), DiagError); // arity
}

TEST_CASE("straight-line constants propagate") {
    Session s = S("ab");
    Program p = parse_program("let z = 'a' + 'b';");
    AnalysisReport r = analyze_program(s, p);
    const AbstractState* st = r.at_line(1);
    REQUIRE(st);
    CHECK(st->env.at("z") == atom_object(s, W("ab")));
}

TEST_CASE("report JSON round trips abstract values bit-exactly") {
    Rng rng(89);
    Session s = Session::make(Alphabet::of(W("abc")), {morphism({}, "c")});
    for (int trial = 0; trial < 200; ++trial) {
        StringObject o = random_reduced_object(s, rng, 3);
        Json j = object_to_json(s, o);
        StringObject back = object_from_json(s, Json::parse(j.dump()));
        CHECK(back == o);
    }
}

TEST_CASE("render formats") {
    Session s = S("ab?");
    Program p = parse_program("let z = 'ab';\nif (!z)\n  return '?';\nreturn z;");
    AnalysisReport r = analyze_program(s, p);
    std::string text = render_report(s, r, "text");
    CHECK(text.find("line 3 is unreachable") != std::string::npos);
    Json j = Json::parse(render_report(s, r, "json"));
    REQUIRE(j.contains("lines"));
    REQUIRE(j.contains("verdicts"));
    bool found = false;
    for (const Json& v : j["verdicts"]) {
        found = found || (v["kind"] == "unreachable" && v["line"] == 3);
    }
    CHECK(found);
    CHECK(j["lines"][0]["env"]["z"]["value"]["const"] == "ab");
    CHECK(j["lines"][0]["env"]["z"]["length"]["lo"] == 2);
    CHECK(j["lines"][0]["env"]["z"]["length"]["hi"] == 3);
    CHECK_THROWS_AS(render_report(s, r, "yaml"), DiagError);
}

TEST_CASE("property config loading") {
    std::vector<PropertyConfig> cfgs = parse_property_config(read_data("tags_props.json"));
    REQUIRE(cfgs.size() == 1);
    Alphabet sigma = Alphabet::of(W("<>abc"));
    StandardMorphism tags = realize_property(cfgs[0], sigma);
    CHECK(tags.image(static_cast<Letter>('<')) == std::optional<Letter>('<'));
    CHECK(tags.image(static_cast<Letter>('>')) == std::optional<Letter>('>'));
    CHECK(tags.erases(static_cast<Letter>('a')));
    CHECK(tags.erases(static_cast<Letter>('b')));

    CHECK(parse_property_config("{\"properties\":[]}").empty());

    // A letter both classed and erased violates the partition.
    std::string bad = R"({"properties":[{"name":"p","classes":[{"chars":"ab"}],"erase":"b"}]})";
    std::vector<PropertyConfig> parsed = parse_property_config(bad);
    CHECK_THROWS_AS(realize_property(parsed[0], sigma), DiagError);

    std::string two_stars =
        R"({"properties":[{"name":"p","erase":"*","identity":"*"}]})";
    CHECK_THROWS_AS(parse_property_config(two_stars), DiagError);
}

TEST_CASE("fixture programs analyze without tripping the loop cap") {
    for (const char* name : {"tag_guard.str", "sanitizer.str", "nested_tags.str"}) {
        Program p = parse_program(read_data(name));
        Alphabet sigma = program_letters(p);
        Session s = Session::make(sigma);
        CHECK_NOTHROW(analyze_program(s, p));
    }
}

namespace {

// Random loop-free program generator for the concrete-vs-abstract check.
struct ProgGen {
    Rng& rng;
    std::vector<std::string> vars;
    std::ostringstream out;
    int line = 0;

    std::string expr(int depth) {
        std::size_t pick = rng.next(depth > 0 ? 6 : 3);
        switch (pick) {
        case 0: return rng.coin() ? "'a'" : (rng.coin() ? "'b'" : "'ab'");
        case 1: return "unknown()";
        case 2:
            if (!vars.empty()) {
                return vars[rng.next(vars.size())];
            }
            return "'b'";
        case 3: return expr(depth - 1) + " + " + expr(depth - 1);
        case 4: {
            std::string recv = expr(depth - 1);
            switch (rng.next(3)) {
            case 0: return recv + ".charAt(" + std::to_string(rng.next(3)) + ")";
            case 1: return recv + ".substring(" + std::to_string(rng.next(3)) + ")";
            default:
                return recv + ".replace(" + expr(depth - 1) + ", " + expr(depth - 1) + ")";
            }
        }
        default:
            if (!vars.empty()) {
                return "(" + vars[rng.next(vars.size())] + " ? " + expr(depth - 1) + " : " +
                       expr(depth - 1) + ")";
            }
            return expr(depth - 1);
        }
    }

    std::string generate() {
        std::size_t n = 2 + rng.next(4);
        for (std::size_t i = 0; i < n; ++i) {
            std::string name = "v" + std::to_string(i);
            out << "let " << name << " = " << expr(2) << ";\n";
            vars.push_back(name);
        }
        if (!vars.empty() && rng.coin()) {
            out << "if (" << vars[rng.next(vars.size())] << ")\n  " << vars[0] << " = "
                << expr(1) << ";\n";
        }
        return out.str();
    }
};

} // namespace

TEST_CASE("analysis is sound against the concrete interpreter") {
    Rng rng(97);
    for (int trial = 0; trial < 120; ++trial) {
        ProgGen gen{rng, {}, {}, 0};
        std::string text = gen.generate();
        CAPTURE(text);
        Program p = parse_program(text);
        Alphabet sigma = program_letters(p);
        sigma.absorb(W("ab"));
        Session s = Session::make(sigma);
        AnalysisReport rep = analyze_program(s, p);
        // The post-state of the last top-level statement (branch-inner lines
        // carry refined states).
        const AbstractState* final_state = rep.at_line(p.body.back()->line);
        REQUIRE(final_state);
        const AbstractState& last = *final_state;

        for (int run = 0; run < 6; ++run) {
            std::vector<Word> unknowns;
            for (int i = 0; i < 4; ++i) {
                unknowns.push_back(random_word(rng, s.sigma, 5));
            }
            ConcreteResult cr = run_concrete(p, unknowns);
            if (!last.reachable) {
                continue;
            }
            for (const auto& [name, value] : cr.env) {
                auto it = last.env.find(name);
                if (it != last.env.end()) {
                    CAPTURE(name);
                    CAPTURE(utf8_encode(value));
                    CHECK(satisfies(s, it->second, value));
                }
            }
        }
    }
}
