// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "strobj/interp.hpp"
#include "strobj/json_io.hpp"
#include "strobj/oracle.hpp"

namespace strobj {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DiagError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct AnalyzeOpts {
    std::string file;
    std::string props_path;
    std::string alphabet;
    std::string format = "text";
    int widen_delay = 3;
    std::uint64_t budget = 1'000'000;
};

int cmd_analyze(const AnalyzeOpts& opts, std::ostream& out) {
    Program p = parse_program(read_file(opts.file));
    Alphabet sigma = program_letters(p);
    std::vector<PropertyConfig> cfgs;
    if (!opts.props_path.empty()) {
        cfgs = parse_property_config(read_file(opts.props_path));
        Alphabet extra = config_letters(cfgs);
        for (Letter c : extra.letters) {
            sigma.absorb(Word(1, c));
        }
    }
    if (!opts.alphabet.empty()) {
        Alphabet declared = Alphabet::of(utf8_decode(opts.alphabet));
        for (Letter c : sigma.letters) {
            if (!declared.contains(c)) {
                throw DiagError("program letter '" + utf8_encode(Word(1, c)) +
                                "' outside the declared alphabet");
            }
        }
        sigma = declared;
    }
    std::vector<StandardMorphism> props;
    for (const PropertyConfig& cfg : cfgs) {
        props.push_back(realize_property(cfg, sigma));
    }
    Session s = Session::make(std::move(sigma), std::move(props));
    s.widen_delay = opts.widen_delay;
    s.budget = opts.budget;
    AnalysisReport r = analyze_program(s, p);
    out << render_report(s, r, opts.format);
    return 0;
}

Session session_for_values(const std::vector<Json>& values) {
    // Reduce/latop operate on bare values: the alphabet is whatever the
    // values mention, padded to the two-letter minimum.
    Alphabet sigma;
    std::function<void(const Json&)> absorb = [&](const Json& j) {
        if (j.is_string()) {
            sigma.absorb(utf8_decode(j.get<std::string>()));
        } else if (j.is_object()) {
            for (const auto& [k, v] : j.items()) {
                if (k != "lo" && k != "hi" && k != "line") {
                    absorb(v);
                }
            }
        } else if (j.is_array()) {
            for (const Json& v : j) {
                absorb(v);
            }
        }
    };
    for (const Json& v : values) {
        absorb(v);
    }
    Word pad = utf8_decode("ab");
    for (Letter c : pad) {
        if (!sigma.contains(c)) {
            sigma.absorb(Word(1, c));
        }
    }
    return Session::make(std::move(sigma));
}

int cmd_reduce(const std::string& path, std::ostream& out) {
    Json j = Json::parse(read_file(path));
    Session s = session_for_values({j});
    StringObject o = object_from_json(s, j);
    out << object_to_json(s, prune_redundant(s, reduce_object(s, o))).dump(2) << "\n";
    return 0;
}

int cmd_latop(const std::string& op, const std::string& p1, const std::string& p2,
              std::ostream& out) {
    Json j1 = Json::parse(read_file(p1));
    Json j2 = Json::parse(read_file(p2));
    Session s = session_for_values({j1, j2});
    StringObject a = object_from_json(s, j1);
    StringObject b = object_from_json(s, j2);
    StringObject r = op == "join" ? object_join(s, a, b) : object_meet(s, a, b);
    out << object_to_json(s, r).dump(2) << "\n";
    return 0;
}

int cmd_check(std::size_t max_len, std::uint64_t seed, std::uint64_t trials, std::ostream& out) {
    std::vector<CheckResult> results = oracle_suites(max_len, seed, trials);
    bool all = true;
    Json j = Json::array();
    for (const CheckResult& r : results) {
        all = all && r.pass;
        out << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (" << r.trials << " trials)";
        if (!r.pass) {
            out << "  " << r.counterexample;
        }
        out << "\n";
        Json e = Json::object();
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["trials"] = r.trials;
        if (!r.pass) {
            e["counterexample"] = r.counterexample;
        }
        j.push_back(e);
    }
    out << j.dump() << "\n";
    return all ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"string object abstract domain"};
    app.require_subcommand(1);

    AnalyzeOpts aopts;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a program");
    analyze->add_option("file", aopts.file)->required();
    analyze->add_option("--props", aopts.props_path, "property configuration JSON");
    analyze->add_option("--alphabet", aopts.alphabet, "declared session alphabet");
    analyze->add_option("--format", aopts.format)->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--widen-delay", aopts.widen_delay);
    analyze->add_option("--budget", aopts.budget);

    std::string reduce_path;
    CLI::App* reduce = app.add_subcommand("reduce", "reduce a value");
    reduce->add_option("value", reduce_path)->required();

    std::string latop_op, latop_a, latop_b;
    CLI::App* latop = app.add_subcommand("latop", "lattice operation on two values");
    latop->add_option("op", latop_op)->required()->check(CLI::IsMember({"join", "meet"}));
    latop->add_option("v1", latop_a)->required();
    latop->add_option("v2", latop_b)->required();

    std::size_t max_len = 8;
    std::uint64_t seed = 1;
    std::uint64_t trials = 200;
    CLI::App* check = app.add_subcommand("check", "run the oracle suites");
    check->add_option("--max-len", max_len);
    check->add_option("--seed", seed);
    check->add_option("--trials", trials);

    std::vector<const char*> argv;
    argv.push_back("strobj");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(aopts, out);
        }
        if (reduce->parsed()) {
            return cmd_reduce(reduce_path, out);
        }
        if (latop->parsed()) {
            return cmd_latop(latop_op, latop_a, latop_b, out);
        }
        if (check->parsed()) {
            return cmd_check(max_len, seed, trials, out);
        }
    } catch (const DiagError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace strobj
