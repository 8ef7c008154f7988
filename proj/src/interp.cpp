// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/interp.hpp"

#include <algorithm>
#include <sstream>

#include "strobj/json_io.hpp"
#include "strobj/ops.hpp"

namespace strobj {

namespace {

constexpr int kLoopCap = 64;

AbstractState unreachable_state() {
    AbstractState st;
    st.reachable = false;
    return st;
}

AbstractState normalize_state(AbstractState st) {
    if (!st.reachable) {
        return unreachable_state();
    }
    for (const auto& [name, o] : st.env) {
        if (o.bottom) {
            return unreachable_state();
        }
    }
    return st;
}

} // namespace

AbstractState state_join(const Session& s, const AbstractState& a, const AbstractState& b) {
    if (!a.reachable) {
        return b;
    }
    if (!b.reachable) {
        return a;
    }
    AbstractState out;
    for (const auto& [name, oa] : a.env) {
        auto it = b.env.find(name);
        if (it != b.env.end()) {
            out.env[name] = object_join(s, oa, it->second);
        }
    }
    return out;
}

const AbstractState* AnalysisReport::at_line(int line) const {
    for (const LineSnapshot& ls : lines) {
        if (ls.line == line) {
            return &ls.state;
        }
    }
    return nullptr;
}

bool AnalysisReport::line_unreachable(int line) const {
    return std::any_of(verdicts.begin(), verdicts.end(), [&](const Verdict& v) {
        return v.kind == Verdict::UnreachableLine && v.line == line;
    });
}

namespace {

class Analyzer {
  public:
    explicit Analyzer(const Session& s) : s_(s) {}

    AnalysisReport run(const Program& p) {
        AbstractState st;
        exec_block(p.body, st, true);
        std::sort(report_.lines.begin(), report_.lines.end(),
                  [](const LineSnapshot& a, const LineSnapshot& b) { return a.line < b.line; });
        std::sort(report_.verdicts.begin(), report_.verdicts.end(),
                  [](const Verdict& a, const Verdict& b) {
                      return std::tie(a.line, a.kind, a.id) < std::tie(b.line, b.kind, b.id);
                  });
        return report_;
    }

  private:
    const Session& s_;
    AnalysisReport report_;

    void snapshot(int line, const AbstractState& st, bool record) {
        if (!record) {
            return;
        }
        for (LineSnapshot& ls : report_.lines) {
            if (ls.line == line) {
                ls.state = st;
                return;
            }
        }
        report_.lines.push_back({line, st});
    }

    void verdict(Verdict v) {
        if (std::find(report_.verdicts.begin(), report_.verdicts.end(), v) ==
            report_.verdicts.end()) {
            report_.verdicts.push_back(std::move(v));
        }
    }

    StringObject eval(const ExprPtr& e, const AbstractState& st) {
        if (!st.reachable) {
            return object_bottom();
        }
        return std::visit(
            [&](const auto& node) -> StringObject {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, StrLit>) {
                    return atom_object(s_, node.value);
                } else if constexpr (std::is_same_v<T, VarRef>) {
                    return st.env.at(node.name);
                } else if constexpr (std::is_same_v<T, Unknown>) {
                    return object_top(s_);
                } else if constexpr (std::is_same_v<T, ConcatExpr>) {
                    return abs_concat(s_, eval(node.lhs, st), eval(node.rhs, st));
                } else if constexpr (std::is_same_v<T, TernaryExpr>) {
                    // Arms are evaluated in the unrefined environment; the
                    // condition only decides their reachability.
                    AbstractState t = assume(st, node.cond, true);
                    AbstractState f = assume(st, node.cond, false);
                    StringObject out = object_bottom();
                    if (t.reachable) {
                        out = object_join(s_, out, eval(node.then_e, st));
                    }
                    if (f.reachable) {
                        out = object_join(s_, out, eval(node.else_e, st));
                    }
                    return out;
                } else {
                    StringObject recv = eval(node.recv, st);
                    switch (node.method) {
                    case Method::CharAt:
                        return abs_char_at(s_, recv, IntAbstract::of_literal(node.index));
                    case Method::Substring:
                        return abs_substring(s_, recv, IntAbstract::of_literal(node.index));
                    case Method::Replace:
                        return abs_replace(s_, recv, eval(node.args[0], st),
                                           eval(node.args[1], st));
                    case Method::IndexOf:
                        // indexOf appears only under comparisons.
                        return object_bottom();
                    }
                    return object_bottom();
                }
            },
            e->v);
    }

    AbstractState assume(const AbstractState& st, const CondPtr& c, bool positive) {
        if (!st.reachable) {
            return unreachable_state();
        }
        AbstractState out = st;
        bool ok = std::visit(
            [&](const auto& node) -> bool {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, TruthyCond>) {
                    bool want_truthy = positive != node.negated;
                    StringObject v = eval(node.expr, st);
                    StringObject refined =
                        want_truthy ? assume_truthy(s_, v) : assume_falsy(s_, v);
                    if (refined.bottom) {
                        return false;
                    }
                    if (const auto* var = std::get_if<VarRef>(&node.expr->v)) {
                        out.env[var->name] = refined;
                    }
                    return true;
                } else {
                    StringObject o1 = eval(node.recv, st);
                    StringObject o2 = eval(node.needle, st);
                    CmpRel rel = node.rel == Rel::Eq   ? CmpRel::Eq
                                 : node.rel == Rel::Ge ? CmpRel::Ge
                                                       : CmpRel::Lt;
                    if (!positive) {
                        rel = negate_rel(rel);
                    }
                    auto [r1, r2] = assume_index_cmp(s_, o1, o2, rel, node.k);
                    if (r1.bottom) {
                        return false;
                    }
                    if (const auto* var = std::get_if<VarRef>(&node.recv->v)) {
                        out.env[var->name] = r1;
                    }
                    if (const auto* var = std::get_if<VarRef>(&node.needle->v)) {
                        out.env[var->name] = r2;
                    }
                    return true;
                }
            },
            c->v);
        return ok ? normalize_state(std::move(out)) : unreachable_state();
    }

    AbstractState widen_state(const AbstractState& prev, const AbstractState& next,
                              bool exhausted) {
        AbstractState joined = state_join(s_, prev, next);
        if (!exhausted || !prev.reachable || !joined.reachable) {
            return joined;
        }
        for (auto& [name, o] : joined.env) {
            auto it = prev.env.find(name);
            if (it != prev.env.end()) {
                o = widen_object(s_, it->second, o, true);
            }
        }
        return normalize_state(std::move(joined));
    }

    AbstractState exec_block(const std::vector<StmtPtr>& body, AbstractState st, bool record) {
        for (const StmtPtr& stmt : body) {
            st = exec(stmt, std::move(st), record);
        }
        return st;
    }

    AbstractState exec(const StmtPtr& stmt, AbstractState st, bool record) {
        if (!st.reachable && record) {
            verdict({Verdict::UnreachableLine, stmt->line, {}});
        }
        return std::visit(
            [&](const auto& node) -> AbstractState {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, LetStmt> || std::is_same_v<T, AssignStmt>) {
                    if (st.reachable) {
                        StringObject v = eval(node.expr, st);
                        if (v.bottom) {
                            st = unreachable_state();
                        } else {
                            st.env[node.name] = std::move(v);
                        }
                    }
                    snapshot(stmt->line, st, record);
                    return st;
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    AbstractState t = assume(st, node.cond, true);
                    AbstractState f = assume(st, node.cond, false);
                    AbstractState t_out = exec_block(node.then_body, t, record);
                    AbstractState f_out = exec_block(node.else_body, f, record);
                    AbstractState merged = state_join(s_, t_out, f_out);
                    snapshot(stmt->line, merged, record);
                    return merged;
                } else if constexpr (std::is_same_v<T, WhileStmt>) {
                    AbstractState head = st;
                    bool stable = false;
                    for (int iter = 0; iter < kLoopCap; ++iter) {
                        AbstractState body_in = assume(head, node.cond, true);
                        AbstractState body_out = exec_block(node.body, body_in, false);
                        AbstractState next =
                            widen_state(head, body_out, iter >= s_.widen_delay);
                        if (next == head) {
                            stable = true;
                            break;
                        }
                        head = std::move(next);
                    }
                    STROBJ_REQUIRE(stable, "loop analysis did not stabilize");
                    // Final pass over the body for line snapshots.
                    AbstractState body_in = assume(head, node.cond, true);
                    exec_block(node.body, body_in, record);
                    AbstractState exit = assume(head, node.cond, false);
                    if (record && !exit.reachable) {
                        verdict({Verdict::LoopExitUnreachable, stmt->line, {}});
                    }
                    snapshot(stmt->line, exit, record);
                    return exit;
                } else { // ReturnStmt
                    if (st.reachable) {
                        StringObject v = eval(node.expr, st);
                        AbstractState post = st;
                        if (const auto* var = std::get_if<VarRef>(&node.expr->v)) {
                            if (!v.bottom && !v.value.is_unary() && !v.value.nu().eps &&
                                !v.length.eps) {
                                if (record) {
                                    verdict({Verdict::ProvenNonEmpty, stmt->line, var->name});
                                }
                            }
                        }
                        snapshot(stmt->line, post, record);
                    } else {
                        snapshot(stmt->line, st, record);
                    }
                    return unreachable_state(); // nothing runs after a return
                }
            },
            stmt->v);
    }
};

std::string render_text(const Session& s, const AnalysisReport& r) {
    std::ostringstream os;
    for (const LineSnapshot& ls : r.lines) {
        os << "line " << ls.line << ":";
        if (!ls.state.reachable) {
            os << " unreachable\n";
            continue;
        }
        os << "\n";
        for (const auto& [name, o] : ls.state.env) {
            os << "  " << name << " = " << object_to_json(s, o).dump() << "\n";
        }
    }
    for (const Verdict& v : r.verdicts) {
        switch (v.kind) {
        case Verdict::UnreachableLine:
            os << "verdict: line " << v.line << " is unreachable\n";
            break;
        case Verdict::ProvenNonEmpty:
            os << "verdict: line " << v.line << " returns non-empty '" << v.id << "'\n";
            break;
        case Verdict::LoopExitUnreachable:
            os << "verdict: loop at line " << v.line << " never exits\n";
            break;
        }
    }
    return os.str();
}

} // namespace

AnalysisReport analyze_program(const Session& s, const Program& p) {
    return Analyzer(s).run(p);
}

std::string render_report(const Session& s, const AnalysisReport& r, const std::string& format) {
    if (format == "text") {
        return render_text(s, r);
    }
    if (format != "json") {
        throw DiagError("unknown report format '" + format + "'");
    }
    Json j = Json::object();
    Json lines = Json::array();
    for (const LineSnapshot& ls : r.lines) {
        Json env = Json::object();
        for (const auto& [name, o] : ls.state.env) {
            env[name] = object_to_json(s, o);
        }
        lines.push_back(Json{{"line", ls.line}, {"env", env}});
    }
    j["lines"] = lines;
    Json verdicts = Json::array();
    for (const Verdict& v : r.verdicts) {
        Json jv = Json::object();
        switch (v.kind) {
        case Verdict::UnreachableLine: jv["kind"] = "unreachable"; break;
        case Verdict::ProvenNonEmpty:
            jv["kind"] = "nonempty";
            jv["id"] = v.id;
            break;
        case Verdict::LoopExitUnreachable: jv["kind"] = "loop-exit-unreachable"; break;
        }
        jv["line"] = v.line;
        verdicts.push_back(jv);
    }
    j["verdicts"] = verdicts;
    return j.dump(2) + "\n";
}

} // namespace strobj
