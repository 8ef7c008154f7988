// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "strobj/lang.hpp"
#include "strobj/object.hpp"

namespace strobj {

/// Per-program-point environment: variables to string objects. An
/// unreachable state joins as bottom and carries no bindings.
struct AbstractState {
    bool reachable = true;
    std::map<std::string, StringObject> env;

    bool operator==(const AbstractState&) const = default;
};

AbstractState state_join(const Session& s, const AbstractState& a, const AbstractState& b);

struct Verdict {
    enum Kind { UnreachableLine, ProvenNonEmpty, LoopExitUnreachable } kind;
    int line = 0;
    std::string id; // ProvenNonEmpty only

    bool operator==(const Verdict&) const = default;
};

struct LineSnapshot {
    int line = 0;
    AbstractState state; // after the last statement on the line
};

struct AnalysisReport {
    std::vector<LineSnapshot> lines;
    std::vector<Verdict> verdicts;

    [[nodiscard]] const AbstractState* at_line(int line) const;
    [[nodiscard]] bool line_unreachable(int line) const;
};

/// Forward abstract interpretation with assume-refined branches and widened
/// loop heads. Terminates on every input; an iteration cap guards the
/// fixpoint loop and must never trip.
AnalysisReport analyze_program(const Session& s, const Program& p);

/// Deterministic rendering; format is "text" or "json".
std::string render_report(const Session& s, const AnalysisReport& r, const std::string& format);

} // namespace strobj
