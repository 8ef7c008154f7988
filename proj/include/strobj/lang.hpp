// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "strobj/word.hpp"

namespace strobj {

/// AST of the mini string-manipulating language. Statements: let, assign,
/// if/else, while, return. Expressions: string literals, variables,
/// unknown(), concatenation, ternaries, and the four method calls.

enum class Method { CharAt, IndexOf, Substring, Replace };

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct StrLit {
    Word value;
};
struct VarRef {
    std::string name;
};
struct Unknown {};
struct ConcatExpr {
    ExprPtr lhs, rhs;
};
struct Cond;
using CondPtr = std::shared_ptr<Cond>;
struct TernaryExpr {
    CondPtr cond;
    ExprPtr then_e, else_e;
};
struct CallExpr {
    ExprPtr recv;
    Method method;
    std::vector<ExprPtr> args; // string-valued arguments
    std::int64_t index = 0;    // literal argument of charAt/substring
};

struct Expr {
    std::variant<StrLit, VarRef, Unknown, ConcatExpr, TernaryExpr, CallExpr> v;
    int line = 0;
};

enum class Rel { Eq, Ge, Lt };

struct TruthyCond {
    ExprPtr expr;
    bool negated = false;
};
struct IndexCmpCond {
    ExprPtr recv;    // receiver of indexOf
    ExprPtr needle;  // argument of indexOf
    Rel rel;
    std::int64_t k = 0;
};
struct Cond {
    std::variant<TruthyCond, IndexCmpCond> v;
    int line = 0;
};

struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;

struct LetStmt {
    std::string name;
    ExprPtr expr;
};
struct AssignStmt {
    std::string name;
    ExprPtr expr;
};
struct IfStmt {
    CondPtr cond;
    std::vector<StmtPtr> then_body;
    std::vector<StmtPtr> else_body;
};
struct WhileStmt {
    CondPtr cond;
    std::vector<StmtPtr> body;
};
struct ReturnStmt {
    ExprPtr expr;
};

struct Stmt {
    std::variant<LetStmt, AssignStmt, IfStmt, WhileStmt, ReturnStmt> v;
    int line = 0;
};

struct Program {
    std::vector<StmtPtr> body;
};

/// Parses a program; throws DiagError with a line:column message on syntax
/// errors. Also checks definition-before-use and method arities.
Program parse_program(const std::string& text);

/// Letters of every literal in the program (for alphabet inference).
Alphabet program_letters(const Program& p);

/// Concrete reference interpreter. Each unknown() evaluates to the next word
/// of `unknowns` (cycled); loops are cut off at `fuel` iterations.
struct ConcreteResult {
    std::map<std::string, Word> env;
    bool returned = false;
    Word return_value;
    bool fuel_exhausted = false;
};
ConcreteResult run_concrete(const Program& p, const std::vector<Word>& unknowns,
                            std::uint64_t fuel = 256);

} // namespace strobj
