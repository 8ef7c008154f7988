// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include "strobj/lang.hpp"

#include <algorithm>
#include <set>

#include "strobj/ops.hpp"

namespace strobj {

namespace {

struct Token {
    enum Kind {
        Ident,
        Str,
        Int,
        Punct, // single characters and the multi-char ops below
        End
    } kind = End;
    std::string text;
    std::int64_t number = 0;
    Word str;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : src_(utf8_decode(text)) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw DiagError("syntax error at " + std::to_string(tok_.line) + ":" +
                        std::to_string(tok_.col) + ": " + msg);
    }

  private:
    void advance() {
        skip_space();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            return;
        }
        Letter c = src_[pos_];
        if (c == U'\'') {
            bump();
            Word w;
            while (pos_ < src_.size() && src_[pos_] != U'\'') {
                if (src_[pos_] == U'\n') {
                    fail("unterminated string literal");
                }
                w.push_back(src_[pos_]);
                bump();
            }
            if (pos_ >= src_.size()) {
                fail("unterminated string literal");
            }
            bump();
            tok_.kind = Token::Str;
            tok_.str = std::move(w);
            return;
        }
        if (c >= U'0' && c <= U'9') {
            std::int64_t n = 0;
            while (pos_ < src_.size() && src_[pos_] >= U'0' && src_[pos_] <= U'9') {
                n = n * 10 + static_cast<std::int64_t>(src_[pos_] - U'0');
                bump();
            }
            tok_.kind = Token::Int;
            tok_.number = n;
            return;
        }
        auto is_ident = [](Letter x) {
            return (x >= U'a' && x <= U'z') || (x >= U'A' && x <= U'Z') ||
                   (x >= U'0' && x <= U'9') || x == U'_';
        };
        if (is_ident(c) && !(c >= U'0' && c <= U'9')) {
            Word w;
            while (pos_ < src_.size() && is_ident(src_[pos_])) {
                w.push_back(src_[pos_]);
                bump();
            }
            tok_.kind = Token::Ident;
            tok_.text = utf8_encode(w);
            return;
        }
        // Multi-char operators.
        for (const char* op : {">=", "=="}) {
            Word w = utf8_decode(op);
            if (src_.compare(pos_, w.size(), w) == 0) {
                tok_.kind = Token::Punct;
                tok_.text = op;
                bump();
                bump();
                return;
            }
        }
        tok_.kind = Token::Punct;
        tok_.text = utf8_encode(Word(1, c));
        bump();
    }

    void skip_space() {
        for (;;) {
            while (pos_ < src_.size() &&
                   (src_[pos_] == U' ' || src_[pos_] == U'\t' || src_[pos_] == U'\r' ||
                    src_[pos_] == U'\n')) {
                bump();
            }
            if (pos_ + 1 < src_.size() && src_[pos_] == U'/' && src_[pos_ + 1] == U'/') {
                while (pos_ < src_.size() && src_[pos_] != U'\n') {
                    bump();
                }
                continue;
            }
            if (pos_ + 1 < src_.size() && src_[pos_] == U'/' && src_[pos_ + 1] == U'*') {
                bump();
                bump();
                while (pos_ + 1 < src_.size() &&
                       !(src_[pos_] == U'*' && src_[pos_ + 1] == U'/')) {
                    bump();
                }
                if (pos_ + 1 >= src_.size()) {
                    fail("unterminated comment");
                }
                bump();
                bump();
                continue;
            }
            return;
        }
    }

    void bump() {
        if (src_[pos_] == U'\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    Word src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lx_(text) {}

    Program parse() {
        Program p;
        while (lx_.peek().kind != Token::End) {
            p.body.push_back(statement());
        }
        std::set<std::string> defined;
        check_defined(p.body, defined);
        return p;
    }

  private:
    Lexer lx_;

    bool punct(const std::string& t) {
        return lx_.peek().kind == Token::Punct && lx_.peek().text == t;
    }

    void expect_punct(const std::string& t) {
        if (!punct(t)) {
            lx_.fail("expected '" + t + "'");
        }
        lx_.take();
    }

    bool ident(const std::string& t) {
        return lx_.peek().kind == Token::Ident && lx_.peek().text == t;
    }

    StmtPtr statement() {
        int line = lx_.peek().line;
        auto mk = [&](auto node) {
            auto s = std::make_shared<Stmt>();
            s->v = std::move(node);
            s->line = line;
            return s;
        };
        if (ident("let")) {
            lx_.take();
            if (lx_.peek().kind != Token::Ident) {
                lx_.fail("expected identifier after 'let'");
            }
            std::string name = lx_.take().text;
            expect_punct("=");
            ExprPtr e = expression();
            expect_punct(";");
            return mk(LetStmt{std::move(name), std::move(e)});
        }
        if (ident("if")) {
            lx_.take();
            CondPtr c = condition();
            std::vector<StmtPtr> then_body = block_or_single();
            std::vector<StmtPtr> else_body;
            if (ident("else")) {
                lx_.take();
                else_body = block_or_single();
            }
            return mk(IfStmt{std::move(c), std::move(then_body), std::move(else_body)});
        }
        if (ident("while")) {
            lx_.take();
            CondPtr c = condition();
            std::vector<StmtPtr> body = block_or_single();
            return mk(WhileStmt{std::move(c), std::move(body)});
        }
        if (ident("return")) {
            lx_.take();
            ExprPtr e = expression();
            expect_punct(";");
            return mk(ReturnStmt{std::move(e)});
        }
        if (lx_.peek().kind == Token::Ident) {
            std::string name = lx_.take().text;
            expect_punct("=");
            ExprPtr e = expression();
            expect_punct(";");
            return mk(AssignStmt{std::move(name), std::move(e)});
        }
        lx_.fail("expected a statement");
    }

    std::vector<StmtPtr> block_or_single() {
        if (punct("{")) {
            lx_.take();
            std::vector<StmtPtr> body;
            while (!punct("}")) {
                if (lx_.peek().kind == Token::End) {
                    lx_.fail("unterminated block");
                }
                body.push_back(statement());
            }
            lx_.take();
            return body;
        }
        std::vector<StmtPtr> body;
        body.push_back(statement());
        return body;
    }

    CondPtr condition() {
        expect_punct("(");
        CondPtr c = condition_body();
        expect_punct(")");
        return c;
    }

    CondPtr condition_body() {
        int line = lx_.peek().line;
        auto mk = [&](auto node) {
            auto c = std::make_shared<Cond>();
            c->v = std::move(node);
            c->line = line;
            return c;
        };
        bool negated = false;
        if (punct("!")) {
            lx_.take();
            negated = true;
        }
        ExprPtr e = expression();
        if (!negated && (punct(">=") || punct("==") || punct("<"))) {
            std::string op = lx_.take().text;
            if (lx_.peek().kind != Token::Int) {
                lx_.fail("expected an integer literal after comparison");
            }
            std::int64_t k = lx_.take().number;
            const auto* call = std::get_if<CallExpr>(&e->v);
            if (!call || call->method != Method::IndexOf) {
                lx_.fail("comparisons apply to indexOf() calls");
            }
            Rel rel = op == ">=" ? Rel::Ge : op == "==" ? Rel::Eq : Rel::Lt;
            return mk(IndexCmpCond{call->recv, call->args.front(), rel, k});
        }
        return mk(TruthyCond{std::move(e), negated});
    }

    ExprPtr expression() {
        int line = lx_.peek().line;
        ExprPtr lhs = concat_chain();
        if (!punct("?")) {
            return lhs;
        }
        lx_.take();
        auto c = std::make_shared<Cond>();
        c->v = TruthyCond{lhs, false};
        c->line = line;
        ExprPtr then_e = expression();
        expect_punct(":");
        ExprPtr else_e = expression();
        auto e = std::make_shared<Expr>();
        e->v = TernaryExpr{std::move(c), std::move(then_e), std::move(else_e)};
        e->line = line;
        return e;
    }

    ExprPtr concat_chain() {
        ExprPtr lhs = primary();
        while (punct("+")) {
            int line = lx_.take().line;
            ExprPtr rhs = primary();
            auto e = std::make_shared<Expr>();
            e->v = ConcatExpr{std::move(lhs), std::move(rhs)};
            e->line = line;
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprPtr primary() {
        int line = lx_.peek().line;
        auto mk = [&](auto node) {
            auto e = std::make_shared<Expr>();
            e->v = std::move(node);
            e->line = line;
            return e;
        };
        ExprPtr base;
        if (punct("(")) {
            lx_.take();
            base = expression();
            expect_punct(")");
        } else if (lx_.peek().kind == Token::Str) {
            base = mk(StrLit{lx_.take().str});
        } else if (ident("unknown")) {
            lx_.take();
            expect_punct("(");
            expect_punct(")");
            base = mk(Unknown{});
        } else if (lx_.peek().kind == Token::Ident) {
            base = mk(VarRef{lx_.take().text});
        } else {
            lx_.fail("expected an expression");
        }
        while (punct(".")) {
            lx_.take();
            if (lx_.peek().kind != Token::Ident) {
                lx_.fail("expected a method name");
            }
            std::string name = lx_.take().text;
            Method m;
            if (name == "charAt") {
                m = Method::CharAt;
            } else if (name == "indexOf") {
                m = Method::IndexOf;
            } else if (name == "substring") {
                m = Method::Substring;
            } else if (name == "replace") {
                m = Method::Replace;
            } else {
                lx_.fail("unknown method '" + name + "'");
            }
            expect_punct("(");
            CallExpr call;
            call.recv = base;
            call.method = m;
            if (m == Method::CharAt || m == Method::Substring) {
                if (lx_.peek().kind != Token::Int) {
                    lx_.fail("expected an integer literal argument");
                }
                call.index = lx_.take().number;
            } else {
                call.args.push_back(expression());
                if (m == Method::Replace) {
                    expect_punct(",");
                    call.args.push_back(expression());
                }
            }
            expect_punct(")");
            base = mk(std::move(call));
        }
        return base;
    }

    void check_expr_defined(const ExprPtr& e, const std::set<std::string>& defined) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, VarRef>) {
                    if (!defined.count(node.name)) {
                        throw DiagError("line " + std::to_string(e->line) + ": variable '" +
                                        node.name + "' used before definition");
                    }
                } else if constexpr (std::is_same_v<T, ConcatExpr>) {
                    check_expr_defined(node.lhs, defined);
                    check_expr_defined(node.rhs, defined);
                } else if constexpr (std::is_same_v<T, TernaryExpr>) {
                    check_cond_defined(node.cond, defined);
                    check_expr_defined(node.then_e, defined);
                    check_expr_defined(node.else_e, defined);
                } else if constexpr (std::is_same_v<T, CallExpr>) {
                    check_expr_defined(node.recv, defined);
                    for (const ExprPtr& a : node.args) {
                        check_expr_defined(a, defined);
                    }
                }
            },
            e->v);
    }

    void check_cond_defined(const CondPtr& c, const std::set<std::string>& defined) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, TruthyCond>) {
                    check_expr_defined(node.expr, defined);
                } else {
                    check_expr_defined(node.recv, defined);
                    check_expr_defined(node.needle, defined);
                }
            },
            c->v);
    }

    void check_defined(const std::vector<StmtPtr>& body, std::set<std::string>& defined) {
        for (const StmtPtr& st : body) {
            std::visit(
                [&](const auto& node) {
                    using T = std::decay_t<decltype(node)>;
                    if constexpr (std::is_same_v<T, LetStmt>) {
                        check_expr_defined(node.expr, defined);
                        defined.insert(node.name);
                    } else if constexpr (std::is_same_v<T, AssignStmt>) {
                        check_expr_defined(node.expr, defined);
                        if (!defined.count(node.name)) {
                            throw DiagError("line " + std::to_string(st->line) +
                                            ": assignment to undefined variable '" + node.name +
                                            "'");
                        }
                    } else if constexpr (std::is_same_v<T, IfStmt>) {
                        check_cond_defined(node.cond, defined);
                        std::set<std::string> d1 = defined;
                        check_defined(node.then_body, d1);
                        std::set<std::string> d2 = defined;
                        check_defined(node.else_body, d2);
                        std::set<std::string> both;
                        std::set_intersection(d1.begin(), d1.end(), d2.begin(), d2.end(),
                                              std::inserter(both, both.begin()));
                        defined = std::move(both);
                    } else if constexpr (std::is_same_v<T, WhileStmt>) {
                        check_cond_defined(node.cond, defined);
                        std::set<std::string> d = defined;
                        check_defined(node.body, d);
                    } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                        check_expr_defined(node.expr, defined);
                    }
                },
                st->v);
        }
    }
};

void collect_expr_letters(const ExprPtr& e, Alphabet& a);

void collect_cond_letters(const CondPtr& c, Alphabet& a) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, TruthyCond>) {
                collect_expr_letters(node.expr, a);
            } else {
                collect_expr_letters(node.recv, a);
                collect_expr_letters(node.needle, a);
            }
        },
        c->v);
}

void collect_expr_letters(const ExprPtr& e, Alphabet& a) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, StrLit>) {
                a.absorb(node.value);
            } else if constexpr (std::is_same_v<T, ConcatExpr>) {
                collect_expr_letters(node.lhs, a);
                collect_expr_letters(node.rhs, a);
            } else if constexpr (std::is_same_v<T, TernaryExpr>) {
                collect_cond_letters(node.cond, a);
                collect_expr_letters(node.then_e, a);
                collect_expr_letters(node.else_e, a);
            } else if constexpr (std::is_same_v<T, CallExpr>) {
                collect_expr_letters(node.recv, a);
                for (const ExprPtr& arg : node.args) {
                    collect_expr_letters(arg, a);
                }
            }
        },
        e->v);
}

void collect_stmt_letters(const std::vector<StmtPtr>& body, Alphabet& a) {
    for (const StmtPtr& st : body) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, LetStmt> || std::is_same_v<T, AssignStmt> ||
                              std::is_same_v<T, ReturnStmt>) {
                    collect_expr_letters(node.expr, a);
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    collect_cond_letters(node.cond, a);
                    collect_stmt_letters(node.then_body, a);
                    collect_stmt_letters(node.else_body, a);
                } else if constexpr (std::is_same_v<T, WhileStmt>) {
                    collect_cond_letters(node.cond, a);
                    collect_stmt_letters(node.body, a);
                }
            },
            st->v);
    }
}

} // namespace

Program parse_program(const std::string& text) { return Parser(text).parse(); }

Alphabet program_letters(const Program& p) {
    Alphabet a;
    collect_stmt_letters(p.body, a);
    return a;
}

namespace {

struct ConcreteState {
    std::map<std::string, Word> env;
    const std::vector<Word>* unknowns;
    std::size_t next_unknown = 0;
    std::uint64_t fuel;
    bool fuel_out = false;

    Word take_unknown() {
        if (!unknowns || unknowns->empty()) {
            return {};
        }
        Word w = (*unknowns)[next_unknown % unknowns->size()];
        ++next_unknown;
        return w;
    }
};

Word eval_concrete(const ExprPtr& e, ConcreteState& st);

bool eval_cond_concrete(const CondPtr& c, ConcreteState& st) {
    return std::visit(
        [&](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, TruthyCond>) {
                bool t = !eval_concrete(node.expr, st).empty();
                return node.negated ? !t : t;
            } else {
                std::int64_t idx = concrete_index_of(eval_concrete(node.recv, st),
                                                     eval_concrete(node.needle, st));
                switch (node.rel) {
                case Rel::Eq: return idx == node.k;
                case Rel::Ge: return idx >= node.k;
                case Rel::Lt: return idx < node.k;
                }
                return false;
            }
        },
        c->v);
}

Word eval_concrete(const ExprPtr& e, ConcreteState& st) {
    return std::visit(
        [&](const auto& node) -> Word {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, StrLit>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, VarRef>) {
                return st.env.at(node.name);
            } else if constexpr (std::is_same_v<T, Unknown>) {
                return st.take_unknown();
            } else if constexpr (std::is_same_v<T, ConcatExpr>) {
                return concrete_concat(eval_concrete(node.lhs, st), eval_concrete(node.rhs, st));
            } else if constexpr (std::is_same_v<T, TernaryExpr>) {
                return eval_cond_concrete(node.cond, st) ? eval_concrete(node.then_e, st)
                                                         : eval_concrete(node.else_e, st);
            } else {
                Word recv = eval_concrete(node.recv, st);
                switch (node.method) {
                case Method::CharAt: return concrete_char_at(recv, node.index);
                case Method::Substring: return concrete_substring(recv, node.index);
                case Method::IndexOf: {
                    // indexOf only appears under comparisons; unreachable as
                    // a string expression by construction.
                    return {};
                }
                case Method::Replace:
                    return concrete_replace(recv, eval_concrete(node.args[0], st),
                                            eval_concrete(node.args[1], st));
                }
                return {};
            }
        },
        e->v);
}

// Returns true when a `return` was executed.
bool run_block(const std::vector<StmtPtr>& body, ConcreteState& st, ConcreteResult& out) {
    for (const StmtPtr& s : body) {
        bool done = std::visit(
            [&](const auto& node) -> bool {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, LetStmt> || std::is_same_v<T, AssignStmt>) {
                    st.env[node.name] = eval_concrete(node.expr, st);
                    return false;
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    if (eval_cond_concrete(node.cond, st)) {
                        return run_block(node.then_body, st, out);
                    }
                    return run_block(node.else_body, st, out);
                } else if constexpr (std::is_same_v<T, WhileStmt>) {
                    while (eval_cond_concrete(node.cond, st)) {
                        if (st.fuel == 0) {
                            st.fuel_out = true;
                            return true;
                        }
                        --st.fuel;
                        if (run_block(node.body, st, out)) {
                            return true;
                        }
                    }
                    return false;
                } else {
                    out.returned = true;
                    out.return_value = eval_concrete(node.expr, st);
                    return true;
                }
            },
            s->v);
        if (done) {
            return true;
        }
    }
    return false;
}

} // namespace

ConcreteResult run_concrete(const Program& p, const std::vector<Word>& unknowns,
                            std::uint64_t fuel) {
    ConcreteState st;
    st.unknowns = &unknowns;
    st.fuel = fuel;
    ConcreteResult out;
    run_block(p.body, st, out);
    out.env = std::move(st.env);
    out.fuel_exhausted = st.fuel_out;
    return out;
}

} // namespace strobj
