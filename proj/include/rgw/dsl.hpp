#pragma once

// Textual language for decorated symmetric cobordisms.
//
//   expr   := term { "." term }            composition, left applied last
//   term   := factor { ("⊗" | "*") factor }  tensor product
//   factor := generator | "(" expr ")" | "id" "(" int ")"
//   generator := "cap" [levelspec] | "cup" | "pants" | "copants"
//              | "tube" [levelspec] | "twist" | "omega" | "xcap"
//              | "G" | "K" | "A" | "Abar"
//   levelspec := "(" int "," int ")"
//
// Levels decorate only caps and tubes, and only pairs (a, b) with a, b <= 0
// are accepted: those are the composition powers A^{-a} Abar^{-b} of the two
// generating level-decreasing tubes.

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rgw/tqft.hpp"

namespace rgw {

struct CobExpr;
using ExprPtr = std::shared_ptr<const CobExpr>;

struct CobExpr {
    enum class Kind { Generator, Compose, Tensor, Identity };
    Kind kind = Kind::Generator;
    std::string gen;                          // Generator
    std::optional<std::pair<int, int>> level; // cap/tube only
    ExprPtr left, right;                      // Compose (left applied last), Tensor
    int id_arity = 0;                         // Identity
    size_t pos = 0;                           // source offset, for error messages

    static ExprPtr generator(std::string name, std::optional<std::pair<int, int>> lv,
                             size_t pos) {
        auto e = std::make_shared<CobExpr>();
        e->kind = Kind::Generator;
        e->gen = std::move(name);
        e->level = lv;
        e->pos = pos;
        return e;
    }
    static ExprPtr compose(ExprPtr l, ExprPtr r, size_t pos) {
        auto e = std::make_shared<CobExpr>();
        e->kind = Kind::Compose;
        e->left = std::move(l);
        e->right = std::move(r);
        e->pos = pos;
        return e;
    }
    static ExprPtr tensor(ExprPtr l, ExprPtr r, size_t pos) {
        auto e = std::make_shared<CobExpr>();
        e->kind = Kind::Tensor;
        e->left = std::move(l);
        e->right = std::move(r);
        e->pos = pos;
        return e;
    }
    static ExprPtr identity(int n, size_t pos) {
        auto e = std::make_shared<CobExpr>();
        e->kind = Kind::Identity;
        e->id_arity = n;
        e->pos = pos;
        return e;
    }
};

namespace dsl {

struct Token {
    enum class Type { Name, Int, LParen, RParen, Comma, Dot, Star, End };
    Type type;
    std::string text;
    long value = 0;
    size_t pos = 0;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw argument_error("lex error at offset " + std::to_string(i) + ": " + what);
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        size_t start = i;
        if (c == '(') { out.push_back({Token::Type::LParen, "(", 0, start}); ++i; continue; }
        if (c == ')') { out.push_back({Token::Type::RParen, ")", 0, start}); ++i; continue; }
        if (c == ',') { out.push_back({Token::Type::Comma, ",", 0, start}); ++i; continue; }
        if (c == '.') { out.push_back({Token::Type::Dot, ".", 0, start}); ++i; continue; }
        if (c == '*') { out.push_back({Token::Type::Star, "*", 0, start}); ++i; continue; }
        // UTF-8 tensor sign
        if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < src.size() &&
            static_cast<unsigned char>(src[i + 1]) == 0x8A &&
            static_cast<unsigned char>(src[i + 2]) == 0x97) {
            out.push_back({Token::Type::Star, "⊗", 0, start});
            i += 3;
            continue;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i + (c == '-' ? 1 : 0);
            if (j >= src.size() || !std::isdigit(static_cast<unsigned char>(src[j])))
                fail("stray '-'");
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            Token t{Token::Type::Int, src.substr(i, j - i), 0, start};
            t.value = std::stol(t.text);
            out.push_back(t);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Type::Name, src.substr(i, j - i), 0, start});
            i = j;
            continue;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Type::End, "", 0, src.size()});
    return out;
}

inline bool is_generator_name(const std::string& n) {
    static const char* names[] = {"cap",  "cup",   "pants", "copants", "tube", "twist",
                                  "omega", "xcap", "G",     "K",       "A",    "Abar"};
    for (const char* g : names)
        if (n == g) return true;
    return false;
}

class Parser {
  public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Token::Type::End, "end of input");
        return e;
    }

  private:
    std::vector<Token> toks_;
    size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token eat() { return toks_[at_++]; }
    [[noreturn]] void fail(const std::string& what) {
        throw argument_error("parse error at offset " + std::to_string(peek().pos) + ": " +
                             what + " (got '" + peek().text + "')");
    }
    Token expect(Token::Type t, const std::string& what) {
        if (peek().type != t) fail("expected " + what);
        return eat();
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (peek().type == Token::Type::Dot) {
            size_t p = eat().pos;
            e = CobExpr::compose(e, term(), p);
        }
        return e;
    }
    ExprPtr term() {
        ExprPtr e = factor();
        while (peek().type == Token::Type::Star) {
            size_t p = eat().pos;
            e = CobExpr::tensor(e, factor(), p);
        }
        return e;
    }
    ExprPtr factor() {
        if (peek().type == Token::Type::LParen) {
            eat();
            ExprPtr e = expr();
            expect(Token::Type::RParen, "')'");
            return e;
        }
        if (peek().type != Token::Type::Name) fail("expected a generator or '('");
        Token name = eat();
        if (name.text == "id") {
            expect(Token::Type::LParen, "'(' after id");
            Token n = expect(Token::Type::Int, "arity");
            expect(Token::Type::RParen, "')'");
            if (n.value < 0) throw argument_error("id: arity must be >= 0");
            return CobExpr::identity(static_cast<int>(n.value), name.pos);
        }
        if (!is_generator_name(name.text))
            throw argument_error("unknown generator '" + name.text + "' at offset " +
                                 std::to_string(name.pos));
        std::optional<std::pair<int, int>> level;
        if ((name.text == "cap" || name.text == "tube") &&
            peek().type == Token::Type::LParen) {
            eat();
            Token a = expect(Token::Type::Int, "level");
            expect(Token::Type::Comma, "','");
            Token b = expect(Token::Type::Int, "level");
            expect(Token::Type::RParen, "')'");
            level = {static_cast<int>(a.value), static_cast<int>(b.value)};
        }
        return CobExpr::generator(name.text, level, name.pos);
    }
};

} // namespace dsl

inline ExprPtr parse(const std::string& text) { return dsl::Parser(text).parse(); }

inline std::string print(const ExprPtr& e) {
    switch (e->kind) {
    case CobExpr::Kind::Generator:
        if (e->level)
            return e->gen + "(" + std::to_string(e->level->first) + "," +
                   std::to_string(e->level->second) + ")";
        return e->gen;
    case CobExpr::Kind::Identity:
        return "id(" + std::to_string(e->id_arity) + ")";
    case CobExpr::Kind::Compose:
        return print(e->left) + " . " + print(e->right);
    case CobExpr::Kind::Tensor: {
        auto wrap = [](const ExprPtr& x) {
            std::string s = print(x);
            return x->kind == CobExpr::Kind::Compose ? "(" + s + ")" : s;
        };
        return wrap(e->left) + " * " + wrap(e->right);
    }
    }
    throw argument_error("print: bad AST node");
}

struct Arity {
    int n_in = 0, n_out = 0;
};

inline Arity typecheck(const ExprPtr& e) {
    switch (e->kind) {
    case CobExpr::Kind::Generator: {
        if (e->level) {
            auto [a, b] = *e->level;
            if (a > 0 || b > 0)
                throw argument_error("level (" + std::to_string(a) + "," +
                                     std::to_string(b) +
                                     ") at offset " + std::to_string(e->pos) +
                                     " is not realizable by the level-decreasing tubes");
        }
        if (e->gen == "cap") return {0, 1};
        if (e->gen == "cup") return {1, 0};
        if (e->gen == "pants") return {1, 2};
        if (e->gen == "copants") return {2, 1};
        if (e->gen == "twist") return {2, 2};
        if (e->gen == "xcap") return {0, 1};
        return {1, 1}; // tube, omega, G, K, A, Abar
    }
    case CobExpr::Kind::Identity:
        return {e->id_arity, e->id_arity};
    case CobExpr::Kind::Compose: {
        Arity l = typecheck(e->left);
        Arity r = typecheck(e->right);
        if (r.n_out != l.n_in)
            throw argument_error(
                "arity mismatch at offset " + std::to_string(e->pos) + ": '" +
                print(e->right) + "' outputs " + std::to_string(r.n_out) +
                " but '" + print(e->left) + "' expects " + std::to_string(l.n_in));
        return {r.n_in, l.n_out};
    }
    case CobExpr::Kind::Tensor: {
        Arity l = typecheck(e->left);
        Arity r = typecheck(e->right);
        return {l.n_in + r.n_in, l.n_out + r.n_out};
    }
    }
    throw argument_error("typecheck: bad AST node");
}

// Evaluation in the idempotent basis; the functor value of a (0,0) expression
// is basis independent.
inline TqftOperator evaluate(const ExprPtr& e, const DegreeContext& ctx,
                             int uorder = kDefaultUOrder) {
    switch (e->kind) {
    case CobExpr::Kind::Generator: {
        typecheck(e); // validates the level spec
        int a = e->level ? e->level->first : 0;
        int b = e->level ? e->level->second : 0;
        if (e->gen == "cap") {
            TqftOperator cap = elementary_operator(ctx, ElemKind::Cap, 0, 0, uorder);
            if (a == 0 && b == 0) return cap;
            return compose(elementary_operator(ctx, ElemKind::Tube, a, b, uorder), cap);
        }
        if (e->gen == "cup") return elementary_operator(ctx, ElemKind::Cup, 0, 0, uorder);
        if (e->gen == "pants") return elementary_operator(ctx, ElemKind::Pants, 0, 0, uorder);
        if (e->gen == "copants")
            return elementary_operator(ctx, ElemKind::Copants, 0, 0, uorder);
        if (e->gen == "tube") return elementary_operator(ctx, ElemKind::Tube, a, b, uorder);
        if (e->gen == "twist") return elementary_operator(ctx, ElemKind::Twist, 0, 0, uorder);
        if (e->gen == "omega") return elementary_operator(ctx, ElemKind::Omega, 0, 0, uorder);
        if (e->gen == "xcap") return elementary_operator(ctx, ElemKind::Xcap, 0, 0, uorder);
        if (e->gen == "G") return elementary_operator(ctx, ElemKind::G, 0, 0, uorder);
        if (e->gen == "K") return elementary_operator(ctx, ElemKind::K, 0, 0, uorder);
        if (e->gen == "A") return elementary_operator(ctx, ElemKind::A, 0, 0, uorder);
        if (e->gen == "Abar") return elementary_operator(ctx, ElemKind::Abar, 0, 0, uorder);
        throw argument_error("unknown generator '" + e->gen + "'");
    }
    case CobExpr::Kind::Identity:
        return identity_operator(ctx, e->id_arity, Basis::Idempotent);
    case CobExpr::Kind::Compose:
        return compose(evaluate(e->left, ctx, uorder), evaluate(e->right, ctx, uorder));
    case CobExpr::Kind::Tensor:
        return tensor(evaluate(e->left, ctx, uorder), evaluate(e->right, ctx, uorder));
    }
    throw argument_error("evaluate: bad AST node");
}

} // namespace rgw
