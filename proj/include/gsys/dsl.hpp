#ifndef GSYS_DSL_HPP
#define GSYS_DSL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsys/gauge.hpp"

namespace gsys {

struct Pos {
    int line = 1;
    int col = 1;
};

// Expression tree as written; normalization happens in the algebra core,
// never in the parser, so odd-symbol order is preserved.
struct Expr {
    enum Kind { Num, Ident, BasisVec, Add, Sub, Mul, Div, Pow, Neg, Wedge };
    Kind kind = Num;
    Rat num = 0;       // Num
    std::string name;  // Ident: identifier; BasisVec: coordinate name
    int ipow = 0;      // Pow exponent
    std::vector<Expr> kids;
    Pos pos;

    bool operator==(const Expr& o) const;
};

struct CoordDecl {
    std::string name;
    bool odd = false;
    bool operator==(const CoordDecl&) const = default;
};

struct NamedExpr {
    std::string name;
    // either a component tuple or a single expression
    std::vector<Expr> tuple;
    std::optional<Expr> value;
    Pos pos;
    bool operator==(const NamedExpr&) const = default;
};

struct ConnDecl {
    std::string sector; // "eta" or "c"
    int out = 1, in = 1;
    std::string base;
    Expr value;
    Pos pos;
    bool operator==(const ConnDecl&) const = default;
};

struct WitnessDecl {
    std::string left, right; // gauge generator names
    Expr value;
    Pos pos;
    bool operator==(const WitnessDecl&) const = default;
};

struct CheckDecl {
    std::string what;
    std::string arg;
    bool operator==(const CheckDecl&) const = default;
};

struct SystemDocument {
    std::string system_name;
    std::vector<CoordDecl> coords;
    std::vector<NamedExpr> vectors;
    std::vector<NamedExpr> gauges;
    std::vector<NamedExpr> constraints;
    std::optional<NamedExpr> bivector;
    std::optional<NamedExpr> dynamics;
    std::optional<NamedExpr> master;
    std::vector<ConnDecl> connection;
    std::vector<WitnessDecl> witnesses;
    int max_res = 3;
    int deg = 3;
    std::vector<CheckDecl> checks;

    bool operator==(const SystemDocument&) const = default;
};

struct Diagnostic {
    Pos pos;
    std::string message;
    std::vector<std::string> expected; // candidate tokens at a syntax error
    std::string str() const;
};

using ParseResult = std::variant<SystemDocument, Diagnostic>;

// Never throws and never crashes; any byte sequence yields a document or a
// positioned diagnostic.
ParseResult parse_system(const std::string& text);

// Canonical printer; parse(print_system(doc)) == doc.
std::string print_system(const SystemDocument& doc);

// The elaborated system plus named entities for bracket queries.
struct ElaboratedSystem {
    GaugeSystemSpec spec;
    std::map<std::string, Poly> named; // vectors, P, V, T..., R..., S
    std::optional<Poly> master;
    std::map<std::pair<int, int>, Poly> witness_values;
    int max_res = 3;
    int deg = 3;
    std::vector<CheckDecl> checks;
};

std::variant<ElaboratedSystem, Diagnostic>
elaborate_system(const SystemDocument& doc);

} // namespace gsys

#endif
