#include "gsys/dsl.hpp"

#include <sstream>

namespace gsys {

bool Expr::operator==(const Expr& o) const {
    return kind == o.kind && num == o.num && name == o.name && ipow == o.ipow &&
           kids == o.kids;
}

std::string Diagnostic::str() const {
    std::ostringstream os;
    os << "line " << pos.line << ", col " << pos.col << ": " << message;
    if (!expected.empty()) {
        os << " (expected";
        for (const auto& e : expected) os << " " << e;
        os << ")";
    }
    return os.str();
}

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
    Ident, Number, Semi, Comma, Eq, LParen, RParen, LBrack, RBrack,
    Plus, Minus, Star, Slash, Caret, End, Bad
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Rat num = 0;
    Pos pos;
};

struct Lexer {
    const std::string& src;
    size_t i = 0;
    Pos pos;

    explicit Lexer(const std::string& s) : src(s) {}

    void advance(char c) {
        if (c == '\n') { pos.line++; pos.col = 1; }
        else pos.col++;
        ++i;
    }

    Token next() {
        while (i < src.size()) {
            char c = src[i];
            if (c == '#') {
                while (i < src.size() && src[i] != '\n') advance(src[i]);
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance(c);
                continue;
            }
            break;
        }
        Token t;
        t.pos = pos;
        if (i >= src.size()) { t.kind = Tok::End; return t; }
        char c = src[i];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string s;
            while (i < src.size() &&
                   (std::isalnum((unsigned char)src[i]) || src[i] == '_')) {
                s += src[i];
                advance(src[i]);
            }
            t.kind = Tok::Ident;
            t.text = s;
            return t;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string s;
            while (i < src.size() && std::isdigit((unsigned char)src[i])) {
                s += src[i];
                advance(src[i]);
            }
            t.kind = Tok::Number;
            t.text = s;
            t.num = Rat(Int(s));
            return t;
        }
        advance(c);
        switch (c) {
        case ';': t.kind = Tok::Semi; break;
        case ',': t.kind = Tok::Comma; break;
        case '=': t.kind = Tok::Eq; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBrack; break;
        case ']': t.kind = Tok::RBrack; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        default:
            t.kind = Tok::Bad;
            t.text = std::string(1, c);
        }
        return t;
    }
};

// ---------------------------------------------------------------------------
// Parser: recursive descent with precedence climbing; diagnostics carry the
// position and the expected-token set.
// ---------------------------------------------------------------------------

struct ParseError {
    Diagnostic diag;
};

struct Parser {
    Lexer lex;
    Token cur;
    int depth = 0;

    explicit Parser(const std::string& s) : lex(s) { cur = lex.next(); }

    [[noreturn]] void fail(const std::string& msg,
                           std::vector<std::string> expected = {}) {
        throw ParseError{Diagnostic{cur.pos, msg, std::move(expected)}};
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& pp) : p(pp) {
            if (++p.depth > 200) p.fail("expression nests too deeply");
        }
        ~DepthGuard() { --p.depth; }
    };

    void bump() { cur = lex.next(); }

    bool at(Tok k) const { return cur.kind == k; }
    bool at_ident(const char* s) const {
        return cur.kind == Tok::Ident && cur.text == s;
    }

    Token expect(Tok k, const char* what) {
        if (!at(k)) fail("unexpected token", {what});
        Token t = cur;
        bump();
        return t;
    }

    std::string expect_ident(const char* what = "identifier") {
        if (!at(Tok::Ident)) fail("unexpected token", {what});
        std::string s = cur.text;
        bump();
        return s;
    }

    int expect_int(const char* what = "number") {
        if (!at(Tok::Number)) fail("unexpected token", {what});
        Rat r = cur.num;
        if (r > 1000000) fail("number too large");
        bump();
        return (int)numerator(r).convert_to<long long>();
    }

    // --- expressions ---

    bool starts_primary() const {
        return at(Tok::Number) || at(Tok::Ident) || at(Tok::LParen) ||
               at(Tok::Minus);
    }

    Expr parse_expr() { return parse_sum(); }

    Expr parse_sum() {
        DepthGuard g(*this);
        Expr e = parse_term();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            Expr out;
            out.kind = at(Tok::Plus) ? Expr::Add : Expr::Sub;
            out.pos = cur.pos;
            bump();
            Expr rhs = parse_term();
            out.kids = {std::move(e), std::move(rhs)};
            e = std::move(out);
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_factor();
        for (;;) {
            if (at(Tok::Star) || at(Tok::Slash)) {
                Expr out;
                out.kind = at(Tok::Star) ? Expr::Mul : Expr::Div;
                out.pos = cur.pos;
                bump();
                Expr rhs = parse_factor();
                out.kids = {std::move(e), std::move(rhs)};
                e = std::move(out);
            } else if (at(Tok::Number) || at(Tok::Ident) || at(Tok::LParen)) {
                // juxtaposition of generators is multiplication
                Expr out;
                out.kind = Expr::Mul;
                out.pos = cur.pos;
                Expr rhs = parse_factor();
                out.kids = {std::move(e), std::move(rhs)};
                e = std::move(out);
            } else {
                break;
            }
        }
        return e;
    }

    Expr parse_factor() {
        Expr base = parse_primary();
        if (at(Tok::Caret)) {
            Expr out;
            out.kind = Expr::Pow;
            out.pos = cur.pos;
            bump();
            if (!at(Tok::Number)) fail("unexpected token", {"exponent"});
            if (cur.num > 64) fail("exponent too large");
            out.ipow = (int)numerator(cur.num).convert_to<long long>();
            bump();
            out.kids = {std::move(base)};
            return out;
        }
        return base;
    }

    Expr parse_primary() {
        DepthGuard g(*this);
        Expr e;
        e.pos = cur.pos;
        if (at(Tok::Minus)) {
            bump();
            e.kind = Expr::Neg;
            e.kids = {parse_primary()};
            return e;
        }
        if (at(Tok::Number)) {
            e.kind = Expr::Num;
            e.num = cur.num;
            bump();
            return e;
        }
        if (at(Tok::LParen)) {
            bump();
            e = parse_expr();
            expect(Tok::RParen, ")");
            return e;
        }
        if (at(Tok::Ident)) {
            std::string name = cur.text;
            if (name == "wedge") {
                bump();
                expect(Tok::LParen, "(");
                Expr a = parse_expr();
                expect(Tok::Comma, ",");
                Expr b = parse_expr();
                expect(Tok::RParen, ")");
                e.kind = Expr::Wedge;
                e.kids = {std::move(a), std::move(b)};
                return e;
            }
            if (name == "d") {
                // d/dx basis vector
                Pos save = cur.pos;
                bump();
                if (at(Tok::Slash)) {
                    bump();
                    if (!at(Tok::Ident) || cur.text.size() < 2 ||
                        cur.text[0] != 'd')
                        fail("malformed basis vector, write d/dNAME",
                             {"dNAME"});
                    e.kind = Expr::BasisVec;
                    e.name = cur.text.substr(1);
                    e.pos = save;
                    bump();
                    return e;
                }
                e.kind = Expr::Ident;
                e.name = "d";
                e.pos = save;
                return e;
            }
            e.kind = Expr::Ident;
            e.name = name;
            bump();
            return e;
        }
        fail("unexpected token",
             {"number", "identifier", "(", "-", "wedge", "d/d..."});
    }

    // --- statements ---

    std::vector<Expr> parse_tuple_or_expr(std::optional<Expr>& single) {
        // a parenthesized comma list is a tuple; anything else is one expr
        if (at(Tok::LParen)) {
            // look ahead: parse as expr list; a 1-element list without commas
            // is just a parenthesized expression
            bump();
            std::vector<Expr> items;
            items.push_back(parse_expr());
            bool tuple = at(Tok::Comma);
            while (at(Tok::Comma)) {
                bump();
                items.push_back(parse_expr());
            }
            expect(Tok::RParen, ")");
            if (tuple && !starts_primary() && !at(Tok::Caret) && !at(Tok::Star) &&
                !at(Tok::Slash) && !at(Tok::Plus) && !at(Tok::Minus))
                return items;
            // re-interpret as expression: continue parsing operators after it
            Expr e = items.size() == 1 ? items[0] : Expr{};
            if (items.size() != 1)
                fail("tuple used inside an expression");
            // resume term/sum parsing manually with e as the leading factor
            for (;;) {
                if (at(Tok::Caret)) {
                    Expr out;
                    out.kind = Expr::Pow;
                    out.pos = cur.pos;
                    bump();
                    if (!at(Tok::Number)) fail("unexpected token", {"exponent"});
                    if (cur.num > 64) fail("exponent too large");
                    out.ipow = (int)numerator(cur.num).convert_to<long long>();
                    bump();
                    out.kids = {std::move(e)};
                    e = std::move(out);
                } else if (at(Tok::Star) || at(Tok::Slash)) {
                    Expr out;
                    out.kind = at(Tok::Star) ? Expr::Mul : Expr::Div;
                    out.pos = cur.pos;
                    bump();
                    Expr rhs = parse_factor();
                    out.kids = {std::move(e), std::move(rhs)};
                    e = std::move(out);
                } else if (at(Tok::Plus) || at(Tok::Minus)) {
                    Expr out;
                    out.kind = at(Tok::Plus) ? Expr::Add : Expr::Sub;
                    out.pos = cur.pos;
                    bump();
                    Expr rhs = parse_term();
                    out.kids = {std::move(e), std::move(rhs)};
                    e = std::move(out);
                } else {
                    break;
                }
            }
            single = std::move(e);
            return {};
        }
        single = parse_expr();
        return {};
    }

    NamedExpr parse_named(const char* kw) {
        NamedExpr n;
        n.pos = cur.pos;
        n.name = expect_ident("name");
        expect(Tok::Eq, "=");
        std::optional<Expr> single;
        n.tuple = parse_tuple_or_expr(single);
        n.value = std::move(single);
        expect(Tok::Semi, ";");
        (void)kw;
        return n;
    }

    SystemDocument parse_document() {
        SystemDocument doc;
        while (!at(Tok::End)) {
            if (at(Tok::Bad)) fail("invalid character '" + cur.text + "'");
            std::string kw = expect_ident("statement keyword");
            if (kw == "system") {
                doc.system_name = expect_ident("system name");
                expect(Tok::Semi, ";");
            } else if (kw == "coords") {
                while (at(Tok::Ident)) doc.coords.push_back({cur.text, false}), bump();
                expect(Tok::Semi, ";");
            } else if (kw == "coord") {
                CoordDecl d;
                d.name = expect_ident("coordinate name");
                if (at_ident("odd")) { d.odd = true; bump(); }
                else if (at_ident("even")) { bump(); }
                doc.coords.push_back(d);
                expect(Tok::Semi, ";");
            } else if (kw == "vector") {
                doc.vectors.push_back(parse_named("vector"));
            } else if (kw == "gauge") {
                doc.gauges.push_back(parse_named("gauge"));
            } else if (kw == "constraint") {
                doc.constraints.push_back(parse_named("constraint"));
            } else if (kw == "bivector") {
                doc.bivector = parse_named("bivector");
            } else if (kw == "dynamics") {
                doc.dynamics = parse_named("dynamics");
            } else if (kw == "master") {
                doc.master = parse_named("master");
            } else if (kw == "connection") {
                ConnDecl cd;
                cd.pos = cur.pos;
                cd.sector = expect_ident("sector (eta or c)");
                if (cd.sector != "eta" && cd.sector != "c")
                    fail("connection sector must be 'eta' or 'c'");
                expect(Tok::LBrack, "[");
                cd.out = expect_int("fiber index");
                expect(Tok::Comma, ",");
                cd.in = expect_int("fiber index");
                expect(Tok::Comma, ",");
                cd.base = expect_ident("base coordinate");
                expect(Tok::RBrack, "]");
                expect(Tok::Eq, "=");
                cd.value = parse_expr();
                expect(Tok::Semi, ";");
                doc.connection.push_back(std::move(cd));
            } else if (kw == "witness") {
                WitnessDecl w;
                w.pos = cur.pos;
                w.left = expect_ident("gauge generator name");
                w.right = expect_ident("gauge generator name");
                expect(Tok::Eq, "=");
                w.value = parse_expr();
                expect(Tok::Semi, ";");
                doc.witnesses.push_back(std::move(w));
            } else if (kw == "bounds") {
                while (at(Tok::Ident)) {
                    std::string which = expect_ident();
                    if (which == "max_res") doc.max_res = expect_int();
                    else if (which == "deg") doc.deg = expect_int();
                    else fail("unknown bound '" + which + "'",
                              {"max_res", "deg"});
                }
                expect(Tok::Semi, ";");
            } else if (kw == "check") {
                CheckDecl cd;
                cd.what = expect_ident("check name");
                if (at(Tok::Ident)) { cd.arg = cur.text; bump(); }
                expect(Tok::Semi, ";");
                doc.checks.push_back(std::move(cd));
            } else {
                fail("unknown statement '" + kw + "'",
                     {"system", "coords", "coord", "vector", "gauge",
                      "constraint", "bivector", "dynamics", "master",
                      "connection", "witness", "bounds", "check"});
            }
        }
        return doc;
    }
};

// ---------------------------------------------------------------------------
// Printer (fully parenthesized; parse . print == identity on documents)
// ---------------------------------------------------------------------------

void print_expr(std::ostream& os, const Expr& e) {
    switch (e.kind) {
    case Expr::Num: os << rat_str(e.num); break;
    case Expr::Ident: os << e.name; break;
    case Expr::BasisVec: os << "d/d" << e.name; break;
    case Expr::Add:
        os << "(";
        print_expr(os, e.kids[0]);
        os << " + ";
        print_expr(os, e.kids[1]);
        os << ")";
        break;
    case Expr::Sub:
        os << "(";
        print_expr(os, e.kids[0]);
        os << " - ";
        print_expr(os, e.kids[1]);
        os << ")";
        break;
    case Expr::Mul:
        os << "(";
        print_expr(os, e.kids[0]);
        os << "*";
        print_expr(os, e.kids[1]);
        os << ")";
        break;
    case Expr::Div:
        os << "(";
        print_expr(os, e.kids[0]);
        os << "/";
        print_expr(os, e.kids[1]);
        os << ")";
        break;
    case Expr::Pow:
        os << "(";
        print_expr(os, e.kids[0]);
        os << "^" << e.ipow << ")";
        break;
    case Expr::Neg:
        os << "(-";
        print_expr(os, e.kids[0]);
        os << ")";
        break;
    case Expr::Wedge:
        os << "wedge(";
        print_expr(os, e.kids[0]);
        os << ", ";
        print_expr(os, e.kids[1]);
        os << ")";
        break;
    }
}

void print_named(std::ostream& os, const char* kw, const NamedExpr& n) {
    os << kw << " " << n.name << " = ";
    if (!n.tuple.empty()) {
        os << "(";
        for (size_t i = 0; i < n.tuple.size(); ++i) {
            if (i) os << ", ";
            print_expr(os, n.tuple[i]);
        }
        os << ")";
    } else if (n.value) {
        print_expr(os, *n.value);
    } else {
        os << "0";
    }
    os << ";\n";
}

} // namespace

ParseResult parse_system(const std::string& text) {
    try {
        Parser p(text);
        return p.parse_document();
    } catch (const ParseError& e) {
        return e.diag;
    } catch (const std::exception& e) {
        return Diagnostic{{0, 0}, std::string("internal error: ") + e.what(), {}};
    }
}

std::string print_system(const SystemDocument& doc) {
    std::ostringstream os;
    if (!doc.system_name.empty()) os << "system " << doc.system_name << ";\n";
    if (!doc.coords.empty()) {
        bool all_even = true;
        for (const auto& c : doc.coords) all_even = all_even && !c.odd;
        if (all_even) {
            os << "coords";
            for (const auto& c : doc.coords) os << " " << c.name;
            os << ";\n";
        } else {
            for (const auto& c : doc.coords)
                os << "coord " << c.name << (c.odd ? " odd" : " even") << ";\n";
        }
    }
    for (const auto& v : doc.vectors) print_named(os, "vector", v);
    for (const auto& v : doc.constraints) print_named(os, "constraint", v);
    for (const auto& v : doc.gauges) print_named(os, "gauge", v);
    if (doc.bivector) print_named(os, "bivector", *doc.bivector);
    if (doc.dynamics) print_named(os, "dynamics", *doc.dynamics);
    if (doc.master) print_named(os, "master", *doc.master);
    for (const auto& cd : doc.connection) {
        os << "connection " << cd.sector << "[" << cd.out << ", " << cd.in
           << ", " << cd.base << "] = ";
        print_expr(os, cd.value);
        os << ";\n";
    }
    for (const auto& w : doc.witnesses) {
        os << "witness " << w.left << " " << w.right << " = ";
        print_expr(os, w.value);
        os << ";\n";
    }
    os << "bounds max_res " << doc.max_res << " deg " << doc.deg << ";\n";
    for (const auto& c : doc.checks) {
        os << "check " << c.what;
        if (!c.arg.empty()) os << " " << c.arg;
        os << ";\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Elaboration
// ---------------------------------------------------------------------------

namespace {

struct SemError {
    Diagnostic diag;
};

struct Elaborator {
    const SystemDocument& doc;
    ChartPtr chart;
    std::map<std::string, Poly> named;

    [[noreturn]] void fail(Pos pos, const std::string& msg) {
        throw SemError{Diagnostic{pos, msg, {}}};
    }

    Poly eval(const Expr& e) {
        switch (e.kind) {
        case Expr::Num: return Poly(chart, e.num);
        case Expr::Ident: {
            auto it = named.find(e.name);
            if (it != named.end()) return it->second;
            int id = chart->find(e.name);
            if (id < 0) fail(e.pos, "unknown coordinate or name '" + e.name + "'");
            return Poly::var(chart, id);
        }
        case Expr::BasisVec: {
            int id = chart->find(e.name);
            if (id < 0) fail(e.pos, "unknown coordinate '" + e.name + "'");
            int mom = chart->momentum_of(id);
            if (mom < 0) fail(e.pos, "no momentum partner for '" + e.name + "'");
            return Poly::var(chart, mom);
        }
        case Expr::Add: return eval(e.kids[0]) + eval(e.kids[1]);
        case Expr::Sub: return eval(e.kids[0]) - eval(e.kids[1]);
        case Expr::Neg: return -eval(e.kids[0]);
        case Expr::Mul: return eval(e.kids[0]) * eval(e.kids[1]);
        case Expr::Div: {
            Poly d = eval(e.kids[1]);
            if (d.is_zero()) fail(e.pos, "division by zero");
            if (d.n_terms() != 1 || !d.terms().begin()->first.empty())
                fail(e.pos, "division by a non-constant");
            return eval(e.kids[0]) * (Rat(1) / d.terms().begin()->second);
        }
        case Expr::Pow: {
            if (e.ipow < 0) fail(e.pos, "negative exponent");
            Poly b = eval(e.kids[0]);
            if (e.ipow >= 2 && !b.is_zero() &&
                b.is_homogeneous(GradingName::Parity) &&
                b.grading_of(GradingName::Parity) == 1)
                fail(e.pos, "parity misuse: power of an odd expression");
            return b.pow(e.ipow);
        }
        case Expr::Wedge:
            return wedge(eval(e.kids[0]), eval(e.kids[1]));
        }
        fail(e.pos, "malformed expression");
    }

    Poly eval_vector(const NamedExpr& n) {
        if (!n.tuple.empty()) {
            if (n.tuple.size() != doc.coords.size())
                fail(n.pos, "component tuple must have one entry per coordinate");
            Poly out(chart);
            for (size_t i = 0; i < n.tuple.size(); ++i) {
                int id = chart->find(doc.coords[i].name);
                int mom = chart->momentum_of(id);
                out += eval(n.tuple[i]) * Poly::var(chart, mom);
            }
            return out;
        }
        if (n.value) return eval(*n.value);
        return Poly(chart);
    }
};

} // namespace

std::variant<ElaboratedSystem, Diagnostic>
elaborate_system(const SystemDocument& doc) {
    try {
        ElaboratedSystem out;
        std::vector<std::string> base_names;
        std::vector<int> parities;
        for (const auto& c : doc.coords) {
            base_names.push_back(c.name);
            parities.push_back(c.odd ? 1 : 0);
        }
        if (base_names.empty())
            return Diagnostic{{1, 1}, "no coordinates declared", {}};
        ChartPtr chart =
            build_system_chart(base_names, (int)doc.constraints.size(),
                               (int)doc.gauges.size(), parities);
        Elaborator el{doc, chart, {}};

        out.spec.name = doc.system_name;
        out.spec.chart = chart;
        out.spec.base_names = base_names;

        for (const auto& v : doc.vectors) {
            Poly p = el.eval_vector(v);
            el.named[v.name] = p;
            out.named[v.name] = p;
        }
        for (size_t i = 0; i < doc.constraints.size(); ++i) {
            Poly p = doc.constraints[i].value
                         ? el.eval(*doc.constraints[i].value)
                         : Poly(chart);
            out.spec.T.push_back(p);
            el.named[doc.constraints[i].name] = p;
            out.named[doc.constraints[i].name] = p;
        }
        for (size_t i = 0; i < doc.gauges.size(); ++i) {
            Poly p = el.eval_vector(doc.gauges[i]);
            out.spec.R.push_back(p);
            el.named[doc.gauges[i].name] = p;
            out.named[doc.gauges[i].name] = p;
        }
        if (doc.bivector) {
            out.spec.P = el.eval_vector(*doc.bivector);
            el.named[doc.bivector->name] = out.spec.P;
            out.named[doc.bivector->name] = out.spec.P;
        } else {
            out.spec.P = Poly(chart);
        }
        if (doc.dynamics) {
            out.spec.V = el.eval_vector(*doc.dynamics);
            el.named[doc.dynamics->name] = out.spec.V;
            out.named[doc.dynamics->name] = out.spec.V;
        } else {
            out.spec.V = Poly(chart);
        }
        if (doc.master) {
            out.master = el.eval_vector(*doc.master);
            out.named[doc.master->name] = *out.master;
        }
        for (const auto& cd : doc.connection) {
            int nf = cd.sector == "eta" ? (int)doc.constraints.size()
                                        : (int)doc.gauges.size();
            if (cd.out < 1 || cd.out > nf || cd.in < 1 || cd.in > nf)
                return Diagnostic{cd.pos, "connection fiber index out of range", {}};
            int base_id = chart->find(cd.base);
            if (base_id < 0)
                return Diagnostic{cd.pos, "unknown base coordinate '" + cd.base + "'", {}};
            // base index = position among base coordinates
            int bpos = -1, k = 0;
            for (int i = 0; i < chart->size(); ++i) {
                if (chart->var(i).kind != VarKind::Base) continue;
                if (i == base_id) { bpos = k; break; }
                ++k;
            }
            Poly val = el.eval(cd.value);
            auto key = std::make_tuple(cd.out - 1, cd.in - 1, bpos);
            if (cd.sector == "eta") out.spec.connection.eta[key] = val;
            else out.spec.connection.c[key] = val;
        }
        auto gauge_index = [&](const std::string& name, Pos pos) {
            for (size_t i = 0; i < doc.gauges.size(); ++i)
                if (doc.gauges[i].name == name) return (int)i;
            throw SemError{Diagnostic{pos, "unknown gauge generator '" + name + "'", {}}};
        };
        for (const auto& w : doc.witnesses) {
            int a = gauge_index(w.left, w.pos);
            int b = gauge_index(w.right, w.pos);
            out.spec.commutator_witness[{a, b}] = el.eval(w.value);
            out.witness_values[{a, b}] = out.spec.commutator_witness[{a, b}];
        }
        out.max_res = doc.max_res;
        out.deg = doc.deg;
        out.checks = doc.checks;
        // surface grading violations as diagnostics
        try {
            out.spec.validate();
        } catch (const std::exception& e) {
            return Diagnostic{{1, 1}, e.what(), {}};
        }
        return out;
    } catch (const SemError& e) {
        return e.diag;
    } catch (const std::exception& e) {
        return Diagnostic{{0, 0}, std::string("internal error: ") + e.what(), {}};
    }
}

} // namespace gsys
