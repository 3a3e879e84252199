#include "ellident/textform.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace ellident {

namespace {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& w) : std::runtime_error(w) {}
};

// ---------------------------------------------------------------------- lexer

struct Token {
    enum class T { ident, number, plus, minus, star, caret, slash, lparen, rparen,
                   lbracket, rbracket, lbrace, rbrace, equals, end } t;
    std::string text;
    double value = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept(Token::T t) {
        if (tok_.t == t) {
            advance();
            return true;
        }
        return false;
    }
    void expect(Token::T t, const char* what) {
        if (!accept(t)) throw parse_error(std::string("expected ") + what + " near '" + tok_.text + "'");
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::T::end, ""};
            return;
        }
        char c = s_[pos_];
        auto one = [&](Token::T t) {
            tok_ = {t, std::string(1, c)};
            ++pos_;
        };
        switch (c) {
            case '+': one(Token::T::plus); return;
            case '-': one(Token::T::minus); return;
            case '*': one(Token::T::star); return;
            case '^': one(Token::T::caret); return;
            case '/': one(Token::T::slash); return;
            case '(': one(Token::T::lparen); return;
            case ')': one(Token::T::rparen); return;
            case '[': one(Token::T::lbracket); return;
            case ']': one(Token::T::rbracket); return;
            case '{': one(Token::T::lbrace); return;
            case '}': one(Token::T::rbrace); return;
            case '=': one(Token::T::equals); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            std::string text = s_.substr(start, pos_ - start);
            tok_ = {Token::T::number, text, std::stod(text)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;  // a', a'', b'
            tok_ = {Token::T::ident, s_.substr(start, pos_ - start)};
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
    Token tok_;
};

// ------------------------------------------------------------------ AST nodes

struct Node {
    enum class K { num, mparam, imag, coef, atom, cyc_atom, psym, cosw, sinw, add, mul, pow };
    K k = K::num;
    double num = 0;
    CoefFunc cf = CoefFunc::sn;
    ShiftArg arg;
    JFunc jf = JFunc::sn;
    ShiftSpec xshift;              // atom
    int offs_r = 0, offs_s = 0;    // cyc_atom
    int power = 1;                 // pow
    std::vector<Node> kids;
    std::vector<int> signs;        // add: +1/-1 per kid
};

std::optional<CoefFunc> coef_func_of(const std::string& s) {
    if (s == "sn") return CoefFunc::sn;
    if (s == "cn") return CoefFunc::cn;
    if (s == "dn") return CoefFunc::dn;
    if (s == "Z") return CoefFunc::Z;
    if (s == "am") return CoefFunc::am;
    if (s == "cs") return CoefFunc::cs;
    if (s == "ds") return CoefFunc::ds;
    if (s == "ns") return CoefFunc::ns;
    if (s == "nc") return CoefFunc::nc;
    if (s == "dc") return CoefFunc::dc;
    if (s == "sc") return CoefFunc::sc;
    return std::nullopt;
}

JFunc jfunc_of_coef(CoefFunc f) {
    switch (f) {
        case CoefFunc::sn: return JFunc::sn;
        case CoefFunc::cn: return JFunc::cn;
        case CoefFunc::dn: return JFunc::dn;
        case CoefFunc::Z: return JFunc::Z;
        case CoefFunc::am: return JFunc::am;
        default: throw parse_error("auxiliary function used as an x-atom");
    }
}

std::optional<JFunc> sum_letter(const std::string& s) {
    if (s == "d") return JFunc::dn;
    if (s == "s") return JFunc::sn;
    if (s == "c") return JFunc::cn;
    if (s == "Z") return JFunc::Z;
    return std::nullopt;
}

// shift symbols a, a', a'' (b, b' alias the same slots)
int shift_param(const std::string& s) {
    if (s == "a" || s == "b") return 0;
    if (s == "a'" || s == "b'") return 1;
    if (s == "a''") return 2;
    throw parse_error("unknown shift symbol '" + s + "'");
}

// -------------------------------------------------------------------- parser

class Parser {
public:
    Parser(const std::string& text, bool cyclic) : lex_(text), cyclic_(cyclic) {}

    Node parse_expr() {
        Node n;
        n.k = Node::K::add;
        int sign = 1;
        if (lex_.accept(Token::T::minus)) sign = -1;
        else lex_.accept(Token::T::plus);
        n.kids.push_back(parse_term());
        n.signs.push_back(sign);
        while (lex_.peek().t == Token::T::plus || lex_.peek().t == Token::T::minus) {
            sign = lex_.take().t == Token::T::plus ? 1 : -1;
            n.kids.push_back(parse_term());
            n.signs.push_back(sign);
        }
        if (n.kids.size() == 1 && n.signs[0] == 1) return n.kids[0];
        return n;
    }

    void expect_end() {
        if (lex_.peek().t != Token::T::end)
            throw parse_error("trailing input near '" + lex_.peek().text + "'");
    }

    bool at_equals() { return lex_.peek().t == Token::T::equals; }
    void eat_equals() { lex_.expect(Token::T::equals, "'='"); }

private:
    Node parse_term() {
        Node n;
        n.k = Node::K::mul;
        n.kids.push_back(parse_factor());
        while (lex_.accept(Token::T::star)) n.kids.push_back(parse_factor());
        if (n.kids.size() == 1) return n.kids[0];
        return n;
    }

    Node parse_factor() {
        Node base = parse_primary();
        if (lex_.accept(Token::T::caret)) {
            Token t = lex_.take();
            if (t.t != Token::T::number) throw parse_error("expected integer exponent");
            int p = static_cast<int>(t.value);
            if (base.k == Node::K::atom || base.k == Node::K::cyc_atom || base.k == Node::K::coef) {
                base.power *= p;
            } else if (base.k == Node::K::mparam) {
                base.power = p;
            } else {
                Node pw;
                pw.k = Node::K::pow;
                pw.power = p;
                pw.kids.push_back(std::move(base));
                return pw;
            }
        }
        return base;
    }

    Node parse_primary() {
        Token t = lex_.take();
        if (t.t == Token::T::lparen) {
            Node inner = parse_expr();
            lex_.expect(Token::T::rparen, "')'");
            return inner;
        }
        if (t.t == Token::T::number) {
            Node n;
            n.k = Node::K::num;
            n.num = t.value;
            // fraction like 1/2 (only directly after a literal numerator)
            if (lex_.peek().t == Token::T::slash) {
                lex_.take();
                Token d = lex_.take();
                if (d.t != Token::T::number) throw parse_error("expected denominator digit");
                n.num /= d.value;
            }
            return n;
        }
        if (t.t != Token::T::ident) throw parse_error("unexpected token '" + t.text + "'");

        if (t.text == "m") {
            Node n;
            n.k = Node::K::mparam;
            n.power = 1;
            return n;
        }
        if (t.text == "i") {
            Node n;
            n.k = Node::K::imag;
            return n;
        }
        if (cyclic_ && t.text == "p") {
            Node n;
            n.k = Node::K::psym;
            return n;
        }
        if (cyclic_ && t.text == "cosw") {
            Node n;
            n.k = Node::K::cosw;
            return n;
        }
        if (cyclic_ && t.text == "sinw") {
            Node n;
            n.k = Node::K::sinw;
            return n;
        }
        if (cyclic_ && t.text == "S") {
            lex_.expect(Token::T::lbrace, "'{' after S");
            Node inner = parse_expr();
            lex_.expect(Token::T::rbrace, "'}'");
            return inner;  // sum marker is implicit: any term with cyc atoms is summed
        }
        // single-letter sum atoms d[j+r], s[j], c[j-s], Z[j]
        if (cyclic_) {
            if (auto jf = sum_letter(t.text); jf && lex_.peek().t == Token::T::lbracket) {
                lex_.take();
                Node n;
                n.k = Node::K::cyc_atom;
                n.jf = *jf;
                Token idx = lex_.take();
                if (idx.t != Token::T::ident || idx.text != "j")
                    throw parse_error("sum atom index must start with j");
                while (lex_.peek().t == Token::T::plus || lex_.peek().t == Token::T::minus) {
                    int sgn = lex_.take().t == Token::T::plus ? 1 : -1;
                    Token sym = lex_.take();
                    if (sym.t != Token::T::ident) throw parse_error("expected r or s offset");
                    if (sym.text == "r") n.offs_r += sgn;
                    else if (sym.text == "s") n.offs_s += sgn;
                    else throw parse_error("unknown index offset '" + sym.text + "'");
                }
                lex_.expect(Token::T::rbracket, "']'");
                return n;
            }
        }
        auto cf = coef_func_of(t.text);
        if (!cf) throw parse_error("unknown function '" + t.text + "'");
        if (lex_.accept(Token::T::lbracket)) {
            // atom f[x...], argument x with optional +- shift symbol
            Node n;
            n.k = Node::K::atom;
            n.jf = jfunc_of_coef(*cf);
            Token xi = lex_.take();
            if (xi.t != Token::T::ident || xi.text != "x")
                throw parse_error("atom argument must start with x");
            n.xshift = ShiftSpec{-1, +1};
            if (lex_.peek().t == Token::T::plus || lex_.peek().t == Token::T::minus) {
                int sgn = lex_.take().t == Token::T::plus ? 1 : -1;
                Token sym = lex_.take();
                if (sym.t != Token::T::ident) throw parse_error("expected shift symbol");
                n.xshift = ShiftSpec{shift_param(sym.text), sgn};
            }
            lex_.expect(Token::T::rbracket, "']'");
            return n;
        }
        lex_.expect(Token::T::lparen, "'(' after function name");
        Node n;
        n.k = Node::K::coef;
        n.cf = *cf;
        int sgn = 1;
        if (lex_.accept(Token::T::minus)) sgn = -1;
        Token s1 = lex_.take();
        if (s1.t != Token::T::ident) throw parse_error("expected shift symbol in coefficient");
        n.arg.i = shift_param(s1.text);
        n.arg.sign = sgn;
        n.arg.j = -1;
        if (lex_.peek().t == Token::T::minus || lex_.peek().t == Token::T::plus) {
            int s2sgn = lex_.take().t == Token::T::minus ? -1 : +1;
            Token s2 = lex_.take();
            if (s2.t != Token::T::ident) throw parse_error("expected second shift symbol");
            if (s2sgn * sgn != -1)
                throw parse_error("coefficient arguments must be single shifts or differences");
            n.arg.j = shift_param(s2.text);
        }
        lex_.expect(Token::T::rparen, "')'");
        return n;
    }

    Lexer lex_;
    bool cyclic_;
};

// ---------------------------------------------------------------- flattening

struct FlatTerm {
    double scalar = 1.0;
    int ipow = 0;
    std::vector<ExprPtr> coef_factors;
    std::vector<Atom> atoms;           // local identities (shift_index filled later)
    std::vector<ShiftSpec> atom_args;  // parallel to atoms
    std::vector<CyclicAtom> cyc_atoms;
    bool has_p = false;
};

bool is_pure_coef(const Node& n) {
    switch (n.k) {
        case Node::K::atom:
        case Node::K::cyc_atom:
        case Node::K::psym:
        case Node::K::imag:
            return false;
        default:
            break;
    }
    for (const Node& k : n.kids)
        if (!is_pure_coef(k)) return false;
    return true;
}

ExprPtr to_expr(const Node& n) {
    switch (n.k) {
        case Node::K::num: return Expr::constant(n.num);
        case Node::K::mparam: return Expr::mpow(n.power);
        case Node::K::imag: throw parse_error("imaginary unit inside a pure coefficient");
        case Node::K::coef: return Expr::func(n.cf, n.arg, n.power);
        case Node::K::cosw: return Expr::cosw();
        case Node::K::sinw: return Expr::sinw();
        case Node::K::add: {
            std::vector<ExprPtr> kids;
            for (size_t i = 0; i < n.kids.size(); ++i) {
                ExprPtr e = to_expr(n.kids[i]);
                kids.push_back(n.signs[i] < 0 ? Expr::scale(e, -1.0) : e);
            }
            return Expr::add(std::move(kids));
        }
        case Node::K::mul: {
            std::vector<ExprPtr> kids;
            for (const Node& k : n.kids) kids.push_back(to_expr(k));
            return Expr::mul(std::move(kids));
        }
        case Node::K::pow: return Expr::ipow(to_expr(n.kids[0]), n.power);
        default: throw parse_error("node is not a pure coefficient");
    }
}

std::vector<FlatTerm> flatten(const Node& n);

std::vector<FlatTerm> flatten_product(const std::vector<FlatTerm>& a, const std::vector<FlatTerm>& b) {
    std::vector<FlatTerm> out;
    out.reserve(a.size() * b.size());
    for (const FlatTerm& x : a) {
        for (const FlatTerm& y : b) {
            FlatTerm t = x;
            t.scalar *= y.scalar;
            t.ipow += y.ipow;
            t.has_p = t.has_p || y.has_p;
            t.coef_factors.insert(t.coef_factors.end(), y.coef_factors.begin(), y.coef_factors.end());
            for (size_t i = 0; i < y.atoms.size(); ++i) {
                t.atoms.push_back(y.atoms[i]);
                t.atom_args.push_back(y.atom_args[i]);
            }
            t.cyc_atoms.insert(t.cyc_atoms.end(), y.cyc_atoms.begin(), y.cyc_atoms.end());
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<FlatTerm> flatten(const Node& n) {
    if (is_pure_coef(n)) {
        FlatTerm t;
        if (n.k == Node::K::num) {
            t.scalar = n.num;
        } else if (n.k == Node::K::imag) {
            t.ipow = 1;
        } else {
            t.coef_factors.push_back(to_expr(n));
        }
        return {t};
    }
    switch (n.k) {
        case Node::K::atom: {
            FlatTerm t;
            t.atoms.push_back(Atom{n.jf, 0, n.power});
            t.atom_args.push_back(n.xshift);
            return {t};
        }
        case Node::K::cyc_atom: {
            FlatTerm t;
            t.cyc_atoms.push_back(CyclicAtom{n.jf, n.offs_r, n.offs_s, n.power});
            return {t};
        }
        case Node::K::psym: {
            FlatTerm t;
            t.has_p = true;
            return {t};
        }
        case Node::K::imag: {
            FlatTerm t;
            t.ipow = 1;
            return {t};
        }
        case Node::K::add: {
            std::vector<FlatTerm> out;
            for (size_t i = 0; i < n.kids.size(); ++i) {
                std::vector<FlatTerm> sub = flatten(n.kids[i]);
                for (FlatTerm& t : sub) {
                    t.scalar *= n.signs[i];
                    out.push_back(std::move(t));
                }
            }
            return out;
        }
        case Node::K::mul: {
            std::vector<FlatTerm> acc = flatten(n.kids[0]);
            for (size_t i = 1; i < n.kids.size(); ++i) acc = flatten_product(acc, flatten(n.kids[i]));
            return acc;
        }
        case Node::K::pow: {
            std::vector<FlatTerm> base = flatten(n.kids[0]);
            std::vector<FlatTerm> acc = base;
            for (int i = 1; i < n.power; ++i) acc = flatten_product(acc, base);
            return acc;
        }
        default:
            throw parse_error("unexpected node during flattening");
    }
}

ExprPtr make_coef(const FlatTerm& t) {
    std::vector<ExprPtr> factors = t.coef_factors;
    ExprPtr prod;
    if (factors.empty()) prod = Expr::constant (1.0);
    else if (factors.size() == 1) prod = factors[0];
    else prod = Expr::mul(std::move(factors));
    if (t.scalar != 1.0) prod = Expr::scale(prod, t.scalar);
    return prod;
}

// ------------------------------------------------------- identity assembly

int intern_shift(std::vector<ShiftSpec>& table, const ShiftSpec& s) {
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] == s) return static_cast<int>(i);
    table.push_back(s);
    return static_cast<int>(table.size() - 1);
}

std::vector<Term> assemble_terms(const std::vector<FlatTerm>& flats, std::vector<ShiftSpec>& table,
                                 int& max_param, const std::string& id) {
    std::vector<Term> out;
    for (const FlatTerm& f : flats) {
        if (f.ipow % 4 != 0)
            throw parse_error(id + ": imaginary factor in a local identity");
        if (f.has_p) throw parse_error(id + ": point count p in a local identity");
        Term t;
        double sgn = (f.ipow % 4 == 2) ? -1.0 : 1.0;
        FlatTerm g = f;
        g.scalar *= sgn;
        t.coef = make_coef(g);
        for (size_t i = 0; i < f.atoms.size(); ++i) {
            Atom a = f.atoms[i];
            a.shift_index = intern_shift(table, f.atom_args[i]);
            if (f.atom_args[i].param >= 0) max_param = std::max(max_param, f.atom_args[i].param);
            // merge equal atoms into powers
            bool merged = false;
            for (Atom& prev : t.atoms) {
                if (prev.func == a.func && prev.shift_index == a.shift_index) {
                    prev.power += a.power;
                    merged = true;
                    break;
                }
            }
            if (!merged) t.atoms.push_back(a);
        }
        out.push_back(std::move(t));
    }
    return out;
}

int max_param_in_coefs(const std::vector<Term>& terms) {
    int mp = -1;
    for (const Term& t : terms) {
        if (!t.coef) continue;
        t.coef->visit_funcs([&mp](CoefFunc, const ShiftArg& arg) {
            mp = std::max({mp, arg.i, arg.j});
        });
    }
    return mp;
}

}  // namespace

Identity parse_local_identity(const std::string& id, const std::string& text,
                              const std::string& source, const std::string& den_text) {
    Parser p(text, /*cyclic=*/false);
    Node lhs = p.parse_expr();
    p.eat_equals();
    Node rhs = p.parse_expr();
    p.expect_end();

    Identity ident;
    ident.id = id;
    ident.source = source;
    ident.shifts.push_back(ShiftSpec{-1, +1});  // slot 0: plain x
    int max_param = -1;
    ident.lhs = assemble_terms(flatten(lhs), ident.shifts, max_param, id);
    ident.rhs = assemble_terms(flatten(rhs), ident.shifts, max_param, id);
    if (!den_text.empty()) {
        Parser pd(den_text, false);
        Node den = pd.parse_expr();
        pd.expect_end();
        ident.rhs_den = assemble_terms(flatten(den), ident.shifts, max_param, id);
    }
    max_param = std::max({max_param, max_param_in_coefs(ident.lhs), max_param_in_coefs(ident.rhs),
                          max_param_in_coefs(ident.rhs_den)});
    ident.arity = max_param + 1;
    finalize_identity(ident);
    return ident;
}

CyclicIdentity parse_cyclic_identity(const std::string& id, const std::string& text,
                                     const std::string& source, CyclicWeight weight,
                                     int period_in_K) {
    Parser p(text, /*cyclic=*/true);
    Node lhs = p.parse_expr();
    p.eat_equals();
    Node rhs = p.parse_expr();
    p.expect_end();

    CyclicIdentity out;
    out.id = id;
    out.source = source;
    out.weight = weight;
    out.period_in_K = period_in_K;
    out.needs_even_p = weight == CyclicWeight::alternating;

    auto assemble = [&](const Node& n) {
        std::vector<CyclicTerm> terms;
        for (const FlatTerm& f : flatten(n)) {
            if (!f.atoms.empty()) throw parse_error(id + ": x-atoms inside a cyclic identity");
            CyclicTerm t;
            t.ipow = ((f.ipow % 4) + 4) % 4;
            FlatTerm g = f;
            if (t.ipow >= 2) {
                g.scalar *= -1.0;
                t.ipow -= 2;
            }
            t.coef = make_coef(g);
            t.atoms = f.cyc_atoms;
            t.is_p_const = f.has_p;
            if (t.is_p_const && !t.atoms.empty())
                throw parse_error(id + ": term mixes p with a cyclic sum");
            for (const CyclicAtom& a : t.atoms)
                if (a.offs_s != 0) out.uses_sp = true;
            terms.push_back(std::move(t));
        }
        return terms;
    };
    out.lhs = assemble(lhs);
    out.rhs = assemble(rhs);
    return out;
}

}  // namespace ellident
