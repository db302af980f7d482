#include "grasschar/char_expr.hpp"

#include <cctype>
#include <sstream>

#include "grasschar/errors.hpp"

namespace grasschar {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [g, e] : b) {
        int& slot = out[g];
        slot += e;
        if (slot == 0) out.erase(g);
    }
    return out;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (const auto& [g, e] : a) {
        auto it = b.find(g);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial out = b;
    for (const auto& [g, e] : a) {
        int& slot = out[g];
        slot -= e;
        if (slot == 0) out.erase(g);
    }
    return out;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [g, e] : m) {
        if (!out.empty()) out += "*";
        out += g;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

CharClassExpr::CharClassExpr(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

CharClassExpr::CharClassExpr(const Monomial& m, const Rational& c) {
    if (c != 0) terms_[m] = c;
}

CharClassExpr CharClassExpr::generator(const std::string& name) {
    return CharClassExpr(Monomial{{name, 1}});
}

bool CharClassExpr::constant_value(Rational& out) const {
    if (terms_.empty()) {
        out = 0;
        return true;
    }
    if (terms_.size() == 1 && terms_.begin()->first.empty()) {
        out = terms_.begin()->second;
        return true;
    }
    return false;
}

void CharClassExpr::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    Rational& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
}

CharClassExpr CharClassExpr::operator+(const CharClassExpr& o) const {
    CharClassExpr out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

CharClassExpr CharClassExpr::operator-(const CharClassExpr& o) const {
    CharClassExpr out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

CharClassExpr CharClassExpr::operator*(const CharClassExpr& o) const {
    CharClassExpr out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(monomial_mul(m1, m2), c1 * c2);
    return out;
}

CharClassExpr CharClassExpr::operator*(const Rational& c) const {
    CharClassExpr out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

CharClassExpr CharClassExpr::pow(int k) const {
    if (k < 0) throw contract_error("CharClassExpr::pow: negative exponent");
    CharClassExpr out = one();
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

namespace {
int monomial_degree(const Monomial& m, const std::map<std::string, int>& gen_degrees) {
    int d = 0;
    for (const auto& [g, e] : m) {
        auto it = gen_degrees.find(g);
        if (it == gen_degrees.end()) throw contract_error("unknown generator '" + g + "'");
        d += it->second * e;
    }
    return d;
}
} // namespace

int CharClassExpr::degree(const std::map<std::string, int>& gen_degrees) const {
    if (terms_.empty()) return -1;
    int d = monomial_degree(terms_.begin()->first, gen_degrees);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m, gen_degrees) != d)
            throw contract_error("inhomogeneous expression: " + str());
    return d;
}

bool CharClassExpr::is_homogeneous(const std::map<std::string, int>& gen_degrees) const {
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_.begin()->first, gen_degrees);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m, gen_degrees) != d) return false;
    return true;
}

std::string CharClassExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.empty()) {
            out += rational_str(a);
        } else {
            if (a != 1) out += rational_str(a) + "*";
            out += monomial_str(m);
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing: expr := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)*
// factor := atom ('^' int)? ; atom := rational | generator-name
// Generator names are identifiers optionally followed by a parenthesized
// bundle label, e.g. `p1(E)`, `e(F)`, `q7`.
// ---------------------------------------------------------------------------
namespace {

struct Lexer {
    std::string s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        if (i >= s.size()) throw parse_error("unexpected end of expression '" + s + "'");
        return s[i++];
    }
    std::string number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        std::string num = s.substr(start, i - start);
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            // a rational literal a/b
            size_t save = i;
            ++i;
            skip_ws();
            size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == dstart) {
                i = save;
            } else {
                num += "/" + s.substr(dstart, i - dstart);
            }
        }
        return num;
    }
    std::string identifier() {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        std::string name = s.substr(start, i - start);
        if (i < s.size() && s[i] == '(') {
            size_t close = s.find(')', i);
            if (close == std::string::npos)
                throw parse_error("unbalanced '(' in expression '" + s + "'");
            name += s.substr(i, close - i + 1);
            i = close + 1;
        }
        return name;
    }
};

int parse_exponent(Lexer& lex) {
    lex.skip_ws();
    std::string digits;
    if (lex.peek() == '-') {
        lex.take();
        digits = "-";
    }
    bool any = false;
    while (lex.i < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.i]))) {
        digits += lex.s[lex.i++];
        any = true;
    }
    if (!any) throw parse_error("expected integer exponent in '" + lex.s + "'");
    return std::stoi(digits);
}

CharClassExpr parse_factor(Lexer& lex) {
    char c = lex.peek();
    CharClassExpr atom;
    if (std::isdigit(static_cast<unsigned char>(c))) {
        atom = CharClassExpr(parse_rational(lex.number()));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        atom = CharClassExpr::generator(lex.identifier());
    } else {
        throw parse_error(std::string("unexpected character '") + c + "' in expression '" +
                          lex.s + "'");
    }
    if (lex.peek() == '^') {
        lex.take();
        int e = parse_exponent(lex);
        if (e < 0) throw parse_error("negative exponents not supported: '" + lex.s + "'");
        atom = atom.pow(e);
    }
    return atom;
}

CharClassExpr parse_term(Lexer& lex) {
    CharClassExpr out = parse_factor(lex);
    while (lex.peek() == '*') {
        lex.take();
        out = out * parse_factor(lex);
    }
    return out;
}

} // namespace

CharClassExpr CharClassExpr::parse(const std::string& text) {
    Lexer lex{text};
    if (lex.done()) throw parse_error("empty expression");
    bool neg = false;
    if (lex.peek() == '-') {
        lex.take();
        neg = true;
    }
    CharClassExpr out = parse_term(lex);
    if (neg) out = out * Rational(-1);
    while (!lex.done()) {
        char op = lex.take();
        if (op != '+' && op != '-')
            throw parse_error(std::string("expected '+' or '-', got '") + op + "' in '" + text +
                              "'");
        CharClassExpr t = parse_term(lex);
        out = op == '+' ? out + t : out - t;
    }
    return out;
}

Monomial parse_monomial(const std::string& text) {
    CharClassExpr e = CharClassExpr::parse(text);
    if (e.terms().size() != 1 || e.terms().begin()->second != 1)
        throw parse_error("not a monomial: '" + text + "'");
    return e.terms().begin()->first;
}

} // namespace grasschar
