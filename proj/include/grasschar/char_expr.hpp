#pragma once

#include <map>
#include <string>
#include <vector>

#include "grasschar/exact_scalar.hpp"

namespace grasschar {

// A commutative monomial in named generators, e.g. { "p1(E)":1, "e(F)":2 }.
using Monomial = std::map<std::string, int>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
// True iff a divides b (componentwise).
bool monomial_divides(const Monomial& a, const Monomial& b);
// b / a; precondition monomial_divides(a, b).
Monomial monomial_div(const Monomial& b, const Monomial& a);
std::string monomial_str(const Monomial& m); // "1" for the empty monomial
Monomial parse_monomial(const std::string& text);

// A polynomial with rational coefficients in named generators.  Degrees live
// in the surrounding manifold model (generator name -> degree map) rather
// than in the expression itself.
class CharClassExpr {
  public:
    CharClassExpr() = default;
    explicit CharClassExpr(const Rational& c);
    explicit CharClassExpr(const Monomial& m, const Rational& c = 1);

    static CharClassExpr zero() { return CharClassExpr(); }
    static CharClassExpr one() { return CharClassExpr(Rational(1)); }
    static CharClassExpr generator(const std::string& name);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // If the expression is a rational constant (including 0), return it.
    bool constant_value(Rational& out) const;

    void add_term(const Monomial& m, const Rational& c);

    CharClassExpr operator+(const CharClassExpr& o) const;
    CharClassExpr operator-(const CharClassExpr& o) const;
    CharClassExpr operator*(const CharClassExpr& o) const;
    CharClassExpr operator*(const Rational& c) const;
    CharClassExpr pow(int k) const; // k >= 0
    bool operator==(const CharClassExpr& o) const = default;

    // Degree bookkeeping relative to a generator-degree map.
    // Returns -1 for the zero expression; throws contract_error if a
    // generator is missing from the map or the expression is inhomogeneous.
    int degree(const std::map<std::string, int>& gen_degrees) const;
    bool is_homogeneous(const std::map<std::string, int>& gen_degrees) const;

    // Text form in the expression grammar: rational coefficients `a/b`,
    // generators like `p1(E)`, operators `+ - * ^`.
    std::string str() const;
    static CharClassExpr parse(const std::string& text); // parse_error

  private:
    std::map<Monomial, Rational> terms_;
};

} // namespace grasschar
