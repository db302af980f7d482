#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "grasschar/errors.hpp"

namespace grasschar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A value q * sqrt(r) * pi^k with q rational in lowest terms, r a squarefree
// positive integer and k an integer.  This is the value domain of every
// volume, Gram entry and Hodge-star coefficient in the engine.
class ExactScalar {
  public:
    ExactScalar() : coeff_(0), radicand_(1), pi_pow_(0) {}
    ExactScalar(Rational coeff, Int radicand = 1, int pi_pow = 0);

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    // pi^k
    static ExactScalar pi(int k = 1) { return ExactScalar(1, 1, k); }
    // sqrt of a positive rational p/q, normalized to integer radicand:
    // sqrt(p/q) = sqrt(p*q)/q.
    static ExactScalar sqrt_of(const Rational& x);
    // 2^(j/2) for integer j (possibly odd or negative).
    static ExactScalar half_power_of_two(long j);

    const Rational& coeff() const { return coeff_; }
    const Int& radicand() const { return radicand_; }
    int pi_pow() const { return pi_pow_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return radicand_ == 1 && pi_pow_ == 0; }

    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator*(const Rational& q) const;
    ExactScalar operator+(const ExactScalar& o) const; // incompatible_monomials
    ExactScalar operator-() const;
    ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
    ExactScalar inverse() const; // division_by_zero
    ExactScalar operator/(const ExactScalar& o) const { return *this * o.inverse(); }
    ExactScalar pow(int k) const;

    bool operator==(const ExactScalar& o) const = default;

    // Canonical text form: "q * sqrt(r) * pi^k", with sqrt(1) and pi^0
    // elided, pi^1 printed as "pi", e.g. "2/3 * pi^5", "1/2 * sqrt(6) * pi^3".
    std::string str() const;
    static ExactScalar parse(const std::string& text); // parse_error

    double approx() const;

  private:
    Rational coeff_;
    Int radicand_;
    int pi_pow_;
    void normalize();
};

// Extracts the largest square divisor: n = square * squarefree.
// Returns {sqrt(square), squarefree}.
std::pair<Int, Int> extract_square_part(Int n);

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

} // namespace grasschar
