#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasschar/exact_scalar.hpp"

using namespace grasschar;

TEST_CASE("square parts are extracted into the coefficient") {
    ExactScalar a(Rational(1), 12);
    CHECK(a.coeff() == Rational(2));
    CHECK(a.radicand() == 1 * 3);

    ExactScalar b(Rational(3, 4), 50, -2);
    CHECK(b.coeff() == Rational(15, 4));
    CHECK(b.radicand() == 2);
    CHECK(b.pi_pow() == -2);
}

TEST_CASE("zero is canonical regardless of construction") {
    ExactScalar z(Rational(0), 7, 3);
    CHECK(z == ExactScalar::zero());
    CHECK(z.radicand() == 1);
    CHECK(z.pi_pow() == 0);
    CHECK(z.is_zero());
}

TEST_CASE("multiplication combines radicands and pi powers") {
    ExactScalar a(Rational(2, 3), 6, 1);
    ExactScalar b(Rational(1, 2), 3, 2);
    ExactScalar p = a * b;
    // sqrt(6)*sqrt(3) = 3*sqrt(2)
    CHECK(p.coeff() == Rational(1));
    CHECK(p.radicand() == 2);
    CHECK(p.pi_pow() == 3);
}

TEST_CASE("addition requires matching sqrt and pi monomials") {
    ExactScalar a(Rational(1, 2), 6, 2);
    ExactScalar b(Rational(1, 3), 6, 2);
    CHECK((a + b).coeff() == Rational(5, 6));
    CHECK_THROWS_AS(a + ExactScalar(Rational(1), 2, 2), incompatible_monomials);
    CHECK_THROWS_AS(a + ExactScalar(Rational(1), 6, 1), incompatible_monomials);
    // adding zero is always allowed
    CHECK(a + ExactScalar::zero() == a);
    CHECK(ExactScalar::zero() + a == a);
}

TEST_CASE("inverse rationalizes the radical") {
    ExactScalar a(Rational(2, 3), 5, 2);
    ExactScalar inv = a.inverse();
    CHECK(a * inv == ExactScalar::one());
    CHECK(inv.radicand() == 5);
    CHECK(inv.pi_pow() == -2);
    CHECK_THROWS_AS(ExactScalar::zero().inverse(), division_by_zero);
}

TEST_CASE("sqrt_of normalizes rational radicands") {
    ExactScalar s = ExactScalar::sqrt_of(Rational(3, 2));
    CHECK(s * s == ExactScalar(Rational(3, 2)));
    CHECK(s.radicand() == 6);
    CHECK(s.coeff() == Rational(1, 2));
    CHECK_THROWS_AS(ExactScalar::sqrt_of(Rational(-1)), contract_error);
}

TEST_CASE("half powers of two") {
    CHECK(ExactScalar::half_power_of_two(4) == ExactScalar(Rational(4)));
    CHECK(ExactScalar::half_power_of_two(3) == ExactScalar(Rational(2), 2));
    CHECK(ExactScalar::half_power_of_two(-1) == ExactScalar(Rational(1, 2), 2));
    CHECK(ExactScalar::half_power_of_two(0) == ExactScalar::one());
    ExactScalar x = ExactScalar::half_power_of_two(7);
    CHECK(x * x == ExactScalar(Rational(128)));
}

TEST_CASE("integer powers") {
    ExactScalar a(Rational(1, 2), 2, 1);
    CHECK(a.pow(2) == ExactScalar(Rational(1, 2), 1, 2));
    CHECK(a.pow(0) == ExactScalar::one());
    CHECK(a.pow(-2) == ExactScalar(Rational(2), 1, -2));
}

TEST_CASE("text form round trips") {
    for (const ExactScalar& v :
         {ExactScalar(Rational(2), 1, 1), ExactScalar(Rational(16, 45), 1, 6),
          ExactScalar(Rational(1, 2), 6, 3), ExactScalar(Rational(-3, 4), 2, -2),
          ExactScalar::zero(), ExactScalar::one()}) {
        CHECK(ExactScalar::parse(v.str()) == v);
    }
    CHECK(ExactScalar(Rational(2), 1, 1).str() == "2 * pi");
    CHECK(ExactScalar(Rational(1, 2), 6, 3).str() == "1/2 * sqrt(6) * pi^3");
    CHECK_THROWS_AS(ExactScalar::parse("what"), parse_error);
}

TEST_CASE("approximation is close for simple values") {
    CHECK(ExactScalar(Rational(2), 1, 1).approx() == doctest::Approx(6.2831853).epsilon(1e-6));
    CHECK(ExactScalar(Rational(1), 2).approx() == doctest::Approx(1.4142135).epsilon(1e-6));
}

TEST_CASE("field axioms on a sample of values") {
    std::vector<ExactScalar> xs = {ExactScalar(Rational(2, 3), 5, 1),
                                   ExactScalar(Rational(-1, 4), 5, 1),
                                   ExactScalar(Rational(7), 5, 1)};
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - b == -(b - a));
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
}
