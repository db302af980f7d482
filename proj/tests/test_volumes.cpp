#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasschar/volumes.hpp"

using namespace grasschar;

TEST_CASE("sphere volumes") {
    CHECK(sphere_volume(1) == ExactScalar(Rational(2), 1, 1));
    CHECK(sphere_volume(2) == ExactScalar(Rational(4), 1, 1));
    CHECK(sphere_volume(3) == ExactScalar(Rational(2), 1, 2));
    CHECK(sphere_volume(4) == ExactScalar(Rational(8, 3), 1, 2));
    CHECK(sphere_volume(5) == ExactScalar(Rational(1), 1, 3));
    CHECK(sphere_volume(6) == ExactScalar(Rational(16, 15), 1, 3));
    CHECK_THROWS_AS(sphere_volume(0), invalid_descriptor);
}

TEST_CASE("rotation and unitary group volumes follow their recursions") {
    CHECK(so_volume(1) == ExactScalar::one());
    CHECK(so_volume(2) == ExactScalar(Rational(2), 2, 1));
    for (int n = 2; n <= 7; ++n)
        CHECK(so_volume(n) == ExactScalar::half_power_of_two(n - 1) *
                                  sphere_volume(n - 1) * so_volume(n - 1));
    CHECK(u_volume(1) == ExactScalar(Rational(2), 1, 1));
    for (int n = 2; n <= 5; ++n)
        CHECK(u_volume(n) == ExactScalar::half_power_of_two(2 * n - 2) *
                                 sphere_volume(2 * n - 1) * u_volume(n - 1));
    for (int n = 2; n <= 5; ++n)
        CHECK(su_volume(n) == ExactScalar::half_power_of_two(2 * n - 2) *
                                  ExactScalar::sqrt_of(Rational(n, n - 1)) *
                                  sphere_volume(2 * n - 1) * su_volume(n - 1));
}

TEST_CASE("Grassmannian volumes") {
    CHECK(real_grassmann_volume(2, 3) == ExactScalar(Rational(4), 1, 1));
    CHECK(real_grassmann_volume(2, 4) == ExactScalar(Rational(4), 1, 2));
    CHECK(real_grassmann_volume(3, 7) == ExactScalar(Rational(16, 45), 1, 6));
    CHECK(real_grassmann_volume(4, 8) == ExactScalar(Rational(8, 135), 1, 8));
    // complementary planes give the same space
    for (int n = 3; n <= 9; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(real_grassmann_volume(k, n) == real_grassmann_volume(n - k, n));
    // both quotient formulas agree
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(real_grassmann_volume(k, n) ==
                  real_grassmann_volume_so_form(k, n));
    CHECK_THROWS_AS(real_grassmann_volume(3, 3), invalid_descriptor);
}

TEST_CASE("complex Grassmannian and special Lagrangian volumes") {
    CHECK(complex_grassmann_volume(1, 2) ==
          u_volume(2) / (u_volume(1) * u_volume(1)));
    CHECK(slag_volume(3) == su_volume(3) / so_volume(3));
    CHECK(slag_volume(3) == ExactScalar(Rational(1, 2), 6, 3));
}

TEST_CASE("recorded special-cycle volumes") {
    CHECK(catalog_space_volume("ASSOC") == ExactScalar(Rational(6, 5), 1, 4));
    CHECK(catalog_space_volume("~ASSOC") == catalog_space_volume("ASSOC"));
    CHECK(catalog_space_volume("CAY") == real_grassmann_volume(3, 7));
    CHECK(catalog_space_volume("M") == ExactScalar(Rational(2, 3), 1, 6));
    CHECK_THROWS_AS(catalog_space_volume("XYZZY"), unknown_entity_error);
}

TEST_CASE("descriptor parsing") {
    for (const char* text :
         {"S(6)", "SO(5)", "U(3)", "SU(3)", "SLAG(3)", "G(3,7)", "GC(2,4)",
          "ASSOC", "~ASSOC", "CAY"}) {
        SpaceDescriptor d = SpaceDescriptor::parse(text);
        CHECK(d.str() == text);
    }
    CHECK(SpaceDescriptor::parse(" G( 3 , 7 ) ").str() == "G(3,7)");
    CHECK_THROWS_AS(SpaceDescriptor::parse("G(3)"), invalid_descriptor);
    CHECK_THROWS_AS(SpaceDescriptor::parse("G(7,3)"), invalid_descriptor);
    CHECK_THROWS_AS(SpaceDescriptor::parse(""), invalid_descriptor);
}

TEST_CASE("dispatcher routes each descriptor kind") {
    CHECK(volume(SpaceDescriptor::parse("S(1)")) == ExactScalar(Rational(2), 1, 1));
    CHECK(volume(SpaceDescriptor::parse("G(3,7)")) == real_grassmann_volume(3, 7));
    CHECK(volume(SpaceDescriptor::parse("SLAG(3)")) == slag_volume(3));
    CHECK(volume(SpaceDescriptor::parse("ASSOC")) == catalog_space_volume("ASSOC"));
    CHECK(volume(SpaceDescriptor::parse("GC(1,2)")) ==
          complex_grassmann_volume(1, 2));
}
