#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasschar/catalog.hpp"
#include "grasschar/manifold_model.hpp"

using namespace grasschar;

namespace {
CharClassExpr X(const std::string& s) { return CharClassExpr::parse(s); }
const Catalog& cat() {
    static Catalog c = build_default_catalog();
    return c;
}
} // namespace

TEST_CASE("expression parsing and printing") {
    CharClassExpr x = X("1/2*p1(E) + 1/2*e(F)");
    CHECK(CharClassExpr::parse(x.str()) == x);
    CHECK(X("p1(E) + e(F)").pow(2) ==
          X("p1(E)^2 + 2*p1(E)*e(F) + e(F)^2"));
    CHECK(X("p1(E) - p1(E)").is_zero());
    CHECK(X("0").is_zero());
    CHECK_THROWS_AS(X("p1(E) +"), parse_error);
    Rational c;
    CHECK(X("3/4").constant_value(c));
    CHECK(c == Rational(3, 4));
}

TEST_CASE("degree bookkeeping") {
    const ManifoldModel& m = cat().model("G(3,7)");
    CHECK(X("p1(E)*e(F)").degree(m.generator_degrees) == 8);
    CHECK(X("p1(E) + e(F)").degree(m.generator_degrees) == 4);
    CHECK_THROWS_AS(X("p1(E) + p1(E)^2").degree(m.generator_degrees),
                    contract_error);
}

TEST_CASE("reduction to normal form") {
    const ManifoldModel& g48 = cat().model("G(4,8)");
    CHECK(reduce(X("e(E)*e(F)"), g48).is_zero());
    CHECK(reduce(X("p1(E)^2"), g48) == X("e(E)^2 + e(F)^2"));
    CHECK(reduce(X("e(F)^4"), g48) == X("e(E)^4"));
    CHECK(reduce(X("p1(F)"), g48) == X("-p1(E)"));
    // degrees above the dimension vanish
    CHECK(reduce(X("e(E)^5"), g48).is_zero());

    const ManifoldModel& g37 = cat().model("G(3,7)");
    CHECK(reduce(X("e(F)^2"), g37) == X("p1(E)^2"));
    CHECK(reduce(X("p2(F)"), g37) == X("p1(E)^2"));
}

TEST_CASE("integration of top classes") {
    const ManifoldModel& g48 = cat().model("G(4,8)");
    CHECK(integrate(X("e(E)^4"), g48) == Rational(2));
    CHECK(integrate(X("e(F)^4"), g48) == Rational(2));
    // p1^4 = (e^2 + f^2)^2 = e^4 + f^4 since e(E)e(F) = 0
    CHECK(integrate(X("p1(E)^4"), g48) == Rational(4));
    CHECK(integrate(X("e(E)^2*e(F)^2"), g48) == Rational(0));
    CHECK_THROWS_AS(integrate(X("e(E)"), g48), not_top_degree);
    CHECK(integrate(X("p1(E)^2*q7"), cat().model("G(3,8)")) == Rational(1));
}

TEST_CASE("Hodge star values and bounds") {
    const ManifoldModel& g36 = cat().model("G(3,6)");
    ScaledClass s = star(X("p1(E)"), g36);
    CHECK(s.unit == ExactScalar(1, 1, 1));
    CHECK(s.cls == X("3/4*q5"));
    CHECK_THROWS_AS(star(X("1"), g36), star_undefined);
    CHECK_THROWS_AS(star(X("p1(E)*q5"), g36), star_undefined);
    // linearity over a degree
    const ManifoldModel& g37 = cat().model("G(3,7)");
    ScaledClass t = star(X("p1(E) + 2*e(F)"), g37);
    CHECK(t.unit == ExactScalar(1, 1, 2));
    CHECK(t.cls == X("4/5*p1(E)*e(F) + p1(E)^2"));
}

TEST_CASE("inner products from the star table") {
    const ManifoldModel& g36 = cat().model("G(3,6)");
    CHECK(inner_product(X("p1(E)"), X("p1(E)"), g36) ==
          ExactScalar(Rational(3, 2), 1, 1));
    CHECK(inner_product(X("q5"), X("q5"), g36) ==
          ExactScalar(Rational(8, 3), 1, -1));
}

TEST_CASE("tangent Euler class and Euler characteristic") {
    CHECK(tangent_euler_class(cat().model("G(2,4)")) == X("2*e(E)^2"));
    CHECK(tangent_euler_class(cat().model("G(4,8)")) == X("6*e(E)^4"));
    CHECK(euler_characteristic(cat().model("G(2,4)")) == 4);
    CHECK(euler_characteristic(cat().model("G(4,8)")) == 12);
    CHECK(euler_characteristic(cat().model("G(3,6)")) == 0);
}

TEST_CASE("model validation catches structural damage") {
    for (const auto& [name, m] : cat().models) {
        CAPTURE(name);
        CHECK_NOTHROW(validate_model(m));
    }
    ManifoldModel broken = cat().model("G(3,7)");
    broken.poincare[4] = 7; // no longer matches the basis count
    CHECK_THROWS_AS(validate_model(broken), catalog_error);

    ManifoldModel bad_rule = cat().model("G(3,7)");
    bad_rule.rules.emplace_back(parse_monomial("p1(E)"), X("e(F)^2"));
    CHECK_THROWS_AS(validate_model(bad_rule), catalog_error);
}

TEST_CASE("cycle integrals") {
    const ManifoldModel& g38 = cat().model("G(3,8)");
    CHECK(g38.cycle_integral("ASSOC", X("p1(E)^2")) == Rational(1));
    CHECK(g38.cycle_integral("CP2", X("p1(E)")) == Rational(1));
    CHECK_THROWS_AS(g38.cycle("nope"), unknown_entity_error);
}
