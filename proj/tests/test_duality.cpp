#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grasschar/catalog.hpp"
#include "grasschar/duality.hpp"

using namespace grasschar;

namespace {
CharClassExpr X(const std::string& s) { return CharClassExpr::parse(s); }
const Catalog& cat() {
    static Catalog c = build_default_catalog();
    return c;
}

Int det3(const IntMatrix& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.size(), std::vector<Int>(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}
} // namespace

TEST_CASE("cycle class arithmetic and rendering") {
    CycleClass a("CAY");
    CycleClass b = a + CycleClass("G(4,7)") - CycleClass("G(3,7)");
    CHECK(b.str() == "[CAY] - [G(3,7)] + [G(4,7)]");
    CHECK((a - a).is_zero());
    CHECK((a * Rational(1, 2)).str() == "1/2*[CAY]");
    CHECK((a - a).str() == "0");
}

TEST_CASE("Gram matrices factor into a unit times a rational matrix") {
    const ManifoldModel& m = cat().model("G(3,7)");
    GramMatrix g = gram_matrix({X("p1(E)"), X("e(F)")}, m);
    CHECK(g.unit == ExactScalar(1, 1, 2));
    CHECK(g.entries == RationalMatrix{{Rational(8, 5), 0}, {0, 1}});
}

TEST_CASE("dual bases satisfy the delta property") {
    for (const std::string name : {"G(3,6)", "G(3,7)", "G(3,8)", "G(4,8)", "G(2,6)"}) {
        const ManifoldModel& m = cat().model(name);
        for (const auto& [q, basis] : m.bases) {
            if (q == 0 || q == m.dim) continue;
            CAPTURE(name);
            CAPTURE(q);
            std::vector<CharClassExpr> psi = dual_basis(q, m);
            REQUIRE(psi.size() == basis.size());
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t j = 0; j < psi.size(); ++j)
                    CHECK(integrate(CharClassExpr(basis[i]) * psi[j], m) ==
                          Rational(i == j ? 1 : 0));
        }
    }
}

TEST_CASE("dual basis of a scaled single class") {
    const ManifoldModel& m = cat().model("G(3,6)");
    CharClassExpr half_p1 = X("1/2*p1(E)");
    GramMatrix g = gram_matrix({half_p1}, m);
    CHECK(g.unit * g.entries[0][0] == ExactScalar(Rational(3, 8), 1, 1));
    std::vector<CharClassExpr> psi = dual_basis(g, {star(half_p1, m)});
    CHECK(psi[0] == X("q5"));
}

TEST_CASE("Poincare duals of catalogued classes") {
    const ManifoldModel& g48 = cat().model("G(4,8)");
    CHECK(poincare_dual(X("e(E)"), g48) == CycleClass("G(4,7)"));
    CHECK(poincare_dual(X("e(F)"), g48) == CycleClass("G(3,7)"));
    CHECK(poincare_dual(X("1/2*p1(E) + 1/2*e(E) - 1/2*e(F)"), g48) ==
          CycleClass("CAY") + CycleClass("G(4,7)") - CycleClass("G(3,7)"));
    const ManifoldModel& g37 = cat().model("G(3,7)");
    CHECK(poincare_dual(X("1/2*p1(E) + 1/2*e(F)"), g37) == CycleClass("ASSOC"));
    CHECK(poincare_dual(X("0"), g37).is_zero());
    // duality is linear
    CHECK(poincare_dual(X("p1(E) + e(F)"), g37) ==
          CycleClass("ASSOC") * Rational(2));
}

TEST_CASE("Smith normal form fixed cases") {
    SUBCASE("identity") {
        IntMatrix a = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        SmithNormalForm f = smith_normal_form(a);
        CHECK(f.s == a);
        CHECK(mul(mul(f.u, a), f.v) == f.s);
    }
    SUBCASE("lattice pairing of the degree-4 classes") {
        IntMatrix a = {{0, 1, 0}, {1, 0, 0}, {1, -1, 2}};
        SmithNormalForm f = smith_normal_form(a);
        CHECK(f.s[0][0] == 1);
        CHECK(f.s[1][1] == 1);
        CHECK(f.s[2][2] == 2);
        CHECK(mul(mul(f.u, a), f.v) == f.s);
    }
    SUBCASE("coprime diagonal collapses") {
        SmithNormalForm f = smith_normal_form({{2, 0}, {0, 3}});
        CHECK(f.s[0][0] == 1);
        CHECK(f.s[1][1] == 6);
    }
    SUBCASE("rectangular input") {
        IntMatrix a = {{2, 4, 4}, {-6, 6, 12}};
        SmithNormalForm f = smith_normal_form(a);
        CHECK(mul(mul(f.u, a), f.v) == f.s);
        CHECK(f.s[0][0] == 2);
        CHECK(f.s[1][1] % f.s[0][0] == 0);
    }
}

TEST_CASE("Smith normal form properties on random 3x3 matrices") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int t = 0; t < 100; ++t) {
        IntMatrix a(3, std::vector<Int>(3));
        for (auto& row : a)
            for (Int& v : row) v = dist(rng);
        SmithNormalForm f = smith_normal_form(a);
        CAPTURE(t);
        CHECK(mul(mul(f.u, a), f.v) == f.s);
        Int du = det3(f.u), dv = det3(f.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        Int prod = 1;
        for (int i = 0; i < 3; ++i) {
            CHECK(f.s[i][i] >= 0);
            if (i > 0 && f.s[i - 1][i - 1] != 0)
                CHECK(f.s[i][i] % f.s[i - 1][i - 1] == 0);
            prod *= f.s[i][i];
        }
        Int da = det3(a);
        CHECK(prod == (da < 0 ? Int(-da) : da));
    }
}

TEST_CASE("integral dual bases and lattice indices") {
    RationalMatrix p = {{0, 1, 1}, {1, 0, -1}, {0, 0, 2}};
    IntegralDualBasis d = integral_dual_basis(p);
    CHECK(matmul(d.c, p) == identity_matrix(3));
    // columns are the class combinations dual to CP2, *CP2, G(2,4)
    CHECK(d.c[0][0] == 0);
    CHECK(d.c[1][0] == 1);
    CHECK(d.c[2][0] == 0);
    CHECK(d.c[0][2] == Rational(1, 2));
    CHECK(d.c[1][2] == Rational(-1, 2));
    CHECK(d.c[2][2] == Rational(1, 2));
    CHECK_FALSE(d.integral);
    CHECK(d.half_integral);
    CHECK(lattice_index(p) == 2);

    RationalMatrix id = {{1, 0}, {0, 1}};
    IntegralDualBasis e = integral_dual_basis(id);
    CHECK(e.c == id);
    CHECK(e.integral);
    CHECK(lattice_index(id) == 1);

    CHECK_THROWS_AS(integral_dual_basis(RationalMatrix{{1, 1}, {1, 1}}),
                    singular_pairing);
    CHECK_THROWS_AS(lattice_index(RationalMatrix{{0, 0}, {0, 0}}),
                    singular_pairing);
}
