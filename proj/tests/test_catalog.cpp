#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "grasschar/catalog.hpp"
#include "grasschar/duality.hpp"
#include "grasschar/verify.hpp"

using namespace grasschar;

namespace {
CharClassExpr X(const std::string& s) { return CharClassExpr::parse(s); }
const Catalog& cat() {
    static Catalog c = build_default_catalog();
    return c;
}
} // namespace

TEST_CASE("the default catalog is structurally valid") {
    CHECK(cat().models.size() == 9);
    CHECK_NOTHROW(validate_catalog(cat()));
    CHECK_THROWS_AS(cat().model("G(5,10)"), unknown_manifold);
    CHECK_THROWS_AS(cat().relation("nothing"), unknown_relation);
}

TEST_CASE("catalog JSON round trip") {
    const std::string path = "catalog_roundtrip.json";
    save_catalog(cat(), path);
    Catalog loaded = load_catalog(path);
    CHECK(loaded.models.size() == cat().models.size());
    CHECK(loaded.relations.size() == cat().relations.size());
    CHECK(loaded.fibrations.size() == cat().fibrations.size());
    CHECK(loaded.facts.size() == cat().facts.size());
    CHECK_NOTHROW(validate_catalog(loaded));
    // the reloaded models behave identically
    const ManifoldModel& m = loaded.model("G(4,8)");
    CHECK(reduce(X("p1(E)^2"), m) == X("e(E)^2 + e(F)^2"));
    CHECK(poincare_dual(X("e(E)"), m) == CycleClass("G(4,7)"));
    CHECK(m.cycle("CAY").volume == cat().model("G(4,8)").cycle("CAY").volume);
    // a second save is byte-identical
    const std::string path2 = "catalog_roundtrip2.json";
    save_catalog(loaded, path2);
    std::ifstream a(path), b(path2);
    std::string sa((std::istreambuf_iterator<char>(a)), {});
    std::string sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("malformed catalog files are rejected") {
    const std::string path = "catalog_broken.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_catalog(path), catalog_error);
    {
        std::ofstream out(path);
        out << "{\"manifolds\": [{\"name\": \"X\"}]}";
    }
    CHECK_THROWS_AS(load_catalog(path), catalog_error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_catalog("no_such_file.json"), catalog_error);
}

TEST_CASE("Poincare polynomials") {
    CHECK(poincare_polynomial(cat(), "G(3,7)") ==
          std::vector<int>{1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1});
    CHECK(poincare_polynomial(cat(), "G(3,8)") ==
          std::vector<int>{1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1});
    CHECK(poincare_polynomial(cat(), "G(1,7)") ==
          std::vector<int>{1, 0, 0, 0, 0, 0, 1});
    CHECK(poincare_polynomial(cat(), "G(2,10)") ==
          std::vector<int>{1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK_THROWS_AS(poincare_polynomial(cat(), "G(9,9)"), unknown_manifold);
}

TEST_CASE("cycle pairing tables") {
    PairingTable t = cycle_pairing_table(cat(), "G(4,8)", 4);
    CHECK(t.cycle_names == std::vector<std::string>{"CP2", "*CP2", "G(2,4)"});
    CHECK(t.values == RationalMatrix{{0, 1, 1}, {1, 0, -1}, {0, 0, 2}});
    PairingTable u = cycle_pairing_table(cat(), "G(4,8)", 12);
    CHECK(u.values == RationalMatrix{{2, 0, 0}, {0, 2, 0}, {-1, 1, 1}});
    PairingTable v = cycle_pairing_table(cat(), "G(3,7)", 4);
    CHECK(v.values == RationalMatrix{{1, 1}, {1, -1}});
    CHECK_THROWS_AS(cycle_pairing_table(cat(), "G(3,7)", 6), no_data_for_degree);
}

TEST_CASE("Gysin solver") {
    std::vector<int> b = gysin_betti_solver(cat().fibrations.at(0));
    CHECK(b == std::vector<int>{1, 0, 0, 0, 1, 0, 0, 0, 1});

    SphereBundleDescriptor zero;
    zero.fiber_dim = 2;
    zero.total_betti = {0, 0, 0, 0, 0};
    zero.base_dim = 2;
    zero.euler_class_vanishes_rationally = true;
    CHECK(gysin_betti_solver(zero) == std::vector<int>{0, 0, 0});

    SphereBundleDescriptor bad;
    bad.fiber_dim = 2;
    bad.total_betti = {1, 0, 0};
    bad.base_dim = 0;
    bad.euler_class_vanishes_rationally = true;
    CHECK_THROWS_AS(gysin_betti_solver(bad), infeasible_gysin);

    bad.euler_class_vanishes_rationally = false;
    CHECK_THROWS_AS(gysin_betti_solver(bad), contract_error);
}

TEST_CASE("Gauss map classes") {
    CHECK(gauss_map_class("G(4,8)", 2, 0, 0) == CycleClass("G(4,5)"));
    CHECK(gauss_map_class("G(4,8)", 24, -16, 0) ==
          CycleClass("G(4,5)", 12) + CycleClass("G(2,4)", -24));
    CHECK(gauss_map_class("G(4,8)", 0, 0, 3) == CycleClass("G(1,5)", 3));
    CHECK(gauss_map_class("G(4,7)", 2, 2, 9) ==
          CycleClass("G(4,5)") + CycleClass("G(2,4)", 3));
    CHECK(gauss_map_class("G(2,N)", 2, 0, 0) == CycleClass("G(2,3)"));
    CHECK(gauss_map_class("G(2,N)", 0, 0, 0).is_zero());
    CHECK_THROWS_AS(gauss_map_class("G(5,10)", 2, 0, 0), unsupported_target);
    CHECK(tau_gauss_degree(0, 2) == 1);
    CHECK(tau_gauss_degree(4, 2) == 3);
}

TEST_CASE("every recorded homology relation verifies by pairing") {
    CHECK(cat().relations.size() >= 10);
    for (const HomologyRelation& r : cat().relations) {
        CAPTURE(r.id);
        CHECK(verify_relation(cat(), r));
    }
    // a wrong relation is detected
    HomologyRelation wrong = cat().relation("assoc-sum:G(3,7)");
    wrong.rhs = wrong.rhs * Rational(2);
    CHECK_FALSE(verify_relation(cat(), wrong));
}

TEST_CASE("verification suite runs clean on the default catalog") {
    VerifyReport r = run_verification(cat());
    INFO(render_report(r));
    CHECK(r.failed == 0);
    CHECK(r.passed > 100);
    VerifyReport filtered = run_verification(cat(), "volumes/");
    CHECK(filtered.checks.size() < r.checks.size());
    CHECK(filtered.failed == 0);
    for (const CheckResult& c : filtered.checks)
        CHECK(c.id.find("volumes/") != std::string::npos);
}
