#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasschar/root_poly.hpp"

using namespace grasschar;

namespace {
CharClassExpr X(const std::string& s) { return CharClassExpr::parse(s); }
} // namespace

TEST_CASE("total Pontrjagin class of a bundle in root form") {
    BundleRoots e{'E', 1, false, 0}; // rank 2, root x0
    RootPolynomial p = total_pontryagin_roots(e);
    RootPolynomial expect = RootPolynomial::one() + RootPolynomial::var(0, 2);
    CHECK(p == expect);

    BundleRoots f{'F', 1, true, 1}; // rank 3: root x1 plus a zero root
    CHECK(total_pontryagin_roots(f) ==
          RootPolynomial::one() + RootPolynomial::var(1, 2));
}

TEST_CASE("Euler class exists only for even rank") {
    BundleRoots e{'E', 2, false, 0};
    CHECK(euler_roots(e) == RootPolynomial::var(0) * RootPolynomial::var(1));
    BundleRoots odd{'E', 1, true, 0};
    CHECK_THROWS_AS(euler_roots(odd), odd_rank_no_euler);
}

TEST_CASE("tensor Euler class on G(2,4)") {
    auto [e, f] = canonical_bundles(2, 4);
    RootPolynomial te = tensor_euler_roots(e, f);
    // x^2 - y^2 with x the E root and y the F root
    RootPolynomial expect =
        RootPolynomial::var(0, 2) - RootPolynomial::var(1, 2);
    CHECK(te == expect);
    CHECK(express_in_generators(te, e, f) == X("p1(E) - p1(F)"));
}

TEST_CASE("tensor Euler class with an odd-rank factor picks up the Euler factor") {
    auto [e, f] = canonical_bundles(2, 5); // F has rank 3
    RootPolynomial te = tensor_euler_roots(e, f);
    CHECK(express_in_generators(te, e, f) == X("p1(E)*e(E) - p1(F)*e(E)"));
}

TEST_CASE("rank-1 subbundle tangent Euler class") {
    auto [e, f] = canonical_bundles(1, 3); // E = zero root, F rank 2
    CHECK(express_in_generators(tensor_euler_roots(e, f), e, f) == X("e(F)"));
}

TEST_CASE("both factors odd leaves no Euler class") {
    auto [e, f] = canonical_bundles(3, 6);
    CHECK_THROWS_AS(tensor_euler_roots(e, f), odd_rank_no_euler);
}

TEST_CASE("tensor Pontrjagin class degree parts on G(2,4)") {
    auto [e, f] = canonical_bundles(2, 4);
    RootPolynomial tp = tensor_pontryagin_roots(e, f);
    // p(E (x) F) = 1 + 2(x^2 + y^2) + (x^2 - y^2)^2
    CHECK(express_in_generators(tp.degree_part(4), e, f) ==
          X("2*p1(E) + 2*p1(F)"));
    CHECK(express_in_generators(tp.degree_part(8), e, f) ==
          X("p1(E)^2 - 2*p1(E)*p1(F) + p1(F)^2"));
    CHECK(tp.degree_part(12).is_zero());
}

TEST_CASE("express/expand round trip on symmetric polynomials") {
    auto [e, f] = canonical_bundles(4, 8);
    for (const RootPolynomial& p :
         {total_pontryagin_roots(e) * total_pontryagin_roots(f),
          tensor_euler_roots(e, f),
          tensor_pontryagin_roots(e, f).degree_part(8)}) {
        CharClassExpr x = express_in_generators(p, e, f);
        CHECK(expand_generators(x, e, f) == p);
    }
}

TEST_CASE("asymmetric polynomials are rejected") {
    auto [e, f] = canonical_bundles(4, 8);
    // a single E root is not invariant under permuting the two E roots
    CHECK_THROWS_AS(express_in_generators(RootPolynomial::var(0, 2), e, f),
                    not_expressible);
    // odd power of one root only (not a multiple of the Euler class)
    CHECK_THROWS_AS(express_in_generators(RootPolynomial::var(0), e, f),
                    not_expressible);
}

TEST_CASE("expressions combine across degree parts") {
    auto [e, f] = canonical_bundles(2, 6);
    RootPolynomial tp = tensor_pontryagin_roots(e, f);
    CharClassExpr whole = express_in_generators(tp, e, f);
    CharClassExpr sum;
    for (int d = 0; d <= 2 * 8; d += 4)
        sum = sum + express_in_generators(tp.degree_part(d), e, f);
    CHECK(whole == sum);
}
