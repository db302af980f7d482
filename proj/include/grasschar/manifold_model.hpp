#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasschar/char_expr.hpp"
#include "grasschar/exact_scalar.hpp"
#include "grasschar/root_poly.hpp"

namespace grasschar {

// A Hodge-star value: an ExactScalar monomial (coefficient 1 times sqrt(r)
// times pi^k) scaling a rational class.  Rational content lives in `cls` so
// classes within one degree combine exactly.
struct ScaledClass {
    ExactScalar unit;  // coeff 1, carries sqrt/pi content
    CharClassExpr cls; // rational combination of generators

    std::string str() const;
};

// A named submanifold cycle with its pairing integrals against cohomology
// basis monomials of the same degree.
struct Cycle {
    std::string name;
    int degree = 0;
    std::map<Monomial, Rational> pairings;
    std::optional<ExactScalar> volume;
};

// The cohomology model of one Grassmannian: generators with degrees, rewrite
// rules to normal form, per-degree monomial bases, top-degree integration
// table, Hodge-star table, and the catalogued cycles.
struct ManifoldModel {
    std::string name;
    int grass_k = 0, grass_n = 0; // G(k, n); dim = k(n-k)
    int dim = 0;
    std::map<std::string, int> generator_degrees;
    // Ordered rewrite rules; every lhs monomial is replaced by the rhs.
    std::vector<std::pair<Monomial, CharClassExpr>> rules;
    std::map<int, std::vector<Monomial>> bases; // degree -> basis monomials
    std::map<Monomial, Rational> integrals;     // top-degree monomial -> integral
    std::map<Monomial, ScaledClass> star_table; // basis monomial -> Hodge star
    std::vector<Cycle> cycles;
    // Cycles forming an integral homology basis, per degree (subset of the
    // catalogued cycles used to invert the duality pairing).
    std::map<int, std::vector<std::string>> generator_cycles;
    std::vector<int> poincare; // Betti numbers by degree, length dim+1

    const Cycle& cycle(const std::string& cycle_name) const;
    bool has_cycle(const std::string& cycle_name) const;
    Rational cycle_integral(const std::string& cycle_name, const CharClassExpr& x) const;
    int degree_of(const CharClassExpr& x) const { return x.degree(generator_degrees); }
};

// Normal form under the model's rewrite rules with degree > dim dropped.
CharClassExpr reduce(const CharClassExpr& x, const ManifoldModel& m);

// Integration of a top-degree class; throws not_top_degree if a surviving
// reduced term has degree != dim or is missing from the table.
Rational integrate(const CharClassExpr& x, const ManifoldModel& m);

// Hodge star of a homogeneous class of degree 0 < q < dim via the model's
// star table; throws star_undefined otherwise.
ScaledClass star(const CharClassExpr& x, const ManifoldModel& m);

// (x, y) = integrate(x ^ *y), exact.
ExactScalar inner_product(const CharClassExpr& x, const CharClassExpr& y,
                          const ManifoldModel& m);

// For even-dimensional models: integral of the tangent-bundle Euler class
// derived by the splitting-principle engine; 0 for odd dimension.
Int euler_characteristic(const ManifoldModel& m);

// The tangent Euler class e(TG) = e(E (x) F) expressed in generators and
// reduced in the model.
CharClassExpr tangent_euler_class(const ManifoldModel& m);

// Full Pontrjagin sums p(E), p(F) through each bundle's rank, as generator
// polynomials (un-reduced).
CharClassExpr total_pontryagin_class(const ManifoldModel& m, char label);

// Throws catalog_error describing the first violated structural invariant
// (rule degrees, basis counts vs Betti numbers, integration completeness,
// star closure sign, Gram symmetry/positivity, palindromic Betti numbers).
void validate_model(const ManifoldModel& m);

} // namespace grasschar
