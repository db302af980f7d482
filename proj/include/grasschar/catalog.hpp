#pragma once

#include <map>
#include <string>
#include <vector>

#include "grasschar/duality.hpp"
#include "grasschar/manifold_model.hpp"
#include "grasschar/volumes.hpp"

namespace grasschar {

// A recorded identity between homology classes, verified by pairing both
// sides against every catalogued class of the relevant degree.
struct HomologyRelation {
    std::string id;
    std::string manifold;
    int degree = 0;
    CycleClass lhs, rhs;
    std::string description;
};

// A sphere bundle S^m -> total -> base whose rational Gysin sequence splits.
struct SphereBundleDescriptor {
    std::string id;
    std::string total, base;
    int fiber_dim = 0;
    std::vector<int> total_betti;
    int base_dim = 0;
    bool euler_class_vanishes_rationally = false;
};

// A recorded fact (torsion groups and similar) that is data, never computed.
struct CatalogFact {
    std::string id;
    std::string statement;
};

struct Catalog {
    std::map<std::string, ManifoldModel> models;
    std::vector<HomologyRelation> relations;
    std::vector<SphereBundleDescriptor> fibrations;
    std::vector<CatalogFact> facts;

    const ManifoldModel& model(const std::string& name) const; // unknown_manifold
    const HomologyRelation& relation(const std::string& id) const; // unknown_relation
};

// The built-in catalog: G(2,4), G(2,5), G(2,6), G(2,7), G(2,8), G(3,6),
// G(3,7), G(3,8), G(4,8), their cycles, relations, fibrations and facts.
Catalog build_default_catalog();

// JSON round trip (single document holding the whole catalog).
Catalog load_catalog(const std::string& path);       // catalog_error
void save_catalog(const Catalog& cat, const std::string& path);

// Structural validation of every model plus relation/fibration consistency;
// throws catalog_error on the first violation.
void validate_catalog(const Catalog& cat);

// Betti numbers by degree.  Covers catalog models plus the closed-form
// families G(1,n) and G(2,n).
std::vector<int> poincare_polynomial(const Catalog& cat, const std::string& name);

struct PairingTable {
    std::vector<std::string> cycle_names;      // rows
    std::vector<Monomial> class_monomials;     // columns
    RationalMatrix values;                     // ∫_cycle(class)
};

PairingTable cycle_pairing_table(const Catalog& cat, const std::string& name,
                                 int degree);

// Rational Gysin solver: unique non-negative b with
// b[q] + b[q - fiber_dim] = total[q], zero outside [0, base_dim].
std::vector<int> gysin_betti_solver(const SphereBundleDescriptor& d); // infeasible

// Pushforward of the fundamental class under the Gauss map of an immersed
// manifold, per the recorded degree formulas.
CycleClass gauss_map_class(const std::string& target, const Rational& chi,
                           const Rational& sign, const Rational& lambda);

// Degree of the composition of the Gauss map with the sphere fibration:
// half the normal Euler cube integral plus half the Euler characteristic.
Rational tau_gauss_degree(const Rational& normal_euler_cubed_integral,
                          const Rational& chi);

// Pairing of a homology combination with a cohomology class via the model's
// cycle tables.
Rational pair_cycle_class(const CycleClass& t, const CharClassExpr& x,
                          const ManifoldModel& m);

// True iff pairing both sides against every basis class of the relation's
// degree yields equal values.
bool verify_relation(const Catalog& cat, const HomologyRelation& rel);

} // namespace grasschar
