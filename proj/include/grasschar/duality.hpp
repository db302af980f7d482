#pragma once

#include <map>
#include <string>
#include <vector>

#include "grasschar/linalg.hpp"
#include "grasschar/manifold_model.hpp"

namespace grasschar {

// A formal rational combination of named homology cycles.
class CycleClass {
  public:
    CycleClass() = default;
    explicit CycleClass(const std::string& name, const Rational& c = 1);

    const std::map<std::string, Rational>& combination() const { return combo_; }
    bool is_zero() const { return combo_.empty(); }

    void add(const std::string& name, const Rational& c);
    CycleClass operator+(const CycleClass& o) const;
    CycleClass operator-(const CycleClass& o) const;
    CycleClass operator*(const Rational& c) const;
    bool operator==(const CycleClass& o) const = default;

    // e.g. "[CAY] + [G(4,7)] - [G(3,7)]", "1/2*[CP2]", "0"
    std::string str() const;

  private:
    std::map<std::string, Rational> combo_;
};

// Gram matrix of a degree's basis under the harmonic inner product: a common
// ExactScalar unit (coefficient 1) times a rational SPD matrix.
struct GramMatrix {
    std::vector<CharClassExpr> basis;
    ExactScalar unit;
    RationalMatrix entries;
};

GramMatrix gram_matrix(const std::vector<CharClassExpr>& basis, const ManifoldModel& m);

// (psi_1..psi_k) = (*phi_1..*phi_k) A^{-1}: the basis dual to g.basis under
// the integration pairing; the star units cancel against the Gram unit, so
// the duals are rational classes.  Throws singular_gram.
std::vector<CharClassExpr> dual_basis(const GramMatrix& g,
                                      const std::vector<ScaledClass>& star_images);
// Convenience: Gram + stars + inversion for one degree of a model.
std::vector<CharClassExpr> dual_basis(int degree, const ManifoldModel& m);

// The homology class D[x] with ∫_{D[x]} eta = ∫_M x ∧ eta for all eta,
// solved against the model's generator cycles in the complementary degree.
CycleClass poincare_dual(const CharClassExpr& x, const ManifoldModel& m);

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithNormalForm {
    IntMatrix u, s, v; // u * a * v = s
};

// Smith normal form: U, V unimodular, S diagonal with divisibility chain,
// non-negative diagonal.
SmithNormalForm smith_normal_form(IntMatrix a);

struct IntegralDualBasis {
    // C = p^{-1} where p[cycle][class] = ∫_cycle(class); column c of C gives
    // the class combination dual to cycle c, and C * p = identity.
    RationalMatrix c;
    bool integral = false;      // all entries are integers
    bool half_integral = false; // all denominators divide 2
};

IntegralDualBasis integral_dual_basis(const RationalMatrix& p); // singular_pairing
Int lattice_index(const RationalMatrix& p);                     // |det p|

} // namespace grasschar
