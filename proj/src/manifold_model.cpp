#include "grasschar/manifold_model.hpp"

#include <algorithm>

#include "grasschar/errors.hpp"
#include "grasschar/linalg.hpp"

namespace grasschar {

std::string ScaledClass::str() const {
    if (cls.is_zero()) return "0";
    return "(" + unit.str() + ") * (" + cls.str() + ")";
}

const Cycle& ManifoldModel::cycle(const std::string& cycle_name) const {
    for (const Cycle& c : cycles)
        if (c.name == cycle_name) return c;
    throw unknown_entity_error("unknown cycle '" + cycle_name + "' in " + name);
}

bool ManifoldModel::has_cycle(const std::string& cycle_name) const {
    for (const Cycle& c : cycles)
        if (c.name == cycle_name) return true;
    return false;
}

Rational ManifoldModel::cycle_integral(const std::string& cycle_name,
                                       const CharClassExpr& x) const {
    const Cycle& c = cycle(cycle_name);
    CharClassExpr r = reduce(x, *this);
    Rational total = 0;
    for (const auto& [mono, coeff] : r.terms()) {
        auto it = c.pairings.find(mono);
        if (it == c.pairings.end())
            throw no_data_for_degree("cycle '" + cycle_name + "' has no pairing for " +
                                     monomial_str(mono));
        total += coeff * it->second;
    }
    return total;
}

namespace {

int monomial_degree(const Monomial& m, const ManifoldModel& model) {
    int d = 0;
    for (const auto& [g, e] : m) {
        auto it = model.generator_degrees.find(g);
        if (it == model.generator_degrees.end())
            throw contract_error("unknown generator '" + g + "' in model " + model.name);
        d += it->second * e;
    }
    return d;
}

} // namespace

CharClassExpr reduce(const CharClassExpr& x, const ManifoldModel& m) {
    CharClassExpr cur = x;
    for (int guard = 0;; ++guard) {
        if (guard > 100000)
            throw contract_error("rewrite did not terminate in model " + m.name);
        bool changed = false;
        CharClassExpr next;
        for (const auto& [mono, coeff] : cur.terms()) {
            if (monomial_degree(mono, m) > m.dim) {
                changed = true;
                continue;
            }
            bool applied = false;
            for (const auto& [lhs, rhs] : m.rules) {
                if (!monomial_divides(lhs, mono)) continue;
                CharClassExpr rewritten =
                    rhs * CharClassExpr(monomial_div(mono, lhs)) * coeff;
                next = next + rewritten;
                applied = true;
                changed = true;
                break;
            }
            if (!applied) next.add_term(mono, coeff);
        }
        cur = next;
        if (!changed) return cur;
    }
}

Rational integrate(const CharClassExpr& x, const ManifoldModel& m) {
    CharClassExpr r = reduce(x, m);
    Rational total = 0;
    for (const auto& [mono, coeff] : r.terms()) {
        if (monomial_degree(mono, m) != m.dim)
            throw not_top_degree("integrate: term " + monomial_str(mono) +
                                 " has degree != dim(" + m.name + ")");
        auto it = m.integrals.find(mono);
        if (it == m.integrals.end())
            throw not_top_degree("integrate: no table value for " + monomial_str(mono) +
                                 " on " + m.name);
        total += coeff * it->second;
    }
    return total;
}

ScaledClass star(const CharClassExpr& x, const ManifoldModel& m) {
    CharClassExpr r = reduce(x, m);
    if (r.is_zero()) throw star_undefined("star of zero class");
    const int q = r.degree(m.generator_degrees);
    if (q <= 0 || q >= m.dim)
        throw star_undefined("star undefined for degree " + std::to_string(q) + " on " +
                             m.name);
    ExactScalar unit;
    CharClassExpr cls;
    bool first = true;
    for (const auto& [mono, coeff] : r.terms()) {
        auto it = m.star_table.find(mono);
        if (it == m.star_table.end())
            throw star_undefined("star table of " + m.name + " does not cover " +
                                 monomial_str(mono));
        const ScaledClass& entry = it->second;
        if (first) {
            // Normalize the common unit to coefficient 1.
            unit = ExactScalar(1, entry.unit.radicand(), entry.unit.pi_pow());
            first = false;
        }
        ExactScalar ratio = entry.unit * unit.inverse();
        if (!ratio.is_rational())
            throw contract_error("star table units disagree within degree " +
                                 std::to_string(q) + " of " + m.name);
        cls = cls + entry.cls * (coeff * ratio.coeff());
    }
    return {unit, reduce(cls, m)};
}

ExactScalar inner_product(const CharClassExpr& x, const CharClassExpr& y,
                          const ManifoldModel& m) {
    ScaledClass sy = star(y, m);
    Rational val = integrate(reduce(x, m) * sy.cls, m);
    return sy.unit * val;
}

CharClassExpr tangent_euler_class(const ManifoldModel& m) {
    auto [e, f] = canonical_bundles(m.grass_k, m.grass_n);
    RootPolynomial te = tensor_euler_roots(e, f);
    return reduce(express_in_generators(te, e, f), m);
}

Int euler_characteristic(const ManifoldModel& m) {
    if (m.dim % 2 != 0) return 0;
    Rational chi = integrate(tangent_euler_class(m), m);
    if (denominator(chi) != 1)
        throw contract_error("non-integral Euler characteristic on " + m.name);
    return numerator(chi);
}

CharClassExpr total_pontryagin_class(const ManifoldModel& m, char label) {
    auto [e, f] = canonical_bundles(m.grass_k, m.grass_n);
    const BundleRoots& b = label == 'E' ? e : f;
    return express_in_generators(total_pontryagin_roots(b), e, f);
}

namespace {

int star_sign(int q, int dim) { return (q * (dim - q)) % 2 == 0 ? 1 : -1; }

void check(bool ok, const std::string& what, const ManifoldModel& m) {
    if (!ok) throw catalog_error("model " + m.name + ": " + what);
}

} // namespace

void validate_model(const ManifoldModel& m) {
    check(m.dim == m.grass_k * (m.grass_n - m.grass_k), "dimension mismatch", m);
    check(static_cast<int>(m.poincare.size()) == m.dim + 1,
          "Betti vector length != dim + 1", m);
    check(m.poincare[0] == 1, "b_0 != 1", m);
    for (int q = 0; q <= m.dim; ++q)
        check(m.poincare[q] == m.poincare[m.dim - q], "Betti numbers not palindromic", m);

    // Basis counts match Betti numbers.
    for (int q = 0; q <= m.dim; ++q) {
        auto it = m.bases.find(q);
        int count = it == m.bases.end() ? 0 : static_cast<int>(it->second.size());
        check(count == m.poincare[q],
              "degree-" + std::to_string(q) + " basis size " + std::to_string(count) +
                  " != Betti number " + std::to_string(m.poincare[q]),
              m);
    }

    // Rules preserve degree and leave basis monomials fixed.
    for (const auto& [lhs, rhs] : m.rules) {
        int dl = monomial_degree(lhs, m);
        for (const auto& [mono, c] : rhs.terms())
            check(monomial_degree(mono, m) == dl, "rewrite rule changes degree", m);
    }
    for (const auto& [q, monos] : m.bases)
        for (const Monomial& mono : monos) {
            check(monomial_degree(mono, m) == q, "basis monomial of wrong degree", m);
            check(reduce(CharClassExpr(mono), m) == CharClassExpr(mono),
                  "basis monomial " + monomial_str(mono) + " is not in normal form", m);
        }

    // Integration table covers the top basis.
    for (const Monomial& mono : m.bases.at(m.dim))
        check(m.integrals.count(mono) > 0,
              "top-degree basis monomial " + monomial_str(mono) + " unvalued", m);

    // Star closure, the star-squared sign law and Gram positivity.
    for (const auto& [q, monos] : m.bases) {
        if (q == 0 || q == m.dim) continue;
        for (const Monomial& mono : monos)
            check(m.star_table.count(mono) > 0,
                  "star table misses " + monomial_str(mono), m);
        const int sign = star_sign(q, m.dim);
        for (const Monomial& mono : monos) {
            CharClassExpr phi(mono);
            ScaledClass s1 = star(phi, m);
            ScaledClass s2 = star(s1.cls, m);
            ExactScalar total = s1.unit * s2.unit;
            check(total.is_rational(), "star∘star has irrational unit", m);
            check(s2.cls * total.coeff() == phi * Rational(sign),
                  "star∘star sign law fails on " + monomial_str(mono), m);
        }
        // Gram matrix: symmetric, shared unit, positive leading minors.
        const size_t n = monos.size();
        RationalMatrix gram(n, RationalVector(n, 0));
        ExactScalar unit;
        bool have_unit = false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                ExactScalar v = inner_product(CharClassExpr(monos[i]),
                                              CharClassExpr(monos[j]), m);
                if (v.is_zero()) continue;
                if (!have_unit) {
                    unit = ExactScalar(1, v.radicand(), v.pi_pow());
                    have_unit = true;
                }
                ExactScalar ratio = v * unit.inverse();
                check(ratio.is_rational(), "Gram entries mix units", m);
                gram[i][j] = ratio.coeff();
            }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                check(gram[i][j] == gram[j][i], "Gram matrix not symmetric", m);
        for (size_t k = 1; k <= n; ++k) {
            RationalMatrix minor(k, RationalVector(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) minor[i][j] = gram[i][j];
            check(determinant(minor) > 0, "Gram matrix not positive definite", m);
        }
    }

    // Cycles: valid degrees, pairings over basis monomials, generator sets
    // forming nonsingular pairing matrices.
    for (const Cycle& c : m.cycles) {
        check(c.degree >= 0 && c.degree <= m.dim, "cycle degree out of range", m);
        check(m.poincare[c.degree] > 0, "cycle in a degree with no cohomology", m);
        for (const Monomial& mono : m.bases.at(c.degree))
            check(c.pairings.count(mono) > 0,
                  "cycle " + c.name + " misses pairing for " + monomial_str(mono), m);
    }
    for (const auto& [q, names] : m.generator_cycles) {
        const auto& basis = m.bases.at(q);
        check(names.size() == basis.size(),
              "generator cycle count != Betti number at degree " + std::to_string(q), m);
        RationalMatrix p(names.size(), RationalVector(basis.size(), 0));
        for (size_t c = 0; c < names.size(); ++c) {
            const Cycle& cyc = m.cycle(names[c]);
            check(cyc.degree == q, "generator cycle degree mismatch", m);
            for (size_t j = 0; j < basis.size(); ++j)
                p[c][j] = cyc.pairings.at(basis[j]);
        }
        check(determinant(p) != 0, "generator cycle pairing matrix is singular", m);
    }
}

} // namespace grasschar
