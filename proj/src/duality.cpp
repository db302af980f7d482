#include "grasschar/duality.hpp"

#include <algorithm>

#include "grasschar/errors.hpp"

namespace grasschar {

CycleClass::CycleClass(const std::string& name, const Rational& c) {
    if (c != 0) combo_[name] = c;
}

void CycleClass::add(const std::string& name, const Rational& c) {
    if (c == 0) return;
    Rational& slot = combo_[name];
    slot += c;
    if (slot == 0) combo_.erase(name);
}

CycleClass CycleClass::operator+(const CycleClass& o) const {
    CycleClass out = *this;
    for (const auto& [n, c] : o.combo_) out.add(n, c);
    return out;
}

CycleClass CycleClass::operator-(const CycleClass& o) const {
    CycleClass out = *this;
    for (const auto& [n, c] : o.combo_) out.add(n, -c);
    return out;
}

CycleClass CycleClass::operator*(const Rational& c) const {
    CycleClass out;
    for (const auto& [n, v] : combo_) out.add(n, v * c);
    return out;
}

std::string CycleClass::str() const {
    if (combo_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, c] : combo_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += rational_str(a) + "*";
        out += "[" + n + "]";
        first = false;
    }
    return out;
}

GramMatrix gram_matrix(const std::vector<CharClassExpr>& basis, const ManifoldModel& m) {
    GramMatrix g;
    g.basis = basis;
    const size_t n = basis.size();
    g.entries.assign(n, RationalVector(n, 0));
    bool have_unit = false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ExactScalar v = inner_product(basis[i], basis[j], m);
            if (v.is_zero()) continue;
            if (!have_unit) {
                g.unit = ExactScalar(1, v.radicand(), v.pi_pow());
                have_unit = true;
            }
            ExactScalar ratio = v * g.unit.inverse();
            if (!ratio.is_rational())
                throw contract_error("Gram entries do not share a scalar monomial");
            g.entries[i][j] = ratio.coeff();
        }
    if (!have_unit) throw singular_gram("zero Gram matrix");
    return g;
}

std::vector<CharClassExpr> dual_basis(const GramMatrix& g,
                                      const std::vector<ScaledClass>& star_images) {
    const size_t n = g.basis.size();
    if (star_images.size() != n)
        throw contract_error("dual_basis: star image count mismatch");
    if (determinant(g.entries) == 0) throw singular_gram("singular Gram matrix");
    RationalMatrix inv = invert(g.entries);
    std::vector<CharClassExpr> psi(n);
    for (size_t j = 0; j < n; ++j) {
        CharClassExpr acc;
        for (size_t l = 0; l < n; ++l) {
            // *phi_l = unit_l * cls_l; A^{-1} = (1/gram_unit) * inv.  The
            // star unit and the Gram unit are the same scalar monomial, so
            // the product is rational.
            ExactScalar ratio = star_images[l].unit * g.unit.inverse();
            if (!ratio.is_rational())
                throw contract_error("dual_basis: star and Gram units disagree");
            acc = acc + star_images[l].cls * (ratio.coeff() * inv[l][j]);
        }
        psi[j] = acc;
    }
    return psi;
}

std::vector<CharClassExpr> dual_basis(int degree, const ManifoldModel& m) {
    auto it = m.bases.find(degree);
    if (it == m.bases.end() || it->second.empty())
        throw no_data_for_degree("no basis at degree " + std::to_string(degree) + " on " +
                                 m.name);
    std::vector<CharClassExpr> basis;
    for (const Monomial& mono : it->second) basis.emplace_back(mono);
    GramMatrix g = gram_matrix(basis, m);
    std::vector<ScaledClass> stars;
    for (const CharClassExpr& phi : basis) stars.push_back(star(phi, m));
    return dual_basis(g, stars);
}

CycleClass poincare_dual(const CharClassExpr& x, const ManifoldModel& m) {
    CharClassExpr r = reduce(x, m);
    if (r.is_zero()) return CycleClass();
    const int q = r.degree(m.generator_degrees);
    const int cq = m.dim - q;
    auto bit = m.bases.find(cq);
    auto git = m.generator_cycles.find(cq);
    if (bit == m.bases.end() || git == m.generator_cycles.end())
        throw underdetermined_pairing("no cycle data in degree " + std::to_string(cq) +
                                      " of " + m.name);
    const auto& basis = bit->second;
    const auto& cycles = git->second;
    if (cycles.size() != basis.size())
        throw underdetermined_pairing("cycle basis does not span degree " +
                                      std::to_string(cq) + " of " + m.name);
    // Solve sum_c alpha_c * ∫_{S_c} eta_j = ∫ x ∧ eta_j for all basis eta_j.
    const size_t n = basis.size();
    RationalMatrix a(n, RationalVector(n, 0)); // a[j][c] = ∫_{S_c} eta_j
    RationalVector rhs(n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t c = 0; c < n; ++c)
            a[j][c] = m.cycle(cycles[c]).pairings.at(basis[j]);
        rhs[j] = integrate(r * CharClassExpr(basis[j]), m);
    }
    RationalVector alpha;
    try {
        alpha = solve(std::move(a), std::move(rhs));
    } catch (const singular_pairing&) {
        throw underdetermined_pairing("cycle pairing table is singular in degree " +
                                      std::to_string(cq) + " of " + m.name);
    }
    CycleClass out;
    for (size_t c = 0; c < n; ++c) out.add(cycles[c], alpha[c]);
    return out;
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------
namespace {

IntMatrix int_identity(size_t n) {
    IntMatrix id(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

void row_add(IntMatrix& m, size_t dst, size_t src, const Int& k) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += k * m[src][j];
}

void col_add(IntMatrix& m, size_t dst, size_t src, const Int& k) {
    for (size_t i = 0; i < m.size(); ++i) m[i][dst] += k * m[i][src];
}

} // namespace

SmithNormalForm smith_normal_form(IntMatrix a) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    SmithNormalForm out;
    out.u = int_identity(rows);
    out.v = int_identity(cols);
    IntMatrix& s = a;

    auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };

    for (size_t t = 0; t < std::min(rows, cols); ++t) {
        // Find the smallest nonzero entry in the remaining block.
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (s[i][j] != 0 &&
                    (!found || abs_int(s[i][j]) < abs_int(s[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(s[t], s[pi]);
        std::swap(out.u[t], out.u[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(s[i][t], s[i][pj]);
        for (size_t i = 0; i < cols; ++i) std::swap(out.v[i][t], out.v[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (s[i][t] == 0) continue;
                Int q = s[i][t] / s[t][t];
                row_add(s, i, t, -q);
                row_add(out.u, i, t, -q);
                if (s[i][t] != 0) {
                    // remainder smaller than pivot: swap up and restart
                    std::swap(s[t], s[i]);
                    std::swap(out.u[t], out.u[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (s[t][j] == 0) continue;
                Int q = s[t][j] / s[t][t];
                col_add(s, j, t, -q);
                col_add(out.v, j, t, -q);
                if (s[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(s[i][t], s[i][j]);
                    for (size_t i = 0; i < cols; ++i) std::swap(out.v[i][t], out.v[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Ensure the pivot divides every remaining entry.
            for (size_t i = t + 1; i < rows && clean; ++i)
                for (size_t j = t + 1; j < cols && clean; ++j)
                    if (s[i][j] % s[t][t] != 0) {
                        row_add(s, t, i, 1);
                        row_add(out.u, t, i, 1);
                        clean = false;
                    }
        }
        if (s[t][t] < 0) {
            for (size_t j = 0; j < cols; ++j) s[t][j] = -s[t][j];
            for (size_t j = 0; j < rows; ++j) out.u[t][j] = -out.u[t][j];
        }
    }
    out.s = s;
    return out;
}

IntegralDualBasis integral_dual_basis(const RationalMatrix& p) {
    const size_t n = p.size();
    for (const auto& r : p)
        if (r.size() != n) throw singular_pairing("pairing matrix not square");
    if (n == 0 || determinant(p) == 0) throw singular_pairing("singular pairing matrix");
    IntegralDualBasis out;
    out.c = invert(p);
    out.integral = true;
    out.half_integral = true;
    for (const auto& row : out.c)
        for (const Rational& v : row) {
            if (denominator(v) != 1) out.integral = false;
            if (denominator(v) != 1 && denominator(v) != 2) out.half_integral = false;
        }
    return out;
}

Int lattice_index(const RationalMatrix& p) {
    Rational d = determinant(p);
    if (d == 0) throw singular_pairing("singular pairing matrix");
    if (denominator(d) != 1)
        throw contract_error("lattice_index: non-integer determinant");
    Int num = numerator(d);
    return num < 0 ? Int(-num) : num;
}

} // namespace grasschar
