#include "grasschar/linalg.hpp"

#include "grasschar/errors.hpp"

namespace grasschar {

namespace {

// Gaussian elimination with exact rational pivots.  Returns the rank; when
// `rhs` is non-null the same row operations are applied to it.
size_t eliminate(RationalMatrix& a, RationalMatrix* rhs, Rational* det) {
    const size_t n = a.size();
    const size_t m = n == 0 ? 0 : a[0].size();
    if (det) *det = 1;
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t pivot = row;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) {
            if (det) *det = 0;
            continue;
        }
        if (pivot != row) {
            std::swap(a[pivot], a[row]);
            if (rhs) std::swap((*rhs)[pivot], (*rhs)[row]);
            if (det) *det = -*det;
        }
        const Rational p = a[row][col];
        if (det) *det *= p;
        for (size_t j = 0; j < m; ++j) a[row][j] /= p;
        if (rhs)
            for (Rational& v : (*rhs)[row]) v /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (size_t j = 0; j < m; ++j) a[i][j] -= factor * a[row][j];
            if (rhs)
                for (size_t j = 0; j < (*rhs)[i].size(); ++j)
                    (*rhs)[i][j] -= factor * (*rhs)[row][j];
        }
        ++row;
    }
    return row;
}

} // namespace

Rational determinant(RationalMatrix a) {
    const size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw contract_error("determinant: matrix not square");
    Rational det;
    eliminate(a, nullptr, &det);
    return det;
}

RationalMatrix identity_matrix(size_t n) {
    RationalMatrix id(n, RationalVector(n, 0));
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

RationalMatrix invert(RationalMatrix a) {
    const size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw contract_error("invert: matrix not square");
    RationalMatrix inv = identity_matrix(n);
    if (eliminate(a, &inv, nullptr) != n) throw singular_pairing("singular matrix");
    return inv;
}

RationalVector solve(RationalMatrix a, RationalVector b) {
    const size_t n = a.size();
    if (b.size() != n) throw contract_error("solve: size mismatch");
    RationalMatrix rhs(n, RationalVector(1));
    for (size_t i = 0; i < n; ++i) rhs[i][0] = b[i];
    if (eliminate(a, &rhs, nullptr) != n) throw singular_pairing("singular system");
    RationalVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i][0];
    return x;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    const size_t n = a.size();
    const size_t k = b.size();
    const size_t m = k == 0 ? 0 : b[0].size();
    RationalMatrix out(n, RationalVector(m, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw contract_error("matmul: shape mismatch");
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

} // namespace grasschar
