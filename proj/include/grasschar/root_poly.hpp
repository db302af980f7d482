#pragma once

#include <map>
#include <vector>

#include "grasschar/char_expr.hpp"
#include "grasschar/exact_scalar.hpp"

namespace grasschar {

// Formal-root descriptor of one of the two canonical bundles.  A rank-2a
// (or 2a+1) bundle is modeled by paired roots v_1..v_a plus, for odd rank,
// one zero root.  The two bundles use disjoint variable families; var_offset
// places this bundle's variables inside the combined variable space
// (E roots first, then F roots).
struct BundleRoots {
    char label = 'E'; // 'E' or 'F'
    int paired_count = 0;
    bool has_zero_root = false;
    int var_offset = 0;

    int rank() const { return 2 * paired_count + (has_zero_root ? 1 : 0); }
};

// The descriptors for the canonical bundles of G(k, n): E of rank k with
// variables first, F of rank n-k with variables after E's.
std::pair<BundleRoots, BundleRoots> canonical_bundles(int k, int n);

// A polynomial with rational coefficients in the formal root variables.
// Exponent vectors are stored with trailing zeros trimmed, so polynomials
// over different variable prefixes combine freely.
class RootPolynomial {
  public:
    RootPolynomial() = default;
    explicit RootPolynomial(const Rational& c);

    static RootPolynomial zero() { return RootPolynomial(); }
    static RootPolynomial one() { return RootPolynomial(Rational(1)); }
    static RootPolynomial var(int index, int exponent = 1);

    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> exps, const Rational& c);

    RootPolynomial operator+(const RootPolynomial& o) const;
    RootPolynomial operator-(const RootPolynomial& o) const;
    RootPolynomial operator*(const RootPolynomial& o) const;
    RootPolynomial operator*(const Rational& c) const;
    bool operator==(const RootPolynomial& o) const = default;

    // Terms whose cohomological degree (2 per root power) equals d.
    RootPolynomial degree_part(int d) const;

  private:
    std::map<std::vector<int>, Rational> terms_;
};

// p(B) = prod over paired roots (1 + v^2); a zero root contributes 1.
RootPolynomial total_pontryagin_roots(const BundleRoots& b);

// e(B) = product of the paired roots; throws odd_rank_no_euler for odd rank.
RootPolynomial euler_roots(const BundleRoots& b);

// e(E (x) F) = prod_{i,a} (x_i^2 - y_a^2), times prod x_i if F has a zero
// root, times prod y_a if E has one.  Throws odd_rank_no_euler if both odd.
RootPolynomial tensor_euler_roots(const BundleRoots& e, const BundleRoots& f);

// p(E (x) F) = prod_{i,a} (1 + 2(x_i^2 + y_a^2) + (x_i^2 - y_a^2)^2); a zero
// root of one bundle pairs with each paired root of the other as (1 + v^2).
RootPolynomial tensor_pontryagin_roots(const BundleRoots& e, const BundleRoots& f);

// Rewrites a root polynomial as a polynomial in the generators p_i(E),
// p_j(F), e(E), e(F): factors out Euler classes for odd parity classes, then
// expresses the even remainder in elementary symmetric functions of the
// squared roots.  The result is verified by expanding back into roots;
// throws not_expressible if the input is not invariant under the required
// root symmetries.
CharClassExpr express_in_generators(const RootPolynomial& p, const BundleRoots& e,
                                    const BundleRoots& f);

// Expands a generator polynomial back into roots (the inverse direction,
// used as the internal oracle for express_in_generators).
RootPolynomial expand_generators(const CharClassExpr& x, const BundleRoots& e,
                                 const BundleRoots& f);

} // namespace grasschar
