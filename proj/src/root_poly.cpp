#include "grasschar/root_poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "grasschar/errors.hpp"

namespace grasschar {

std::pair<BundleRoots, BundleRoots> canonical_bundles(int k, int n) {
    if (k < 1 || n <= k) throw invalid_descriptor("canonical_bundles: need 1 <= k < n");
    BundleRoots e{'E', k / 2, k % 2 != 0, 0};
    BundleRoots f{'F', (n - k) / 2, (n - k) % 2 != 0, k / 2};
    return {e, f};
}

RootPolynomial::RootPolynomial(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

RootPolynomial RootPolynomial::var(int index, int exponent) {
    RootPolynomial p;
    if (exponent < 0) throw contract_error("RootPolynomial::var: negative exponent");
    std::vector<int> exps(index + 1, 0);
    exps[index] = exponent;
    p.add_term(std::move(exps), 1);
    return p;
}

void RootPolynomial::add_term(std::vector<int> exps, const Rational& c) {
    if (c == 0) return;
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    Rational& slot = terms_[exps];
    slot += c;
    if (slot == 0) terms_.erase(exps);
}

RootPolynomial RootPolynomial::operator+(const RootPolynomial& o) const {
    RootPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

RootPolynomial RootPolynomial::operator-(const RootPolynomial& o) const {
    RootPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

RootPolynomial RootPolynomial::operator*(const RootPolynomial& o) const {
    RootPolynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(std::max(e1.size(), e2.size()), 0);
            for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            out.add_term(std::move(e), c1 * c2);
        }
    return out;
}

RootPolynomial RootPolynomial::operator*(const Rational& c) const {
    RootPolynomial out;
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
}

RootPolynomial RootPolynomial::degree_part(int d) const {
    RootPolynomial out;
    for (const auto& [e, c] : terms_) {
        int deg = 2 * std::accumulate(e.begin(), e.end(), 0);
        if (deg == d) out.add_term(e, c);
    }
    return out;
}

RootPolynomial total_pontryagin_roots(const BundleRoots& b) {
    RootPolynomial out = RootPolynomial::one();
    for (int i = 0; i < b.paired_count; ++i)
        out = out * (RootPolynomial::one() + RootPolynomial::var(b.var_offset + i, 2));
    return out;
}

RootPolynomial euler_roots(const BundleRoots& b) {
    if (b.has_zero_root)
        throw odd_rank_no_euler("euler class undefined for odd-rank bundle");
    RootPolynomial out = RootPolynomial::one();
    for (int i = 0; i < b.paired_count; ++i)
        out = out * RootPolynomial::var(b.var_offset + i);
    return out;
}

RootPolynomial tensor_euler_roots(const BundleRoots& e, const BundleRoots& f) {
    if (e.has_zero_root && f.has_zero_root)
        throw odd_rank_no_euler("tensor product of two odd-rank bundles has odd rank");
    RootPolynomial out = RootPolynomial::one();
    for (int i = 0; i < e.paired_count; ++i)
        for (int a = 0; a < f.paired_count; ++a)
            out = out * (RootPolynomial::var(e.var_offset + i, 2) -
                         RootPolynomial::var(f.var_offset + a, 2));
    if (f.has_zero_root)
        for (int i = 0; i < e.paired_count; ++i)
            out = out * RootPolynomial::var(e.var_offset + i);
    if (e.has_zero_root)
        for (int a = 0; a < f.paired_count; ++a)
            out = out * RootPolynomial::var(f.var_offset + a);
    return out;
}

RootPolynomial tensor_pontryagin_roots(const BundleRoots& e, const BundleRoots& f) {
    RootPolynomial out = RootPolynomial::one();
    for (int i = 0; i < e.paired_count; ++i)
        for (int a = 0; a < f.paired_count; ++a) {
            RootPolynomial x2 = RootPolynomial::var(e.var_offset + i, 2);
            RootPolynomial y2 = RootPolynomial::var(f.var_offset + a, 2);
            RootPolynomial diff = x2 - y2;
            out = out * (RootPolynomial::one() + (x2 + y2) * Rational(2) + diff * diff);
        }
    if (f.has_zero_root)
        for (int i = 0; i < e.paired_count; ++i)
            out = out * (RootPolynomial::one() + RootPolynomial::var(e.var_offset + i, 2));
    if (e.has_zero_root)
        for (int a = 0; a < f.paired_count; ++a)
            out = out * (RootPolynomial::one() + RootPolynomial::var(f.var_offset + a, 2));
    return out;
}

namespace {

int exp_at(const std::vector<int>& exps, int i) {
    return i < static_cast<int>(exps.size()) ? exps[i] : 0;
}

// Elementary symmetric polynomial of degree k in the squares of one
// family's root variables (or, with square=false, in the variables
// themselves).
RootPolynomial elementary_symmetric_squares(const BundleRoots& b, int k) {
    RootPolynomial out;
    // iterate over k-subsets of {0..paired_count-1}
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(subset.size()) == k) {
            std::vector<int> exps(b.var_offset + b.paired_count, 0);
            for (int i : subset) exps[b.var_offset + i] = 2;
            out.add_term(exps, 1);
            return;
        }
        for (int i = start; i < b.paired_count; ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string pontryagin_name(const BundleRoots& b, int k) {
    return "p" + std::to_string(k) + "(" + std::string(1, b.label) + ")";
}

std::string euler_name(const BundleRoots& b) {
    return std::string("e(") + b.label + ")";
}

// Parity of one family's exponents within a single term: 0 (all even),
// 1 (all odd), or -1 (mixed => not expressible).
int family_parity(const std::vector<int>& exps, const BundleRoots& b) {
    if (b.paired_count == 0) return 0;
    int parity = exp_at(exps, b.var_offset) & 1;
    for (int i = 1; i < b.paired_count; ++i)
        if ((exp_at(exps, b.var_offset + i) & 1) != parity) return -1;
    return parity;
}

// Greedy rewrite of a symmetric even polynomial (exponents already halved:
// variable i stands for root_i^2) into elementary symmetric generators.
CharClassExpr symmetric_decompose(RootPolynomial q, const BundleRoots& e,
                                  const BundleRoots& f) {
    CharClassExpr out;
    for (int guard = 0; !q.is_zero(); ++guard) {
        if (guard > 10000) throw not_expressible("symmetric rewrite did not terminate");
        const auto& [lead, coeff] = *q.terms().rbegin();
        Monomial gens;
        RootPolynomial expansion = RootPolynomial::one();
        for (const BundleRoots* b : {&e, &f}) {
            for (int i = 0; i + 1 < b->paired_count; ++i)
                if (exp_at(lead, b->var_offset + i) < exp_at(lead, b->var_offset + i + 1))
                    throw not_expressible("leading term is not symmetric");
            for (int k = 1; k <= b->paired_count; ++k) {
                int mult = exp_at(lead, b->var_offset + k - 1) -
                           (k < b->paired_count ? exp_at(lead, b->var_offset + k) : 0);
                if (mult < 0) throw not_expressible("leading term is not symmetric");
                if (mult == 0) continue;
                gens[pontryagin_name(*b, k)] += mult;
                RootPolynomial ek = elementary_symmetric_squares(*b, k);
                for (int m = 0; m < mult; ++m) expansion = expansion * ek;
            }
        }
        // Any exponent outside the two families means a malformed input.
        for (size_t i = 0; i < lead.size(); ++i) {
            bool in_e = static_cast<int>(i) >= e.var_offset &&
                        static_cast<int>(i) < e.var_offset + e.paired_count;
            bool in_f = static_cast<int>(i) >= f.var_offset &&
                        static_cast<int>(i) < f.var_offset + f.paired_count;
            if (lead[i] != 0 && !in_e && !in_f)
                throw not_expressible("term uses a variable outside both root families");
        }
        out.add_term(gens, coeff);
        // expansion's exponents are squares (2 per elementary factor); halve
        // them to stay in the squared-variable workspace.
        RootPolynomial halved;
        for (const auto& [exps, c] : expansion.terms()) {
            std::vector<int> h = exps;
            for (int& v : h) v /= 2;
            halved.add_term(std::move(h), c);
        }
        q = q - halved * coeff;
    }
    return out;
}

} // namespace

RootPolynomial expand_generators(const CharClassExpr& x, const BundleRoots& e,
                                 const BundleRoots& f) {
    RootPolynomial out;
    for (const auto& [mono, coeff] : x.terms()) {
        RootPolynomial term = RootPolynomial::one();
        for (const auto& [gen, exp] : mono) {
            RootPolynomial g;
            if (gen == euler_name(e))
                g = euler_roots(e);
            else if (gen == euler_name(f))
                g = euler_roots(f);
            else if (gen.rfind("p", 0) == 0 && gen.find('(') != std::string::npos) {
                size_t paren = gen.find('(');
                int k = std::stoi(gen.substr(1, paren - 1));
                const BundleRoots& b = gen[paren + 1] == e.label ? e : f;
                g = elementary_symmetric_squares(b, k);
            } else {
                throw not_expressible("cannot expand generator '" + gen + "' into roots");
            }
            for (int m = 0; m < exp; ++m) term = term * g;
        }
        out = out + term * coeff;
    }
    return out;
}

CharClassExpr express_in_generators(const RootPolynomial& p, const BundleRoots& e,
                                    const BundleRoots& f) {
    // Split into parity classes (whether every E-exponent / F-exponent of the
    // term is odd); odd classes carry an Euler-class factor.
    std::map<std::pair<int, int>, RootPolynomial> classes;
    for (const auto& [exps, c] : p.terms()) {
        int pe = family_parity(exps, e);
        int pf = family_parity(exps, f);
        if (pe < 0 || pf < 0)
            throw not_expressible("term with mixed root parities: not sign-invariant");
        if ((pe == 1 && e.has_zero_root) || (pf == 1 && f.has_zero_root))
            throw not_expressible(
                "odd root parity is not sign-invariant for an odd-rank bundle");
        classes[{pe, pf}].add_term(exps, c);
    }
    CharClassExpr result;
    for (auto& [parity, part] : classes) {
        auto [pe, pf] = parity;
        // Divide out the Euler monomial and halve the exponents.
        RootPolynomial even;
        for (const auto& [exps, c] : part.terms()) {
            const size_t width = static_cast<size_t>(std::max(
                e.var_offset + e.paired_count, f.var_offset + f.paired_count));
            std::vector<int> h(std::max(exps.size(), width), 0);
            for (size_t i = 0; i < exps.size(); ++i) h[i] = exps[i];
            if (pe)
                for (int i = 0; i < e.paired_count; ++i) h[e.var_offset + i] -= 1;
            if (pf)
                for (int a = 0; a < f.paired_count; ++a) h[f.var_offset + a] -= 1;
            for (int& v : h) {
                if (v < 0) throw not_expressible("negative exponent after Euler division");
                v /= 2;
            }
            even.add_term(std::move(h), c);
        }
        CharClassExpr sym = symmetric_decompose(even, e, f);
        Monomial euler;
        if (pe) euler[euler_name(e)] = 1;
        if (pf) euler[euler_name(f)] = 1;
        result = result + sym * CharClassExpr(euler);
    }
    if (!(expand_generators(result, e, f) == p))
        throw not_expressible("input polynomial is not invariant under root symmetries");
    return result;
}

} // namespace grasschar
