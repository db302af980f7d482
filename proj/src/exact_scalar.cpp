#include "grasschar/exact_scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace grasschar {

std::pair<Int, Int> extract_square_part(Int n) {
    if (n <= 0) throw contract_error("extract_square_part: argument must be positive");
    Int root = 1;
    Int rest = n;
    for (Int d = 2; d * d <= rest; ++d) {
        while (rest % (d * d) == 0) {
            rest /= d * d;
            root *= d;
        }
    }
    return {root, rest};
}

ExactScalar::ExactScalar(Rational coeff, Int radicand, int pi_pow)
    : coeff_(std::move(coeff)), radicand_(std::move(radicand)), pi_pow_(pi_pow) {
    if (radicand_ < 1) throw contract_error("ExactScalar: radicand must be >= 1");
    normalize();
}

void ExactScalar::normalize() {
    if (coeff_ == 0) {
        radicand_ = 1;
        pi_pow_ = 0;
        return;
    }
    auto [root, rest] = extract_square_part(radicand_);
    coeff_ *= root;
    radicand_ = rest;
}

ExactScalar ExactScalar::sqrt_of(const Rational& x) {
    if (x <= 0) throw contract_error("sqrt_of: argument must be positive");
    // sqrt(p/q) = sqrt(p*q) / q
    Int p = numerator(x), q = denominator(x);
    return ExactScalar(Rational(1, q), p * q, 0);
}

ExactScalar ExactScalar::half_power_of_two(long j) {
    const long rem = ((j % 2) + 2) % 2; // 0 or 1, also for negative j
    const long half = (j - rem) / 2;
    using boost::multiprecision::pow;
    Rational c = half >= 0 ? Rational(pow(Int(2), static_cast<unsigned>(half)))
                           : Rational(1, pow(Int(2), static_cast<unsigned>(-half)));
    return ExactScalar(c, rem ? 2 : 1, 0);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return ExactScalar(coeff_ * o.coeff_, radicand_ * o.radicand_, pi_pow_ + o.pi_pow_);
}

ExactScalar ExactScalar::operator*(const Rational& q) const {
    if (q == 0 || is_zero()) return zero();
    return ExactScalar(coeff_ * q, radicand_, pi_pow_);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (radicand_ != o.radicand_ || pi_pow_ != o.pi_pow_)
        throw incompatible_monomials("cannot add " + str() + " and " + o.str());
    Rational s = coeff_ + o.coeff_;
    if (s == 0) return zero();
    return ExactScalar(s, radicand_, pi_pow_);
}

ExactScalar ExactScalar::operator-() const {
    if (is_zero()) return zero();
    return ExactScalar(-coeff_, radicand_, pi_pow_);
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    // 1/(q sqrt(r) pi^k) = (1/(q r)) sqrt(r) pi^(-k)
    return ExactScalar(Rational(1) / (coeff_ * radicand_), radicand_, -pi_pow_);
}

ExactScalar ExactScalar::pow(int k) const {
    if (k == 0) return one();
    ExactScalar base = k > 0 ? *this : inverse();
    int m = k > 0 ? k : -k;
    ExactScalar acc = one();
    for (int i = 0; i < m; ++i) acc = acc * base;
    return acc;
}

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

std::string ExactScalar::str() const {
    if (is_zero()) return "0";
    std::vector<std::string> parts;
    const bool has_other = radicand_ > 1 || pi_pow_ != 0;
    if (!has_other || coeff_ != 1) {
        if (has_other && coeff_ == -1)
            parts.push_back("-1");
        else
            parts.push_back(rational_str(coeff_));
    }
    if (radicand_ > 1) parts.push_back("sqrt(" + radicand_.str() + ")");
    if (pi_pow_ == 1)
        parts.push_back("pi");
    else if (pi_pow_ != 0)
        parts.push_back("pi^" + std::to_string(pi_pow_));
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " * ";
        out += parts[i];
    }
    return out;
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_factors(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '*') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw parse_error("empty rational");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(strip(s.substr(0, slash)));
        Int den(strip(s.substr(slash + 1)));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw parse_error("invalid rational '" + text + "'");
    }
}

ExactScalar ExactScalar::parse(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw parse_error("empty scalar");
    if (s == "0") return zero();
    Rational coeff = 1;
    Int radicand = 1;
    int pi_pow = 0;
    bool saw_coeff = false;
    for (const std::string& f : split_factors(s)) {
        if (f.empty()) throw parse_error("empty factor in '" + text + "'");
        if (f == "pi") {
            pi_pow += 1;
        } else if (f.rfind("pi^", 0) == 0) {
            try {
                pi_pow += std::stoi(f.substr(3));
            } catch (const std::exception&) {
                throw parse_error("invalid pi power '" + f + "'");
            }
        } else if (f.rfind("sqrt(", 0) == 0 && f.back() == ')') {
            Rational r = parse_rational(f.substr(5, f.size() - 6));
            if (r <= 0) throw parse_error("non-positive radicand in '" + f + "'");
            ExactScalar root = sqrt_of(r);
            coeff *= root.coeff();
            radicand *= root.radicand();
        } else if (std::isdigit(static_cast<unsigned char>(f[0])) || f[0] == '-' || f[0] == '+') {
            if (saw_coeff) coeff *= parse_rational(f);
            else {
                coeff = parse_rational(f);
                saw_coeff = true;
            }
        } else {
            throw parse_error("unrecognized factor '" + f + "' in scalar '" + text + "'");
        }
    }
    return ExactScalar(coeff, radicand, pi_pow);
}

double ExactScalar::approx() const {
    double c = numerator(coeff_).convert_to<double>() / denominator(coeff_).convert_to<double>();
    return c * std::sqrt(radicand_.convert_to<double>()) * std::pow(3.14159265358979323846, pi_pow_);
}

} // namespace grasschar
