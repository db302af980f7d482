#include "grasschar/volumes.hpp"

#include <regex>

#include "grasschar/errors.hpp"

namespace grasschar {

namespace {
Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
} // namespace

ExactScalar sphere_volume(int m) {
    if (m < 1) throw invalid_descriptor("sphere dimension must be >= 1");
    if (m % 2 == 1) {
        int n = (m + 1) / 2; // V(S^(2n-1)) = 2 pi^n / (n-1)!
        return ExactScalar(Rational(2, factorial(n - 1)), 1, n);
    }
    int n = m / 2; // V(S^(2n)) = 2^(2n+1) n! pi^n / (2n)!
    using boost::multiprecision::pow;
    return ExactScalar(Rational(pow(Int(2), 2 * n + 1) * factorial(n), factorial(2 * n)),
                       1, n);
}

ExactScalar so_volume(int n) {
    if (n < 1) throw invalid_descriptor("SO(n) needs n >= 1");
    ExactScalar v = ExactScalar::one(); // V(SO(1)) = 1
    for (int j = 2; j <= n; ++j)
        v = ExactScalar::half_power_of_two(j - 1) * sphere_volume(j - 1) * v;
    return v;
}

ExactScalar u_volume(int n) {
    if (n < 1) throw invalid_descriptor("U(n) needs n >= 1");
    ExactScalar v = ExactScalar::pi() * Rational(2); // V(U(1)) = 2 pi
    for (int j = 2; j <= n; ++j)
        v = ExactScalar::half_power_of_two(2 * (j - 1)) * sphere_volume(2 * j - 1) * v;
    return v;
}

ExactScalar su_volume(int n) {
    if (n < 1) throw invalid_descriptor("SU(n) needs n >= 1");
    ExactScalar v = ExactScalar::one(); // V(SU(1)) = 1
    for (int j = 2; j <= n; ++j)
        v = ExactScalar::half_power_of_two(2 * (j - 1)) *
            ExactScalar::sqrt_of(Rational(j, j - 1)) * sphere_volume(2 * j - 1) * v;
    return v;
}

ExactScalar real_grassmann_volume(int k, int n) {
    if (k < 1 || k >= n) throw invalid_descriptor("G(k,n) needs 1 <= k < n");
    ExactScalar v = ExactScalar::one();
    for (int j = n - 1; j >= n - k; --j) v = v * sphere_volume(j);
    for (int j = 1; j <= k - 1; ++j) v = v / sphere_volume(j);
    return v;
}

ExactScalar real_grassmann_volume_so_form(int k, int n) {
    if (k < 1 || k >= n) throw invalid_descriptor("G(k,n) needs 1 <= k < n");
    return so_volume(n) /
           (ExactScalar::half_power_of_two(static_cast<long>(k) * (n - k)) *
            so_volume(k) * so_volume(n - k));
}

ExactScalar complex_grassmann_volume(int k, int n) {
    if (k < 1 || k >= n) throw invalid_descriptor("GC(k,n) needs 1 <= k < n");
    return u_volume(n) / (u_volume(k) * u_volume(n - k));
}

ExactScalar slag_volume(int n) {
    if (n < 1) throw invalid_descriptor("SLAG(n) needs n >= 1");
    return su_volume(n) / so_volume(n);
}

ExactScalar catalog_space_volume(const std::string& name) {
    // Stored volumes of the special submanifolds; these are recorded data,
    // not recursion outputs.
    if (name == "ASSOC" || name == "~ASSOC")
        return ExactScalar(Rational(6, 5), 1, 4);
    if (name == "CAY") return real_grassmann_volume(3, 7);
    if (name == "M") return ExactScalar(Rational(2, 3), 1, 6);
    if (name == "PONT")
        return ExactScalar::sqrt_of(Rational(2, 3)) * real_grassmann_volume(2, 4);
    throw unknown_entity_error("no recorded volume for catalog space '" + name + "'");
}

ExactScalar volume(const SpaceDescriptor& s) {
    using Kind = SpaceDescriptor::Kind;
    switch (s.kind) {
        case Kind::Sphere: return sphere_volume(s.a);
        case Kind::SO: return so_volume(s.a);
        case Kind::U: return u_volume(s.a);
        case Kind::SU: return su_volume(s.a);
        case Kind::RealGrassmann: return real_grassmann_volume(s.a, s.b);
        case Kind::ComplexGrassmann: return complex_grassmann_volume(s.a, s.b);
        case Kind::SLAG: return slag_volume(s.a);
        case Kind::CatalogSpace: return catalog_space_volume(s.name);
    }
    throw invalid_descriptor("unhandled descriptor");
}

SpaceDescriptor SpaceDescriptor::parse(const std::string& text) {
    static const std::regex one_param(R"(^\s*(S|SO|U|SU|SLAG)\s*\(\s*(\d+)\s*\)\s*$)");
    static const std::regex two_param(R"(^\s*(G|GC)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
    std::smatch m;
    SpaceDescriptor d;
    if (std::regex_match(text, m, one_param)) {
        const std::string& head = m[1];
        d.a = std::stoi(m[2]);
        if (head == "S") d.kind = Kind::Sphere;
        else if (head == "SO") d.kind = Kind::SO;
        else if (head == "U") d.kind = Kind::U;
        else if (head == "SU") d.kind = Kind::SU;
        else d.kind = Kind::SLAG;
        return d;
    }
    if (std::regex_match(text, m, two_param)) {
        d.kind = m[1] == "G" ? Kind::RealGrassmann : Kind::ComplexGrassmann;
        d.a = std::stoi(m[2]);
        d.b = std::stoi(m[3]);
        if (d.a < 1 || d.a >= d.b)
            throw invalid_descriptor("Grassmannian needs 1 <= k < n: '" + text + "'");
        return d;
    }
    // Reserved heads with malformed arguments are errors, not catalog names.
    static const std::regex reserved(R"(^\s*(S|SO|U|SU|SLAG|G|GC)\s*\(.*$)");
    if (std::regex_match(text, reserved))
        throw invalid_descriptor("malformed space descriptor '" + text + "'");
    static const std::regex word(R"(^\s*([~*A-Za-z][~*A-Za-z0-9()]*)\s*$)");
    if (std::regex_match(text, m, word)) {
        d.kind = Kind::CatalogSpace;
        d.name = m[1];
        return d;
    }
    throw invalid_descriptor("cannot parse space descriptor '" + text + "'");
}

std::string SpaceDescriptor::str() const {
    using Kind = SpaceDescriptor::Kind;
    switch (kind) {
        case Kind::Sphere: return "S(" + std::to_string(a) + ")";
        case Kind::SO: return "SO(" + std::to_string(a) + ")";
        case Kind::U: return "U(" + std::to_string(a) + ")";
        case Kind::SU: return "SU(" + std::to_string(a) + ")";
        case Kind::RealGrassmann:
            return "G(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::ComplexGrassmann:
            return "GC(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::SLAG: return "SLAG(" + std::to_string(a) + ")";
        case Kind::CatalogSpace: return name;
    }
    return "?";
}

} // namespace grasschar
