#pragma once

#include <string>
#include <variant>

#include "grasschar/exact_scalar.hpp"

namespace grasschar {

// A homogeneous space (or catalogued special submanifold) whose exact
// volume the engine can produce.
struct SpaceDescriptor {
    enum class Kind {
        Sphere,          // S(m)
        SO,              // SO(n)
        U,               // U(n)
        SU,              // SU(n)
        RealGrassmann,   // G(k, n)
        ComplexGrassmann,// GC(k, n)
        SLAG,            // SLAG(n)
        CatalogSpace     // ASSOC, CAY, M, PONT, ...
    };
    Kind kind = Kind::Sphere;
    int a = 0, b = 0;   // parameters (m), (n) or (k, n)
    std::string name;   // for CatalogSpace

    static SpaceDescriptor parse(const std::string& text); // invalid_descriptor
    std::string str() const;
};

// Exact volume in the induced metric normalization the volume recursions
// use: V(S^1) = 2*pi, V(SO(1)) = V(SU(1)) = 1, V(U(1)) = 2*pi.
ExactScalar volume(const SpaceDescriptor& s);

ExactScalar sphere_volume(int m);                 // V(S^m), m >= 1
ExactScalar so_volume(int n);                     // V(SO(n)), n >= 1
ExactScalar u_volume(int n);                      // V(U(n)), n >= 1
ExactScalar su_volume(int n);                     // V(SU(n)), n >= 1
ExactScalar real_grassmann_volume(int k, int n);  // sphere-ratio form
// Alternative form V(SO(n)) / (2^(k(n-k)/2) V(SO(k)) V(SO(n-k))).
ExactScalar real_grassmann_volume_so_form(int k, int n);
ExactScalar complex_grassmann_volume(int k, int n);
ExactScalar slag_volume(int n);                   // V(SU(n)) / V(SO(n))
ExactScalar catalog_space_volume(const std::string& name); // unknown_entity

} // namespace grasschar
