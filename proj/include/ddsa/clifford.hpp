#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ddsa/kscalar.hpp"

namespace ddsa {

// Basis blade of Cl(3) as a bitmask: bit i-1 set means e_i is a factor.
// 0 is the scalar blade; 0b111 is e1e2e3.
using Blade = std::uint8_t;

inline constexpr Blade kScalarBlade = 0;
inline constexpr int kBladeCount = 8;

inline int blade_grade(Blade b) { return __builtin_popcount(b); }
std::string blade_name(Blade b);  // "1", "e1", ..., "e123"

// Product of two basis blades with the signature kept symbolic:
// result = sign * epsilon^eps_power * blade.
struct BladeProduct {
    int sign;        // +1 or -1, from transposition counting
    int eps_power;   // number of contracted index pairs
    Blade blade;     // symmetric difference of the index sets
};

BladeProduct blade_mul(Blade a, Blade b);
int resolve_sign(const BladeProduct& p, int epsilon);

// Element of Cl^eps(3): eight KScalar coordinates on the blade basis.
// The signature is not stored per element; multiplication takes it from
// the enclosing algebra context.
class CliffordElt {
public:
    CliffordElt(int order, int arity);  // zero
    static CliffordElt scalar(const KScalar& s);
    static CliffordElt basis_blade(Blade b, int order, int arity);
    // Grade-1 element sum_i v[i] e_i.
    static CliffordElt from_vector(const std::array<KScalar, 3>& v);

    int order() const { return coords_[0].order(); }
    int arity() const { return coords_[0].arity(); }
    const KScalar& coord(Blade b) const { return coords_[b]; }
    void set_coord(Blade b, const KScalar& s) { coords_[b] = s; }

    bool is_zero() const;

    CliffordElt operator+(const CliffordElt& rhs) const;
    CliffordElt operator-(const CliffordElt& rhs) const;
    CliffordElt operator-() const;
    CliffordElt scaled(const KScalar& s) const;
    CliffordElt scaled(const Rational& r) const;

    bool operator==(const CliffordElt& rhs) const;
    bool operator!=(const CliffordElt& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    void require_compatible(const CliffordElt& rhs) const;
    friend CliffordElt clifford_mul(const CliffordElt&, const CliffordElt&, int);

    std::array<KScalar, 8> coords_;
};

// Bilinear extension of blade_mul with the signature resolved.
CliffordElt clifford_mul(const CliffordElt& a, const CliffordElt& b, int epsilon);

}  // namespace ddsa
