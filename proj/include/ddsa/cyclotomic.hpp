#pragma once

#include <complex>
#include <vector>

#include "ddsa/rational.hpp"

namespace ddsa {

// Shared per-order data: the n-th cyclotomic polynomial and its degree.
struct CycloTable {
    int n = 0;
    int phi = 0;
    std::vector<Rational> minimal_poly;  // monic, length phi + 1
};

// Cached lookup, thread safe. Computes Phi_n by dividing x^n - 1 by all
// proper-divisor cyclotomic polynomials.
const CycloTable& cyclo_table(int n);

int euler_phi(int n);

// Element of the cyclotomic field Q(zeta_n) on the power basis
// 1, zeta, ..., zeta^{phi(n)-1} modulo Phi_n. The representation is
// canonical: equal field elements have identical coefficient vectors.
class Cyclotomic {
public:
    // Default: the rational zero in the degenerate field Q(zeta_1) = Q.
    // Any arithmetic against a real field element raises OrderMismatch.
    Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

    static Cyclotomic zero(int order);
    static Cyclotomic one(int order);
    static Cyclotomic from_rational(const Rational& r, int order);
    // zeta_n^k for any integer k (reduced canonically).
    static Cyclotomic zeta_pow(int order, long k);
    // The exact imaginary unit zeta_n^{n/4}; requires 4 | n.
    static Cyclotomic imaginary_unit(int order);

    int order() const { return order_; }
    int dim() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws AlgebraError when the element is not rational.
    Rational rational_value() const;

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic scaled(const Rational& r) const;
    // Field inverse via the extended Euclidean algorithm in Q[x]/(Phi_n).
    // Throws AlgebraError on zero.
    Cyclotomic inverse() const;

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    // Image under zeta_n -> exp(2*pi*i/n) in double precision.
    std::complex<double> embed() const;

    std::string to_string() const;  // "1/2", "3*i", or a zeta-power sum

private:
    Cyclotomic(int order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    int order_;
    std::vector<Rational> coeffs_;  // size phi(order), canonical
};

enum class TrigKind { Sin, Cos };

// Exact sin or cos of j*pi/m (doubled = false) or 2*j*pi/m (doubled = true)
// inside Q(zeta_n), n = lcm(4, 2m), via the exponential representation.
Cyclotomic trig_value(TrigKind kind, long j, long m, bool doubled);

// The cyclotomic order used for dihedral order m: lcm(4, 2m).
int cyclotomic_order_for(int m);

}  // namespace ddsa
