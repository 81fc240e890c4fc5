#pragma once

#include "ddsa/config.hpp"

namespace ddsa {

// Finite sum of monomials x1^a x2^b x3^c with CliffordElt coefficients:
// the module every operator acts on. Zero coefficients are never stored,
// so equality is exact structural equality.
class SpinorPoly {
public:
    SpinorPoly(int order, int arity);  // zero
    static SpinorPoly one(int order, int arity);
    static SpinorPoly monomial(const Monomial& mo, const CliffordElt& coeff);
    static SpinorPoly basis_element(const Monomial& mo, Blade b, int order, int arity);

    int order() const { return order_; }
    int arity() const { return arity_; }
    const std::map<Monomial, CliffordElt, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Max total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    SpinorPoly operator+(const SpinorPoly& rhs) const;
    SpinorPoly operator-(const SpinorPoly& rhs) const;
    SpinorPoly operator-() const;
    // Central scalar multiplication, applied to every coordinate.
    SpinorPoly scaled(const KScalar& s) const;
    SpinorPoly scaled(const Rational& r) const;
    // Left Clifford multiplication of every coefficient.
    SpinorPoly clifford_left(const CliffordElt& c, int epsilon) const;
    SpinorPoly multiply_by_coordinate(int axis) const;

    void add_term(const Monomial& mo, const CliffordElt& coeff);

    bool operator==(const SpinorPoly& rhs) const;
    bool operator!=(const SpinorPoly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    int order_;
    int arity_;
    std::map<Monomial, CliffordElt, GrlexLess> terms_;
};

}  // namespace ddsa
