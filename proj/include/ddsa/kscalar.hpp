#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "ddsa/cyclotomic.hpp"

namespace ddsa {

// Exponent tuple of a monomial in the kappa orbit parameters.
struct KappaExp {
    std::array<unsigned, 3> e{0, 0, 0};

    unsigned degree() const { return e[0] + e[1] + e[2]; }
    bool operator==(const KappaExp&) const = default;
    bool operator<(const KappaExp& rhs) const {
        if (degree() != rhs.degree()) return degree() < rhs.degree();
        return e < rhs.e;
    }
};

std::string kappa_exp_name(const KappaExp& k);  // "1", "k0", "k0^2*k1", ...

// Polynomial in the kappa orbit parameters with Cyclotomic coefficients:
// the scalar ring all symbolic operator computations live in. Zero terms
// are never stored, so equality is structural.
class KScalar {
public:
    KScalar(int order, int arity);  // zero
    static KScalar from_cyclotomic(const Cyclotomic& c, int arity);
    static KScalar from_rational(const Rational& r, int order, int arity);
    static KScalar one(int order, int arity);
    static KScalar kappa(int index, int order, int arity);

    int order() const { return order_; }
    int arity() const { return arity_; }
    const std::map<KappaExp, Cyclotomic>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Throws AlgebraError when kappa-degree > 0.
    Cyclotomic constant_value() const;
    unsigned kappa_degree() const;

    KScalar operator+(const KScalar& rhs) const;
    KScalar operator-(const KScalar& rhs) const;
    KScalar operator*(const KScalar& rhs) const;
    KScalar operator-() const;
    KScalar scaled(const Cyclotomic& c) const;
    KScalar scaled(const Rational& r) const;

    bool operator==(const KScalar& rhs) const;
    bool operator!=(const KScalar& rhs) const { return !(*this == rhs); }

    // Exact substitution of rational values for the kappa parameters.
    // Throws UnboundParameter when a parameter that occurs has no value.
    Cyclotomic specialize(const std::array<std::optional<Rational>, 3>& values) const;

    std::string to_string() const;

private:
    void add_term(const KappaExp& k, const Cyclotomic& c);
    void require_compatible(const KScalar& rhs) const;

    int order_;
    int arity_;
    std::map<KappaExp, Cyclotomic> terms_;
};

}  // namespace ddsa
