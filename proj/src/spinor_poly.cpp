#include "ddsa/spinor_poly.hpp"

#include <sstream>

namespace ddsa {

SpinorPoly::SpinorPoly(int order, int arity) : order_(order), arity_(arity) {}

SpinorPoly SpinorPoly::one(int order, int arity) {
    return basis_element(Monomial{}, kScalarBlade, order, arity);
}

SpinorPoly SpinorPoly::monomial(const Monomial& mo, const CliffordElt& coeff) {
    SpinorPoly p(coeff.order(), coeff.arity());
    p.add_term(mo, coeff);
    return p;
}

SpinorPoly SpinorPoly::basis_element(const Monomial& mo, Blade b, int order, int arity) {
    return monomial(mo, CliffordElt::basis_blade(b, order, arity));
}

int SpinorPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();  // grlex: last term has max degree
}

bool SpinorPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void SpinorPoly::add_term(const Monomial& mo, const CliffordElt& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mo);
    if (it == terms_.end()) {
        terms_.emplace(mo, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

SpinorPoly SpinorPoly::operator+(const SpinorPoly& rhs) const {
    SpinorPoly out = *this;
    for (const auto& [mo, c] : rhs.terms_) out.add_term(mo, c);
    return out;
}

SpinorPoly SpinorPoly::operator-(const SpinorPoly& rhs) const {
    SpinorPoly out = *this;
    for (const auto& [mo, c] : rhs.terms_) out.add_term(mo, -c);
    return out;
}

SpinorPoly SpinorPoly::operator-() const {
    SpinorPoly out(order_, arity_);
    for (const auto& [mo, c] : terms_) out.terms_.emplace(mo, -c);
    return out;
}

SpinorPoly SpinorPoly::scaled(const KScalar& s) const {
    SpinorPoly out(order_, arity_);
    if (s.is_zero()) return out;
    for (const auto& [mo, c] : terms_) out.add_term(mo, c.scaled(s));
    return out;
}

SpinorPoly SpinorPoly::scaled(const Rational& r) const {
    SpinorPoly out(order_, arity_);
    if (ddsa::is_zero(r)) return out;
    for (const auto& [mo, c] : terms_) out.terms_.emplace(mo, c.scaled(r));
    return out;
}

SpinorPoly SpinorPoly::clifford_left(const CliffordElt& c, int epsilon) const {
    SpinorPoly out(order_, arity_);
    for (const auto& [mo, t] : terms_) out.add_term(mo, clifford_mul(c, t, epsilon));
    return out;
}

SpinorPoly SpinorPoly::multiply_by_coordinate(int axis) const {
    SpinorPoly out(order_, arity_);
    for (const auto& [mo, c] : terms_) {
        Monomial shifted = mo;
        shifted.e[static_cast<std::size_t>(axis - 1)] += 1;
        out.terms_.emplace(shifted, c);
    }
    return out;
}

bool SpinorPoly::operator==(const SpinorPoly& rhs) const {
    return order_ == rhs.order_ && arity_ == rhs.arity_ && terms_ == rhs.terms_;
}

std::string SpinorPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mo, c] : terms_) {
        for (int b = 0; b < kBladeCount; ++b) {
            const KScalar& ks = c.coord(static_cast<Blade>(b));
            if (ks.is_zero()) continue;
            std::string cs = ks.to_string();
            bool composite = cs.find(' ') != std::string::npos;
            bool negated = false;
            if (!first && !composite && !cs.empty() && cs[0] == '-') {
                negated = true;
                cs = cs.substr(1);
            }
            if (!first) os << (negated ? " - " : " + ");
            first = false;

            std::vector<std::string> factors;
            std::string mn = monomial_name(mo);
            std::string bn = blade_name(static_cast<Blade>(b));
            bool bare = mn == "1" && bn == "1";
            if (!(cs == "1" && !bare)) {
                factors.push_back(composite && !bare ? "(" + cs + ")" : cs);
            }
            if (mn != "1") factors.push_back(mn);
            if (bn != "1") factors.push_back(bn);
            if (cs == "-1" && !bare) {
                factors.front() = "-";  // sign folds onto the next factor
                os << "-";
                factors.erase(factors.begin());
            }
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i > 0) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

}  // namespace ddsa
