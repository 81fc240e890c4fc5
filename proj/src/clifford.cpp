#include "ddsa/clifford.hpp"

#include <sstream>

namespace ddsa {

std::string blade_name(Blade b) {
    if (b == kScalarBlade) return "1";
    std::string s = "e";
    for (int i = 0; i < 3; ++i) {
        if (b & (1u << i)) s += static_cast<char>('1' + i);
    }
    return s;
}

BladeProduct blade_mul(Blade a, Blade b) {
    // Moving each index of b left past the strictly larger indices of a
    // costs one transposition per crossing; equal indices contract and
    // contribute one factor of epsilon each.
    int swaps = 0;
    for (int i = 0; i < 3; ++i) {
        if (!(b & (1u << i))) continue;
        for (int j = i + 1; j < 3; ++j) {
            if (a & (1u << j)) ++swaps;
        }
    }
    BladeProduct out;
    out.sign = (swaps % 2 == 0) ? 1 : -1;
    out.eps_power = blade_grade(static_cast<Blade>(a & b));
    out.blade = static_cast<Blade>(a ^ b);
    return out;
}

int resolve_sign(const BladeProduct& p, int epsilon) {
    int s = p.sign;
    if (epsilon < 0 && p.eps_power % 2 == 1) s = -s;
    return s;
}

CliffordElt::CliffordElt(int order, int arity)
    : coords_{KScalar(order, arity), KScalar(order, arity), KScalar(order, arity),
              KScalar(order, arity), KScalar(order, arity), KScalar(order, arity),
              KScalar(order, arity), KScalar(order, arity)} {}

CliffordElt CliffordElt::scalar(const KScalar& s) {
    CliffordElt c(s.order(), s.arity());
    c.coords_[kScalarBlade] = s;
    return c;
}

CliffordElt CliffordElt::basis_blade(Blade b, int order, int arity) {
    CliffordElt c(order, arity);
    c.coords_[b] = KScalar::one(order, arity);
    return c;
}

CliffordElt CliffordElt::from_vector(const std::array<KScalar, 3>& v) {
    CliffordElt c(v[0].order(), v[0].arity());
    c.coords_[1] = v[0];
    c.coords_[2] = v[1];
    c.coords_[4] = v[2];
    return c;
}

bool CliffordElt::is_zero() const {
    for (const auto& s : coords_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

void CliffordElt::require_compatible(const CliffordElt& rhs) const {
    if (order() != rhs.order() || arity() != rhs.arity()) {
        throw SignatureMismatch("Clifford elements from different algebra contexts");
    }
}

CliffordElt CliffordElt::operator+(const CliffordElt& rhs) const {
    require_compatible(rhs);
    CliffordElt out = *this;
    for (int b = 0; b < kBladeCount; ++b) {
        out.coords_[static_cast<std::size_t>(b)] =
            out.coords_[static_cast<std::size_t>(b)] + rhs.coords_[static_cast<std::size_t>(b)];
    }
    return out;
}

CliffordElt CliffordElt::operator-(const CliffordElt& rhs) const {
    require_compatible(rhs);
    CliffordElt out = *this;
    for (int b = 0; b < kBladeCount; ++b) {
        out.coords_[static_cast<std::size_t>(b)] =
            out.coords_[static_cast<std::size_t>(b)] - rhs.coords_[static_cast<std::size_t>(b)];
    }
    return out;
}

CliffordElt CliffordElt::operator-() const {
    CliffordElt out = *this;
    for (auto& s : out.coords_) s = -s;
    return out;
}

CliffordElt CliffordElt::scaled(const KScalar& s) const {
    CliffordElt out(order(), arity());
    for (int b = 0; b < kBladeCount; ++b) {
        out.coords_[static_cast<std::size_t>(b)] = coords_[static_cast<std::size_t>(b)] * s;
    }
    return out;
}

CliffordElt CliffordElt::scaled(const Rational& r) const {
    CliffordElt out(order(), arity());
    for (int b = 0; b < kBladeCount; ++b) {
        out.coords_[static_cast<std::size_t>(b)] = coords_[static_cast<std::size_t>(b)].scaled(r);
    }
    return out;
}

bool CliffordElt::operator==(const CliffordElt& rhs) const { return coords_ == rhs.coords_; }

CliffordElt clifford_mul(const CliffordElt& a, const CliffordElt& b, int epsilon) {
    a.require_compatible(b);
    CliffordElt out(a.order(), a.arity());
    for (int s = 0; s < kBladeCount; ++s) {
        const KScalar& ca = a.coords_[static_cast<std::size_t>(s)];
        if (ca.is_zero()) continue;
        for (int t = 0; t < kBladeCount; ++t) {
            const KScalar& cb = b.coords_[static_cast<std::size_t>(t)];
            if (cb.is_zero()) continue;
            BladeProduct p = blade_mul(static_cast<Blade>(s), static_cast<Blade>(t));
            KScalar term = ca * cb;
            if (resolve_sign(p, epsilon) < 0) term = -term;
            KScalar& slot = out.coords_[p.blade];
            slot = slot + term;
        }
    }
    return out;
}

std::string CliffordElt::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int b = 0; b < kBladeCount; ++b) {
        const KScalar& s = coords_[static_cast<std::size_t>(b)];
        if (s.is_zero()) continue;
        std::string cs = s.to_string();
        bool composite = cs.find(' ') != std::string::npos;
        bool negated = false;
        if (!first && !composite && !cs.empty() && cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        if (!first) os << (negated ? " - " : " + ");
        first = false;
        if (b == kScalarBlade) {
            os << (composite ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << blade_name(static_cast<Blade>(b));
        } else if (cs == "-1") {
            os << "-" << blade_name(static_cast<Blade>(b));
        } else {
            os << (composite ? "(" + cs + ")" : cs) << "*" << blade_name(static_cast<Blade>(b));
        }
    }
    return os.str();
}

}  // namespace ddsa
