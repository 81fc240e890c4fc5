#include "ddsa/kscalar.hpp"

#include <sstream>

namespace ddsa {

std::string kappa_exp_name(const KappaExp& k) {
    if (k.degree() == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        if (k.e[static_cast<std::size_t>(i)] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "k" << i;
        if (k.e[static_cast<std::size_t>(i)] > 1) os << "^" << k.e[static_cast<std::size_t>(i)];
    }
    return os.str();
}

KScalar::KScalar(int order, int arity) : order_(order), arity_(arity) {
    if (arity < 2 || arity > 3) throw ArityMismatch("kappa arity must be 2 or 3");
}

KScalar KScalar::from_cyclotomic(const Cyclotomic& c, int arity) {
    KScalar s(c.order(), arity);
    s.add_term(KappaExp{}, c);
    return s;
}

KScalar KScalar::from_rational(const Rational& r, int order, int arity) {
    return from_cyclotomic(Cyclotomic::from_rational(r, order), arity);
}

KScalar KScalar::one(int order, int arity) {
    return from_rational(Rational(1), order, arity);
}

KScalar KScalar::kappa(int index, int order, int arity) {
    KScalar s(order, arity);
    if (index < 0 || index >= arity) {
        throw ArityMismatch("kappa index " + std::to_string(index) + " out of range for arity " +
                            std::to_string(arity));
    }
    KappaExp k;
    k.e[static_cast<std::size_t>(index)] = 1;
    s.add_term(k, Cyclotomic::one(order));
    return s;
}

bool KScalar::is_constant() const { return kappa_degree() == 0; }

Cyclotomic KScalar::constant_value() const {
    if (terms_.empty()) return Cyclotomic::zero(order_);
    if (!is_constant()) throw AlgebraError("KScalar has nonconstant kappa terms: " + to_string());
    return terms_.begin()->second;
}

unsigned KScalar::kappa_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
    return d;
}

void KScalar::add_term(const KappaExp& k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

void KScalar::require_compatible(const KScalar& rhs) const {
    if (order_ != rhs.order_) {
        throw OrderMismatch("KScalar cyclotomic orders differ: " + std::to_string(order_) +
                            " vs " + std::to_string(rhs.order_));
    }
    if (arity_ != rhs.arity_) {
        throw ArityMismatch("KScalar arities differ: " + std::to_string(arity_) + " vs " +
                            std::to_string(rhs.arity_));
    }
}

KScalar KScalar::operator+(const KScalar& rhs) const {
    require_compatible(rhs);
    KScalar out = *this;
    for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
    return out;
}

KScalar KScalar::operator-(const KScalar& rhs) const {
    require_compatible(rhs);
    KScalar out = *this;
    for (const auto& [k, c] : rhs.terms_) out.add_term(k, -c);
    return out;
}

KScalar KScalar::operator*(const KScalar& rhs) const {
    require_compatible(rhs);
    KScalar out(order_, arity_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            KappaExp k;
            for (std::size_t i = 0; i < 3; ++i) k.e[i] = ka.e[i] + kb.e[i];
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

KScalar KScalar::operator-() const {
    KScalar out(order_, arity_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

KScalar KScalar::scaled(const Cyclotomic& c) const {
    if (c.order() != order_) throw OrderMismatch("scale factor has different cyclotomic order");
    KScalar out(order_, arity_);
    if (c.is_zero()) return out;
    for (const auto& [k, t] : terms_) {
        Cyclotomic p = t * c;
        if (!p.is_zero()) out.terms_.emplace(k, std::move(p));
    }
    return out;
}

KScalar KScalar::scaled(const Rational& r) const {
    KScalar out(order_, arity_);
    if (ddsa::is_zero(r)) return out;
    for (const auto& [k, t] : terms_) out.terms_.emplace(k, t.scaled(r));
    return out;
}

bool KScalar::operator==(const KScalar& rhs) const {
    return order_ == rhs.order_ && arity_ == rhs.arity_ && terms_ == rhs.terms_;
}

Cyclotomic KScalar::specialize(const std::array<std::optional<Rational>, 3>& values) const {
    Cyclotomic acc = Cyclotomic::zero(order_);
    for (const auto& [k, c] : terms_) {
        Rational factor(1);
        for (std::size_t i = 0; i < 3; ++i) {
            if (k.e[i] == 0) continue;
            if (!values[i].has_value()) {
                throw UnboundParameter("no value for kappa parameter k" + std::to_string(i));
            }
            for (unsigned p = 0; p < k.e[i]; ++p) factor *= *values[i];
        }
        acc = acc + c.scaled(factor);
    }
    return acc;
}

std::string KScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string cs = c.to_string();
        bool composite = cs.find(' ') != std::string::npos;
        bool negated = false;
        if (!first && !composite && !cs.empty() && cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        if (!first) os << (negated ? " - " : " + ");
        first = false;
        std::string kn = kappa_exp_name(k);
        if (kn == "1") {
            os << (composite ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << kn;
        } else if (cs == "-1") {
            os << "-" << kn;
        } else {
            os << (composite ? "(" + cs + ")" : cs) << "*" << kn;
        }
    }
    return os.str();
}

}  // namespace ddsa
