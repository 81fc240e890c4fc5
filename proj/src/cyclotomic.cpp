#include "ddsa/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace ddsa {

namespace {

using Poly = std::vector<Rational>;  // index = power of x

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (!is_zero(p[i])) return i;
    }
    return -1;
}

void poly_trim(Poly& p) {
    p.resize(static_cast<std::size_t>(poly_degree(p) + 1));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (is_zero(b[j])) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    int db = poly_degree(b);
    Poly rem = a;
    poly_trim(rem);
    int dr = poly_degree(rem);
    if (dr < db) return {{}, rem};
    Poly quo(static_cast<std::size_t>(dr - db + 1), Rational(0));
    const Rational& lead = b[static_cast<std::size_t>(db)];
    while ((dr = poly_degree(rem)) >= db) {
        Rational c = rem[static_cast<std::size_t>(dr)] / lead;
        int shift = dr - db;
        quo[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(i + shift)] -= c * b[static_cast<std::size_t>(i)];
        }
    }
    poly_trim(rem);
    return {quo, rem};
}

Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    Poly num(static_cast<std::size_t>(n + 1), Rational(0));
    num[0] = Rational(-1);
    num[static_cast<std::size_t>(n)] = Rational(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [quo, rem] = poly_divmod(num, cyclotomic_poly(d, memo));
        if (poly_degree(rem) >= 0) throw AlgebraError("cyclotomic polynomial division failed");
        num = quo;
    }
    memo.emplace(n, num);
    return num;
}

const CycloTable& table_for(int n) {
    static std::mutex mtx;
    static std::map<int, CycloTable> tables;
    static std::map<int, Poly> memo;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = tables.find(n);
    if (it == tables.end()) {
        if (n < 1) throw InvalidOrder("cyclotomic order must be positive");
        CycloTable t;
        t.n = n;
        t.minimal_poly = cyclotomic_poly(n, memo);
        t.phi = poly_degree(t.minimal_poly);
        it = tables.emplace(n, std::move(t)).first;
    }
    return it->second;
}

// Reduce an arbitrary coefficient vector modulo Phi_n, returning exactly
// phi(n) coefficients.
std::vector<Rational> reduce_mod(const CycloTable& t, Poly p) {
    int phi = t.phi;
    int dp = poly_degree(p);
    while (dp >= phi) {
        Rational c = p[static_cast<std::size_t>(dp)];
        int shift = dp - phi;
        for (int i = 0; i <= phi; ++i) {
            p[static_cast<std::size_t>(i + shift)] -= c * t.minimal_poly[static_cast<std::size_t>(i)];
        }
        dp = poly_degree(p);
    }
    p.resize(static_cast<std::size_t>(phi), Rational(0));
    for (auto& c : p) c.canonicalize();
    return p;
}

}  // namespace

const CycloTable& cyclo_table(int n) { return table_for(n); }

int euler_phi(int n) { return table_for(n).phi; }

int cyclotomic_order_for(int m) { return std::lcm(4, 2 * m); }

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    bool ok = !text.empty();
    if (ok && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    ok = ok && digits > 0;
    if (ok && i < text.size()) {
        ok = text[i] == '/';
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++digits;
        }
        ok = ok && digits > 0 && i == text.size();
    }
    if (!ok) throw AlgebraError("malformed rational literal: '" + text + "'");
    Rational r(text, 10);
    if (is_zero(Rational(r.get_den()))) throw AlgebraError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::zero(int order) {
    const CycloTable& t = table_for(order);
    return Cyclotomic(order, std::vector<Rational>(static_cast<std::size_t>(t.phi), Rational(0)));
}

Cyclotomic Cyclotomic::one(int order) { return from_rational(Rational(1), order); }

Cyclotomic Cyclotomic::from_rational(const Rational& r, int order) {
    Cyclotomic c = zero(order);
    c.coeffs_[0] = r;
    return c;
}

Cyclotomic Cyclotomic::zeta_pow(int order, long k) {
    const CycloTable& t = table_for(order);
    long kk = k % order;
    if (kk < 0) kk += order;
    Poly p(static_cast<std::size_t>(kk + 1), Rational(0));
    p[static_cast<std::size_t>(kk)] = Rational(1);
    return Cyclotomic(order, reduce_mod(t, std::move(p)));
}

Cyclotomic Cyclotomic::imaginary_unit(int order) {
    if (order % 4 != 0) throw InvalidOrder("imaginary unit needs 4 | order");
    return zeta_pow(order, order / 4);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!ddsa::is_zero(c)) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!ddsa::is_zero(coeffs_[i])) return false;
    }
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw AlgebraError("cyclotomic element is not rational");
    return coeffs_[0];
}

namespace {
void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order()) {
        throw OrderMismatch("cyclotomic orders differ: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
    }
}
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    require_same_order(*this, rhs);
    std::vector<Rational> out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coeffs_[i];
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    require_same_order(*this, rhs);
    std::vector<Rational> out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.coeffs_[i];
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    require_same_order(*this, rhs);
    const CycloTable& t = table_for(order_);
    return Cyclotomic(order_, reduce_mod(t, poly_mul(coeffs_, rhs.coeffs_)));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c *= r;
    return Cyclotomic(order_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw AlgebraError("cyclotomic division by zero");
    const CycloTable& t = table_for(order_);
    // Extended Euclid on (Phi_n, this); Phi_n is irreducible over Q so the
    // gcd is a nonzero rational constant.
    Poly r0 = t.minimal_poly;
    Poly r1 = coeffs_;
    poly_trim(r1);
    Poly s0;  // coefficient of `this` in r0's Bezout combination
    Poly s1{Rational(1)};
    while (poly_degree(r1) > 0) {
        auto [q, rem] = poly_divmod(r0, r1);
        Poly s2 = s0;
        Poly qs = poly_mul(q, s1);
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly_degree(r1) != 0) throw AlgebraError("inverse: unexpected zero remainder chain");
    const Rational g = r1[0];
    for (auto& c : s1) c /= g;
    return Cyclotomic(order_, reduce_mod(t, std::move(s1)));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

std::complex<double> Cyclotomic::embed() const {
    const std::complex<double> zeta =
        std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(order_));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * zeta + std::complex<double>(to_double(coeffs_[i]), 0.0);
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return ddsa::to_string(coeffs_[0]);
    if (order_ % 4 == 0) {
        // Pure imaginary multiples print as r*i.
        Cyclotomic by_i = *this * (-imaginary_unit(order_));
        if (by_i.is_rational()) {
            Rational r = by_i.rational_value();
            if (r == Rational(1)) return "i";
            if (r == Rational(-1)) return "-i";
            return ddsa::to_string(r) + "*i";
        }
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (ddsa::is_zero(coeffs_[i])) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        if (i == 0) {
            os << ddsa::to_string(a);
        } else {
            if (a != Rational(1)) os << ddsa::to_string(a) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Cyclotomic trig_value(TrigKind kind, long j, long m, bool doubled) {
    if (m < 3) throw InvalidOrder("dihedral order must be at least 3");
    const int n = cyclotomic_order_for(static_cast<int>(m));
    // exp(i * theta) = zeta^k with theta = j*pi/m (k = j*n/2m) or
    // theta = 2*j*pi/m (k = j*n/m).
    const long step = doubled ? n / m : n / (2 * m);
    const long k = j * step;
    Cyclotomic plus = Cyclotomic::zeta_pow(n, k);
    Cyclotomic minus = Cyclotomic::zeta_pow(n, -k);
    if (kind == TrigKind::Cos) {
        return (plus + minus).scaled(rational_of(1, 2));
    }
    Cyclotomic diff = plus - minus;
    // sin = (zeta^k - zeta^-k) / (2i) = -i/2 * (zeta^k - zeta^-k)
    return (diff * Cyclotomic::imaginary_unit(n)).scaled(rational_of(-1, 2));
}

}  // namespace ddsa
