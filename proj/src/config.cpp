#include "ddsa/config.hpp"

namespace ddsa {

namespace {

Cyclotomic dot3(const std::array<Cyclotomic, 3>& a, const std::array<Cyclotomic, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Cyclotomic det3(const std::array<std::array<Cyclotomic, 3>, 3>& w) {
    return w[0][0] * (w[1][1] * w[2][2] - w[1][2] * w[2][1]) -
           w[0][1] * (w[1][0] * w[2][2] - w[1][2] * w[2][0]) +
           w[0][2] * (w[1][0] * w[2][1] - w[1][1] * w[2][0]);
}

}  // namespace

GroupMatrix group_matrix_from_orthogonal(const std::array<std::array<Cyclotomic, 3>, 3>& w,
                                         int cache_id) {
    GroupMatrix g;
    g.cache_id = cache_id;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) g.sub[a][b] = w[b][a];  // transpose = inverse
    }
    return g;
}

DihedralConfig::DihedralConfig(int m, int epsilon,
                               std::array<std::optional<Rational>, 3> kappa_values)
    : m_(m),
      epsilon_(epsilon),
      order_(cyclotomic_order_for(m)),
      arity_(m % 2 == 0 ? 3 : 2),
      kappa_values_(std::move(kappa_values)) {
    if (m < 3) throw InvalidOrder("dihedral order m must be at least 3, got " + std::to_string(m));
    if (epsilon != 1 && epsilon != -1) throw InvalidOrder("epsilon must be +1 or -1");

    const Cyclotomic zero = c_zero();
    const Cyclotomic one = c_one();

    mode_ = KappaMode::Symbolic;
    for (const auto& kv : kappa_values_) {
        if (kv.has_value()) mode_ = KappaMode::Numeric;
    }
    if (mode_ == KappaMode::Numeric) {
        for (int orbit = 0; orbit < arity_; ++orbit) {
            if (!kappa_values_[static_cast<std::size_t>(orbit)].has_value()) {
                throw UnboundParameter("kappa value for orbit k" + std::to_string(orbit) +
                                       " is required");
            }
        }
    }

    // Positive roots: alpha_0 = (0,0,1) and
    // alpha_j = (sin(j pi/m), -cos(j pi/m), 0), 1 <= j <= m.
    roots_.reserve(static_cast<std::size_t>(m + 1));
    roots_.push_back(Root{{zero, zero, one}, 0, 2, one});
    for (int j = 1; j <= m; ++j) {
        Cyclotomic s = trig_value(TrigKind::Sin, j, m, false);
        Cyclotomic c = -trig_value(TrigKind::Cos, j, m, false);
        int orbit = (m % 2 == 1) ? 1 : (j % 2 == 1 ? 1 : 2);
        int pivot = c.is_zero() ? 0 : 1;
        Cyclotomic pin = (pivot == 1 ? c : s).inverse();
        roots_.push_back(Root{{s, c, zero}, orbit, pivot, pin});
    }

    // Reflections from the roots: sigma(x) = x - 2<x,alpha>alpha.
    const Rational two(2);
    for (int idx = 0; idx <= m; ++idx) {
        const Root& r = roots_[static_cast<std::size_t>(idx)];
        std::array<std::array<Cyclotomic, 3>, 3> w{
            {{{one, zero, zero}}, {{zero, one, zero}}, {{zero, zero, one}}}};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -
                    (r.v[static_cast<std::size_t>(a)] * r.v[static_cast<std::size_t>(b)]).scaled(two);
            }
        }
        GroupMatrix g = group_matrix_from_orthogonal(w, idx);
        validate_reflection(g, r);
        reflections_.push_back(std::move(g));
    }

    // Rotation-shaped variants with entries cos(2j pi/m), sin(2j pi/m).
    rotation_variants_.push_back(group_matrix_from_orthogonal(
        {{{{one, zero, zero}}, {{zero, one, zero}}, {{zero, zero, -one}}}}, m + 1));
    for (int j = 1; j <= m; ++j) {
        Cyclotomic c2 = trig_value(TrigKind::Cos, j, m, true);
        Cyclotomic s2 = trig_value(TrigKind::Sin, j, m, true);
        rotation_variants_.push_back(group_matrix_from_orthogonal(
            {{{{c2, s2, zero}}, {{-s2, c2, zero}}, {{zero, zero, one}}}}, m + 1 + j));
    }

    // Kappa weights and per-axis Dunkl factors.
    for (int idx = 0; idx <= m; ++idx) {
        const Root& r = roots_[static_cast<std::size_t>(idx)];
        KScalar k = mode_ == KappaMode::Symbolic
                        ? KScalar::kappa(r.orbit, order_, arity_)
                        : k_rational(*kappa_values_[static_cast<std::size_t>(r.orbit)]);
        std::array<KScalar, 3> fac{k_zero(), k_zero(), k_zero()};
        for (int axis = 0; axis < 3; ++axis) {
            fac[static_cast<std::size_t>(axis)] =
                k.scaled(r.v[static_cast<std::size_t>(axis)]);
        }
        kappa_by_root_.push_back(std::move(k));
        dunkl_factors_.push_back(std::move(fac));
    }
}

void DihedralConfig::validate_reflection(const GroupMatrix& g, const Root& r) const {
    // Unit root, sigma(alpha) = -alpha, det = -1. The substitution matrix
    // equals the reflection itself (symmetric involution).
    if (dot3(r.v, r.v) != c_one()) throw AlgebraError("root is not a unit vector");
    for (int a = 0; a < 3; ++a) {
        Cyclotomic img = g.sub[static_cast<std::size_t>(a)][0] * r.v[0] +
                         g.sub[static_cast<std::size_t>(a)][1] * r.v[1] +
                         g.sub[static_cast<std::size_t>(a)][2] * r.v[2];
        if (img != -r.v[static_cast<std::size_t>(a)]) {
            throw AlgebraError("reflection does not negate its root");
        }
    }
    if (det3(g.sub) != -c_one()) throw AlgebraError("reflection determinant is not -1");
}

const Root& DihedralConfig::root(int idx) const {
    if (idx < 0 || idx >= root_count()) {
        throw UnknownRoot("root index " + std::to_string(idx) + " outside 0.." +
                          std::to_string(m_));
    }
    return roots_[static_cast<std::size_t>(idx)];
}

const GroupMatrix& DihedralConfig::reflection(int idx) const {
    root(idx);  // range check
    return reflections_[static_cast<std::size_t>(idx)];
}

const GroupMatrix& DihedralConfig::rotation_variant(int idx) const {
    root(idx);
    return rotation_variants_[static_cast<std::size_t>(idx)];
}

const KScalar& DihedralConfig::kappa_of_root(int idx) const {
    root(idx);
    return kappa_by_root_[static_cast<std::size_t>(idx)];
}

const KScalar& DihedralConfig::dunkl_factor(int root_idx, int axis) const {
    root(root_idx);
    return dunkl_factors_[static_cast<std::size_t>(root_idx)][static_cast<std::size_t>(axis)];
}

}  // namespace ddsa
