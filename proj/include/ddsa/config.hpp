#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ddsa/clifford.hpp"
#include "ddsa/monomial.hpp"

namespace ddsa {

// Scalar-coefficient polynomials used by the evaluation caches.
using CPoly = std::map<Monomial, Cyclotomic, GrlexLess>;
using KPoly = std::map<Monomial, KScalar, GrlexLess>;

// Positive root with its orbit parameter and division pivot.
struct Root {
    std::array<Cyclotomic, 3> v;  // unit vector, exact
    int orbit;                    // kappa orbit index: 0, 1 or 2
    int pivot;                    // largest axis with nonzero component
    Cyclotomic pivot_inverse;
};

// Orthogonal group element. `sub` holds the substitution matrix w^{-1}
// (= transpose of w), so that (w.f)(x) = f(sub * x) row by row.
struct GroupMatrix {
    std::array<std::array<Cyclotomic, 3>, 3> sub;
    int cache_id = -1;  // >= 0 for config-interned matrices
};

GroupMatrix group_matrix_from_orthogonal(const std::array<std::array<Cyclotomic, 3>, 3>& w,
                                         int cache_id = -1);

enum class KappaMode { Symbolic, Numeric };

// The dihedral data for W = Z_2 x D_2m acting on R^3: positive roots
// alpha_0, ..., alpha_m, root-derived reflections, kappa orbit assignment,
// Clifford signature, and the shared exact-arithmetic context (cyclotomic
// order n = lcm(4, 2m), kappa arity). Immutable after construction and
// safe to share across threads; the attached evaluation caches are
// internally synchronized.
class DihedralConfig {
public:
    DihedralConfig(int m, int epsilon,
                   std::array<std::optional<Rational>, 3> kappa_values = {});

    int m() const { return m_; }
    int epsilon() const { return epsilon_; }
    int order() const { return order_; }
    int arity() const { return arity_; }

    const std::vector<Root>& positive_roots() const { return roots_; }
    const Root& root(int idx) const;
    int root_count() const { return static_cast<int>(roots_.size()); }

    // Reflection sigma_alpha computed from the root via
    // sigma(x) = x - 2<x,alpha>alpha.
    const GroupMatrix& reflection(int idx) const;
    // Rotation-shaped matrix with the same cos/sin entries but negated
    // (2,1) entry; kept for literal-variant checks. Index 0 coincides
    // with the reflection.
    const GroupMatrix& rotation_variant(int idx) const;

    KappaMode kappa_mode() const { return mode_; }
    const std::array<std::optional<Rational>, 3>& kappa_values() const { return kappa_values_; }
    // Symbolic parameter of the root's orbit, or the numeric constant.
    const KScalar& kappa_of_root(int idx) const;
    // kappa(alpha) * <alpha, xi_axis>; exact zero when the component is.
    const KScalar& dunkl_factor(int root_idx, int axis) const;

    // Scalar helpers bound to this context.
    KScalar k_zero() const { return KScalar(order_, arity_); }
    KScalar k_one() const { return KScalar::one(order_, arity_); }
    KScalar k_rational(const Rational& r) const {
        return KScalar::from_rational(r, order_, arity_);
    }
    KScalar k_cyclotomic(const Cyclotomic& c) const { return KScalar::from_cyclotomic(c, arity_); }
    KScalar k_imaginary() const {
        return k_cyclotomic(Cyclotomic::imaginary_unit(order_));
    }
    Cyclotomic c_zero() const { return Cyclotomic::zero(order_); }
    Cyclotomic c_one() const { return Cyclotomic::one(order_); }

    // Evaluation caches, keyed by generator tag and packed monomial.
    struct Caches {
        std::mutex subst_mutex;
        std::unordered_map<std::uint64_t, CPoly> subst;
        std::mutex divdiff_mutex;
        std::unordered_map<std::uint64_t, CPoly> divdiff;
        std::mutex dunkl_mutex;
        std::unordered_map<std::uint64_t, KPoly> dunkl;
    };
    Caches& caches() const { return *caches_; }

private:
    void validate_reflection(const GroupMatrix& g, const Root& r) const;

    int m_;
    int epsilon_;
    int order_;
    int arity_;
    KappaMode mode_;
    std::array<std::optional<Rational>, 3> kappa_values_;
    std::vector<Root> roots_;
    std::vector<GroupMatrix> reflections_;
    std::vector<GroupMatrix> rotation_variants_;
    std::vector<KScalar> kappa_by_root_;
    std::vector<std::array<KScalar, 3>> dunkl_factors_;
    std::shared_ptr<Caches> caches_ = std::make_shared<Caches>();
};

}  // namespace ddsa
