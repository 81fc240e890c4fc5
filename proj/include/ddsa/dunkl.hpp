#pragma once

#include "ddsa/spinor_poly.hpp"

namespace ddsa {

// (w.f)(x) = f(w^{-1} x): exact linear substitution of the variables,
// Clifford coefficients untouched.
SpinorPoly apply_group_element(const GroupMatrix& g, const SpinorPoly& p,
                               const DihedralConfig& cfg);
SpinorPoly apply_reflection(int root_idx, const SpinorPoly& p, const DihedralConfig& cfg);

// Exact quotient of f by the linear form <x, alpha>. Throws
// NonZeroRemainder when f is not divisible (which signals a bug or
// invalid input, never a valid Dunkl term).
SpinorPoly divide_by_linear_form(const SpinorPoly& f, int root_idx, const DihedralConfig& cfg);

// D_j f = d_j f + sum_{alpha in R+} kappa(alpha) (f - sigma_alpha f)/<x,alpha> <alpha, xi_j>.
SpinorPoly dunkl_apply(int axis, const SpinorPoly& p, const DihedralConfig& cfg);

SpinorPoly multiply_by_coordinate(int axis, const SpinorPoly& p);

// Cached scalar-level rows used by the operations above (exposed for the
// spectrum module and tests).
const CPoly& substituted_monomial(const GroupMatrix& g, const Monomial& mo,
                                  const DihedralConfig& cfg);
const CPoly& divided_difference(int root_idx, const Monomial& mo, const DihedralConfig& cfg);
const KPoly& dunkl_row(int axis, const Monomial& mo, const DihedralConfig& cfg);

}  // namespace ddsa
