#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ddsa/dunkl.hpp"

namespace ddsa {

enum class OpKind {
    Zero,
    Identity,
    CoordMult,       // x_i
    Dunkl,           // D_i
    GroupElt,        // w acting on the variables only
    CliffordLeft,    // left multiplication of the coefficients
    ScalarMult,      // central scalar
    Sum,
    Compose,         // kids applied right to left: (A B) f = A(B f)
    Commutator,      // [A, B] = AB - BA
    Anticommutator,  // {A, B} = AB + BA
    ScalarScale,     // s * kids[0]
    Named            // display name wrapping kids[0]
};

struct OperatorExpr;
using OpPtr = std::shared_ptr<const OperatorExpr>;

// Immutable formal expression over the primitive generators, closed under
// sum, scalar multiple, composition, commutator and anticommutator.
struct OperatorExpr {
    OpKind kind;
    int index = 0;  // axis for CoordMult / Dunkl (1..3)
    std::shared_ptr<const KScalar> scalar;
    std::shared_ptr<const CliffordElt> cliff;
    std::shared_ptr<const GroupMatrix> group;
    std::string name;
    std::vector<OpPtr> kids;
};

OpPtr op_zero();
OpPtr op_identity();
OpPtr op_coord(int axis);
OpPtr op_dunkl(int axis);
OpPtr op_group(GroupMatrix g);
OpPtr op_clifford(CliffordElt c);
OpPtr op_scalar(KScalar s);
OpPtr op_sum(std::vector<OpPtr> kids);
OpPtr op_compose(std::vector<OpPtr> kids);
OpPtr op_commutator(OpPtr a, OpPtr b);
OpPtr op_anticommutator(OpPtr a, OpPtr b);
OpPtr op_scale(KScalar s, OpPtr a);
OpPtr op_scale(const Rational& r, OpPtr a, const DihedralConfig& cfg);
OpPtr op_named(std::string name, OpPtr def);
OpPtr op_power(OpPtr a, int n);  // n >= 1 compositions

// Structural evaluation on spinor-valued polynomials; exact.
SpinorPoly operator_apply(const OpPtr& op, const SpinorPoly& p, const DihedralConfig& cfg);

bool op_equal(const OpPtr& a, const OpPtr& b);
std::string op_print(const OpPtr& op);

// --- named operator constructors -----------------------------------------

// GroupSum and Bracket are the two defining forms and agree as operators:
// O_j = eps * sum_k kappa(alpha_k) <alpha_k, xi_j> sigma~_k
//     = (eps/2) ([Dirac, x_j] - e_j).
// GroupSumUnscaled is the bare sum without the leading signature factor,
// kept only for the literal transcription checks (it differs from the
// other two forms when eps = -1).
enum class OneIndexForm { GroupSum, Bracket, GroupSumUnscaled };
enum class TwoIndexForm { Left, Right };
enum class ThreeIndexForm { Left, Right };
// Which group matrices back the sigma-tilde factors: the root-derived
// reflections, or the rotation-shaped variants kept for the literal
// transcription checks.
enum class MatrixVariant { RootReflection, RotationShaped };

// sigma_tilde_alpha = sigma_alpha (x) sum_j <alpha, xi_j> e_j.
OpPtr make_sigma_tilde(int root_idx, const DihedralConfig& cfg,
                       MatrixVariant variant = MatrixVariant::RootReflection);

OpPtr make_dirac(const DihedralConfig& cfg);  // sum_i D_i e_i
OpPtr make_x(const DihedralConfig& cfg);      // sum_i x_i e_i

// One-index symmetry O_j, either defining form.
OpPtr make_O_one(int j, OneIndexForm form, const DihedralConfig& cfg,
                 MatrixVariant variant = MatrixVariant::RootReflection);

// L_ij = x_i D_j - x_j D_i.
OpPtr make_L(int i, int j, const DihedralConfig& cfg);

// Two-index symmetry O_ij; i != j.
OpPtr make_O_two(int i, int j, TwoIndexForm form, const DihedralConfig& cfg,
                 MatrixVariant variant = MatrixVariant::RootReflection);

OpPtr make_O123(ThreeIndexForm form, const DihedralConfig& cfg,
                MatrixVariant variant = MatrixVariant::RootReflection);

struct LadderBasis {
    OpPtr O0, Op, Om;  // O_0 = -i O_12, O_+/- = i O_31 +/- O_23
    OpPtr T0, Tp, Tm;  // T_0 = i O_3,  T_+/- = O_1 +/- i O_2
    OpPtr Lp, Lm;      // L_+/- = (1/2) {O_0, O_+/-}
};
LadderBasis make_ladder_basis(const DihedralConfig& cfg);

// All canonical operators for one configuration under one matrix variant.
// Canonical forms: group-sum O_j, left O_ij, left O_123.
struct OperatorSet {
    std::vector<OpPtr> sigma_tilde;  // index 0..m
    OpPtr dirac, x;
    std::array<OpPtr, 3> O_one;      // O_1, O_2, O_3
    OpPtr O12, O31, O23, O123;
    LadderBasis ladder;
};
OperatorSet build_operator_set(const DihedralConfig& cfg,
                               MatrixVariant variant = MatrixVariant::RootReflection);

}  // namespace ddsa
