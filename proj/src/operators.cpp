#include "ddsa/operators.hpp"

#include <sstream>

namespace ddsa {

namespace {

OpPtr node(OperatorExpr e) { return std::make_shared<const OperatorExpr>(std::move(e)); }

CliffordElt basis_e(int axis, const DihedralConfig& cfg) {
    return CliffordElt::basis_blade(static_cast<Blade>(1 << (axis - 1)), cfg.order(),
                                    cfg.arity());
}

void check_axis(int axis) {
    if (axis < 1 || axis > 3) throw AlgebraError("axis must be 1, 2 or 3");
}

}  // namespace

OpPtr op_zero() { return node({OpKind::Zero}); }

OpPtr op_identity() { return node({OpKind::Identity}); }

OpPtr op_coord(int axis) {
    check_axis(axis);
    OperatorExpr e{OpKind::CoordMult};
    e.index = axis;
    return node(std::move(e));
}

OpPtr op_dunkl(int axis) {
    check_axis(axis);
    OperatorExpr e{OpKind::Dunkl};
    e.index = axis;
    return node(std::move(e));
}

OpPtr op_group(GroupMatrix g) {
    OperatorExpr e{OpKind::GroupElt};
    e.group = std::make_shared<const GroupMatrix>(std::move(g));
    return node(std::move(e));
}

OpPtr op_clifford(CliffordElt c) {
    OperatorExpr e{OpKind::CliffordLeft};
    e.cliff = std::make_shared<const CliffordElt>(std::move(c));
    return node(std::move(e));
}

OpPtr op_scalar(KScalar s) {
    OperatorExpr e{OpKind::ScalarMult};
    e.scalar = std::make_shared<const KScalar>(std::move(s));
    return node(std::move(e));
}

OpPtr op_sum(std::vector<OpPtr> kids) {
    OperatorExpr e{OpKind::Sum};
    e.kids = std::move(kids);
    return node(std::move(e));
}

OpPtr op_compose(std::vector<OpPtr> kids) {
    OperatorExpr e{OpKind::Compose};
    e.kids = std::move(kids);
    return node(std::move(e));
}

OpPtr op_commutator(OpPtr a, OpPtr b) {
    OperatorExpr e{OpKind::Commutator};
    e.kids = {std::move(a), std::move(b)};
    return node(std::move(e));
}

OpPtr op_anticommutator(OpPtr a, OpPtr b) {
    OperatorExpr e{OpKind::Anticommutator};
    e.kids = {std::move(a), std::move(b)};
    return node(std::move(e));
}

OpPtr op_scale(KScalar s, OpPtr a) {
    OperatorExpr e{OpKind::ScalarScale};
    e.scalar = std::make_shared<const KScalar>(std::move(s));
    e.kids = {std::move(a)};
    return node(std::move(e));
}

OpPtr op_scale(const Rational& r, OpPtr a, const DihedralConfig& cfg) {
    return op_scale(cfg.k_rational(r), std::move(a));
}

OpPtr op_named(std::string name, OpPtr def) {
    OperatorExpr e{OpKind::Named};
    e.name = std::move(name);
    e.kids = {std::move(def)};
    return node(std::move(e));
}

OpPtr op_power(OpPtr a, int n) {
    if (n < 1) throw AlgebraError("op_power needs n >= 1");
    if (n == 1) return a;
    std::vector<OpPtr> kids(static_cast<std::size_t>(n), a);
    return op_compose(std::move(kids));
}

SpinorPoly operator_apply(const OpPtr& op, const SpinorPoly& p, const DihedralConfig& cfg) {
    switch (op->kind) {
        case OpKind::Zero:
            return SpinorPoly(p.order(), p.arity());
        case OpKind::Identity:
            return p;
        case OpKind::CoordMult:
            return p.multiply_by_coordinate(op->index);
        case OpKind::Dunkl:
            return dunkl_apply(op->index, p, cfg);
        case OpKind::GroupElt:
            return apply_group_element(*op->group, p, cfg);
        case OpKind::CliffordLeft:
            return p.clifford_left(*op->cliff, cfg.epsilon());
        case OpKind::ScalarMult:
            return p.scaled(*op->scalar);
        case OpKind::Sum: {
            SpinorPoly acc(p.order(), p.arity());
            for (const OpPtr& k : op->kids) acc = acc + operator_apply(k, p, cfg);
            return acc;
        }
        case OpKind::Compose: {
            SpinorPoly acc = p;
            for (std::size_t i = op->kids.size(); i-- > 0;) {
                acc = operator_apply(op->kids[i], acc, cfg);
            }
            return acc;
        }
        case OpKind::Commutator: {
            SpinorPoly ab = operator_apply(op->kids[0], operator_apply(op->kids[1], p, cfg), cfg);
            SpinorPoly ba = operator_apply(op->kids[1], operator_apply(op->kids[0], p, cfg), cfg);
            return ab - ba;
        }
        case OpKind::Anticommutator: {
            SpinorPoly ab = operator_apply(op->kids[0], operator_apply(op->kids[1], p, cfg), cfg);
            SpinorPoly ba = operator_apply(op->kids[1], operator_apply(op->kids[0], p, cfg), cfg);
            return ab + ba;
        }
        case OpKind::ScalarScale:
            return operator_apply(op->kids[0], p, cfg).scaled(*op->scalar);
        case OpKind::Named:
            return operator_apply(op->kids[0], p, cfg);
    }
    throw AlgebraError("unhandled operator kind");
}

bool op_equal(const OpPtr& a, const OpPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case OpKind::Zero:
        case OpKind::Identity:
            return true;
        case OpKind::CoordMult:
        case OpKind::Dunkl:
            return a->index == b->index;
        case OpKind::GroupElt: {
            for (std::size_t r = 0; r < 3; ++r) {
                for (std::size_t c = 0; c < 3; ++c) {
                    if (a->group->sub[r][c] != b->group->sub[r][c]) return false;
                }
            }
            return true;
        }
        case OpKind::CliffordLeft:
            return *a->cliff == *b->cliff;
        case OpKind::ScalarMult:
            return *a->scalar == *b->scalar;
        case OpKind::ScalarScale:
            if (*a->scalar != *b->scalar) return false;
            break;
        case OpKind::Named:
            if (a->name != b->name) return false;
            break;
        default:
            break;
    }
    if (a->kids.size() != b->kids.size()) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i) {
        if (!op_equal(a->kids[i], b->kids[i])) return false;
    }
    return true;
}

namespace {

bool is_minus_one(const KScalar& s) {
    return s.is_constant() && !s.is_zero() && s.constant_value().is_rational() &&
           s.constant_value().rational_value() == Rational(-1);
}

std::string print_scalar_atom(const KScalar& s) {
    if (s.is_constant()) {
        Cyclotomic c = s.constant_value();
        if (c.is_rational()) return to_string(c.rational_value());
        Cyclotomic i = Cyclotomic::imaginary_unit(c.order());
        if (c == i) return "i";
        return "(" + c.to_string() + ")";
    }
    if (s.terms().size() == 1) {
        const auto& [k, c] = *s.terms().begin();
        if (k.degree() == 1 && c == Cyclotomic::one(s.order())) {
            for (int idx = 0; idx < 3; ++idx) {
                if (k.e[static_cast<std::size_t>(idx)] == 1) return "kappa" + std::to_string(idx);
            }
        }
    }
    return "(" + s.to_string() + ")";
}

std::string print_rec(const OpPtr& op);

std::string print_wrapped(const OpPtr& op, bool wrap_sum, bool wrap_prod) {
    bool wrap = (op->kind == OpKind::Sum && wrap_sum) ||
                ((op->kind == OpKind::Compose || op->kind == OpKind::ScalarScale) && wrap_prod);
    std::string s = print_rec(op);
    return wrap ? "(" + s + ")" : s;
}

std::string print_rec(const OpPtr& op) {
    switch (op->kind) {
        case OpKind::Zero:
            return "0";
        case OpKind::Identity:
            return "1";
        case OpKind::CoordMult:
            return "x" + std::to_string(op->index);
        case OpKind::Dunkl:
            return "D" + std::to_string(op->index);
        case OpKind::GroupElt:
            if (op->group->cache_id >= 0) return "s" + std::to_string(op->group->cache_id);
            return "<group>";
        case OpKind::CliffordLeft: {
            const CliffordElt& c = *op->cliff;
            for (int b = 1; b < kBladeCount; ++b) {
                if (c == CliffordElt::basis_blade(static_cast<Blade>(b), c.order(), c.arity()) &&
                    blade_grade(static_cast<Blade>(b)) == 1) {
                    return blade_name(static_cast<Blade>(b));
                }
            }
            return "cl(" + c.to_string() + ")";
        }
        case OpKind::ScalarMult:
            return print_scalar_atom(*op->scalar);
        case OpKind::Sum: {
            std::ostringstream os;
            for (std::size_t i = 0; i < op->kids.size(); ++i) {
                const OpPtr& k = op->kids[i];
                if (i == 0) {
                    os << print_wrapped(k, true, false);
                } else if (k->kind == OpKind::ScalarScale && is_minus_one(*k->scalar)) {
                    os << " - " << print_wrapped(k->kids[0], true, false);
                } else {
                    os << " + " << print_wrapped(k, true, false);
                }
            }
            return os.str();
        }
        case OpKind::Compose: {
            std::ostringstream os;
            for (std::size_t i = 0; i < op->kids.size(); ++i) {
                if (i > 0) os << "*";
                os << print_wrapped(op->kids[i], true, true);
            }
            return os.str();
        }
        case OpKind::Commutator:
            return "[" + print_rec(op->kids[0]) + "," + print_rec(op->kids[1]) + "]";
        case OpKind::Anticommutator:
            return "{" + print_rec(op->kids[0]) + "," + print_rec(op->kids[1]) + "}";
        case OpKind::ScalarScale:
            if (is_minus_one(*op->scalar)) {
                return "-" + print_wrapped(op->kids[0], true, true);
            }
            return print_scalar_atom(*op->scalar) + "*" + print_wrapped(op->kids[0], true, true);
        case OpKind::Named:
            return op->name;
    }
    return "?";
}

}  // namespace

std::string op_print(const OpPtr& op) { return print_rec(op); }

// --- named operator constructors -----------------------------------------

namespace {

const GroupMatrix& matrix_for(int root_idx, const DihedralConfig& cfg, MatrixVariant variant) {
    return variant == MatrixVariant::RootReflection ? cfg.reflection(root_idx)
                                                    : cfg.rotation_variant(root_idx);
}

OpPtr sigma_tilde_expr(int root_idx, const DihedralConfig& cfg, MatrixVariant variant) {
    const Root& r = cfg.root(root_idx);
    CliffordElt vec = CliffordElt::from_vector(
        {cfg.k_cyclotomic(r.v[0]), cfg.k_cyclotomic(r.v[1]), cfg.k_cyclotomic(r.v[2])});
    return op_compose({op_group(matrix_for(root_idx, cfg, variant)), op_clifford(std::move(vec))});
}

OpPtr o_one_unscaled_sum(int j, const std::vector<OpPtr>& sigma, const DihedralConfig& cfg) {
    std::vector<OpPtr> terms;
    for (int r = 0; r < cfg.root_count(); ++r) {
        const KScalar& factor = cfg.dunkl_factor(r, j - 1);
        if (factor.is_zero()) continue;
        terms.push_back(op_scale(factor, sigma[static_cast<std::size_t>(r)]));
    }
    if (terms.empty()) return op_zero();
    return op_sum(std::move(terms));
}

// The signature factor is required for O_ij to centralize the Dirac
// realization; without it the sum only matches the bracket form for
// eps = +1.
OpPtr o_one_group_sum(int j, const std::vector<OpPtr>& sigma, const DihedralConfig& cfg) {
    if (cfg.epsilon() == 1) return o_one_unscaled_sum(j, sigma, cfg);
    return op_scale(Rational(cfg.epsilon()), o_one_unscaled_sum(j, sigma, cfg), cfg);
}

OpPtr o_one_bracket(int j, const OpPtr& dirac, const DihedralConfig& cfg) {
    OpPtr inner = op_sum({op_commutator(dirac, op_coord(j)),
                          op_scale(Rational(-1), op_clifford(basis_e(j, cfg)), cfg)});
    return op_scale(rational_of(cfg.epsilon(), 2), std::move(inner), cfg);
}

CliffordElt blade_product(int i, int j, const DihedralConfig& cfg) {
    return clifford_mul(basis_e(i, cfg), basis_e(j, cfg), cfg.epsilon());
}

OpPtr o_two_expr(int i, int j, TwoIndexForm form, const std::array<OpPtr, 3>& O,
                 const DihedralConfig& cfg) {
    if (i == j) throw DegenerateIndices("two-index symmetry needs i != j");
    check_axis(i);
    check_axis(j);
    OpPtr L = op_sum({op_compose({op_coord(i), op_dunkl(j)}),
                      op_scale(Rational(-1), op_compose({op_coord(j), op_dunkl(i)}), cfg)});
    OpPtr half_eps_eiej =
        op_clifford(blade_product(i, j, cfg).scaled(rational_of(cfg.epsilon(), 2)));
    const OpPtr& Oi = O[static_cast<std::size_t>(i - 1)];
    const OpPtr& Oj = O[static_cast<std::size_t>(j - 1)];
    OpPtr ei = op_clifford(basis_e(i, cfg));
    OpPtr ej = op_clifford(basis_e(j, cfg));
    if (form == TwoIndexForm::Left) {
        return op_sum({L, half_eps_eiej, op_compose({Oi, ej}),
                       op_scale(Rational(-1), op_compose({Oj, ei}), cfg)});
    }
    return op_sum({L, half_eps_eiej, op_compose({ei, Oj}),
                   op_scale(Rational(-1), op_compose({ej, Oi}), cfg)});
}

OpPtr o123_expr(ThreeIndexForm form, const std::array<OpPtr, 3>& O, const OpPtr& O12,
                const OpPtr& O31, const OpPtr& O23, const DihedralConfig& cfg) {
    OpPtr lead = op_clifford(CliffordElt::basis_blade(0b111, cfg.order(), cfg.arity())
                                 .scaled(rational_of(-cfg.epsilon(), 2)));
    OpPtr e1 = op_clifford(basis_e(1, cfg));
    OpPtr e2 = op_clifford(basis_e(2, cfg));
    OpPtr e3 = op_clifford(basis_e(3, cfg));
    OpPtr e23 = op_clifford(blade_product(2, 3, cfg));
    OpPtr e31 = op_clifford(blade_product(3, 1, cfg));
    OpPtr e12 = op_clifford(blade_product(1, 2, cfg));
    Rational minus(-1);
    if (form == ThreeIndexForm::Left) {
        return op_sum({lead,
                       op_scale(minus, op_compose({O[0], e23}), cfg),
                       op_scale(minus, op_compose({O[1], e31}), cfg),
                       op_scale(minus, op_compose({O[2], e12}), cfg),
                       op_compose({O12, e3}), op_compose({O31, e2}), op_compose({O23, e1})});
    }
    return op_sum({lead,
                   op_scale(minus, op_compose({e23, O[0]}), cfg),
                   op_scale(minus, op_compose({e31, O[1]}), cfg),
                   op_scale(minus, op_compose({e12, O[2]}), cfg),
                   op_compose({e3, O12}), op_compose({e2, O31}), op_compose({e1, O23})});
}

}  // namespace

OpPtr make_sigma_tilde(int root_idx, const DihedralConfig& cfg, MatrixVariant variant) {
    OpPtr expr = sigma_tilde_expr(root_idx, cfg, variant);
    if (variant == MatrixVariant::RootReflection) {
        return op_named("st" + std::to_string(root_idx), std::move(expr));
    }
    return expr;
}

OpPtr make_dirac(const DihedralConfig& cfg) {
    std::vector<OpPtr> terms;
    for (int i = 1; i <= 3; ++i) {
        terms.push_back(op_compose({op_dunkl(i), op_clifford(basis_e(i, cfg))}));
    }
    return op_sum(std::move(terms));
}

OpPtr make_x(const DihedralConfig& cfg) {
    std::vector<OpPtr> terms;
    for (int i = 1; i <= 3; ++i) {
        terms.push_back(op_compose({op_coord(i), op_clifford(basis_e(i, cfg))}));
    }
    return op_sum(std::move(terms));
}

OpPtr make_O_one(int j, OneIndexForm form, const DihedralConfig& cfg, MatrixVariant variant) {
    check_axis(j);
    if (form == OneIndexForm::Bracket) return o_one_bracket(j, make_dirac(cfg), cfg);
    std::vector<OpPtr> sigma;
    for (int r = 0; r < cfg.root_count(); ++r) {
        sigma.push_back(make_sigma_tilde(r, cfg, variant));
    }
    if (form == OneIndexForm::GroupSumUnscaled) return o_one_unscaled_sum(j, sigma, cfg);
    return o_one_group_sum(j, sigma, cfg);
}

OpPtr make_L(int i, int j, const DihedralConfig& cfg) {
    check_axis(i);
    check_axis(j);
    return op_sum({op_compose({op_coord(i), op_dunkl(j)}),
                   op_scale(Rational(-1), op_compose({op_coord(j), op_dunkl(i)}), cfg)});
}

OpPtr make_O_two(int i, int j, TwoIndexForm form, const DihedralConfig& cfg,
                 MatrixVariant variant) {
    std::array<OpPtr, 3> O;
    for (int k = 1; k <= 3; ++k) {
        O[static_cast<std::size_t>(k - 1)] = make_O_one(k, OneIndexForm::GroupSum, cfg, variant);
    }
    return o_two_expr(i, j, form, O, cfg);
}

OpPtr make_O123(ThreeIndexForm form, const DihedralConfig& cfg, MatrixVariant variant) {
    std::array<OpPtr, 3> O;
    for (int k = 1; k <= 3; ++k) {
        O[static_cast<std::size_t>(k - 1)] = make_O_one(k, OneIndexForm::GroupSum, cfg, variant);
    }
    TwoIndexForm tf = form == ThreeIndexForm::Left ? TwoIndexForm::Left : TwoIndexForm::Right;
    OpPtr O12 = o_two_expr(1, 2, tf, O, cfg);
    OpPtr O31 = o_two_expr(3, 1, tf, O, cfg);
    OpPtr O23 = o_two_expr(2, 3, tf, O, cfg);
    return o123_expr(form, O, O12, O31, O23, cfg);
}

LadderBasis make_ladder_basis(const DihedralConfig& cfg) {
    OperatorSet s = build_operator_set(cfg);
    return s.ladder;
}

OperatorSet build_operator_set(const DihedralConfig& cfg, MatrixVariant variant) {
    const bool canonical = variant == MatrixVariant::RootReflection;
    auto named = [&](const char* n, OpPtr e) { return canonical ? op_named(n, std::move(e)) : e; };

    OperatorSet s;
    for (int r = 0; r < cfg.root_count(); ++r) {
        s.sigma_tilde.push_back(make_sigma_tilde(r, cfg, variant));
    }
    s.dirac = make_dirac(cfg);
    s.x = make_x(cfg);
    for (int j = 1; j <= 3; ++j) {
        s.O_one[static_cast<std::size_t>(j - 1)] = o_one_group_sum(j, s.sigma_tilde, cfg);
    }
    s.O12 = named("O12", o_two_expr(1, 2, TwoIndexForm::Left, s.O_one, cfg));
    s.O31 = named("O31", o_two_expr(3, 1, TwoIndexForm::Left, s.O_one, cfg));
    s.O23 = named("O23", o_two_expr(2, 3, TwoIndexForm::Left, s.O_one, cfg));
    s.O123 = named("O123", o123_expr(ThreeIndexForm::Left, s.O_one, s.O12, s.O31, s.O23, cfg));

    KScalar i = cfg.k_imaginary();
    LadderBasis& l = s.ladder;
    l.O0 = named("O0", op_scale(-i, s.O12));
    l.Op = named("O+", op_sum({op_scale(i, s.O31), s.O23}));
    l.Om = named("O-", op_sum({op_scale(i, s.O31), op_scale(Rational(-1), s.O23, cfg)}));
    l.T0 = named("T0", op_scale(i, s.O_one[2]));
    l.Tp = named("T+", op_sum({s.O_one[0], op_scale(i, s.O_one[1])}));
    l.Tm = named("T-", op_sum({s.O_one[0], op_scale(-i, s.O_one[1])}));
    l.Lp = named("L+", op_scale(rational_of(1, 2), op_anticommutator(l.O0, l.Op), cfg));
    l.Lm = named("L-", op_scale(rational_of(1, 2), op_anticommutator(l.O0, l.Om), cfg));
    return s;
}

}  // namespace ddsa
