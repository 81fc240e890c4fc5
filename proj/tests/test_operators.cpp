#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ddsa/operators.hpp"

using namespace ddsa;

namespace {

SpinorPoly unit(const DihedralConfig& cfg) { return SpinorPoly::one(cfg.order(), cfg.arity()); }

SpinorPoly mono(const DihedralConfig& cfg, int a, int b, int c, Blade blade = kScalarBlade) {
    return SpinorPoly::basis_element(Monomial{{a, b, c}}, blade, cfg.order(), cfg.arity());
}

// Apply (left - right) to every spinor monomial of degree <= bound.
bool agree_on_basis(const OpPtr& left, const OpPtr& right, const DihedralConfig& cfg, int bound) {
    for (const Monomial& mo : monomials_up_to(bound)) {
        for (int b = 0; b < kBladeCount; ++b) {
            SpinorPoly p =
                SpinorPoly::basis_element(mo, static_cast<Blade>(b), cfg.order(), cfg.arity());
            if (operator_apply(left, p, cfg) != operator_apply(right, p, cfg)) return false;
        }
    }
    return true;
}

OpPtr const_op(const Rational& r, const DihedralConfig& cfg) {
    return op_scale(r, op_identity(), cfg);
}

SpinorPoly random_poly(const DihedralConfig& cfg, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> blade(0, 7);
    SpinorPoly p(cfg.order(), cfg.arity());
    for (int t = 0; t < 4; ++t) {
        int d = deg(rng);
        std::uniform_int_distribution<int> split(0, d);
        int a = split(rng);
        std::uniform_int_distribution<int> split2(0, d - a);
        int b = split2(rng);
        CliffordElt c(cfg.order(), cfg.arity());
        c.set_coord(static_cast<Blade>(blade(rng)), cfg.k_rational(Rational(coeff(rng))));
        p.add_term(Monomial{{a, b, d - a - b}}, c);
    }
    return p;
}

DihedralConfig zero_kappa(int m, int eps) {
    return DihedralConfig(m, eps, {Rational(0), Rational(0), Rational(0)});
}

}  // namespace

TEST_CASE("identity and zero") {
    DihedralConfig cfg(3, 1);
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 5; ++rep) {
        SpinorPoly p = random_poly(cfg, 3, rng);
        CHECK(operator_apply(op_identity(), p, cfg) == p);
        CHECK(operator_apply(op_zero(), p, cfg).is_zero());
    }
}

TEST_CASE("operator_apply is linear") {
    for (int eps : {-1, 1}) {
        DihedralConfig cfg(4, eps);
        OperatorSet s = build_operator_set(cfg);
        std::mt19937_64 rng(20260810);
        std::vector<OpPtr> ops{s.dirac, s.x, s.O12, s.sigma_tilde[1], s.ladder.Lp};
        for (const OpPtr& op : ops) {
            SpinorPoly p = random_poly(cfg, 3, rng);
            SpinorPoly q = random_poly(cfg, 3, rng);
            KScalar c = cfg.k_rational(rational_of(3, 2)) + KScalar::kappa(0, cfg.order(), cfg.arity());
            CHECK(operator_apply(op, p + q, cfg) ==
                  operator_apply(op, p, cfg) + operator_apply(op, q, cfg));
            CHECK(operator_apply(op, p.scaled(c), cfg) == operator_apply(op, p, cfg).scaled(c));
        }
    }
}

TEST_CASE("commutator nodes expand to compose/sum consistently") {
    DihedralConfig cfg(3, -1);
    OperatorSet s = build_operator_set(cfg);
    std::mt19937_64 rng(3);
    OpPtr a = s.O12;
    OpPtr b = s.sigma_tilde[0];
    OpPtr comm_expanded =
        op_sum({op_compose({a, b}), op_scale(Rational(-1), op_compose({b, a}), cfg)});
    OpPtr anti_expanded = op_sum({op_compose({a, b}), op_compose({b, a})});
    for (int rep = 0; rep < 5; ++rep) {
        SpinorPoly p = random_poly(cfg, 3, rng);
        CHECK(operator_apply(op_commutator(a, b), p, cfg) ==
              operator_apply(comm_expanded, p, cfg));
        CHECK(operator_apply(op_anticommutator(a, b), p, cfg) ==
              operator_apply(anti_expanded, p, cfg));
    }
}

TEST_CASE("dirac and dual symbol examples") {
    DihedralConfig cfg(3, 1);
    OpPtr dirac = make_dirac(cfg);
    OpPtr x = make_x(cfg);

    CHECK(operator_apply(dirac, unit(cfg), cfg).is_zero());

    SpinorPoly expected = mono(cfg, 1, 0, 0, 0b001) + mono(cfg, 0, 1, 0, 0b010) +
                          mono(cfg, 0, 0, 1, 0b100);
    CHECK(operator_apply(x, unit(cfg), cfg) == expected);

    // Dirac(x3 (x) 1) = (1 + 2 k0) e3
    KScalar k0 = KScalar::kappa(0, cfg.order(), cfg.arity());
    SpinorPoly img = operator_apply(dirac, mono(cfg, 0, 0, 1), cfg);
    SpinorPoly want = SpinorPoly::basis_element(Monomial{}, 0b100, cfg.order(), cfg.arity())
                          .scaled(cfg.k_one() + k0.scaled(Rational(2)));
    CHECK(img == want);
}

TEST_CASE("{x, x} = 2 eps (x1^2 + x2^2 + x3^2)") {
    for (int eps : {-1, 1}) {
        for (int m : {3, 4}) {
            DihedralConfig cfg(m, eps);
            OpPtr x = make_x(cfg);
            SpinorPoly img = operator_apply(op_anticommutator(x, x), unit(cfg), cfg);
            SpinorPoly want =
                (mono(cfg, 2, 0, 0) + mono(cfg, 0, 2, 0) + mono(cfg, 0, 0, 2))
                    .scaled(Rational(2 * eps));
            CHECK(img == want);
        }
    }
}

TEST_CASE("sigma_tilde examples") {
    for (int eps : {-1, 1}) {
        for (int m : {3, 4, 5, 6}) {
            DihedralConfig cfg(m, eps);
            OpPtr st0 = make_sigma_tilde(0, cfg);
            OpPtr stm = make_sigma_tilde(m, cfg);
            OpPtr st1 = make_sigma_tilde(1, cfg);

            // sigma~_0 applied to 1 gives e3
            CHECK(operator_apply(st0, unit(cfg), cfg) == mono(cfg, 0, 0, 0, 0b100));

            // sigma~_j^2 = eps on degree <= 2
            for (const OpPtr& st : {st0, st1, stm}) {
                CHECK(agree_on_basis(op_power(st, 2), const_op(Rational(eps), cfg), cfg, 2));
            }
            // (sigma~_0 sigma~_m)^2 = -1
            CHECK(agree_on_basis(op_power(op_compose({st0, stm}), 2),
                                 const_op(Rational(-1), cfg), cfg, 2));
            // (sigma~_1 sigma~_m)^m = (-1)^{m+1} eps^m
            int val = (m % 2 == 0 ? -1 : 1) * (m % 2 == 0 ? 1 : eps);
            // (-1)^{m+1}: -1 for even m, +1 for odd m; eps^m: 1 for even, eps for odd
            CHECK(agree_on_basis(op_power(op_compose({st1, stm}), m), const_op(Rational(val), cfg),
                                 cfg, 2));

            CHECK_THROWS_AS(make_sigma_tilde(m + 1, cfg), UnknownRoot);
        }
    }
}

TEST_CASE("one-index symmetry examples") {
    for (int eps : {-1, 1}) {
        DihedralConfig cfg(3, eps);
        OpPtr O3 = make_O_one(3, OneIndexForm::GroupSum, cfg);
        // O_3(1) = eps k0 e3: only alpha_0 has a third component, and the
        // group sum carries the signature factor
        KScalar k0 = KScalar::kappa(0, cfg.order(), cfg.arity());
        CHECK(operator_apply(O3, unit(cfg), cfg) ==
              mono(cfg, 0, 0, 0, 0b100).scaled(k0).scaled(Rational(eps)));
        // unscaled sum drops the factor
        CHECK(operator_apply(make_O_one(3, OneIndexForm::GroupSumUnscaled, cfg), unit(cfg), cfg) ==
              mono(cfg, 0, 0, 0, 0b100).scaled(k0));

        // both defining forms agree
        for (int m : {3, 4, 5}) {
            DihedralConfig c2(m, eps);
            for (int j = 1; j <= 3; ++j) {
                CHECK(agree_on_basis(make_O_one(j, OneIndexForm::GroupSum, c2),
                                     make_O_one(j, OneIndexForm::Bracket, c2), c2, 3));
            }
        }

        // kappa = 0 kills O_j (group-sum form)
        DihedralConfig cz = zero_kappa(4, eps);
        for (int j = 1; j <= 3; ++j) {
            OpPtr oj = make_O_one(j, OneIndexForm::GroupSum, cz);
            CHECK(agree_on_basis(oj, op_zero(), cz, 2));
        }
    }
}

TEST_CASE("two-index symmetry examples") {
    for (int eps : {-1, 1}) {
        DihedralConfig cfg(3, eps);
        OpPtr O12 = make_O_two(1, 2, TwoIndexForm::Left, cfg);
        OpPtr O1 = make_O_one(1, OneIndexForm::GroupSum, cfg);
        OpPtr O2 = make_O_one(2, OneIndexForm::GroupSum, cfg);

        // O_12(1) = (eps/2) e1e2 + O_1(1)e2 - O_2(1)e1, evaluated exactly
        CliffordElt e12 = clifford_mul(CliffordElt::basis_blade(0b001, cfg.order(), cfg.arity()),
                                       CliffordElt::basis_blade(0b010, cfg.order(), cfg.arity()),
                                       eps);
        SpinorPoly expected =
            SpinorPoly::monomial(Monomial{}, e12.scaled(rational_of(eps, 2))) +
            operator_apply(O1, mono(cfg, 0, 0, 0, 0b010), cfg) -
            operator_apply(O2, mono(cfg, 0, 0, 0, 0b001), cfg);
        CHECK(operator_apply(O12, unit(cfg), cfg) == expected);

        // left and right forms agree on degree <= 3
        for (auto [i, j] : {std::pair{1, 2}, {3, 1}, {2, 3}}) {
            CHECK(agree_on_basis(make_O_two(i, j, TwoIndexForm::Left, cfg),
                                 make_O_two(i, j, TwoIndexForm::Right, cfg), cfg, 3));
        }

        // kappa = 0: O_12 = L_12 + (eps/2) e1e2
        DihedralConfig cz = zero_kappa(3, eps);
        CliffordElt e12z = clifford_mul(CliffordElt::basis_blade(0b001, cz.order(), cz.arity()),
                                        CliffordElt::basis_blade(0b010, cz.order(), cz.arity()),
                                        eps);
        OpPtr rhs = op_sum({make_L(1, 2, cz), op_clifford(e12z.scaled(rational_of(eps, 2)))});
        CHECK(agree_on_basis(make_O_two(1, 2, TwoIndexForm::Left, cz), rhs, cz, 3));

        CHECK_THROWS_AS(make_O_two(2, 2, TwoIndexForm::Left, cfg), DegenerateIndices);
    }
}

TEST_CASE("three-index symmetry examples") {
    for (int eps : {-1, 1}) {
        // kappa = 0: O_123(1) = eps e1e2e3 by hand expansion
        DihedralConfig cz = zero_kappa(3, eps);
        OpPtr O123 = make_O123(ThreeIndexForm::Left, cz);
        CHECK(operator_apply(O123, unit(cz), cz) ==
              mono(cz, 0, 0, 0, 0b111).scaled(Rational(eps)));

        // left and right forms agree on degree <= 3
        DihedralConfig cfg(3, eps);
        CHECK(agree_on_basis(make_O123(ThreeIndexForm::Left, cfg),
                             make_O123(ThreeIndexForm::Right, cfg), cfg, 3));

        // [O_123, sigma~_0] = 0 on degree <= 2
        OpPtr st0 = make_sigma_tilde(0, cfg);
        CHECK(agree_on_basis(op_commutator(make_O123(ThreeIndexForm::Left, cfg), st0), op_zero(),
                             cfg, 2));
    }
}

TEST_CASE("sigma_tilde anticommutes with dirac and x on degree <= 2") {
    for (int eps : {-1, 1}) {
        DihedralConfig cfg(4, eps);
        OperatorSet s = build_operator_set(cfg);
        for (int r = 0; r < cfg.root_count(); ++r) {
            CHECK(agree_on_basis(op_anticommutator(s.sigma_tilde[static_cast<std::size_t>(r)], s.dirac),
                                 op_zero(), cfg, 2));
            CHECK(agree_on_basis(op_anticommutator(s.sigma_tilde[static_cast<std::size_t>(r)], s.x),
                                 op_zero(), cfg, 2));
        }
    }
}

TEST_CASE("x squared is eps times the squared radius") {
    DihedralConfig cfg(3, -1);
    OpPtr x = make_x(cfg);
    OpPtr r2 = op_sum({op_power(op_coord(1), 2), op_power(op_coord(2), 2),
                       op_power(op_coord(3), 2)});
    CHECK(agree_on_basis(op_power(x, 2), op_scale(Rational(cfg.epsilon()), r2, cfg), cfg, 2));
}

TEST_CASE("ladder basis examples") {
    for (int eps : {-1, 1}) {
        DihedralConfig cz = zero_kappa(3, eps);
        LadderBasis lz = make_ladder_basis(cz);

        // T_+/- vanish when kappa = 0
        CHECK(agree_on_basis(lz.Tp, op_zero(), cz, 2));
        CHECK(agree_on_basis(lz.Tm, op_zero(), cz, 2));

        // O_0^2 = 1/4 on the degree-0 slice
        for (int b = 0; b < kBladeCount; ++b) {
            SpinorPoly p = mono(cz, 0, 0, 0, static_cast<Blade>(b));
            CHECK(operator_apply(op_power(lz.O0, 2), p, cz) == p.scaled(rational_of(1, 4)));
        }

        // [O_0, L_+] = L_+ on degree <= 2 (symbolic kappa)
        DihedralConfig cfg(3, eps);
        LadderBasis l = make_ladder_basis(cfg);
        CHECK(agree_on_basis(op_commutator(l.O0, l.Lp), l.Lp, cfg, 2));
    }
}

TEST_CASE("op_equal and op_print basics") {
    DihedralConfig cfg(3, 1);
    OperatorSet s = build_operator_set(cfg);
    CHECK(op_equal(s.O12, s.O12));
    CHECK(!op_equal(s.O12, s.O31));
    CHECK(op_print(s.O12) == "O12");
    CHECK(op_print(op_commutator(s.O12, s.O31)) == "[O12,O31]");
    CHECK(op_print(op_sum({op_coord(1), op_scale(Rational(-1), op_dunkl(2), cfg)})) == "x1 - D2");
    CHECK(op_print(op_compose({op_coord(1), op_dunkl(2)})) == "x1*D2");
}
