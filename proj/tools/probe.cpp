// Scratch probe: resolve the conjugation-sign and third-bracket questions
// experimentally before freezing the check suite. Not part of the build.
#include <iostream>

#include "ddsa/operators.hpp"

using namespace ddsa;

namespace {

bool agree(const OpPtr& l, const OpPtr& r, const DihedralConfig& cfg, int bound) {
    for (const Monomial& mo : monomials_up_to(bound)) {
        for (int b = 0; b < kBladeCount; ++b) {
            SpinorPoly p = SpinorPoly::basis_element(mo, static_cast<Blade>(b), cfg.order(),
                                                     cfg.arity());
            if (operator_apply(l, p, cfg) != operator_apply(r, p, cfg)) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    for (int m : {3, 4}) {
        for (int eps : {-1, 1}) {
            DihedralConfig cfg(m, eps);
            OperatorSet s = build_operator_set(cfg);
            const LadderBasis& l = s.ladder;
            std::cout << "== m=" << m << " eps=" << eps << "\n";
            auto R = [&](long n, long d = 1) { return rational_of(n, d); };
            auto sc = [&](const Rational& r, OpPtr a) { return op_scale(r, std::move(a), cfg); };

            // Eq. 14, sigma_j conjugations, j = 1..m: candidates for the
            // coefficient pair (a,b) in st_j O = (a O31 + b O23) st_j.
            for (int j = 1; j <= m; ++j) {
                KScalar c2 = cfg.k_cyclotomic(trig_value(TrigKind::Cos, j, m, true));
                KScalar s2 = cfg.k_cyclotomic(trig_value(TrigKind::Sin, j, m, true));
                OpPtr stj = s.sigma_tilde[static_cast<std::size_t>(j)];
                OpPtr lhs31 = op_compose({stj, s.O31});
                OpPtr lhs23 = op_compose({stj, s.O23});
                auto rhs = [&](const KScalar& a, const KScalar& b) {
                    return op_compose({op_sum({op_scale(a, s.O31), op_scale(b, s.O23)}), stj});
                };
                std::cout << "  j=" << j << " O31: printed(c,s)=" << agree(lhs31, rhs(c2, s2), cfg, 2)
                          << " derived(c,-s)=" << agree(lhs31, rhs(c2, -s2), cfg, 2) << "\n";
                std::cout << "  j=" << j << " O23: printed(-c,s)=" << agree(lhs23, rhs(-c2, s2), cfg, 2)
                          << " derived(-s,-c)=" << agree(lhs23, rhs(-s2, -c2), cfg, 2)
                          << " alt(s,-c)=" << agree(lhs23, rhs(s2, -c2), cfg, 2) << "\n";
                OpPtr lhs12 = op_compose({stj, s.O12});
                std::cout << "  j=" << j << " O12: -O12 stj="
                          << agree(lhs12, sc(R(-1), op_compose({s.O12, stj})), cfg, 2) << "\n";
            }

            // Prop 3 third line: literal [O0,O+] vs corrected [O+,O-].
            OpPtr rhs3 = op_sum({sc(R(2), l.O0),
                                 sc(R(-1), op_anticommutator(s.O123, l.T0)),
                                 sc(R(eps), op_commutator(l.Tp, l.Tm))});
            std::cout << "  third: literal [O0,O+]=" << agree(op_commutator(l.O0, l.Op), rhs3, cfg, 2)
                      << " corrected [O+,O-]=" << agree(op_commutator(l.Op, l.Om), rhs3, cfg, 2)
                      << "\n";

            // Prop 3 first two lines.
            OpPtr rhs1 = op_sum({l.Op, op_anticommutator(s.O123, l.Tp),
                                 sc(R(eps), op_commutator(l.T0, l.Tp))});
            OpPtr rhs2 = op_sum({sc(R(-1), l.Om), op_anticommutator(s.O123, l.Tm),
                                 sc(R(-eps), op_commutator(l.T0, l.Tm))});
            std::cout << "  line1 [O0,O+]=" << agree(op_commutator(l.O0, l.Op), rhs1, cfg, 2)
                      << " line2 [O0,O-]=" << agree(op_commutator(l.O0, l.Om), rhs2, cfg, 2) << "\n";

            // Prop 3 T-table, the asymmetric pair plus neighbours.
            auto anti = [&](OpPtr a, OpPtr b, const Rational& sign, OpPtr c, OpPtr d) {
                return agree(op_compose({a, b}), sc(sign, op_compose({c, d})), cfg, 2);
            };
            std::cout << "  T0O0=+O0T0: " << anti(l.T0, l.O0, R(1), l.O0, l.T0) << "\n";
            std::cout << "  T0O+=-O+T0: " << anti(l.T0, l.Op, R(-1), l.Op, l.T0) << "\n";
            std::cout << "  T0O-=-O-T0: " << anti(l.T0, l.Om, R(-1), l.Om, l.T0) << "\n";
            std::cout << "  T+O0=-O0T+: " << anti(l.Tp, l.O0, R(-1), l.O0, l.Tp) << "\n";
            std::cout << "  T+O-=-O+T-: " << anti(l.Tp, l.Om, R(-1), l.Op, l.Tm) << "\n";
            std::cout << "  T-O+=+O-T+: " << anti(l.Tm, l.Op, R(1), l.Om, l.Tp) << "\n";
            std::cout << "  T-O+=-O-T+: " << anti(l.Tm, l.Op, R(-1), l.Om, l.Tp) << "\n";
            std::cout << "  T-O0=-O0T-: " << anti(l.Tm, l.O0, R(-1), l.O0, l.Tm) << "\n";
            std::cout << "  T-T0=-T0T-: " << anti(l.Tm, l.T0, R(-1), l.T0, l.Tm) << "\n";
            std::cout << "  T+T0=-T0T+: " << anti(l.Tp, l.T0, R(-1), l.T0, l.Tp) << "\n";

            // Prop 2.2 and Eq. 13 first line.
            OpPtr p22 = op_sum({sc(R(-eps, 4), op_identity()),
                                op_power(s.O_one[0], 2), op_power(s.O_one[1], 2),
                                op_power(s.O_one[2], 2),
                                sc(R(eps), op_sum({op_power(s.O12, 2), op_power(s.O31, 2),
                                                   op_power(s.O23, 2)}))});
            std::cout << "  prop2.2: " << agree(op_power(s.O123, 2), p22, cfg, 2) << "\n";
            OpPtr e13a = op_sum({s.O23, sc(R(2), op_compose({s.O_one[0], s.O123})),
                                 sc(R(eps), op_commutator(s.O_one[1], s.O_one[2]))});
            std::cout << "  eq13 line1: " << agree(op_commutator(s.O12, s.O31), e13a, cfg, 2) << "\n";

            // P4 (Eqs. 18-21) quick pass at degree 2.
            OpPtr p18 = op_sum({sc(R(-eps, 4), op_identity()), op_compose({l.Tp, l.Tm}),
                                sc(R(-1), op_power(l.T0, 2)),
                                sc(R(-eps), op_sum({op_power(l.O0, 2), sc(R(-1), l.O0),
                                                    op_compose({l.Op, l.Om}),
                                                    sc(R(2), op_compose({s.O123, l.T0}))}))});
            OpPtr p19 = op_sum({sc(R(-eps, 4), op_identity()), op_compose({l.Tm, l.Tp}),
                                sc(R(-1), op_power(l.T0, 2)),
                                sc(R(-eps), op_sum({op_power(l.O0, 2), l.O0,
                                                    sc(R(-1), op_compose({l.Om, l.Op})),
                                                    sc(R(-2), op_compose({s.O123, l.T0}))}))});
            std::cout << "  eq18: " << agree(op_power(s.O123, 2), p18, cfg, 2)
                      << "  eq19: " << agree(op_power(s.O123, 2), p19, cfg, 2) << "\n";

            auto sq_shift = [&](OpPtr base, const Rational& shift) {
                OpPtr t = op_sum({std::move(base), sc(shift, op_identity())});
                return op_power(t, 2);
            };
            OpPtr i123pT0 = op_sum({sc(R(eps), s.O123), l.T0});
            OpPtr i123mT0 = op_sum({sc(R(eps), s.O123), sc(R(-1), l.T0)});
            OpPtr p20 = op_sum({sc(R(eps), op_compose({l.Tp, l.Tm})),
                                sc(R(-1), sq_shift(l.O0, R(-1, 2))),
                                sc(R(-eps), op_power(i123pT0, 2))});
            OpPtr p21 = op_sum({sc(R(eps), op_compose({l.Tm, l.Tp})),
                                sc(R(-1), sq_shift(l.O0, R(1, 2))),
                                sc(R(-eps), op_power(i123mT0, 2))});
            std::cout << "  eq20: " << agree(op_compose({l.Op, l.Om}), p20, cfg, 2)
                      << "  eq21: " << agree(op_compose({l.Om, l.Op}), p21, cfg, 2) << "\n";

            // P5 factorizations at degree 2.
            OpPtr f24 = sc(R(-1), op_compose({op_sum({sq_shift(l.O0, R(-1, 2)),
                                                      sc(R(eps), op_power(i123pT0, 2))}),
                                              op_sum({sq_shift(l.O0, R(-1, 2)),
                                                      sc(R(-eps), op_compose({l.Tp, l.Tm}))})}));
            OpPtr f25 = sc(R(-1), op_compose({op_sum({sq_shift(l.O0, R(1, 2)),
                                                      sc(R(eps), op_power(i123mT0, 2))}),
                                              op_sum({sq_shift(l.O0, R(1, 2)),
                                                      sc(R(-eps), op_compose({l.Tm, l.Tp}))})}));
            std::cout << "  eq24: " << agree(op_compose({l.Lp, l.Lm}), f24, cfg, 2)
                      << "  eq25: " << agree(op_compose({l.Lm, l.Lp}), f25, cfg, 2) << "\n";
        }
    }
    return 0;
}
