#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "ddsa/clifford.hpp"
#include "ddsa/config.hpp"

using namespace ddsa;

namespace {

constexpr int kOrder = 12;
constexpr int kArity = 2;

CliffordElt blade_elt(Blade b) { return CliffordElt::basis_blade(b, kOrder, kArity); }

KScalar ks_rat(long n, long d = 1) {
    return KScalar::from_rational(rational_of(n, d), kOrder, kArity);
}

// Order-independent sign oracle: bubble-sort the concatenated index lists
// counting swaps, then cancel equal neighbours with one factor of epsilon
// each.
std::pair<int, int> oracle_sign(Blade a, Blade b) {
    std::vector<int> idx;
    for (int i = 0; i < 3; ++i) {
        if (a & (1 << i)) idx.push_back(i);
    }
    for (int i = 0; i < 3; ++i) {
        if (b & (1 << i)) idx.push_back(i);
    }
    int swaps = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
            if (idx[k] > idx[k + 1]) {
                std::swap(idx[k], idx[k + 1]);
                ++swaps;
                moved = true;
            }
        }
    }
    int eps_power = 0;
    for (std::size_t k = 0; k + 1 < idx.size();) {
        if (idx[k] == idx[k + 1]) {
            idx.erase(idx.begin() + static_cast<long>(k), idx.begin() + static_cast<long>(k) + 2);
            ++eps_power;
            if (k > 0) --k;
        } else {
            ++k;
        }
    }
    return {swaps % 2 == 0 ? 1 : -1, eps_power};
}

CliffordElt random_elt(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    CliffordElt e(kOrder, kArity);
    for (int b = 0; b < kBladeCount; ++b) {
        e.set_coord(static_cast<Blade>(b), ks_rat(num(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("blade_mul examples") {
    // e1 * e1 = (eps, scalar)
    BladeProduct p = blade_mul(0b001, 0b001);
    CHECK(p.sign == 1);
    CHECK(p.eps_power == 1);
    CHECK(p.blade == kScalarBlade);

    // e1e2 * e2e3 = (eps, e1e3): one contraction of e2
    p = blade_mul(0b011, 0b110);
    CHECK(p.sign == 1);
    CHECK(p.eps_power == 1);
    CHECK(p.blade == 0b101);

    // e1e2e3 * e1e2e3 = -eps^3 = -eps on the scalar blade
    p = blade_mul(0b111, 0b111);
    CHECK(p.sign == -1);
    CHECK(p.eps_power == 3);
    CHECK(p.blade == kScalarBlade);
    CHECK(resolve_sign(p, 1) == -1);
    CHECK(resolve_sign(p, -1) == 1);
}

TEST_CASE("blade_mul agrees with the transposition-sort oracle on all pairs") {
    for (int a = 0; a < kBladeCount; ++a) {
        for (int b = 0; b < kBladeCount; ++b) {
            BladeProduct p = blade_mul(static_cast<Blade>(a), static_cast<Blade>(b));
            auto [sign, eps_power] = oracle_sign(static_cast<Blade>(a), static_cast<Blade>(b));
            CHECK(p.sign == sign);
            CHECK(p.eps_power == eps_power);
            CHECK(p.blade == static_cast<Blade>(a ^ b));
        }
    }
}

TEST_CASE("anticommutation relations {e_j, e_k} = 2 eps delta_jk") {
    for (int eps : {-1, 1}) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                CliffordElt ej = blade_elt(static_cast<Blade>(1 << j));
                CliffordElt ek = blade_elt(static_cast<Blade>(1 << k));
                CliffordElt anti = clifford_mul(ej, ek, eps) + clifford_mul(ek, ej, eps);
                CliffordElt expected(kOrder, kArity);
                if (j == k) expected = CliffordElt::scalar(ks_rat(2 * eps));
                CHECK(anti == expected);
            }
        }
    }
}

TEST_CASE("clifford_arith examples") {
    for (int eps : {-1, 1}) {
        // (e1 + e2)^2 = 2 eps: cross terms cancel
        CliffordElt s = blade_elt(0b001) + blade_elt(0b010);
        CHECK(clifford_mul(s, s, eps) == CliffordElt::scalar(ks_rat(2 * eps)));

        // 1 * x = x
        std::mt19937_64 rng(42);
        CliffordElt one = CliffordElt::scalar(ks_rat(1));
        for (int rep = 0; rep < 10; ++rep) {
            CliffordElt x = random_elt(rng);
            CHECK(clifford_mul(one, x, eps) == x);
            CHECK(clifford_mul(x, one, eps) == x);
        }

        // e1e2 * e1e2 = -eps^2 = -1
        CliffordElt b12 = blade_elt(0b011);
        CHECK(clifford_mul(b12, b12, eps) == CliffordElt::scalar(ks_rat(-1)));
    }
}

TEST_CASE("clifford_from_vector") {
    // alpha_0 = (0,0,1) -> e3
    CliffordElt v = CliffordElt::from_vector(
        {KScalar(kOrder, kArity), KScalar(kOrder, kArity), ks_rat(1)});
    CHECK(v == blade_elt(0b100));

    // zero vector -> 0
    CliffordElt z = CliffordElt::from_vector(
        {KScalar(kOrder, kArity), KScalar(kOrder, kArity), KScalar(kOrder, kArity)});
    CHECK(z.is_zero());

    // alpha_1 for m = 4: sin(pi/4) e1 - cos(pi/4) e2 squares to eps
    const int n8 = cyclotomic_order_for(4);
    Cyclotomic s = trig_value(TrigKind::Sin, 1, 4, false);
    Cyclotomic c = trig_value(TrigKind::Cos, 1, 4, false);
    CliffordElt a1 = CliffordElt::from_vector({KScalar::from_cyclotomic(s, 3),
                                               KScalar::from_cyclotomic(-c, 3),
                                               KScalar(n8, 3)});
    for (int eps : {-1, 1}) {
        CHECK(clifford_mul(a1, a1, eps) ==
              CliffordElt::scalar(KScalar::from_rational(Rational(eps), n8, 3)));
    }
}

TEST_CASE("every unit root of a config squares to eps") {
    for (int m : {3, 4, 5, 6}) {
        for (int eps : {-1, 1}) {
            DihedralConfig cfg(m, eps);
            for (int r = 0; r < cfg.root_count(); ++r) {
                const Root& root = cfg.root(r);
                CliffordElt v = CliffordElt::from_vector({cfg.k_cyclotomic(root.v[0]),
                                                          cfg.k_cyclotomic(root.v[1]),
                                                          cfg.k_cyclotomic(root.v[2])});
                CHECK(clifford_mul(v, v, eps) ==
                      CliffordElt::scalar(cfg.k_rational(Rational(eps))));
            }
        }
    }
}

TEST_CASE("associativity and bilinearity on random triples") {
    std::mt19937_64 rng(20260810);
    for (int eps : {-1, 1}) {
        for (int rep = 0; rep < 25; ++rep) {
            CliffordElt a = random_elt(rng);
            CliffordElt b = random_elt(rng);
            CliffordElt c = random_elt(rng);
            CHECK(clifford_mul(clifford_mul(a, b, eps), c, eps) ==
                  clifford_mul(a, clifford_mul(b, c, eps), eps));
            CHECK(clifford_mul(a, b + c, eps) ==
                  clifford_mul(a, b, eps) + clifford_mul(a, c, eps));
        }
    }
}

TEST_CASE("context mismatch is rejected") {
    CliffordElt a(12, 2);
    CliffordElt b(8, 3);
    CHECK_THROWS_AS(a + b, SignatureMismatch);
    CHECK_THROWS_AS(clifford_mul(a, b, 1), SignatureMismatch);
}

TEST_CASE("blade names") {
    CHECK(blade_name(kScalarBlade) == "1");
    CHECK(blade_name(0b001) == "e1");
    CHECK(blade_name(0b101) == "e13");
    CHECK(blade_name(0b111) == "e123");
}
