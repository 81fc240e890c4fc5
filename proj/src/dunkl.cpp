#include "ddsa/dunkl.hpp"

namespace ddsa {

namespace {

std::uint64_t cache_key(int tag, const Monomial& mo) {
    return (static_cast<std::uint64_t>(mo.e[0]) << 48) |
           (static_cast<std::uint64_t>(mo.e[1]) << 32) |
           (static_cast<std::uint64_t>(mo.e[2]) << 16) | static_cast<std::uint64_t>(tag);
}

void cpoly_add(CPoly& acc, const Monomial& mo, const Cyclotomic& c) {
    auto it = acc.find(mo);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(mo, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    CPoly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial mo{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
            cpoly_add(out, mo, ca * cb);
        }
    }
    return out;
}

CPoly compute_substitution(const GroupMatrix& g, const Monomial& mo, const DihedralConfig& cfg) {
    CPoly acc{{Monomial{}, cfg.c_one()}};
    for (int axis = 0; axis < 3; ++axis) {
        int e = mo.e[static_cast<std::size_t>(axis)];
        if (e == 0) continue;
        CPoly linear;
        for (int j = 0; j < 3; ++j) {
            const Cyclotomic& c = g.sub[static_cast<std::size_t>(axis)][static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            Monomial xj;
            xj.e[static_cast<std::size_t>(j)] = 1;
            linear.emplace(xj, c);
        }
        for (int k = 0; k < e; ++k) acc = cpoly_mul(acc, linear);
    }
    return acc;
}

// Exact division by the linear form <x, alpha>: recursive leading-term
// elimination in the pivot variable. ScaleFn multiplies a coefficient by
// a Cyclotomic factor.
template <class T, class ScaleFn>
std::map<Monomial, T, GrlexLess> divide_linear(const std::map<Monomial, T, GrlexLess>& f,
                                               const Root& root, ScaleFn scale) {
    const int p = root.pivot;
    std::map<Monomial, T, GrlexLess> rem = f;
    std::map<Monomial, T, GrlexLess> quo;
    auto add_into = [](std::map<Monomial, T, GrlexLess>& acc, const Monomial& mo, T val) {
        auto it = acc.find(mo);
        if (it == acc.end()) {
            if (!val.is_zero()) acc.emplace(mo, std::move(val));
            return;
        }
        it->second = it->second + val;
        if (it->second.is_zero()) acc.erase(it);
    };
    while (!rem.empty()) {
        auto best = rem.begin();
        for (auto it = rem.begin(); it != rem.end(); ++it) {
            if (it->first.e[static_cast<std::size_t>(p)] >
                best->first.e[static_cast<std::size_t>(p)]) {
                best = it;
            }
        }
        if (best->first.e[static_cast<std::size_t>(p)] == 0) {
            throw NonZeroRemainder("polynomial not divisible by <x, alpha>");
        }
        Monomial qm = best->first;
        qm.e[static_cast<std::size_t>(p)] -= 1;
        T qc = scale(best->second, root.pivot_inverse);
        for (int axis = 0; axis < 3; ++axis) {
            const Cyclotomic& comp = root.v[static_cast<std::size_t>(axis)];
            if (comp.is_zero()) continue;
            Monomial t = qm;
            t.e[static_cast<std::size_t>(axis)] += 1;
            T sub = scale(qc, comp);
            add_into(rem, t, -sub);
        }
        add_into(quo, qm, std::move(qc));
    }
    return quo;
}

CPoly compute_divided_difference(int root_idx, const Monomial& mo, const DihedralConfig& cfg) {
    const Root& root = cfg.root(root_idx);
    CPoly num{{mo, cfg.c_one()}};
    const CPoly& reflected = substituted_monomial(cfg.reflection(root_idx), mo, cfg);
    for (const auto& [m2, c] : reflected) cpoly_add(num, m2, -c);
    return divide_linear(num, root,
                         [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; });
}

KPoly compute_dunkl_row(int axis, const Monomial& mo, const DihedralConfig& cfg) {
    KPoly row;
    const int e = mo.e[static_cast<std::size_t>(axis)];
    if (e > 0) {
        Monomial dm = mo;
        dm.e[static_cast<std::size_t>(axis)] -= 1;
        row.emplace(dm, cfg.k_rational(Rational(e)));
    }
    for (int r = 0; r < cfg.root_count(); ++r) {
        const KScalar& factor = cfg.dunkl_factor(r, axis);
        if (factor.is_zero()) continue;
        const CPoly& dd = divided_difference(r, mo, cfg);
        for (const auto& [m2, c] : dd) {
            KScalar term = factor.scaled(c);
            auto it = row.find(m2);
            if (it == row.end()) {
                if (!term.is_zero()) row.emplace(m2, std::move(term));
            } else {
                it->second = it->second + term;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }
    return row;
}

}  // namespace

const CPoly& substituted_monomial(const GroupMatrix& g, const Monomial& mo,
                                  const DihedralConfig& cfg) {
    if (g.cache_id < 0) throw AlgebraError("substitution cache needs an interned matrix");
    auto& caches = cfg.caches();
    const std::uint64_t key = cache_key(g.cache_id, mo);
    std::lock_guard<std::mutex> lock(caches.subst_mutex);
    auto it = caches.subst.find(key);
    if (it == caches.subst.end()) {
        it = caches.subst.emplace(key, compute_substitution(g, mo, cfg)).first;
    }
    return it->second;
}

const CPoly& divided_difference(int root_idx, const Monomial& mo, const DihedralConfig& cfg) {
    auto& caches = cfg.caches();
    const std::uint64_t key = cache_key(root_idx, mo);
    {
        std::lock_guard<std::mutex> lock(caches.divdiff_mutex);
        auto it = caches.divdiff.find(key);
        if (it != caches.divdiff.end()) return it->second;
    }
    CPoly value = compute_divided_difference(root_idx, mo, cfg);
    std::lock_guard<std::mutex> lock(caches.divdiff_mutex);
    return caches.divdiff.emplace(key, std::move(value)).first->second;
}

const KPoly& dunkl_row(int axis, const Monomial& mo, const DihedralConfig& cfg) {
    if (axis < 1 || axis > 3) throw AlgebraError("Dunkl axis must be 1, 2 or 3");
    auto& caches = cfg.caches();
    const std::uint64_t key = cache_key(axis, mo);
    {
        std::lock_guard<std::mutex> lock(caches.dunkl_mutex);
        auto it = caches.dunkl.find(key);
        if (it != caches.dunkl.end()) return it->second;
    }
    KPoly value = compute_dunkl_row(axis - 1, mo, cfg);
    std::lock_guard<std::mutex> lock(caches.dunkl_mutex);
    return caches.dunkl.emplace(key, std::move(value)).first->second;
}

SpinorPoly apply_group_element(const GroupMatrix& g, const SpinorPoly& p,
                               const DihedralConfig& cfg) {
    SpinorPoly out(p.order(), p.arity());
    for (const auto& [mo, cliff] : p.terms()) {
        if (g.cache_id >= 0) {
            const CPoly& sub = substituted_monomial(g, mo, cfg);
            for (const auto& [m2, c] : sub) out.add_term(m2, cliff.scaled(cfg.k_cyclotomic(c)));
        } else {
            CPoly sub = compute_substitution(g, mo, cfg);
            for (const auto& [m2, c] : sub) out.add_term(m2, cliff.scaled(cfg.k_cyclotomic(c)));
        }
    }
    return out;
}

SpinorPoly apply_reflection(int root_idx, const SpinorPoly& p, const DihedralConfig& cfg) {
    return apply_group_element(cfg.reflection(root_idx), p, cfg);
}

SpinorPoly divide_by_linear_form(const SpinorPoly& f, int root_idx, const DihedralConfig& cfg) {
    const Root& root = cfg.root(root_idx);
    const int arity = cfg.arity();
    auto quo = divide_linear(f.terms(), root, [&](const CliffordElt& c, const Cyclotomic& b) {
        return c.scaled(KScalar::from_cyclotomic(b, arity));
    });
    SpinorPoly out(f.order(), f.arity());
    for (auto& [mo, c] : quo) out.add_term(mo, c);
    return out;
}

SpinorPoly dunkl_apply(int axis, const SpinorPoly& p, const DihedralConfig& cfg) {
    SpinorPoly out(p.order(), p.arity());
    for (const auto& [mo, cliff] : p.terms()) {
        const KPoly& row = dunkl_row(axis, mo, cfg);
        for (const auto& [m2, s] : row) out.add_term(m2, cliff.scaled(s));
    }
    return out;
}

SpinorPoly multiply_by_coordinate(int axis, const SpinorPoly& p) {
    return p.multiply_by_coordinate(axis);
}

}  // namespace ddsa
