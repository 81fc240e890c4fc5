#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ddsa {

// Exponent triple of x1^a x2^b x3^c.
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }
    bool operator==(const Monomial&) const = default;

    std::uint64_t packed() const {
        return static_cast<std::uint64_t>(e[0]) | (static_cast<std::uint64_t>(e[1]) << 20) |
               (static_cast<std::uint64_t>(e[2]) << 40);
    }
};

// Graded lexicographic order: by total degree, then by exponent tuple.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e < b.e;
    }
};

std::string monomial_name(const Monomial& m);  // "1", "x1^2*x3", ...

// All monomials of total degree <= bound, in grlex order.
std::vector<Monomial> monomials_up_to(int bound);

// All monomials of total degree exactly d, in grlex order.
std::vector<Monomial> monomials_of_degree(int d);

}  // namespace ddsa
