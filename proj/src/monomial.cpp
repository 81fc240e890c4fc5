#include "ddsa/monomial.hpp"

#include <sstream>

namespace ddsa {

std::string monomial_name(const Monomial& m) {
    if (m.degree() == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        int e = m.e[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << (i + 1);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    for (int a = 0; a <= d; ++a) {
        for (int b = 0; b <= d - a; ++b) {
            out.push_back(Monomial{{a, b, d - a - b}});
        }
    }
    // grlex within a fixed degree is plain lex on the tuples
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<Monomial> monomials_up_to(int bound) {
    std::vector<Monomial> out;
    for (int d = 0; d <= bound; ++d) {
        auto layer = monomials_of_degree(d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace ddsa
