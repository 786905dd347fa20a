#pragma once

#include <string>

#include "sgb/types.hpp"

namespace sgb {

/// x^{(α, d)} in the multigraded algebra: exponent α ∈ Z^n, degree d ∈ N^{r}.
struct Monomial {
    LatticePoint alpha;
    MultiDegree degree;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.alpha.size() == b.alpha.size() && a.degree.size() == b.degree.size() &&
               a.alpha == b.alpha && a.degree == b.degree;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.alpha + b.alpha, a.degree + b.degree};
    }
};

/// "x^(1,0)e(0,1,1)": exponent then degree.
std::string to_string(const Monomial& m);
std::string to_string(const IntVector& v);

} // namespace sgb
