#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace sgb {

using Integer = std::int64_t;
using Index = Eigen::Index;

/// Exact rational scalar. Canonical form (reduced, positive denominator) is
/// maintained by GMP after every operation.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

using IntMatrix = DenseMatrix<Integer>;
using IntVector = DenseVector<Integer>;

/// Exponent vector in Z^n.
using LatticePoint = IntVector;
/// Element of N^{r}; componentwise partial order.
using MultiDegree = IntVector;

/// Strict lexicographic comparison, usable as a map comparator.
struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline std::vector<Integer> to_std(const IntVector& v) { return {v.begin(), v.end()}; }

inline IntVector from_std(const std::vector<Integer>& v) {
    IntVector out(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = v[i];
    return out;
}

inline IntVector unit_vector(Index size, Index i) {
    IntVector e = IntVector::Zero(size);
    e(i) = 1;
    return e;
}

/// d >= e componentwise.
inline bool degree_geq(const MultiDegree& d, const MultiDegree& e) {
    return d.size() == e.size() && (d.array() >= e.array()).all();
}

inline bool is_nonnegative(const IntVector& v) { return (v.array() >= 0).all(); }

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad coefficients, inconsistent lengths, unknown names.
class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Well-formed but unusable configuration, e.g. a degenerate weight matrix.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A square block that must be invertible is not.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, Index column)
        : Error(what), column_(column) {}
    Index column() const noexcept { return column_; }

private:
    Index column_;
};

/// The input system does not satisfy the hypotheses of the torus solver
/// (no solutions at infinity, finitely many torus solutions).
class AssumptionViolation : public Error {
public:
    using Error::Error;
};

} // namespace sgb
