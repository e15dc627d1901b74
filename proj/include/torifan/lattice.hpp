#pragma once

// Exact integer and rational linear algebra over Z^d.
//
// All matrices are Eigen dense matrices over GMP-backed multiprecision
// scalars; nothing here ever rounds. Columns of an IntMatrix are lattice
// vectors.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torifan {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using LatticeVector = VectorX<Integer>;
using IntMatrix = MatrixX<Integer>;
using RationalVector = VectorX<Rational>;
using RationalMatrix = MatrixX<Rational>;

using Index = Eigen::Index;

/// Builds a lattice vector from small integer literals.
LatticeVector lattice_vector(std::initializer_list<long> coords);
/// Builds a matrix whose columns are the given vectors (all of equal length).
IntMatrix from_columns(const std::vector<LatticeVector>& columns, Index rows);

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    MatrixX<Scalar> a = m;
    const Index n = a.rows();
    if (n == 0)
        return Scalar(1);
    Scalar sign(1);
    Scalar prev(1);
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return Scalar(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Classical adjugate: adj(m) * m = det(m) * I.
template <typename Derived>
MatrixX<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw std::invalid_argument("adjugate: matrix is not square");
    const Index n = m.rows();
    MatrixX<Scalar> adj(n, n);
    if (n == 1) {
        adj(0, 0) = Scalar(1);
        return adj;
    }
    MatrixX<Scalar> minor(n - 1, n - 1);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            for (Index r = 0, mr = 0; r < n; ++r) {
                if (r == i)
                    continue;
                for (Index c = 0, mc = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor(mr, mc++) = m(r, c);
                }
                ++mr;
            }
            Scalar cof = determinant(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : Scalar(-cof);
        }
    }
    return adj;
}

/// An integer square matrix with determinant +-1, i.e. an automorphism of N.
class UniMatrix {
public:
    /// Throws std::invalid_argument unless `m` is square with |det| = 1.
    explicit UniMatrix(IntMatrix m);

    static UniMatrix identity(Index n);

    const IntMatrix& matrix() const { return m_; }
    Index size() const { return m_.rows(); }
    Integer det() const { return determinant(m_); }
    UniMatrix inverse() const;

    LatticeVector operator*(const LatticeVector& v) const { return m_ * v; }
    UniMatrix operator*(const UniMatrix& other) const {
        return UniMatrix(IntMatrix(m_ * other.m_));
    }

private:
    IntMatrix m_;
};

/// U * input * V = D, with D diagonal and d_1 | d_2 | ... (all d_i >= 0).
struct SmithDecomposition {
    UniMatrix left;
    IntMatrix diagonal;
    UniMatrix right;

    /// Diagonal entries d_1, ..., d_min(rows, cols).
    std::vector<Integer> invariant_factors() const;
    /// Number of nonzero invariant factors.
    Index rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Columns spanning the integer kernel {x in Z^k : m x = 0} as a lattice.
IntMatrix integer_kernel(const IntMatrix& m);

/// gcd of the coordinates; 0 for the zero vector.
Integer content(const LatticeVector& v);

/// True iff gcd of the coordinates is 1. Throws on the zero vector.
bool is_primitive(const LatticeVector& v);

/// v divided by its content. Throws on the zero vector.
LatticeVector primitive_part(const LatticeVector& v);

/// Rank over Q.
Index rank(const RationalMatrix& m);
inline Index rank(const IntMatrix& m) { return rank(RationalMatrix(m.cast<Rational>())); }

/// Unique x with a x = b for a matrix of full column rank; absent if b is not
/// in the column span. Throws std::invalid_argument if the columns are
/// dependent.
std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             const RationalVector& b);

/// The coordinates of `target` in the (independent) columns of `basis`,
/// returned only when they are all nonnegative integers.
std::optional<LatticeVector> solve_nonneg_integer(const IntMatrix& basis,
                                                  const LatticeVector& target);

/// Lexicographic order on equal-length vectors.
bool lex_less(const LatticeVector& a, const LatticeVector& b);
bool equal(const LatticeVector& a, const LatticeVector& b);

/// Numerator of an integral rational; throws std::domain_error otherwise.
Integer to_integer(const Rational& q);

std::string to_string(const LatticeVector& v);
std::string to_string(const Rational& q);

} // namespace torifan
