#include "torifan/lattice.hpp"

#include <sstream>

namespace torifan {

LatticeVector lattice_vector(std::initializer_list<long> coords) {
    LatticeVector v(static_cast<Index>(coords.size()));
    Index i = 0;
    for (long c : coords)
        v(i++) = Integer(c);
    return v;
}

IntMatrix from_columns(const std::vector<LatticeVector>& columns, Index rows) {
    IntMatrix m(rows, static_cast<Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        m.col(static_cast<Index>(j)) = columns[j];
    }
    return m;
}

UniMatrix::UniMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("UniMatrix: matrix is not square");
    Integer d = determinant(m_);
    if (d != 1 && d != -1)
        throw std::invalid_argument("UniMatrix: determinant is " + d.str() + ", not +-1");
}

UniMatrix UniMatrix::identity(Index n) { return UniMatrix(IntMatrix::Identity(n, n)); }

UniMatrix UniMatrix::inverse() const {
    IntMatrix inv = adjugate(m_);
    if (det() == -1)
        inv = -inv;
    return UniMatrix(std::move(inv));
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    for (Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
        out.push_back(diagonal(i, i));
    return out;
}

Index SmithDecomposition::rank() const {
    Index r = 0;
    for (const Integer& f : invariant_factors())
        if (f != 0)
            ++r;
    return r;
}

namespace {

// Truncating division keeps |remainder| < |divisor|, which is all the
// pivoting below needs for termination.
Integer quotient(const Integer& a, const Integer& b) { return a / b; }

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const Index rows = m.rows();
    const Index cols = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::Identity(rows, rows);
    IntMatrix v = IntMatrix::Identity(cols, cols);

    for (Index t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            Index pi = -1, pj = -1;
            for (Index i = t; i < rows; ++i)
                for (Index j = t; j < cols; ++j)
                    if (d(i, j) != 0 &&
                        (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                break;
            if (pi != t) {
                d.row(t).swap(d.row(pi));
                u.row(t).swap(u.row(pi));
            }
            if (pj != t) {
                d.col(t).swap(d.col(pj));
                v.col(t).swap(v.col(pj));
            }

            bool clean = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = quotient(d(i, t), d(t, t));
                d.row(i) -= q * d.row(t);
                u.row(i) -= q * u.row(t);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = quotient(d(t, j), d(t, t));
                d.col(j) -= q * d.col(t);
                v.col(j) -= q * v.col(t);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility chain: fold an offending row into row t and retry.
            Index bad_row = -1;
            for (Index i = t + 1; i < rows && bad_row < 0; ++i)
                for (Index j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row < 0)
                break;
            d.row(t) += d.row(bad_row);
            u.row(t) += u.row(bad_row);
        }
        if (d(t, t) < 0) {
            d.row(t) = -d.row(t);
            u.row(t) = -u.row(t);
        }
    }
    return SmithDecomposition{UniMatrix(std::move(u)), std::move(d), UniMatrix(std::move(v))};
}

IntMatrix integer_kernel(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    const Index r = snf.rank();
    return snf.right.matrix().rightCols(m.cols() - r);
}

Integer content(const LatticeVector& v) {
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i)
        g = gcd(g, abs(v(i)));
    return g;
}

bool is_primitive(const LatticeVector& v) {
    Integer g = content(v);
    if (g == 0)
        throw std::invalid_argument("is_primitive: zero vector");
    return g == 1;
}

LatticeVector primitive_part(const LatticeVector& v) {
    Integer g = content(v);
    if (g == 0)
        throw std::invalid_argument("primitive_part: zero vector");
    LatticeVector out = v;
    for (Index i = 0; i < out.size(); ++i)
        out(i) /= g;
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Index> row_reduce(RationalMatrix& a, Index pivot_cols) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < pivot_cols && row < a.rows(); ++col) {
        Index p = row;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.row(row).swap(a.row(p));
        Rational inv = 1 / a(row, col);
        a.row(row) *= inv;
        for (Index i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            Rational f = a(i, col);
            a.row(i) -= f * a.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Index rank(const RationalMatrix& m) {
    RationalMatrix a = m;
    return static_cast<Index>(row_reduce(a, a.cols()).size());
}

std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             const RationalVector& b) {
    if (a.rows() != b.size())
        throw std::invalid_argument("solve_rational: dimension mismatch");
    const Index k = a.cols();
    RationalMatrix aug(a.rows(), k + 1);
    aug.leftCols(k) = a;
    aug.col(k) = b;
    std::vector<Index> pivots = row_reduce(aug, k);
    if (static_cast<Index>(pivots.size()) != k)
        throw std::invalid_argument("solve_rational: columns are linearly dependent");
    for (Index i = k; i < aug.rows(); ++i)
        if (aug(i, k) != 0)
            return std::nullopt;
    RationalVector x(k);
    for (Index i = 0; i < k; ++i)
        x(i) = aug(i, k);
    return x;
}

std::optional<LatticeVector> solve_nonneg_integer(const IntMatrix& basis,
                                                  const LatticeVector& target) {
    auto x = solve_rational(basis.cast<Rational>(), target.cast<Rational>());
    if (!x)
        return std::nullopt;
    LatticeVector out(x->size());
    for (Index i = 0; i < x->size(); ++i) {
        const Rational& q = (*x)(i);
        if (q < 0 || denominator(q) != 1)
            return std::nullopt;
        out(i) = Integer(numerator(q));
    }
    return out;
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
    for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a(i) != b(i))
            return a(i) < b(i);
    }
    return a.size() < b.size();
}

bool equal(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size())
        return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i))
            return false;
    return true;
}

Integer to_integer(const Rational& q) {
    if (denominator(q) != 1)
        throw std::domain_error("expected an integer, got " + q.str());
    return Integer(numerator(q));
}

std::string to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << '(';
    for (Index i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v(i).str();
    os << ')';
    return os.str();
}

std::string to_string(const Rational& q) { return q.str(); }

} // namespace torifan
