#include "torifan/cone_lp.hpp"

namespace torifan {

std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a,
                                                        const RationalVector& b) {
    if (a.rows() != b.size())
        throw std::invalid_argument("find_nonnegative_solution: dimension mismatch");
    const Index m = a.rows();
    const Index n = a.cols();

    // Tableau columns: n structural, m artificial, then the right-hand side.
    const Index rhs = n + m;
    RationalMatrix t = RationalMatrix::Zero(m, n + m + 1);
    for (Index i = 0; i < m; ++i) {
        const bool flip = b(i) < 0;
        for (Index j = 0; j < n; ++j)
            t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        t(i, rhs) = flip ? Rational(-b(i)) : b(i);
        t(i, n + i) = 1;
    }
    std::vector<Index> basis(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i)
        basis[static_cast<std::size_t>(i)] = n + i;

    // Reduced costs for minimizing the sum of the artificials.
    RationalVector cost = RationalVector::Zero(n + m + 1);
    for (Index i = 0; i < m; ++i)
        cost -= t.row(i).transpose();
    for (Index i = 0; i < m; ++i)
        cost(n + i) = 0;

    for (;;) {
        Index enter = -1;
        for (Index j = 0; j < n + m; ++j)
            if (cost(j) < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;

        Index leave = -1;
        Rational best;
        for (Index i = 0; i < m; ++i) {
            if (t(i, enter) <= 0)
                continue;
            Rational ratio = t(i, rhs) / t(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<std::size_t>(i)] <
                                      basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best = ratio;
            }
        }
        // Phase one is bounded below by zero, so a ratio always exists.
        if (leave < 0)
            throw std::logic_error("find_nonnegative_solution: unbounded phase one");

        Rational inv = 1 / t(leave, enter);
        t.row(leave) *= inv;
        for (Index i = 0; i < m; ++i) {
            if (i == leave || t(i, enter) == 0)
                continue;
            Rational f = t(i, enter);
            t.row(i) -= f * t.row(leave);
        }
        Rational f = cost(enter);
        cost -= f * t.row(leave).transpose();
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    if (cost(rhs) != 0)
        return std::nullopt;
    RationalVector x = RationalVector::Zero(n);
    for (Index i = 0; i < m; ++i) {
        Index j = basis[static_cast<std::size_t>(i)];
        if (j < n)
            x(j) = t(i, rhs);
    }
    return x;
}

bool in_cone(const IntMatrix& generators, const LatticeVector& v) {
    return has_nonnegative_solution(generators.cast<Rational>(), v.cast<Rational>());
}

} // namespace torifan
