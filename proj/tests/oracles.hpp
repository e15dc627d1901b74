#pragma once

// Slow, independent reference implementations used only by tests. Plain
// long long / boost::rational<long long> arithmetic, nothing shared with the
// library's GMP code paths.

#include "torifan/fan.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Row = std::vector<long long>;
using Mat = std::vector<Row>;  // row-major
using Frac = boost::rational<long long>;

inline long long to_ll(const torifan::Integer& v) { return v.convert_to<long long>(); }

inline Row to_row(const torifan::LatticeVector& v) {
    Row out;
    for (torifan::Index i = 0; i < v.size(); ++i)
        out.push_back(to_ll(v(i)));
    return out;
}

inline Mat to_mat(const torifan::IntMatrix& m) {
    Mat out(static_cast<std::size_t>(m.rows()), Row(static_cast<std::size_t>(m.cols())));
    for (torifan::Index i = 0; i < m.rows(); ++i)
        for (torifan::Index j = 0; j < m.cols(); ++j)
            out[i][j] = to_ll(m(i, j));
    return out;
}

inline torifan::IntMatrix from_mat(const Mat& m) {
    torifan::IntMatrix out(static_cast<torifan::Index>(m.size()),
                           m.empty() ? 0 : static_cast<torifan::Index>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            out(static_cast<torifan::Index>(i), static_cast<torifan::Index>(j)) = m[i][j];
    return out;
}

// Laplace expansion along the first row.
inline long long cofactor_det(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    long long total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Mat minor;
        for (std::size_t r = 1; r < n; ++r) {
            Row row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[r][c]);
            minor.push_back(row);
        }
        const long long term = m[0][j] * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, where
// D_k is the gcd of all k x k minors.
inline std::vector<long long> invariant_factors(const Mat& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<long long> out;
    long long prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        long long g = 0;
        combinations(rows, k, [&](const std::vector<std::size_t>& rs) {
            combinations(cols, k, [&](const std::vector<std::size_t>& cs) {
                Mat sub;
                for (std::size_t r : rs) {
                    Row row;
                    for (std::size_t c : cs)
                        row.push_back(m[r][c]);
                    sub.push_back(row);
                }
                g = std::gcd(g, std::llabs(cofactor_det(sub)));
            });
        });
        if (g == 0) {
            out.resize(std::min(rows, cols), 0);
            return out;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Fourier-Motzkin: is { x : A x <= b } nonempty? Integer rows, each
// combination divided by its content.
inline bool fm_feasible(Mat a, Row b) {
    std::size_t vars = a.empty() ? 0 : a[0].size();
    auto normalize = [](Row& row, long long& rhs) {
        long long g = std::llabs(rhs);
        for (long long v : row)
            g = std::gcd(g, std::llabs(v));
        if (g > 1) {
            for (long long& v : row)
                v /= g;
            rhs /= g;
        }
    };
    for (std::size_t j = 0; j < vars; ++j) {
        Mat na;
        Row nb;
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i][j] > 0)
                pos.push_back(i);
            else if (a[i][j] < 0)
                neg.push_back(i);
            else {
                na.push_back(a[i]);
                nb.push_back(b[i]);
            }
        }
        for (std::size_t p : pos)
            for (std::size_t n : neg) {
                const long long cp = a[p][j], cn = -a[n][j];
                Row row(vars);
                for (std::size_t k = 0; k < vars; ++k)
                    row[k] = cn * a[p][k] + cp * a[n][k];
                long long rhs = cn * b[p] + cp * b[n];
                normalize(row, rhs);
                na.push_back(row);
                nb.push_back(rhs);
            }
        // Drop exact duplicates to slow the blow-up.
        Mat ua;
        Row ub;
        for (std::size_t i = 0; i < na.size(); ++i) {
            bool dup = false;
            for (std::size_t k = 0; k < ua.size() && !dup; ++k)
                dup = ua[k] == na[i] && ub[k] == nb[i];
            if (!dup) {
                ua.push_back(na[i]);
                ub.push_back(nb[i]);
            }
        }
        a = std::move(ua);
        b = std::move(ub);
    }
    return std::all_of(b.begin(), b.end(), [](long long v) { return v >= 0; });
}

// { x >= 0 : G x = v } as inequalities for fm_feasible; G given by columns.
inline bool fm_in_cone(const std::vector<Row>& gens, const Row& v) {
    const std::size_t d = v.size(), k = gens.size();
    Mat a;
    Row b;
    for (std::size_t i = 0; i < d; ++i) {
        Row up(k), down(k);
        for (std::size_t j = 0; j < k; ++j) {
            up[j] = gens[j][i];
            down[j] = -gens[j][i];
        }
        a.push_back(up);
        b.push_back(v[i]);
        a.push_back(down);
        b.push_back(-v[i]);
    }
    for (std::size_t j = 0; j < k; ++j) {
        Row neg(k, 0);
        neg[j] = -1;
        a.push_back(neg);
        b.push_back(0);
    }
    return fm_feasible(a, b);
}

// Exact rank over Q by Gaussian elimination on fractions.
inline std::size_t frac_rank(std::vector<std::vector<Frac>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == Frac(0))
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == Frac(0))
                continue;
            const Frac f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

// Caratheodory: v lies in cone(gens) iff it lies in the cone of some
// linearly independent subset, where coordinates are unique.
inline bool caratheodory_in_cone(const std::vector<Row>& gens, const Row& v) {
    const std::size_t d = v.size();
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
        return true;
    bool found = false;
    for (std::size_t k = 1; k <= std::min(d, gens.size()) && !found; ++k) {
        combinations(gens.size(), k, [&](const std::vector<std::size_t>& s) {
            if (found)
                return;
            // Augmented system [G_s | v], reduced.
            std::vector<std::vector<Frac>> m(d, std::vector<Frac>(k + 1));
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < k; ++j)
                    m[i][j] = gens[s[j]][i];
                m[i][k] = v[i];
            }
            std::vector<std::vector<Frac>> coeff(d, std::vector<Frac>(k));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    coeff[i][j] = m[i][j];
            if (frac_rank(coeff) != k || frac_rank(m) != k)
                return;
            // Solve by elimination.
            std::size_t r = 0;
            std::vector<std::size_t> pivots;
            for (std::size_t c = 0; c < k; ++c) {
                std::size_t p = r;
                while (p < d && m[p][c] == Frac(0))
                    ++p;
                std::swap(m[p], m[r]);
                for (std::size_t i = 0; i < d; ++i) {
                    if (i == r || m[i][c] == Frac(0))
                        continue;
                    const Frac f = m[i][c] / m[r][c];
                    for (std::size_t q = c; q <= k; ++q)
                        m[i][q] -= f * m[r][q];
                }
                ++r;
            }
            bool nonneg = true;
            for (std::size_t c = 0; c < k; ++c)
                nonneg = nonneg && m[c][k] / m[c][c] >= Frac(0);
            found = nonneg;
        });
    }
    return found;
}

// Ehrhart: d! vol(P) = sum_k (-1)^(d-k) C(d,k) #(kP cap Z^d), counting
// lattice points of kP = { m : <m, v> >= -k } by brute force over a box.
inline long long ehrhart_normalized_volume(const torifan::Fan& fan, long long radius_per_k = 10) {
    const int d = fan.dim;
    std::vector<Row> rays;
    for (const auto& r : fan.rays)
        rays.push_back(to_row(r));
    auto count = [&](long long k) {
        if (k == 0)
            return 1LL;
        const long long rad = radius_per_k * k;
        long long n = 0;
        Row m(static_cast<std::size_t>(d), -rad);
        while (true) {
            bool inside = true;
            for (const Row& v : rays) {
                long long s = 0;
                for (int i = 0; i < d; ++i)
                    s += m[i] * v[i];
                if (s < -k) {
                    inside = false;
                    break;
                }
            }
            n += inside;
            int i = 0;
            while (i < d && m[i] == rad)
                m[i++] = -rad;
            if (i == d)
                break;
            ++m[i];
        }
        return n;
    };
    long long total = 0;
    long long binom = 1;
    for (int k = 0; k <= d; ++k) {
        const long long term = binom * count(k);
        total += ((d - k) % 2 == 0) ? term : -term;
        binom = binom * (d - k) / (k + 1);
    }
    return total;
}

// Minimal non-faces by brute force over all ray subsets.
inline std::vector<std::vector<int>> minimal_non_faces(const torifan::Fan& fan) {
    const int n = fan.ray_count();
    auto face = [&](std::uint32_t mask) {
        for (const auto& c : fan.max_cones) {
            std::uint32_t cm = 0;
            for (int r : c)
                cm |= 1u << r;
            if ((mask & ~cm) == 0)
                return true;
        }
        return false;
    };
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (face(mask))
            continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if (mask & (1u << i))
                minimal = face(mask & ~(1u << i));
        if (!minimal)
            continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Random unimodular matrix: a signed permutation times elementary row
// additions with small multipliers.
inline Mat random_unimodular(std::mt19937& rng, int d, int steps = 6) {
    Mat m(static_cast<std::size_t>(d), Row(static_cast<std::size_t>(d), 0));
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < d; ++i)
        m[i][perm[i]] = coin(rng) ? 1 : -1;
    std::uniform_int_distribution<int> pick(0, d - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        const int c = mult(rng);
        for (int k = 0; k < d; ++k)
            m[i][k] += c * m[j][k];
    }
    return m;
}

} // namespace oracle
