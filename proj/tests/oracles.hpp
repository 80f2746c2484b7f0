#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, cone or scanning code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "leeyang/types.hpp"

namespace oracle {

using Q = leeyang::Rational;
using Vec = std::vector<std::int64_t>;
using QRow = std::vector<Q>;

/// pi to 50 decimals.
inline const char* const kPi50 = "3.14159265358979323846264338327950288419716939937510";

/// Row-reduces in place and returns the pivot columns.
inline std::vector<std::size_t> reduce(std::vector<QRow>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Q lead = m[r][c];
        for (auto& x : m[r]) x /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(std::vector<QRow> m, std::size_t cols) { return reduce(m, cols).size(); }

inline std::vector<QRow> kernel(std::vector<QRow> m, std::size_t cols)
{
    const auto piv = reduce(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<QRow> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QRow v(cols, Q(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        out.push_back(v);
    }
    return out;
}

inline QRow to_q(const Vec& v)
{
    QRow r;
    for (auto x : v) r.emplace_back(x);
    return r;
}

inline Vec primitive(const QRow& v)
{
    leeyang::Integer l = 1;
    for (const auto& x : v) l = lcm(l, leeyang::Integer(denominator(x)));
    std::vector<leeyang::Integer> z;
    leeyang::Integer g = 0;
    for (const auto& x : v) {
        z.push_back(leeyang::Integer(numerator(x)) * (l / leeyang::Integer(denominator(x))));
        g = gcd(g, abs(z.back()));
    }
    Vec out;
    for (auto& x : z) out.push_back(g == 0 ? 0 : static_cast<std::int64_t>(x / g));
    return out;
}

inline Q dot(const Vec& a, const QRow& x)
{
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Q(a[i]) * x[i];
    return s;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

/**
 * Extreme rays of the pointed cone {x : a.x >= 0, e.x = 0} by enumerating
 * every set of tight inequalities whose solution space is a line.
 */
inline std::set<Vec> extreme_rays(std::size_t dim, const std::vector<Vec>& ineq, const std::vector<Vec>& eq)
{
    std::set<Vec> out;
    for (std::size_t k = 0; k < dim && k <= ineq.size(); ++k) {
        subsets(ineq.size(), k, [&](const std::vector<std::size_t>& s) {
            std::vector<QRow> m;
            for (const auto& e : eq) m.push_back(to_q(e));
            for (auto i : s) m.push_back(to_q(ineq[i]));
            const auto ker = kernel(m, dim);
            if (ker.size() != 1) return;
            for (int sign : {1, -1}) {
                QRow v = ker[0];
                for (auto& x : v) x *= sign;
                bool feasible = true;
                for (const auto& a : ineq) feasible = feasible && dot(a, v) >= 0;
                if (feasible) out.insert(primitive(v));
            }
        });
    }
    return out;
}

/// Vertices of conv(points): points not in the hull of any affinely independent subset of the others.
inline std::set<Vec> hull_vertices(const std::vector<Vec>& pts_in)
{
    std::set<Vec> uniq(pts_in.begin(), pts_in.end());
    std::vector<Vec> pts(uniq.begin(), uniq.end());
    const std::size_t d = pts.empty() ? 0 : pts[0].size();
    std::set<Vec> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        bool inside = false;
        for (std::size_t k = 1; k <= std::min(d + 1, others.size()) && !inside; ++k) {
            subsets(others.size(), k, [&](const std::vector<std::size_t>& s) {
                if (inside) return;
                // Columns: the subset points lifted by a 1; right side: pts[i] lifted.
                std::vector<QRow> m(d + 1, QRow(k + 1, Q(0)));
                for (std::size_t c = 0; c < k; ++c) {
                    for (std::size_t r = 0; r < d; ++r) m[r][c] = others[s[c]][r];
                    m[d][c] = 1;
                }
                for (std::size_t r = 0; r < d; ++r) m[r][k] = pts[i][r];
                m[d][k] = 1;
                std::vector<QRow> a = m;
                for (auto& row : a) row.pop_back();
                if (rank(a, k) != k) return;
                auto red = m;
                const auto piv = reduce(red, k + 1);
                if (std::find(piv.begin(), piv.end(), k) != piv.end()) return;  // inconsistent
                for (std::size_t r = 0; r < piv.size(); ++r)
                    if (red[r][k] < 0) return;
                inside = true;
            });
        }
        if (!inside) out.insert(pts[i]);
    }
    return out;
}

/// Sign changes of a real function on a uniform grid with n intervals, refined by bisection.
inline std::vector<double> sign_change_roots(const std::function<double(double)>& f, double a, double b, int n)
{
    std::vector<double> roots;
    double x0 = a, f0 = f(a);
    for (int k = 1; k <= n; ++k) {
        const double x1 = a + (b - a) * k / n;
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if ((f0 < 0) != (f1 < 0) && f1 != 0.0) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

/// Index of a vertex maximizing <v, w>, and whether the maximum is unique.
inline std::pair<std::size_t, bool> argmax(const std::vector<Vec>& vertices, const std::vector<double>& w)
{
    std::size_t best = 0;
    std::vector<double> val;
    for (const auto& v : vertices) {
        double s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<double>(v[i]) * w[i];
        val.push_back(s);
    }
    for (std::size_t i = 1; i < val.size(); ++i)
        if (val[i] > val[best]) best = i;
    bool unique = true;
    for (std::size_t i = 0; i < val.size(); ++i)
        if (i != best && std::abs(val[i] - val[best]) < 1e-9) unique = false;
    return {best, unique};
}

}  // namespace oracle
