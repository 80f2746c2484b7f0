#include "leeyang/linalg.hpp"

#include <algorithm>
#include <limits>

namespace leeyang {

std::int64_t checked_int64(const Integer& z)
{
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer entry exceeds 64 bits: " + z.str());
    return z.convert_to<std::int64_t>();
}

IntVector primitive(const Vector<Integer>& v)
{
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = checked_int64(g == 0 ? Integer(0) : Integer(v(i) / g));
    return out;
}

IntVector primitive(const RationalVector& v)
{
    Integer l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v(i)));
    Vector<Integer> scaled(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        scaled(i) = numerator(v(i)) * (l / denominator(v(i)));
    return primitive(scaled);
}

IntVector canonical_line(const IntVector& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) > 0) return v;
        if (v(i) < 0) return -v;
    }
    return v;
}

RationalVector to_rational(const IntVector& v)
{
    RationalVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

void sort_descending(std::vector<IntVector>& v)
{
    std::sort(v.begin(), v.end(), [](const IntVector& a, const IntVector& b) { return LexLess{}(b, a); });
    v.erase(std::unique(v.begin(), v.end(), [](const IntVector& a, const IntVector& b) { return a == b; }),
            v.end());
}

std::vector<IntVector> columns(const IntMatrix& m)
{
    std::vector<IntVector> out;
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
    return out;
}

IntMatrix from_rows(const std::vector<IntVector>& rows, Eigen::Index cols)
{
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
        m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    return m;
}

}  // namespace leeyang
