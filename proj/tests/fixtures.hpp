#pragma once

// Hand-built inputs shared by the unit tests and the acceptance binary.

#include <initializer_list>
#include <vector>

#include "leeyang/expsum.hpp"
#include "leeyang/polynomial.hpp"

namespace fixture {

using namespace leeyang;

inline IntVector iv(std::initializer_list<std::int64_t> xs)
{
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) v(i++) = x;
    return v;
}

inline ExactReal real(const ContextPtr& ctx, std::initializer_list<Rational> coords)
{
    RationalVector v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const auto& c : coords) v(i++) = c;
    return ExactReal(ctx, v);
}

inline ContextPtr pi_basis() { return BasisContext::rationals_and({"pi"}); }

/// sin(pi x) + eps sin(x) over the basis {1, pi}.
inline ExponentialSum sin_sum(const ContextPtr& ctx, const Rational& eps)
{
    const Rational h(1, 2);
    return ExponentialSum(ctx, {{GaussianRational(0, h), 0, real(ctx, {0, -1})},
                                {GaussianRational(0, eps * h), 0, real(ctx, {-1, 0})},
                                {GaussianRational(0, -eps * h), 0, real(ctx, {1, 0})},
                                {GaussianRational(0, -h), 0, real(ctx, {0, 1})}});
}

/// (1/2i)(-1 - eps z1 + eps z2 + z1 z2)
inline MultiPoly sin_poly(const Rational& eps)
{
    const Rational h(1, 2);
    return MultiPoly(2, {{iv({0, 0}), GaussianRational(0, h)},
                         {iv({1, 0}), GaussianRational(0, eps * h)},
                         {iv({0, 1}), GaussianRational(0, -eps * h)},
                         {iv({1, 1}), GaussianRational(0, -h)}});
}

/// (pi - 1, pi + 1)
inline std::vector<ExactReal> sin_ell(const ContextPtr& ctx) { return {real(ctx, {-1, 1}), real(ctx, {1, 1})}; }

inline std::vector<std::complex<double>> exp_ix(double x, const std::vector<double>& ell)
{
    std::vector<std::complex<double>> z;
    for (double l : ell) z.push_back(std::exp(std::complex<double>(0, x * l)));
    return z;
}

}  // namespace fixture
