#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "leeyang/exact.hpp"
#include "leeyang/expsum.hpp"

namespace leeyang {

/**
 * Multivariate polynomial with exact Gaussian-rational coefficients and
 * nonnegative integer exponents. Zero coefficients are never stored and
 * terms iterate in lexicographic order of their exponent vectors.
 */
class MultiPoly {
public:
    using TermMap = std::map<IntVector, GaussianRational, LexLess>;

    explicit MultiPoly(Eigen::Index num_vars = 0) : num_vars_(num_vars) {}
    MultiPoly(Eigen::Index num_vars, const std::vector<std::pair<IntVector, GaussianRational>>& terms);

    static MultiPoly constant(Eigen::Index num_vars, const GaussianRational& c);
    /// c * z_var
    static MultiPoly variable(Eigen::Index num_vars, Eigen::Index var, const GaussianRational& c = 1);

    Eigen::Index num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IntVector& alpha, const GaussianRational& c);
    GaussianRational coefficient(const IntVector& alpha) const;
    GaussianRational constant_term() const;

    std::vector<IntVector> support() const;
    std::int64_t degree(Eigen::Index var) const;
    IntVector degrees() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const GaussianRational& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    Eigen::Index num_vars_;
    TermMap terms_;
};

/**
 * q(z) = p(z^a(1), ..., z^a(n)) where a(k) is column k of `a`.
 *
 * `a` has one row per variable of q and one column per variable of p, so an
 * exponent vector alpha of p maps to a * alpha. Entries must be nonnegative.
 */
MultiPoly substitute_monomials(const MultiPoly& p, const IntMatrix& a);

/// prod_j z_j^deg_j(p) * p(1/z_1, ..., 1/z_n).
MultiPoly dagger(const MultiPoly& p);

/// Divides out the largest monomial z^m dividing p.
MultiPoly strip_monomial_factor(const MultiPoly& p);

/** Floating-point copy of a polynomial for repeated evaluation. */
struct NumericPoly {
    Eigen::Index num_vars = 0;
    std::vector<IntVector> exponents;
    std::vector<std::complex<double>> coeffs;
    IntVector degrees;

    NumericPoly() = default;
    explicit NumericPoly(const MultiPoly& p);

    std::complex<double> operator()(std::span<const std::complex<double>> z) const;
    /// Gradient with respect to z.
    std::vector<std::complex<double>> gradient(std::span<const std::complex<double>> z) const;
};

std::complex<double> evaluate(const MultiPoly& p, std::span<const std::complex<double>> z);

/// p(exp(i x ell)) as an exponential sum; equal frequencies are merged.
ExponentialSum restrict(const MultiPoly& p, const std::vector<ExactReal>& ell);

}  // namespace leeyang
