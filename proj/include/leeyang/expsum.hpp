#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "leeyang/exact.hpp"

namespace leeyang {

using Complex = std::complex<double>;

struct Reduction;

/** One term c * exp(lambda x) with lambda = lambda_re + i * lambda_im. */
struct ExpTerm {
    GaussianRational coeff;
    Rational lambda_re;
    ExactReal lambda_im;
};

/**
 * f(x) = sum_j c_j exp(lambda_j x). Terms with equal exponents are merged and
 * zero coefficients dropped on construction. A normalized sum has its first
 * term at exponent 0 and every other exponent purely imaginary with positive
 * imaginary part; terms are then sorted by frequency.
 */
class ExponentialSum {
public:
    ExponentialSum() = default;
    ExponentialSum(ContextPtr ctx, std::vector<ExpTerm> terms, bool inexact = false);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<ExpTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    bool normalized() const { return normalized_; }
    /// Some coefficient came from a floating-point input.
    bool inexact() const { return inexact_; }

    /// Frequencies omega_1..omega_s of a normalized sum (term 0 excluded).
    std::vector<ExactReal> frequencies() const;

    /// Builds c_0 + sum_j c_j exp(i omega_j x) from exact frequencies.
    static ExponentialSum from_frequencies(ContextPtr ctx, const std::vector<GaussianRational>& coeffs,
                                           const std::vector<ExactReal>& omega, bool inexact = false);

private:
    friend Reduction validate_and_reduce(const ExponentialSum& f);

    ContextPtr ctx_;
    std::vector<ExpTerm> terms_;
    bool normalized_ = false;
    bool inexact_ = false;
};

/** f(x) = exp(lambda0 x) g(x) with g normalized. */
struct Reduction {
    Rational lambda0_re;
    ExactReal lambda0_im;
    ExponentialSum g;

    Complex lambda0() const { return {lambda0_re.convert_to<double>(), to_double(lambda0_im)}; }
};

/// Throws NotVerticalSegment when two exponents differ in real part.
Reduction validate_and_reduce(const ExponentialSum& f);

/** Floating-point image of an exponential sum, used by every numeric routine. */
struct NumericExpSum {
    std::vector<Complex> coeffs;
    std::vector<Complex> lambdas;

    explicit NumericExpSum(const ExponentialSum& f);
    NumericExpSum(std::vector<Complex> c, std::vector<Complex> l)
        : coeffs(std::move(c)), lambdas(std::move(l)) {}

    Complex operator()(Complex x) const;
    Complex derivative(Complex x) const;
    /// sum_j |c_j exp(lambda_j x)|, the natural scale for relative tests.
    double magnitude(Complex x) const;
};

Complex evaluate(const ExponentialSum& f, Complex x);

struct RealZero {
    double x;
    int multiplicity;
    double residual;
};

struct ZeroList {
    double a;
    double b;
    std::vector<RealZero> zeros;

    int total_multiplicity() const;
};

struct ScanOptions {
    double tol = 1e-12;
    /// Radius cap for multiplicity circles; the actual radius is min(cap, gap / 4).
    double max_radius = 0.1;
};

/**
 * All real zeros of f in [a, b]. Grid step h must resolve the highest
 * frequency span (h < pi / omega_max), otherwise StepTooCoarse.
 */
ZeroList real_zero_scan(const ExponentialSum& f, double a, double b, double h, const ScanOptions& opts = {});

/// Winding number of f around the boundary of [a, b] x [-h, h].
int argument_principle_count(const ExponentialSum& f, double a, double b, double h, int points = 4096);
int argument_principle_count(const NumericExpSum& f, double a, double b, double h, int points = 4096);

/// Winding number of f on the circle |z - x0| = radius.
int multiplicity(const ExponentialSum& f, double x0, double radius);
int multiplicity(const NumericExpSum& f, double x0, double radius);

/// CSV with header "x,multiplicity,residual".
std::string to_csv(const ZeroList& zeros);

}  // namespace leeyang
