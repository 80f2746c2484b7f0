#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "leeyang/types.hpp"

namespace leeyang {

using BigFloat = boost::multiprecision::mpfr_float;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/** Rational midpoint and radius: the true value lies in [mid - rad, mid + rad]. */
struct Enclosure {
    Rational mid;
    Rational rad;
};

/**
 * A finite list of reals that the user asserts to be linearly independent
 * over Q. Label "1" always sits at index 0.
 *
 * Each label is backed either by a named constant that can be computed to any
 * precision ("pi", "e", "sqrt2", "sqrt3", "sqrt5", "log2", "log3") or by a
 * decimal string whose accuracy is fixed by the number of digits given.
 * Enclosures are cached per precision level; the cache is internally locked
 * so a context can be shared across threads.
 */
class BasisContext {
public:
    struct Entry {
        std::string label;
        std::string approximation;  // empty for builtin constants
    };

    static constexpr int kDefaultPrecision = 256;
    static constexpr int kMaxPrecision = 4096;

    explicit BasisContext(std::vector<Entry> entries, int precision_bits = kDefaultPrecision,
                          int max_precision_bits = kMaxPrecision);

    static std::shared_ptr<const BasisContext> make(std::vector<Entry> entries,
                                                    int precision_bits = kDefaultPrecision,
                                                    int max_precision_bits = kMaxPrecision);
    /// Shorthand for a context of builtin constants, e.g. rationals_and({"pi"}).
    static std::shared_ptr<const BasisContext> rationals_and(const std::vector<std::string>& labels);

    std::size_t size() const { return entries_.size(); }
    const std::string& label(std::size_t i) const { return entries_.at(i).label; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    int precision_bits() const { return precision_bits_; }
    int max_precision_bits() const { return max_precision_bits_; }

    /// Enclosures of every basis element at (at least) the given precision.
    const std::vector<Enclosure>& enclosures(int bits) const;

    bool same_basis(const BasisContext& other) const;

    static bool is_builtin(const std::string& label);

private:
    std::vector<Entry> entries_;
    int precision_bits_;
    int max_precision_bits_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::vector<Enclosure>> cache_;
};

using ContextPtr = std::shared_ptr<const BasisContext>;

/** A rational combination of basis reals. Arithmetic is exact. */
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(ContextPtr ctx, RationalVector coords);
    static ExactReal zero(ContextPtr ctx);
    static ExactReal rational(ContextPtr ctx, const Rational& q);
    /// The basis element with the given label.
    static ExactReal basis(ContextPtr ctx, const std::string& label);

    const ContextPtr& context() const { return ctx_; }
    const RationalVector& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;

    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator-() const;
    ExactReal operator*(const Rational& s) const;
    ExactReal& operator+=(const ExactReal& o);

    bool operator==(const ExactReal& o) const;
    bool operator!=(const ExactReal& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same(const ExactReal& o) const;

    ContextPtr ctx_;
    RationalVector coords_;
};

inline ExactReal operator*(const Rational& s, const ExactReal& x) { return x * s; }

/// Proven sign. Throws PrecisionExhausted when the enclosure never excludes 0.
Sign sign_of(const ExactReal& x);
/// sign_of(a - b).
Sign compare(const ExactReal& a, const ExactReal& b);

/// Value rounded to `bits` of precision, relative error below 2^(1-bits).
BigFloat to_float(const ExactReal& x, int bits);
double to_double(const ExactReal& x);

/// <v, x> for an integer vector v and a vector of exact reals of the same length.
ExactReal dot(const IntVector& v, const std::vector<ExactReal>& x);
std::vector<double> to_doubles(const std::vector<ExactReal>& x);

// ---------------------------------------------------------------------------

/** Exact complex scalar with rational real and imaginary parts. */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r), im(0) {}

    static GaussianRational i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const
    {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
    {
        const Rational d = b.norm2();
        if (d == 0) throw std::domain_error("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const;
};

/// Parses "a/b", "-3", "0.25", "1e-3" exactly.
Rational parse_rational(const std::string& s);
/// Exact rational value of a finite double.
Rational rational_from_double(double v);

}  // namespace leeyang
