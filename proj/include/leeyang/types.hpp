#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace leeyang {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;

/// Strict lexicographic order on integer vectors (shorter vectors first).
struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a(i) != b(i)) return a(i) < b(i);
        return false;
    }
};

inline std::string to_string(const Rational& q) { return q.str(); }

// ---------------------------------------------------------------------------
// Error hierarchy. Every failure the library reports derives from Error so
// callers (notably the CLI) can map categories to exit codes.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** An interval enclosure still straddles zero at the maximum precision. */
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what = "precision exhausted") : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& what = "zero polynomial") : Error(what) {}
};

class NotPointed : public Error {
public:
    explicit NotPointed(const std::string& what = "cone contains a line") : Error(what) {}
};

class NotInCone : public Error {
public:
    explicit NotInCone(const std::string& what = "point is not in the cone") : Error(what) {}
};

class NotAVertex : public Error {
public:
    explicit NotAVertex(const std::string& what = "point is not a vertex") : Error(what) {}
};

/** Two vertices attain the same inner product; the direction is not generic. */
class TieDetected : public Error {
public:
    explicit TieDetected(const std::string& what = "tie between vertices") : Error(what) {}
};

class Degenerate : public Error {
public:
    explicit Degenerate(const std::string& what) : Error(what) {}
};

class ConeDegenerate : public Error {
public:
    explicit ConeDegenerate(const std::string& what) : Error(what) {}
};

/** Exponents do not lie on a vertical segment, so the sum is not real-rooted. */
class NotVerticalSegment : public Error {
public:
    NotVerticalSegment(std::size_t j, std::size_t k, const std::string& what)
        : Error(what), first(j), second(k) {}
    std::size_t first;
    std::size_t second;
};

class StepTooCoarse : public Error {
public:
    explicit StepTooCoarse(const std::string& what) : Error(what) {}
};

class ContourTooClose : public Error {
public:
    explicit ContourTooClose(const std::string& what) : Error(what) {}
};

class IsolationFailure : public Error {
public:
    explicit IsolationFailure(const std::string& what) : Error(what) {}
};

/** The line t*ell meets the amoeba: the restriction has a non-real zero. */
class RayHit : public Error {
public:
    RayHit(double t_, std::vector<double> theta_, double modulus_, const std::string& what)
        : Error(what), t(t_), theta(std::move(theta_)), modulus(modulus_) {}
    double t;
    std::vector<double> theta;
    double modulus;
};

}  // namespace leeyang
