#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leeyang/polynomial.hpp"

namespace leeyang {

/**
 * w is outside the amoeba of p because one term dominates:
 * log|c_beta| + <beta, w> exceeds log|c_alpha| + <alpha, w> + log M for every
 * other alpha in the support, M = |supp(p)|.
 */
struct LopsidedCertificate {
    std::vector<double> w;
    IntVector beta;
    double margin = 0.0;
};

/// Margins at or below this value are reported as inconclusive.
inline constexpr double kLopsidedSlack = 1e-9;

/// A certificate when some term dominates with margin > kLopsidedSlack, else nullopt.
std::optional<LopsidedCertificate> lopsided_nonmember(const MultiPoly& p, std::span<const double> w);

// ---------------------------------------------------------------------------
// Torus sampling on a rank-1 lattice

struct SamplingOptions {
    int theta_samples = 4096;
    /// Picks the lattice generator and, if nonzero, a random shift of the lattice.
    std::uint64_t seed = 0;
};

struct TorusSample {
    std::vector<double> theta;
    double modulus = 0.0;
    /// modulus / sum_alpha |c_alpha z^alpha|
    double relative = 0.0;
};

/**
 * Evaluates p(exp(w + i theta)) for theta on the lattice
 * theta_k = 2 pi frac(k g / N + shift), k = 0..N-1. Monomial phases come from
 * one table of N-th roots of unity, so a sample costs one complex
 * multiply-add per term.
 */
class TorusSampler {
public:
    struct RootTable;

    TorusSampler(const MultiPoly& p, const SamplingOptions& opts = {});

    Eigen::Index num_vars() const { return num_vars_; }
    int samples() const { return n_; }
    const std::vector<std::int64_t>& generator() const { return generator_; }

    /// Smallest |p| over the lattice at log-radius w.
    TorusSample min_modulus(std::span<const double> w) const;
    /// The `count` samples with smallest relative modulus, best first.
    std::vector<TorusSample> lowest(std::span<const double> w, std::size_t count) const;

private:
    std::vector<double> theta_of(std::int64_t k) const;
    template <typename Visit>
    void sweep(std::span<const double> w, Visit&& visit) const;

    NumericPoly poly_;
    Eigen::Index num_vars_ = 0;
    int n_ = 0;
    std::vector<std::int64_t> generator_;
    std::vector<double> shift_;
    std::vector<std::int64_t> step_;        // <alpha, g> mod N per term
    std::vector<std::complex<double>> twist_;  // exp(2 pi i <alpha, shift>) per term
    std::shared_ptr<const RootTable> roots_;
};

// ---------------------------------------------------------------------------

/// A point z with p(z) = 0 up to rounding, found by Newton refinement.
struct ZeroWitness {
    std::vector<std::complex<double>> z;
    double modulus = 0.0;
    double relative = 0.0;
};

/**
 * Newton iteration on p(z) = 0 using the minimum-norm step
 * z <- z - p(z) conj(grad p) / |grad p|^2. Returns the limit when the relative
 * modulus drops below 1e-13.
 */
std::optional<ZeroWitness> polish_zero(const NumericPoly& p, std::vector<std::complex<double>> z,
                                       int max_iter = 60);

struct RayPoint {
    double t = 0.0;
    double min_modulus = 0.0;
    double relative = 0.0;
    std::vector<double> theta;
};

struct RayWitness {
    double t = 0.0;
    std::vector<double> theta;
    double modulus = 0.0;
};

struct RayReport {
    enum class Verdict { CorroboratedUpTo, Falsified };
    Verdict verdict = Verdict::CorroboratedUpTo;
    std::vector<RayPoint> points;
    std::optional<RayWitness> witness;
    int theta_samples = 0;
    /// Smallest sampled minimum over the grid.
    double min_modulus = 0.0;
};

struct RayOptions {
    SamplingOptions sampling;
    double tol = 1e-9;
    /// Number of lowest (t, theta) samples refined by Newton in (t, theta).
    int refine_starts = 12;
    /// Refined zeros with |t| below this are the torus itself, not a hit.
    double min_abs_t = 1e-4;
};

/**
 * Samples |p(exp(t ell + i theta))| along the ray for every t in t_grid. A
 * sampled minimum below tol, or a Newton-refined zero with t away from 0,
 * falsifies disjointness of the line from the amoeba.
 */
RayReport ray_disjointness_check(const MultiPoly& p, const std::vector<double>& ell,
                                 const std::vector<double>& t_grid, const RayOptions& opts = {});

/// Symmetric grid of nonzero t values used by lift: fine near 0, geometric further out.
std::vector<double> default_t_grid();

// ---------------------------------------------------------------------------

enum class Verdict { CertifiedOnSamples, Falsified, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct CertifyOptions {
    std::vector<double> radii_inside{1.0 / 64, 1.0 / 16, 1.0 / 4};
    std::vector<double> radii_outside{4.0, 16.0, 64.0};
    SamplingOptions sampling;
    double tol = 1e-9;
    int refine_starts = 8;
    /// A witness must have every |log|z_j|| above this, on the same side of 1.
    double witness_margin = 1e-6;
};

struct Certification {
    Verdict verdict = Verdict::Inconclusive;
    /// Vertices whose normal cones contain the positive and the negative orthant.
    std::optional<IntVector> beta_plus;
    std::optional<IntVector> beta_minus;
    std::size_t grid_points = 0;
    std::size_t lopsided_points = 0;
    double min_sampled_modulus = 0.0;
    std::optional<ZeroWitness> witness;
    std::vector<std::string> notes;
};

/**
 * Lee-Yang certification on samples. Combines lopsided certificates on the
 * grid of log-radii in both orthants, normal-cone containment of the
 * orthants, and torus sampling with Newton refinement for falsification.
 */
Certification certify_lee_yang(const MultiPoly& p, const CertifyOptions& opts = {});

// ---------------------------------------------------------------------------

struct AmoebaGrid {
    Eigen::Index num_vars = 0;
    int resolution = 0;
    std::vector<double> lo, hi;
    /// Grid points in row-major order (last coordinate fastest).
    std::vector<std::vector<double>> points;
    std::vector<double> min_modulus;
};

/// Minimum of |p(exp(x + i theta))| over the lattice, at every point of a resolution^n grid.
AmoebaGrid amoeba_sample(const MultiPoly& p, const std::vector<double>& lo, const std::vector<double>& hi,
                         int resolution, const SamplingOptions& opts = {});

/// Header x1,...,xn,min_modulus.
std::string to_csv(const AmoebaGrid& grid);
/// Heatmap of log10(min modulus) for n = 2; dark cells approximate the amoeba.
std::string to_svg(const AmoebaGrid& grid);

}  // namespace leeyang
