#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leeyang/amoeba.hpp"
#include "leeyang/expsum.hpp"
#include "leeyang/polyhedra.hpp"
#include "leeyang/polynomial.hpp"
#include "leeyang/relation_lattice.hpp"

namespace leeyang {

/// Exact term-by-term equality of two exponential sums (same order, same exponents).
bool same_terms(const ExponentialSum& a, const ExponentialSum& b);

/**
 * g = p(exp(i x ell)) for a normalized sum g = c0 + sum_j c_j exp(i omega_j x).
 *
 * The rows of `a` are extreme rays of {v >= 0 : <r, v> = 0 for every relation
 * r of omega}; omega = a^T ell, and frequency j becomes the monomial z^(column j).
 */
struct Exp2Poly {
    MultiPoly p;
    std::vector<ExactReal> ell;
    IntMatrix a;
    RelationLattice lattice;
    std::vector<IntVector> cone_rays;
    std::vector<std::string> notes;
};

/// Throws Degenerate for a sum with a single term.
Exp2Poly exp2poly(const ExponentialSum& g);

/**
 * q = p(z^B) and ell = B^T ell_tilde, where the rows of B are extreme rays of
 * N_beta(+ell) cap -N_beta(-ell) cap the nonnegative orthant.
 */
struct MonomialChange {
    MultiPoly q;
    std::vector<ExactReal> ell;
    IntMatrix b;
    IntVector beta_plus;
    IntVector beta_minus;
    RationalCone cone;
    bool identity = false;
    std::vector<std::string> notes;
};

/// Throws ConeDegenerate when the intersected cone is not full-dimensional.
MonomialChange monomial_change(const MultiPoly& p, const std::vector<ExactReal>& ell);

struct LiftOptions {
    bool assume_real_rooted = false;
    std::vector<double> t_grid = default_t_grid();
    RayOptions ray;
    CertifyOptions certify;
};

struct LiftResult {
    ContextPtr context;
    Rational lambda0_re;
    ExactReal lambda0_im;
    ExponentialSum g;
    MultiPoly p_initial;
    std::vector<ExactReal> ell_initial;
    IntMatrix a_matrix;       // from exp2poly
    IntMatrix change_matrix;  // from monomial_change
    MultiPoly q_final;
    std::vector<ExactReal> ell_final;
    IntVector beta_plus;
    IntVector beta_minus;
    std::optional<RayReport> ray;
    Certification certification;
    bool inexact = false;
    std::vector<std::string> provenance;

    Complex lambda0() const { return {lambda0_re.convert_to<double>(), to_double(lambda0_im)}; }
};

/**
 * f(x) = exp(lambda0 x) q(exp(i x ell_final)) with q a Lee-Yang candidate.
 * Throws NotVerticalSegment or RayHit when f is provably not real-rooted,
 * ConeDegenerate when the monomial change has no full-dimensional cone.
 */
LiftResult lift(const ExponentialSum& f, const LiftOptions& opts = {});

/// max over xs of |f(x) - exp(lambda0 x) q(exp(i x ell_final))|.
double max_restriction_error(const LiftResult& r, const ExponentialSum& f, const std::vector<double>& xs);

// ---------------------------------------------------------------------------

struct Atom {
    double x;
    int weight;
};

struct FQMeasure {
    double a = 0.0;
    double b = 0.0;
    std::vector<Atom> atoms;
    MultiPoly q;
    std::vector<ExactReal> ell;

    long total_weight() const;
};

/// Step used when none is given: a quarter of pi / omega_max, at most 0.1.
double default_step(const ExponentialSum& g);

/// Atoms at the real zeros of q(exp(i x ell)) in [a, b], weighted by multiplicity. step <= 0 picks default_step.
FQMeasure fq_measure(const MultiPoly& q, const std::vector<ExactReal>& ell, double a, double b, double step = 0.0,
                     const ScanOptions& opts = {});

struct DiffractionPoint {
    double xi;
    double height;
};

/// |sum_x a_x exp(-i xi x)| / (b - a) for every xi.
std::vector<DiffractionPoint> diffraction_diagnostic(const std::vector<Atom>& atoms, double a, double b,
                                                     const std::vector<double>& xi_grid);
inline std::vector<DiffractionPoint> diffraction_diagnostic(const FQMeasure& mu, const std::vector<double>& xi_grid)
{
    return diffraction_diagnostic(mu.atoms, mu.a, mu.b, xi_grid);
}

}  // namespace leeyang
