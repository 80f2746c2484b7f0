#pragma once

#include <vector>

#include "leeyang/exact.hpp"
#include "leeyang/polynomial.hpp"

namespace leeyang {

/**
 * A rational polyhedral cone in R^dim.
 *
 * Inequality form: {x : a.x >= 0 for a in inequalities, e.x = 0 for e in
 * equalities}. Generator form: cone(rays) + span(lineality). Either or both
 * forms may be present; the factory functions below fill in the missing one.
 * Rays are primitive integer vectors in lexicographically decreasing order.
 */
struct RationalCone {
    Eigen::Index dim = 0;
    std::vector<IntVector> inequalities;
    std::vector<IntVector> equalities;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
    bool has_inequalities = false;
    bool has_generators = false;

    static RationalCone from_inequalities(Eigen::Index dim, std::vector<IntVector> inequalities,
                                          std::vector<IntVector> equalities = {});
    static RationalCone from_generators(Eigen::Index dim, std::vector<IntVector> rays,
                                        std::vector<IntVector> lineality = {});
    /// {x : sign * x >= 0}
    static RationalCone orthant(Eigen::Index dim, int sign = 1);

    bool is_pointed() const;
    Eigen::Index dimension() const;
    bool full_dimensional() const { return dimension() == dim; }

    bool contains(const RationalVector& x) const;
    bool contains(const IntVector& x) const;
    /// Certified membership of an exact point (uses sign_of).
    bool contains(const std::vector<ExactReal>& x) const;
    /// Strict inequalities hold for an exact point (x is in the interior).
    bool contains_in_interior(const std::vector<ExactReal>& x) const;
};

/// Generators of {x : inequalities, equalities} by the double description method.
struct DoubleDescription {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};
DoubleDescription double_description(Eigen::Index dim, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equalities = {});

/// Ensures both representations are present.
RationalCone with_generators(RationalCone cone);
RationalCone with_inequalities(RationalCone cone);

/// Extreme rays of a pointed cone. Throws NotPointed if the cone has a lineality space.
std::vector<IntVector> extreme_rays(const RationalCone& cone);

/// -C
RationalCone negate(const RationalCone& cone);

/// Intersection of cones of the same dimension, with both representations filled.
RationalCone intersect(const std::vector<RationalCone>& cones);

/**
 * Placing triangulation of the cone spanned by `rays`, adding rays in the
 * given order. Each simplex is a sorted list of indices into `rays`; the list
 * of simplices is sorted lexicographically.
 */
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& rays);

struct CaratheodoryResult {
    std::vector<IntVector> rays;            // rays with positive coefficient
    std::vector<ExactReal> coefficients;    // one per ray, certified positive
    std::vector<IntVector> dropped;         // simplex rays whose coefficient was exactly zero
    std::size_t simplex_index = 0;          // position in the placing triangulation
    std::size_t simplex_count = 0;
};

/**
 * point = sum coefficients[j] * rays[j], over the first simplex of the
 * placing triangulation (in lexicographic order) that contains the point.
 * Throws NotInCone when no simplex does.
 */
CaratheodoryResult caratheodory_decompose(const std::vector<IntVector>& rays,
                                          const std::vector<ExactReal>& point);

/** Lattice polytope given by its vertices (lexicographically increasing). */
struct Polytope {
    Eigen::Index dim = 0;
    std::vector<IntVector> vertices;

    bool has_vertex(const IntVector& v) const;
};

/// Vertices of conv(points).
Polytope convex_hull(Eigen::Index dim, const std::vector<IntVector>& points);
/// conv(supp(p)). Throws ZeroPolynomial.
Polytope newton_polytope(const MultiPoly& p);

/**
 * The unique vertex maximizing <., ell>. Throws TieDetected when two vertices
 * attain the maximum, which can only happen if the entries of ell are
 * Q-dependent.
 */
IntVector max_vertex(const Polytope& polytope, const std::vector<ExactReal>& ell);

/// {w : <beta - alpha, w> >= 0 for every vertex alpha}, with generators.
RationalCone normal_cone(const Polytope& polytope, const IntVector& beta);

}  // namespace leeyang
