#include "leeyang/polyhedra.hpp"

#include <algorithm>
#include <numeric>

#include "leeyang/linalg.hpp"

namespace leeyang {

namespace {

using BigVector = Vector<Integer>;

BigVector to_big(const IntVector& v)
{
    BigVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i);
    return out;
}

BigVector to_big(const RationalVector& v)
{
    return to_big(primitive(v));
}

Integer dot(const IntVector& a, const BigVector& x)
{
    Integer s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != 0) s += x(i) * a(i);
    return s;
}

void make_primitive(BigVector& v)
{
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
    if (g > 1)
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
}

bool is_zero(const IntVector& v) { return (v.array() == 0).all(); }

/// Canonical basis of a linear subspace: reduced row echelon rows, made primitive.
std::vector<IntVector> canonical_span(const std::vector<IntVector>& vectors, Eigen::Index dim)
{
    if (vectors.empty()) return {};
    RationalMatrix m(static_cast<Eigen::Index>(vectors.size()), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        m.row(static_cast<Eigen::Index>(i)) = to_rational(vectors[i]).transpose();
    const auto e = rref<Rational>(m);
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        out.push_back(canonical_line(primitive(RationalVector(e.reduced.row(static_cast<Eigen::Index>(r)).transpose()))));
    sort_descending(out);
    return out;
}

/// Projects v onto the orthogonal complement of span(basis).
RationalVector project_out(const RationalVector& v, const std::vector<IntVector>& basis, Eigen::Index dim)
{
    if (basis.empty()) return v;
    RationalMatrix b(dim, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) b.col(static_cast<Eigen::Index>(j)) = to_rational(basis[j]);
    const RationalMatrix gram = b.transpose() * b;
    const RationalMatrix rhs = b.transpose() * v;
    const auto c = solve<Rational>(gram, rhs);
    return v - b * (*c);
}

}  // namespace

// ---------------------------------------------------------------------------
// Double description with explicit lineality tracking.

DoubleDescription double_description(Eigen::Index dim, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equalities)
{
    for (const auto& a : inequalities)
        if (a.size() != dim) throw DimensionMismatch("inequality length differs from cone dimension");
    for (const auto& e : equalities)
        if (e.size() != dim) throw DimensionMismatch("equality length differs from cone dimension");

    std::vector<BigVector> lin;
    if (equalities.empty()) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            BigVector e = BigVector::Zero(dim);
            e(i) = 1;
            lin.push_back(e);
        }
    } else {
        RationalMatrix eq(static_cast<Eigen::Index>(equalities.size()), dim);
        for (std::size_t i = 0; i < equalities.size(); ++i)
            eq.row(static_cast<Eigen::Index>(i)) = to_rational(equalities[i]).transpose();
        const RationalMatrix ns = nullspace<Rational>(eq);
        for (Eigen::Index j = 0; j < ns.cols(); ++j) lin.push_back(to_big(RationalVector(ns.col(j))));
    }

    std::vector<BigVector> rays;
    std::vector<IntVector> seen;  // inequalities processed so far

    const auto tight = [&](const BigVector& r) {
        std::vector<bool> z(seen.size());
        for (std::size_t i = 0; i < seen.size(); ++i) z[i] = dot(seen[i], r) == 0;
        return z;
    };

    for (const auto& a : inequalities) {
        if (is_zero(a)) continue;

        auto pivot = std::find_if(lin.begin(), lin.end(), [&](const BigVector& l) { return dot(a, l) != 0; });
        if (pivot != lin.end()) {
            // The new halfspace cuts the lineality space: l0 becomes a ray and
            // everything else is moved onto the hyperplane a.x = 0.
            BigVector l0 = *pivot;
            lin.erase(pivot);
            Integer al0 = dot(a, l0);
            if (al0 < 0) {
                l0 = -l0;
                al0 = -al0;
            }
            for (auto* group : {&lin, &rays}) {
                for (auto& v : *group) {
                    const Integer av = dot(a, v);
                    if (av == 0) continue;
                    v = BigVector(v * al0 - l0 * av);
                    make_primitive(v);
                }
            }
            rays.push_back(l0);
            seen.push_back(a);
            continue;
        }

        std::vector<BigVector> plus, zero, minus;
        for (auto& r : rays) {
            const Integer v = dot(a, r);
            (v > 0 ? plus : v < 0 ? minus : zero).push_back(r);
        }
        if (minus.empty()) {
            seen.push_back(a);
            continue;
        }

        std::vector<BigVector> next = plus;
        next.insert(next.end(), zero.begin(), zero.end());

        std::vector<std::vector<bool>> z_all;
        for (const auto& r : rays) z_all.push_back(tight(r));
        const auto z_of = [&](const BigVector& r) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (rays[i] == r) return z_all[i];
            return tight(r);
        };

        for (const auto& p : plus) {
            const auto zp = z_of(p);
            for (const auto& n : minus) {
                const auto zn = z_of(n);
                std::vector<bool> common(seen.size());
                for (std::size_t i = 0; i < seen.size(); ++i) common[i] = zp[i] && zn[i];

                // Combinatorial adjacency: no third ray is tight on all common constraints.
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (rays[k] == p || rays[k] == n) continue;
                    bool covers = true;
                    for (std::size_t i = 0; i < seen.size() && covers; ++i)
                        if (common[i] && !z_all[k][i]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;

                BigVector r = BigVector(n * dot(a, p) - p * dot(a, n));
                make_primitive(r);
                next.push_back(r);
            }
        }
        rays = std::move(next);
        seen.push_back(a);
    }

    DoubleDescription out;
    std::vector<IntVector> lin_int;
    for (const auto& l : lin) lin_int.push_back(primitive(l));
    out.lineality = canonical_span(lin_int, dim);
    for (const auto& r : rays) {
        IntVector v = primitive(r);
        if (!out.lineality.empty()) v = primitive(project_out(to_rational(v), out.lineality, dim));
        if (!is_zero(v)) out.rays.push_back(v);
    }
    sort_descending(out.rays);
    return out;
}

// ---------------------------------------------------------------------------

RationalCone RationalCone::from_inequalities(Eigen::Index dim, std::vector<IntVector> inequalities,
                                             std::vector<IntVector> equalities)
{
    RationalCone c;
    c.dim = dim;
    for (auto& a : inequalities)
        if (!is_zero(a)) c.inequalities.push_back(primitive(to_big(a)));
    for (auto& e : equalities)
        if (!is_zero(e)) c.equalities.push_back(e);
    c.has_inequalities = true;
    return with_generators(std::move(c));
}

RationalCone RationalCone::from_generators(Eigen::Index dim, std::vector<IntVector> rays,
                                           std::vector<IntVector> lineality)
{
    RationalCone c;
    c.dim = dim;
    for (auto& r : rays) {
        if (r.size() != dim) throw DimensionMismatch("generator length differs from cone dimension");
        if (!is_zero(r)) c.rays.push_back(primitive(to_big(r)));
    }
    for (auto& l : lineality)
        if (!is_zero(l)) c.lineality.push_back(l);
    c.has_generators = true;
    // Round trip through the inequality form so the generators are exactly
    // the extreme rays, in canonical order.
    c = with_inequalities(std::move(c));
    c.has_generators = false;
    return with_generators(std::move(c));
}

RationalCone RationalCone::orthant(Eigen::Index dim, int sign)
{
    std::vector<IntVector> ineq;
    for (Eigen::Index i = 0; i < dim; ++i) {
        IntVector e = IntVector::Zero(dim);
        e(i) = sign >= 0 ? 1 : -1;
        ineq.push_back(e);
    }
    return from_inequalities(dim, std::move(ineq));
}

RationalCone with_generators(RationalCone cone)
{
    if (cone.has_generators) return cone;
    auto dd = double_description(cone.dim, cone.inequalities, cone.equalities);
    cone.rays = std::move(dd.rays);
    cone.lineality = std::move(dd.lineality);
    cone.has_generators = true;
    return cone;
}

RationalCone with_inequalities(RationalCone cone)
{
    if (cone.has_inequalities) return cone;
    // The dual cone {a : a.r >= 0, a.l = 0} has the facet normals as its
    // extreme rays and the orthogonal complement of the cone's span as its
    // lineality.
    auto dual = double_description(cone.dim, cone.rays, cone.lineality);
    cone.inequalities = std::move(dual.rays);
    cone.equalities = std::move(dual.lineality);
    cone.has_inequalities = true;
    return cone;
}

bool RationalCone::is_pointed() const { return with_generators(*this).lineality.empty(); }

Eigen::Index RationalCone::dimension() const
{
    const RationalCone c = with_generators(*this);
    std::vector<IntVector> all = c.rays;
    all.insert(all.end(), c.lineality.begin(), c.lineality.end());
    if (all.empty()) return 0;
    IntMatrix m = from_rows(all, dim);
    return rank<Rational>(to_rational(m));
}

bool RationalCone::contains(const RationalVector& x) const
{
    const RationalCone c = with_inequalities(*this);
    for (const auto& a : c.inequalities)
        if (to_rational(a).dot(x) < 0) return false;
    for (const auto& e : c.equalities)
        if (to_rational(e).dot(x) != 0) return false;
    return true;
}

bool RationalCone::contains(const IntVector& x) const { return contains(to_rational(x)); }

bool RationalCone::contains(const std::vector<ExactReal>& x) const
{
    const RationalCone c = with_inequalities(*this);
    for (const auto& a : c.inequalities)
        if (sign_of(leeyang::dot(a, x)) == Sign::Negative) return false;
    for (const auto& e : c.equalities)
        if (!leeyang::dot(e, x).is_zero()) return false;
    return true;
}

bool RationalCone::contains_in_interior(const std::vector<ExactReal>& x) const
{
    const RationalCone c = with_inequalities(*this);
    if (!c.equalities.empty()) return false;
    for (const auto& a : c.inequalities)
        if (sign_of(leeyang::dot(a, x)) != Sign::Positive) return false;
    return true;
}

std::vector<IntVector> extreme_rays(const RationalCone& cone)
{
    const RationalCone c = with_generators(cone);
    if (!c.lineality.empty())
        throw NotPointed("cone has a lineality space of dimension " + std::to_string(c.lineality.size()));
    return c.rays;
}

RationalCone negate(const RationalCone& cone)
{
    RationalCone c = with_generators(with_inequalities(cone));
    for (auto& a : c.inequalities) a = -a;
    for (auto& r : c.rays) r = -r;
    sort_descending(c.rays);
    return c;
}

RationalCone intersect(const std::vector<RationalCone>& cones)
{
    if (cones.empty()) throw std::invalid_argument("intersect: no cones");
    const Eigen::Index dim = cones.front().dim;
    std::vector<IntVector> ineq, eq;
    for (const auto& c0 : cones) {
        if (c0.dim != dim) throw DimensionMismatch("intersect: cones in different dimensions");
        const RationalCone c = with_inequalities(c0);
        ineq.insert(ineq.end(), c.inequalities.begin(), c.inequalities.end());
        eq.insert(eq.end(), c.equalities.begin(), c.equalities.end());
    }
    return RationalCone::from_inequalities(dim, std::move(ineq), std::move(eq));
}

// ---------------------------------------------------------------------------
// Placing triangulation and Caratheodory decomposition

namespace {

RationalMatrix ray_matrix(const std::vector<IntVector>& rays, const std::vector<std::size_t>& idx)
{
    RationalMatrix m(rays.front().size(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = to_rational(rays[idx[j]]);
    return m;
}

}  // namespace

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& rays)
{
    using Simplex = std::vector<std::size_t>;
    std::vector<Simplex> simplices;
    std::vector<std::size_t> placed;
    Eigen::Index span_rank = 0;

    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<std::size_t> with_i = placed;
        with_i.push_back(i);
        const Eigen::Index r = rank<Rational>(ray_matrix(rays, with_i));

        if (r > span_rank) {
            // Dimension goes up: cone over every existing simplex.
            if (simplices.empty()) simplices.push_back({});
            for (auto& s : simplices) s.push_back(i);
            span_rank = r;
        } else {
            // Add F + {i} for every boundary facet F visible from ray i.
            std::map<Simplex, int> facet_count;
            for (const auto& s : simplices)
                for (std::size_t k = 0; k < s.size(); ++k) {
                    Simplex f = s;
                    f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
                    ++facet_count[f];
                }
            std::vector<Simplex> added;
            for (const auto& s : simplices) {
                const auto coords = solve<Rational>(ray_matrix(rays, s), to_rational(rays[i]));
                for (std::size_t k = 0; k < s.size(); ++k) {
                    Simplex f = s;
                    f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
                    if (facet_count[f] != 1) continue;
                    // Ray i lies beyond the facet opposite s[k] iff its coordinate
                    // along s[k] is negative.
                    if ((*coords)(static_cast<Eigen::Index>(k), 0) < 0) {
                        f.push_back(i);
                        added.push_back(f);
                    }
                }
            }
            simplices.insert(simplices.end(), added.begin(), added.end());
        }
        placed.push_back(i);
    }
    for (auto& s : simplices) std::sort(s.begin(), s.end());
    std::sort(simplices.begin(), simplices.end());
    return simplices;
}

CaratheodoryResult caratheodory_decompose(const std::vector<IntVector>& rays, const std::vector<ExactReal>& point)
{
    if (rays.empty()) throw NotInCone("caratheodory_decompose: no rays");
    const auto dim = rays.front().size();
    if (static_cast<Eigen::Index>(point.size()) != dim)
        throw DimensionMismatch("caratheodory_decompose: point dimension");
    const ContextPtr& ctx = point.front().context();

    RationalMatrix coords(dim, static_cast<Eigen::Index>(ctx->size()));
    for (Eigen::Index i = 0; i < dim; ++i) coords.row(i) = point[static_cast<std::size_t>(i)].coords().transpose();

    const auto simplices = placing_triangulation(rays);
    for (std::size_t si = 0; si < simplices.size(); ++si) {
        const auto& s = simplices[si];
        const auto x = solve<Rational>(ray_matrix(rays, s), coords);
        if (!x) continue;
        // solve() only returns consistent solutions, but verify the residual exactly.
        if (ray_matrix(rays, s) * (*x) != coords) continue;

        std::vector<ExactReal> lambda;
        bool inside = true;
        for (std::size_t k = 0; k < s.size() && inside; ++k) {
            lambda.emplace_back(ctx, RationalVector(x->row(static_cast<Eigen::Index>(k)).transpose()));
            inside = sign_of(lambda.back()) != Sign::Negative;
        }
        if (!inside) continue;

        CaratheodoryResult out;
        out.simplex_index = si;
        out.simplex_count = simplices.size();
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (lambda[k].is_zero()) {
                out.dropped.push_back(rays[s[k]]);
            } else {
                out.rays.push_back(rays[s[k]]);
                out.coefficients.push_back(lambda[k]);
            }
        }
        return out;
    }
    throw NotInCone("point is not in the cone spanned by the given rays");
}

// ---------------------------------------------------------------------------
// Polytopes

bool Polytope::has_vertex(const IntVector& v) const
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Polytope convex_hull(Eigen::Index dim, const std::vector<IntVector>& points)
{
    std::vector<IntVector> pts = points;
    for (const auto& p : pts)
        if (p.size() != dim) throw DimensionMismatch("convex_hull: point dimension");
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end(), [](const IntVector& a, const IntVector& b) { return a == b; }),
              pts.end());

    Polytope out;
    out.dim = dim;
    for (const auto& alpha : pts) {
        // alpha is a vertex iff some w has <alpha - gamma, w> > 0 for all
        // other gamma, i.e. the cone {w : <gamma - alpha, w> <= 0} is full-dimensional.
        std::vector<IntVector> ineq;
        for (const auto& gamma : pts)
            if (gamma != alpha) ineq.push_back(alpha - gamma);
        const auto dd = double_description(dim, ineq);
        std::vector<IntVector> all = dd.rays;
        all.insert(all.end(), dd.lineality.begin(), dd.lineality.end());
        const Eigen::Index r = all.empty() ? 0 : rank<Rational>(to_rational(from_rows(all, dim)));
        if (r == dim) out.vertices.push_back(alpha);
    }
    return out;
}

Polytope newton_polytope(const MultiPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial("Newton polytope of the zero polynomial");
    return convex_hull(p.num_vars(), p.support());
}

IntVector max_vertex(const Polytope& polytope, const std::vector<ExactReal>& ell)
{
    if (polytope.vertices.empty()) throw std::invalid_argument("max_vertex: empty polytope");
    if (static_cast<Eigen::Index>(ell.size()) != polytope.dim) throw DimensionMismatch("max_vertex: ell length");
    if (polytope.dim == 0) return polytope.vertices.front();

    std::size_t best = 0;
    for (std::size_t k = 1; k < polytope.vertices.size(); ++k) {
        const Sign s = sign_of(dot(IntVector(polytope.vertices[k] - polytope.vertices[best]), ell));
        if (s == Sign::Positive) best = k;
    }
    for (std::size_t k = 0; k < polytope.vertices.size(); ++k) {
        if (k == best) continue;
        const Sign s = sign_of(dot(IntVector(polytope.vertices[best] - polytope.vertices[k]), ell));
        if (s != Sign::Positive)
            throw TieDetected("vertices attain equal inner products with ell; its entries are Q-dependent");
    }
    return polytope.vertices[best];
}

RationalCone normal_cone(const Polytope& polytope, const IntVector& beta)
{
    if (!polytope.has_vertex(beta)) throw NotAVertex("normal_cone: point is not a vertex of the polytope");
    std::vector<IntVector> ineq;
    for (const auto& alpha : polytope.vertices)
        if (alpha != beta) ineq.push_back(beta - alpha);
    return RationalCone::from_inequalities(polytope.dim, std::move(ineq));
}

}  // namespace leeyang
