#include "leeyang/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "leeyang/linalg.hpp"

namespace leeyang {

namespace {

std::string vec_str(const IntVector& v)
{
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
    os << ")";
    return os.str();
}

std::string vec_str(const std::vector<ExactReal>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

std::string rows_str(const IntMatrix& m)
{
    std::string s = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) s += (r ? "," : "") + vec_str(IntVector(m.row(r).transpose()));
    return s + "]";
}

}  // namespace

bool same_terms(const ExponentialSum& a, const ExponentialSum& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const auto& s = a.terms()[j];
        const auto& t = b.terms()[j];
        if (s.coeff != t.coeff || s.lambda_re != t.lambda_re || s.lambda_im != t.lambda_im) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Exp2Poly exp2poly(const ExponentialSum& g)
{
    if (!g.normalized()) throw std::invalid_argument("exp2poly: sum must be normalized");
    if (g.size() < 2) throw Degenerate("exp2poly: a single term has no frequencies to lift");

    Exp2Poly out;
    const std::vector<ExactReal> omega = g.frequencies();
    const auto s = static_cast<Eigen::Index>(omega.size());
    out.lattice = relation_lattice(omega);

    std::vector<IntVector> positive;
    for (Eigen::Index j = 0; j < s; ++j) {
        IntVector e = IntVector::Zero(s);
        e(j) = 1;
        positive.push_back(e);
    }
    const RationalCone cone = RationalCone::from_inequalities(s, positive, out.lattice.relations);
    out.cone_rays = extreme_rays(cone);

    const CaratheodoryResult car = caratheodory_decompose(out.cone_rays, omega);
    if (static_cast<Eigen::Index>(car.rays.size()) != out.lattice.rank)
        throw std::logic_error("exp2poly: decomposition uses " + std::to_string(car.rays.size()) +
                               " rays but dim_Q is " + std::to_string(out.lattice.rank));
    out.ell = car.coefficients;
    out.a = from_rows(car.rays, s);
    if (!car.dropped.empty())
        out.notes.push_back("dropped " + std::to_string(car.dropped.size()) + " zero-coefficient ray(s)");
    out.notes.push_back("Caratheodory simplex " + std::to_string(car.simplex_index + 1) + " of " +
                        std::to_string(car.simplex_count));

    MultiPoly big(s);
    big.add_term(IntVector::Zero(s), g.terms().front().coeff);
    for (Eigen::Index j = 0; j < s; ++j) {
        IntVector e = IntVector::Zero(s);
        e(j) = 1;
        big.add_term(e, g.terms()[static_cast<std::size_t>(j + 1)].coeff);
    }
    out.p = substitute_monomials(big, out.a);

    if (dim_q(out.ell) != out.lattice.rank) throw std::logic_error("exp2poly: entries of ell are Q-dependent");
    if (!same_terms(restrict(out.p, out.ell), g)) throw std::logic_error("exp2poly: restriction identity failed");
    return out;
}

MonomialChange monomial_change(const MultiPoly& p, const std::vector<ExactReal>& ell)
{
    const Eigen::Index n = p.num_vars();
    if (static_cast<Eigen::Index>(ell.size()) != n) throw DimensionMismatch("monomial_change: ell length");

    MonomialChange out;
    const Polytope newton = newton_polytope(p);
    std::vector<ExactReal> neg;
    for (const auto& l : ell) neg.push_back(-l);
    out.beta_plus = max_vertex(newton, ell);
    out.beta_minus = max_vertex(newton, neg);

    out.cone = intersect({normal_cone(newton, out.beta_plus), negate(normal_cone(newton, out.beta_minus)),
                          RationalCone::orthant(n, 1)});
    if (!out.cone.full_dimensional())
        throw ConeDegenerate("the cone N(+ell) cap -N(-ell) cap orthant has dimension " +
                             std::to_string(out.cone.dimension()) + " < " + std::to_string(n));

    const CaratheodoryResult car = caratheodory_decompose(extreme_rays(out.cone), ell);
    if (static_cast<Eigen::Index>(car.rays.size()) != n)
        throw ConeDegenerate("ell lies on a lower-dimensional face of the monomial-change cone");
    out.b = from_rows(car.rays, n);
    out.ell = car.coefficients;
    out.q = substitute_monomials(p, out.b);
    out.identity = out.b == IntMatrix::Identity(n, n);
    out.notes.push_back("cone rays " + std::to_string(out.cone.rays.size()) + ", Caratheodory simplex " +
                        std::to_string(car.simplex_index + 1) + " of " + std::to_string(car.simplex_count));

    if (!same_terms(restrict(out.q, out.ell), restrict(p, ell)))
        throw std::logic_error("monomial_change: restriction identity failed");
    return out;
}

// ---------------------------------------------------------------------------

LiftResult lift(const ExponentialSum& f, const LiftOptions& opts)
{
    LiftResult r;
    r.context = f.context();
    r.inexact = f.inexact();
    auto& log = r.provenance;
    if (r.inexact) log.push_back("input has floating-point coefficients; exactness holds only for the rounded values");

    const Reduction red = validate_and_reduce(f);
    r.lambda0_re = red.lambda0_re;
    r.lambda0_im = red.lambda0_im;
    r.g = red.g;
    log.push_back("validate: exponents on a vertical line; lambda0 = " + red.lambda0_re.str() + " + i*(" +
                  red.lambda0_im.str() + ")");

    const Exp2Poly e2p = exp2poly(red.g);
    r.p_initial = e2p.p;
    r.ell_initial = e2p.ell;
    r.a_matrix = e2p.a;
    log.push_back("exp2poly: dim_Q = " + std::to_string(e2p.lattice.rank) + ", " +
                  std::to_string(e2p.lattice.relations.size()) + " relation(s), A = " + rows_str(e2p.a) +
                  ", ell = " + vec_str(e2p.ell));
    for (const auto& note : e2p.notes) log.push_back("exp2poly: " + note);

    if (opts.assume_real_rooted) {
        log.push_back("warning: ray disjointness check skipped; real-rootedness assumed");
    } else {
        const RayReport report = ray_disjointness_check(e2p.p, to_doubles(e2p.ell), opts.t_grid, opts.ray);
        r.ray = report;
        if (report.verdict == RayReport::Verdict::Falsified) {
            const auto& w = *report.witness;
            std::ostringstream os;
            os << "the line t*ell meets the amoeba at t = " << w.t << " (|p| = " << w.modulus
               << "); the input has a non-real zero";
            throw RayHit(w.t, w.theta, w.modulus, os.str());
        }
        std::ostringstream os;
        os << "ray check: no hit on " << report.points.size() << " t-values x " << report.theta_samples
           << " theta samples, min modulus " << report.min_modulus;
        log.push_back(os.str());
        log.push_back("real-rootedness assumed beyond the sampled ray check");
    }

    const MonomialChange mc = monomial_change(e2p.p, e2p.ell);
    r.change_matrix = mc.b;
    r.q_final = mc.q;
    r.ell_final = mc.ell;
    r.beta_plus = mc.beta_plus;
    r.beta_minus = mc.beta_minus;
    log.push_back("max vertices: " + vec_str(mc.beta_plus) + " for +ell, " + vec_str(mc.beta_minus) + " for -ell");
    log.push_back(mc.identity ? "monomial change: cone is the orthant, identity substitution"
                              : "monomial change: B = " + rows_str(mc.b) + ", ell_final = " + vec_str(mc.ell));
    for (const auto& note : mc.notes) log.push_back("monomial change: " + note);

    if (!same_terms(restrict(r.q_final, r.ell_final), r.g)) throw std::logic_error("lift: restriction identity failed");
    log.push_back("restriction identity q(exp(i x ell_final)) = exp(-lambda0 x) f(x) checked exactly");

    r.certification = certify_lee_yang(r.q_final, opts.certify);
    log.push_back("certification: " + to_string(r.certification.verdict) + " (" +
                  std::to_string(r.certification.lopsided_points) + "/" +
                  std::to_string(r.certification.grid_points) + " lopsided grid points)");
    for (const auto& note : r.certification.notes) log.push_back("certification: " + note);
    return r;
}

double max_restriction_error(const LiftResult& r, const ExponentialSum& f, const std::vector<double>& xs)
{
    const NumericExpSum fn(f);
    const NumericPoly q(r.q_final);
    const std::vector<double> ell = to_doubles(r.ell_final);
    const Complex lambda0 = r.lambda0();
    double worst = 0.0;
    std::vector<Complex> z(ell.size());
    for (double x : xs) {
        for (std::size_t j = 0; j < ell.size(); ++j) z[j] = std::polar(1.0, x * ell[j]);
        const Complex lifted = std::exp(lambda0 * x) * q(z);
        worst = std::max(worst, std::abs(fn(x) - lifted));
    }
    return worst;
}

// ---------------------------------------------------------------------------

long FQMeasure::total_weight() const
{
    long s = 0;
    for (const auto& a : atoms) s += a.weight;
    return s;
}

double default_step(const ExponentialSum& g)
{
    if (g.size() < 2) return 0.1;
    double omega_max = 0.0;
    for (const auto& t : g.terms()) omega_max = std::max(omega_max, std::abs(to_double(t.lambda_im)));
    return std::min(0.1, 0.25 * std::numbers::pi / omega_max);
}

FQMeasure fq_measure(const MultiPoly& q, const std::vector<ExactReal>& ell, double a, double b, double step,
                     const ScanOptions& opts)
{
    FQMeasure mu;
    mu.a = a;
    mu.b = b;
    mu.q = q;
    mu.ell = ell;
    const ExponentialSum g = restrict(q, ell);
    if (step <= 0) step = default_step(g);
    const ZeroList zeros = real_zero_scan(g, a, b, step, opts);
    for (const auto& z : zeros.zeros) mu.atoms.push_back({z.x, z.multiplicity});
    return mu;
}

std::vector<DiffractionPoint> diffraction_diagnostic(const std::vector<Atom>& atoms, double a, double b,
                                                     const std::vector<double>& xi_grid)
{
    if (atoms.empty()) throw std::invalid_argument("diffraction_diagnostic: no atoms");
    if (!(b > a)) throw std::invalid_argument("diffraction_diagnostic: empty window");
    std::vector<DiffractionPoint> out;
    out.reserve(xi_grid.size());
    for (double xi : xi_grid) {
        Complex s = 0.0;
        for (const auto& atom : atoms) s += static_cast<double>(atom.weight) * std::polar(1.0, -xi * atom.x);
        out.push_back({xi, std::abs(s) / (b - a)});
    }
    return out;
}

}  // namespace leeyang
