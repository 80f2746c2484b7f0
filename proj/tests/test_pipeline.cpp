#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "leeyang/pipeline.hpp"
#include "oracles.hpp"

using namespace leeyang;
using fixture::iv;
using std::numbers::pi;

namespace {

const Rational kEps(1, 4);

double restriction_gap(const MultiPoly& p, const std::vector<ExactReal>& ell, const MultiPoly& q,
                       const std::vector<ExactReal>& ell2)
{
    double worst = 0;
    const auto a = to_doubles(ell), b = to_doubles(ell2);
    for (int k = 0; k < 100; ++k) {
        const double x = -7.3 + 0.147 * k;
        worst = std::max(worst, std::abs(evaluate(p, fixture::exp_ix(x, a)) - evaluate(q, fixture::exp_ix(x, b))));
    }
    return worst;
}

}  // namespace

TEST_CASE("exp2poly on the fixture", "[pipeline]")
{
    auto ctx = fixture::pi_basis();
    const auto g = validate_and_reduce(fixture::sin_sum(ctx, kEps)).g;
    const auto e = exp2poly(g);
    IntMatrix a(2, 3);
    a << 1, 0, 1, 0, 1, 1;
    REQUIRE(e.a == a);
    REQUIRE(e.ell == fixture::sin_ell(ctx));
    REQUIRE(e.p == fixture::sin_poly(kEps));
    REQUIRE(same_terms(restrict(e.p, e.ell), g));
}

TEST_CASE("exp2poly with rational frequencies", "[pipeline]")
{
    auto q = BasisContext::rationals_and({});
    const std::vector<ExactReal> omega{ExactReal::rational(q, 1), ExactReal::rational(q, 2), ExactReal::rational(q, 3)};
    const auto g = ExponentialSum::from_frequencies(q, {1, 1, 1, 1}, omega);
    const auto e = exp2poly(g);
    IntMatrix a(1, 3);
    a << 1, 2, 3;
    REQUIRE(e.a == a);
    REQUIRE(e.ell == std::vector<ExactReal>{ExactReal::rational(q, 1)});
    REQUIRE(e.p == MultiPoly(1, {{iv({0}), 1}, {iv({1}), 1}, {iv({2}), 1}, {iv({3}), 1}}));

    REQUIRE_THROWS_AS(exp2poly(ExponentialSum::from_frequencies(q, {1}, {})), Degenerate);
}

TEST_CASE("exp2poly restricts back exactly on random sums", "[pipeline][property]")
{
    auto ctx = BasisContext::rationals_and({"pi", "sqrt2"});
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(0, 3), s(1, 4), c(1, 5);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = s(rng);
        std::vector<ExactReal> omega;
        std::vector<GaussianRational> coeffs{1};
        for (int j = 0; j < n; ++j) {
            omega.push_back(fixture::real(ctx, {1 + d(rng), d(rng), d(rng)}));
            coeffs.emplace_back(c(rng), c(rng));
        }
        const auto g = ExponentialSum::from_frequencies(ctx, coeffs, omega);
        if (g.size() < 2) continue;
        const auto e = exp2poly(g);
        REQUIRE(same_terms(restrict(e.p, e.ell), g));
        REQUIRE(static_cast<Eigen::Index>(e.ell.size()) == e.lattice.rank);
        for (Eigen::Index i = 0; i < e.a.rows(); ++i)
            for (Eigen::Index j = 0; j < e.a.cols(); ++j) REQUIRE(e.a(i, j) >= 0);
    }
}

TEST_CASE("monomial change on the fixture is the identity", "[pipeline]")
{
    auto ctx = fixture::pi_basis();
    const auto m = monomial_change(fixture::sin_poly(kEps), fixture::sin_ell(ctx));
    REQUIRE(m.identity);
    REQUIRE(m.beta_plus == iv({1, 1}));
    REQUIRE(m.beta_minus == iv({0, 0}));
    REQUIRE(m.q == fixture::sin_poly(kEps));
}

TEST_CASE("monomial change onto a narrower cone", "[pipeline]")
{
    // N at (1,1) is {w1 >= w2 >= 0}, spanned by (1,1) and (1,0).
    auto ctx = fixture::pi_basis();
    const MultiPoly p(2, {{iv({0, 0}), 1}, {iv({1, 0}), 1}, {iv({1, 1}), 1}, {iv({0, 2}), 1}});
    const std::vector<ExactReal> ell{fixture::real(ctx, {0, 1}), fixture::real(ctx, {1, 0})};
    const auto m = monomial_change(p, ell);
    REQUIRE_FALSE(m.identity);
    IntMatrix b(2, 2);
    b << 1, 1, 1, 0;
    REQUIRE(m.b == b);
    REQUIRE(m.ell == std::vector<ExactReal>{fixture::real(ctx, {1, 0}), fixture::real(ctx, {-1, 1})});
    REQUIRE(restriction_gap(p, ell, m.q, m.ell) < 1e-12);
}

TEST_CASE("lift the fixture", "[pipeline]")
{
    auto ctx = fixture::pi_basis();
    const auto f = fixture::sin_sum(ctx, kEps);
    const auto r = lift(f);
    REQUIRE(r.lambda0_im == fixture::real(ctx, {0, -1}));
    REQUIRE(r.q_final == fixture::sin_poly(kEps));
    REQUIRE(r.ell_final == fixture::sin_ell(ctx));
    REQUIRE(r.certification.verdict == Verdict::CertifiedOnSamples);
    REQUIRE(r.ray);
    REQUIRE(r.ray->verdict == RayReport::Verdict::CorroboratedUpTo);
    std::vector<double> xs;
    for (int k = 0; k <= 400; ++k) xs.push_back(-50 + 0.25 * k);
    REQUIRE(max_restriction_error(r, f, xs) < 1e-12);

    LiftOptions skip;
    skip.assume_real_rooted = true;
    REQUIRE_FALSE(lift(f, skip).ray);
}

TEST_CASE("lift sin(pi x)", "[pipeline]")
{
    auto ctx = fixture::pi_basis();
    const ExponentialSum f(ctx, {{GaussianRational(0, Rational(1, 2)), 0, fixture::real(ctx, {0, -1})},
                                 {GaussianRational(0, Rational(-1, 2)), 0, fixture::real(ctx, {0, 1})}});
    const auto r = lift(f);
    REQUIRE(r.ell_final == std::vector<ExactReal>{fixture::real(ctx, {0, 2})});
    REQUIRE(r.q_final.size() == 2);
    REQUIRE(r.certification.verdict == Verdict::CertifiedOnSamples);
}

TEST_CASE("lift rejects 1 + 3 exp(ix)", "[pipeline]")
{
    auto q = BasisContext::rationals_and({});
    const auto f = ExponentialSum::from_frequencies(q, {1, 3}, {ExactReal::rational(q, 1)});
    try {
        lift(f);
        FAIL("expected RayHit");
    } catch (const RayHit& hit) {
        REQUIRE(hit.t == Catch::Approx(-std::log(3.0)).margin(1e-8));
    }
}

TEST_CASE("FQ measure of the fixture", "[pipeline]")
{
    auto ctx = fixture::pi_basis();
    const auto mu = fq_measure(fixture::sin_poly(kEps), fixture::sin_ell(ctx), 0.3, 50.3);
    const auto expect = oracle::sign_change_roots(
        [](double x) { return std::sin(pi * x) + 0.25 * std::sin(x); }, 0.3, 50.3, 50000);
    REQUIRE(mu.atoms.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
        REQUIRE(std::abs(mu.atoms[k].x - expect[k]) < 1e-9);
        REQUIRE(mu.atoms[k].weight == 1);
    }
    REQUIRE(mu.total_weight() == 50);
}

TEST_CASE("diffraction separates the FQ measure from Poisson points", "[pipeline]")
{
    auto ctx = fixture::pi_basis();
    const double a = 0.3, b = 400.3;
    const auto mu = fq_measure(fixture::sin_poly(kEps), fixture::sin_ell(ctx), a, b);
    const auto peak = diffraction_diagnostic(mu, {2 * pi})[0];
    REQUIRE(peak.height > 0.8);
    const auto dc = diffraction_diagnostic(mu, {0.0})[0];
    REQUIRE(dc.height == Catch::Approx(static_cast<double>(mu.total_weight()) / (b - a)));

    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(a, b);
    std::vector<Atom> poisson;
    for (std::size_t k = 0; k < mu.atoms.size(); ++k) poisson.push_back({u(rng), 1});
    REQUIRE(diffraction_diagnostic(poisson, a, b, {2 * pi})[0].height < 0.2);
}
