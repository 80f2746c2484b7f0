#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace leeyang;
using std::numbers::pi;

namespace {

ExponentialSum sin_pi(const ContextPtr& ctx)
{
    return ExponentialSum(ctx, {{GaussianRational(0, Rational(1, 2)), 0, fixture::real(ctx, {0, -1})},
                                {GaussianRational(0, Rational(-1, 2)), 0, fixture::real(ctx, {0, 1})}});
}

ExponentialSum integer_freqs(const std::vector<GaussianRational>& c)
{
    auto q = BasisContext::rationals_and({});
    std::vector<ExactReal> omega;
    for (std::size_t j = 1; j < c.size(); ++j) omega.push_back(ExactReal::rational(q, static_cast<int>(j)));
    return ExponentialSum::from_frequencies(q, c, omega);
}

}  // namespace

TEST_CASE("validate and reduce the fixture", "[expsum]")
{
    auto ctx = fixture::pi_basis();
    const auto red = validate_and_reduce(fixture::sin_sum(ctx, Rational(1, 4)));
    REQUIRE(red.lambda0_re == 0);
    REQUIRE(red.lambda0_im == fixture::real(ctx, {0, -1}));
    REQUIRE(red.g.normalized());
    REQUIRE(red.g.terms()[0].coeff == GaussianRational(0, Rational(1, 2)));
    const auto omega = red.g.frequencies();
    REQUIRE(omega == std::vector<ExactReal>{fixture::real(ctx, {-1, 1}), fixture::real(ctx, {1, 1}),
                                            fixture::real(ctx, {0, 2})});
}

TEST_CASE("off-line exponents are rejected", "[expsum]")
{
    auto q = BasisContext::rationals_and({});
    const ExponentialSum f(q, {{GaussianRational(1), 0, ExactReal::zero(q)},
                               {GaussianRational(1), 1, ExactReal::zero(q)}});
    REQUIRE_THROWS_AS(validate_and_reduce(f), NotVerticalSegment);
}

TEST_CASE("evaluation", "[expsum]")
{
    auto ctx = fixture::pi_basis();
    const auto f = fixture::sin_sum(ctx, Rational(1, 4));
    for (double x : {0.0, 0.5, 1.7, -3.2}) {
        const Complex v = evaluate(f, x);
        REQUIRE(std::abs(v - (std::sin(pi * x) + 0.25 * std::sin(x))) < 1e-14);
    }
}

TEST_CASE("zero scan of sin(pi x)", "[expsum]")
{
    auto ctx = fixture::pi_basis();
    const auto zl = real_zero_scan(sin_pi(ctx), -0.25, 10.5, 0.05);
    REQUIRE(zl.zeros.size() == 11);
    for (std::size_t k = 0; k < zl.zeros.size(); ++k) {
        REQUIRE(std::abs(zl.zeros[k].x - static_cast<double>(k)) < 1e-10);
        REQUIRE(zl.zeros[k].multiplicity == 1);
    }
    REQUIRE_THROWS_AS(real_zero_scan(sin_pi(ctx), 0, 10, 2.0), StepTooCoarse);
}

TEST_CASE("double zero of (1 + exp(ix))^2", "[expsum]")
{
    const auto f = integer_freqs({1, 2, 1});
    const auto zl = real_zero_scan(f, 0, 6, 0.05);
    REQUIRE(zl.zeros.size() == 1);
    REQUIRE(zl.zeros[0].x == Catch::Approx(pi).margin(1e-6));
    REQUIRE(zl.zeros[0].multiplicity == 2);
    REQUIRE(zl.total_multiplicity() == 2);
    REQUIRE(multiplicity(f, pi, 0.1) == 2);
}

TEST_CASE("argument principle sees zeros off the line", "[expsum]")
{
    // 3w^2 + w + 1 has |w|^2 = 1/3, so each period holds two zeros at Im x = log(3)/2.
    const auto f = integer_freqs({1, 1, 3});
    const double a = 0.1, b = 0.1 + 2 * pi;
    REQUIRE(real_zero_scan(f, a, b, 0.05).zeros.empty());
    REQUIRE(argument_principle_count(f, a, b, 1.0) == 2);
    REQUIRE(argument_principle_count(f, a, b, 0.2) == 0);
}

TEST_CASE("fixture zeros agree with a bisection oracle", "[expsum]")
{
    auto ctx = fixture::pi_basis();
    const auto f = fixture::sin_sum(ctx, Rational(1, 4));
    const auto zl = real_zero_scan(f, 0.3, 40.3, 0.05);
    const auto expect = oracle::sign_change_roots(
        [](double x) { return std::sin(pi * x) + 0.25 * std::sin(x); }, 0.3, 40.3, 40000);
    REQUIRE(zl.zeros.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) REQUIRE(std::abs(zl.zeros[k].x - expect[k]) < 1e-9);
}

TEST_CASE("zero density matches the frequency span", "[expsum]")
{
    // Span of the frequencies is 2 pi, so one zero per unit length.
    auto ctx = fixture::pi_basis();
    const auto zl = real_zero_scan(fixture::sin_sum(ctx, Rational(1, 4)), 0.3, 200.3, 0.05);
    REQUIRE(std::abs(zl.total_multiplicity() - 200) <= 2);
}
