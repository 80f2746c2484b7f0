#include "leeyang/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "leeyang/linalg.hpp"

namespace leeyang {

MultiPoly::MultiPoly(Eigen::Index num_vars, const std::vector<std::pair<IntVector, GaussianRational>>& terms)
    : num_vars_(num_vars)
{
    for (const auto& [alpha, c] : terms) add_term(alpha, c);
}

MultiPoly MultiPoly::constant(Eigen::Index num_vars, const GaussianRational& c)
{
    MultiPoly p(num_vars);
    p.add_term(IntVector::Zero(num_vars), c);
    return p;
}

MultiPoly MultiPoly::variable(Eigen::Index num_vars, Eigen::Index var, const GaussianRational& c)
{
    if (var < 0 || var >= num_vars) throw DimensionMismatch("variable index out of range");
    MultiPoly p(num_vars);
    IntVector alpha = IntVector::Zero(num_vars);
    alpha(var) = 1;
    p.add_term(alpha, c);
    return p;
}

void MultiPoly::add_term(const IntVector& alpha, const GaussianRational& c)
{
    if (alpha.size() != num_vars_) throw DimensionMismatch("exponent length differs from variable count");
    if ((alpha.array() < 0).any()) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational MultiPoly::coefficient(const IntVector& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational MultiPoly::constant_term() const { return coefficient(IntVector::Zero(num_vars_)); }

std::vector<IntVector> MultiPoly::support() const
{
    std::vector<IntVector> out;
    for (const auto& [alpha, c] : terms_) out.push_back(alpha);
    return out;
}

std::int64_t MultiPoly::degree(Eigen::Index var) const
{
    std::int64_t d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, alpha(var));
    return d;
}

IntVector MultiPoly::degrees() const
{
    IntVector d = IntVector::Zero(num_vars_);
    for (const auto& [alpha, c] : terms_) d = d.cwiseMax(alpha);
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    if (o.num_vars_ != num_vars_) throw DimensionMismatch("adding polynomials in different variables");
    MultiPoly r = *this;
    for (const auto& [alpha, c] : o.terms_) r.add_term(alpha, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o * GaussianRational(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    if (o.num_vars_ != num_vars_) throw DimensionMismatch("multiplying polynomials in different variables");
    MultiPoly r(num_vars_);
    for (const auto& [a, c] : terms_)
        for (const auto& [b, d] : o.terms_) r.add_term(a + b, c * d);
    return r;
}

MultiPoly MultiPoly::operator*(const GaussianRational& s) const
{
    MultiPoly r(num_vars_);
    for (const auto& [alpha, c] : terms_) r.add_term(alpha, c * s);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const
{
    if (num_vars_ != o.num_vars_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [alpha, c] : terms_) {
        if (alpha != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string MultiPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (Eigen::Index j = 0; j < alpha.size(); ++j) {
            if (alpha(j) == 0) continue;
            os << "*z" << (j + 1);
            if (alpha(j) > 1) os << "^" << alpha(j);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

MultiPoly substitute_monomials(const MultiPoly& p, const IntMatrix& a)
{
    if (a.cols() != p.num_vars())
        throw DimensionMismatch("substitution matrix needs one column per variable of p");
    if ((a.array() < 0).any()) throw std::invalid_argument("substitution exponents must be nonnegative");
    MultiPoly q(a.rows());
    for (const auto& [alpha, c] : p.terms()) q.add_term(a * alpha, c);
    return q;
}

MultiPoly dagger(const MultiPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial("dagger of the zero polynomial");
    const IntVector deg = p.degrees();
    MultiPoly r(p.num_vars());
    for (const auto& [alpha, c] : p.terms()) r.add_term(deg - alpha, c);
    return r;
}

MultiPoly strip_monomial_factor(const MultiPoly& p)
{
    if (p.is_zero()) throw ZeroPolynomial("zero polynomial has every monomial factor");
    IntVector low = p.terms().begin()->first;
    for (const auto& [alpha, c] : p.terms()) low = low.cwiseMin(alpha);
    MultiPoly r(p.num_vars());
    for (const auto& [alpha, c] : p.terms()) r.add_term(alpha - low, c);
    return r;
}

// ---------------------------------------------------------------------------

NumericPoly::NumericPoly(const MultiPoly& p) : num_vars(p.num_vars()), degrees(p.degrees())
{
    for (const auto& [alpha, c] : p.terms()) {
        exponents.push_back(alpha);
        coeffs.push_back(c.to_complex());
    }
}

namespace {

using Powers = std::vector<std::vector<std::complex<double>>>;

Powers power_table(std::span<const std::complex<double>> z, const IntVector& degrees)
{
    Powers pw(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        const auto d = static_cast<std::size_t>(degrees(static_cast<Eigen::Index>(j)));
        pw[j].resize(d + 1);
        pw[j][0] = 1.0;
        for (std::size_t k = 1; k <= d; ++k) pw[j][k] = pw[j][k - 1] * z[j];
    }
    return pw;
}

}  // namespace

std::complex<double> NumericPoly::operator()(std::span<const std::complex<double>> z) const
{
    if (static_cast<Eigen::Index>(z.size()) != num_vars) throw DimensionMismatch("evaluation point length");
    const Powers pw = power_table(z, degrees);
    std::complex<double> sum = 0.0, carry = 0.0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        std::complex<double> m = coeffs[t];
        for (Eigen::Index j = 0; j < num_vars; ++j)
            m *= pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(exponents[t](j))];
        // Kahan summation, componentwise through std::complex arithmetic.
        const std::complex<double> y = m - carry;
        const std::complex<double> s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    return sum;
}

std::vector<std::complex<double>> NumericPoly::gradient(std::span<const std::complex<double>> z) const
{
    const Powers pw = power_table(z, degrees);
    std::vector<std::complex<double>> g(z.size(), 0.0);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        for (Eigen::Index k = 0; k < num_vars; ++k) {
            const auto ek = exponents[t](k);
            if (ek == 0) continue;
            std::complex<double> m = coeffs[t] * static_cast<double>(ek);
            for (Eigen::Index j = 0; j < num_vars; ++j) {
                const auto e = exponents[t](j) - (j == k ? 1 : 0);
                m *= pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
            }
            g[static_cast<std::size_t>(k)] += m;
        }
    }
    return g;
}

std::complex<double> evaluate(const MultiPoly& p, std::span<const std::complex<double>> z)
{
    return NumericPoly(p)(z);
}

ExponentialSum restrict(const MultiPoly& p, const std::vector<ExactReal>& ell)
{
    if (static_cast<Eigen::Index>(ell.size()) != p.num_vars())
        throw DimensionMismatch("restrict: ell length differs from variable count");
    if (ell.empty()) throw std::invalid_argument("restrict: needs at least one variable");
    for (const auto& l : ell)
        if (sign_of(l) != Sign::Positive) throw std::invalid_argument("restrict: ell must be positive");

    const ContextPtr& ctx = ell.front().context();
    std::vector<ExpTerm> terms;
    for (const auto& [alpha, c] : p.terms()) terms.push_back({c, 0, dot(alpha, ell)});
    std::stable_sort(terms.begin(), terms.end(), [](const ExpTerm& a, const ExpTerm& b) {
        return compare(a.lambda_im, b.lambda_im) == Sign::Negative;
    });
    ExponentialSum sum(ctx, std::move(terms));
    // Only a nonzero constant term makes the shift in validate_and_reduce trivial.
    if (sum.empty() || !sum.terms().front().lambda_im.is_zero()) return sum;
    return validate_and_reduce(sum).g;
}

}  // namespace leeyang
