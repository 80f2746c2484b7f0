#include "leeyang/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace leeyang {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool same_exponent(const ExpTerm& a, const ExpTerm& b)
{
    return a.lambda_re == b.lambda_re && a.lambda_im == b.lambda_im;
}

/// Neumaier-compensated accumulator for one real component.
struct Compensated {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v)
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            carry += (sum - t) + v;
        else
            carry += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

}  // namespace

ExponentialSum::ExponentialSum(ContextPtr ctx, std::vector<ExpTerm> terms, bool inexact)
    : ctx_(std::move(ctx)), inexact_(inexact)
{
    if (!ctx_) throw std::invalid_argument("ExponentialSum needs a basis context");
    for (auto& t : terms) {
        if (!t.lambda_im.context() || !t.lambda_im.context()->same_basis(*ctx_))
            throw DimensionMismatch("exponent over a different basis");
        auto it = std::find_if(terms_.begin(), terms_.end(),
                               [&](const ExpTerm& u) { return same_exponent(u, t); });
        if (it == terms_.end())
            terms_.push_back(std::move(t));
        else
            it->coeff += t.coeff;
    }
    std::erase_if(terms_, [](const ExpTerm& t) { return t.coeff.is_zero(); });
}

std::vector<ExactReal> ExponentialSum::frequencies() const
{
    if (!normalized_) throw std::logic_error("frequencies() requires a normalized sum");
    std::vector<ExactReal> out;
    for (std::size_t j = 1; j < terms_.size(); ++j) out.push_back(terms_[j].lambda_im);
    return out;
}

ExponentialSum ExponentialSum::from_frequencies(ContextPtr ctx, const std::vector<GaussianRational>& coeffs,
                                                const std::vector<ExactReal>& omega, bool inexact)
{
    if (coeffs.size() != omega.size() + 1)
        throw DimensionMismatch("from_frequencies: need one coefficient per frequency plus c0");
    if (coeffs.front().is_zero()) throw std::invalid_argument("from_frequencies: c0 must be nonzero");
    std::vector<ExpTerm> terms;
    terms.push_back({coeffs[0], 0, ExactReal::zero(ctx)});
    for (std::size_t j = 0; j < omega.size(); ++j) {
        if (sign_of(omega[j]) != Sign::Positive)
            throw std::invalid_argument("from_frequencies: frequencies must be positive");
        terms.push_back({coeffs[j + 1], 0, omega[j]});
    }
    return validate_and_reduce(ExponentialSum(ctx, std::move(terms), inexact)).g;
}

Reduction validate_and_reduce(const ExponentialSum& f)
{
    if (f.empty()) throw std::invalid_argument("validate_and_reduce: empty exponential sum");
    const auto& t = f.terms();

    std::size_t low = 0;
    for (std::size_t j = 1; j < t.size(); ++j)
        if (compare(t[j].lambda_im, t[low].lambda_im) == Sign::Negative) low = j;

    for (std::size_t j = 0; j < t.size(); ++j) {
        if (j == low) continue;
        if (t[j].lambda_re != t[low].lambda_re || t[j].lambda_im == t[low].lambda_im)
            throw NotVerticalSegment(std::min(j, low), std::max(j, low),
                                     "exponents " + std::to_string(std::min(j, low)) + " and " +
                                         std::to_string(std::max(j, low)) +
                                         " differ in real part; the sum has non-real zeros");
    }

    Reduction out{t[low].lambda_re, t[low].lambda_im, {}};
    std::vector<ExpTerm> shifted;
    shifted.reserve(t.size());
    for (const auto& term : t) shifted.push_back({term.coeff, 0, term.lambda_im - out.lambda0_im});
    std::sort(shifted.begin(), shifted.end(), [](const ExpTerm& a, const ExpTerm& b) {
        return compare(a.lambda_im, b.lambda_im) == Sign::Negative;
    });

    out.g.ctx_ = f.context();
    out.g.terms_ = std::move(shifted);
    out.g.inexact_ = f.inexact();
    out.g.normalized_ = true;
    return out;
}

// ---------------------------------------------------------------------------

NumericExpSum::NumericExpSum(const ExponentialSum& f)
{
    for (const auto& t : f.terms()) {
        coeffs.push_back(t.coeff.to_complex());
        lambdas.emplace_back(t.lambda_re.convert_to<double>(), to_double(t.lambda_im));
    }
}

Complex NumericExpSum::operator()(Complex x) const
{
    Compensated re, im;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Complex v = coeffs[j] * std::exp(lambdas[j] * x);
        re.add(v.real());
        im.add(v.imag());
    }
    return {re.value(), im.value()};
}

Complex NumericExpSum::derivative(Complex x) const
{
    Complex s = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * lambdas[j] * std::exp(lambdas[j] * x);
    return s;
}

double NumericExpSum::magnitude(Complex x) const
{
    double s = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) s += std::abs(coeffs[j] * std::exp(lambdas[j] * x));
    return s;
}

Complex evaluate(const ExponentialSum& f, Complex x) { return NumericExpSum(f)(x); }

int ZeroList::total_multiplicity() const
{
    int n = 0;
    for (const auto& z : zeros) n += z.multiplicity;
    return n;
}

// ---------------------------------------------------------------------------
// Winding numbers by phase tracking along a closed contour

namespace {

using Path = std::function<Complex(double)>;

struct PhaseTracker {
    const NumericExpSum& f;
    const Path& path;
    double min_relative = std::numeric_limits<double>::infinity();
    bool too_close = false;

    Complex value(double s)
    {
        const Complex z = path(s);
        const Complex v = f(z);
        const double scale = f.magnitude(z);
        const double rel = scale > 0 ? std::abs(v) / scale : 0.0;
        min_relative = std::min(min_relative, rel);
        if (rel < 10 * kEps) too_close = true;
        return v;
    }

    double segment(double s0, Complex v0, double s1, Complex v1, int depth)
    {
        const double d = std::arg(v1 * std::conj(v0));
        if (std::abs(d) < kPi / 4 || depth > 40 || too_close) return d;
        const double sm = 0.5 * (s0 + s1);
        const Complex vm = value(sm);
        return segment(s0, v0, sm, vm, depth + 1) + segment(sm, vm, s1, v1, depth + 1);
    }

    /// Total phase change over s in [0, 1] in units of full turns.
    double turns(int points)
    {
        Complex prev = value(0.0);
        const Complex first = prev;
        double total = 0.0;
        for (int k = 1; k <= points; ++k) {
            const double s = static_cast<double>(k) / points;
            const Complex cur = k == points ? first : value(s);
            total += segment(static_cast<double>(k - 1) / points, prev, s, cur, 0);
            prev = cur;
        }
        return total / (2 * kPi);
    }
};

/// Winding number with a doubling consistency check on the sample count.
std::optional<int> winding(const NumericExpSum& f, const Path& path, int points, bool& too_close)
{
    std::optional<int> last;
    too_close = false;
    for (int m = points; m <= (points << 6); m *= 2) {
        PhaseTracker tr{f, path};
        const double w = tr.turns(m);
        if (tr.too_close) {
            too_close = true;
            return std::nullopt;
        }
        const long r = std::lround(w);
        if (std::abs(w - static_cast<double>(r)) > 0.05) {
            last.reset();
            continue;
        }
        if (last && *last == static_cast<int>(r)) return last;
        last = static_cast<int>(r);
    }
    return std::nullopt;
}

Path circle(double x0, double radius)
{
    return [x0, radius](double s) { return Complex(x0, 0.0) + std::polar(radius, 2 * kPi * s); };
}

Path rectangle(double a, double b, double h)
{
    const double w = b - a;
    const double per = 2 * w + 4 * h;
    return [=](double s) {
        double u = s * per;
        if (u <= w) return Complex(a + u, -h);
        u -= w;
        if (u <= 2 * h) return Complex(b, -h + u);
        u -= 2 * h;
        if (u <= w) return Complex(b - u, h);
        u -= w;
        return Complex(a, h - u);
    };
}

}  // namespace

int argument_principle_count(const NumericExpSum& f, double a, double b, double h, int points)
{
    if (!(b > a) || !(h > 0)) throw std::invalid_argument("argument_principle_count: empty rectangle");
    bool too_close = false;
    const auto w = winding(f, rectangle(a, b, h), std::max(points, 8), too_close);
    if (too_close) throw ContourTooClose("a zero lies on or next to the rectangle boundary");
    if (!w) throw ContourTooClose("winding number did not stabilize; refine the contour");
    return *w;
}

int argument_principle_count(const ExponentialSum& f, double a, double b, double h, int points)
{
    return argument_principle_count(NumericExpSum(f), a, b, h, points);
}

int multiplicity(const NumericExpSum& f, double x0, double radius)
{
    if (!(radius > 0)) throw std::invalid_argument("multiplicity: radius must be positive");
    bool close_inner = false, close_outer = false;
    const auto inner = winding(f, circle(x0, radius), 64, close_inner);
    const auto outer = winding(f, circle(x0, 2 * radius), 64, close_outer);
    if (close_inner || close_outer || !inner || !outer)
        throw IsolationFailure("zero near the isolation circle around x = " + std::to_string(x0));
    if (*inner != *outer)
        throw IsolationFailure("another zero lies within twice the radius of x = " + std::to_string(x0));
    if (*inner <= 0) throw IsolationFailure("no zero inside the circle around x = " + std::to_string(x0));
    return *inner;
}

int multiplicity(const ExponentialSum& f, double x0, double radius)
{
    return multiplicity(NumericExpSum(f), x0, radius);
}

// ---------------------------------------------------------------------------
// Real zero scan

namespace {

/// When g is self-inversive, exp(-i phi) exp(-i omega_max x / 2) g(x) is real
/// on the real line; returns phi in that case.
std::optional<double> real_rotation(const ExponentialSum& g)
{
    const auto& t = g.terms();
    if (t.size() < 2) return std::nullopt;
    const ExactReal& top = t.back().lambda_im;
    const GaussianRational c0bar = t.front().coeff.conj();
    const GaussianRational& cmax = t.back().coeff;
    for (const auto& term : t) {
        const ExactReal partner = top - term.lambda_im;
        auto it = std::find_if(t.begin(), t.end(), [&](const ExpTerm& u) { return u.lambda_im == partner; });
        if (it == t.end()) return std::nullopt;
        if (it->coeff * c0bar != cmax * term.coeff.conj()) return std::nullopt;
    }
    const Complex zeta = cmax.to_complex() / std::conj(t.front().coeff.to_complex());
    return 0.5 * std::arg(zeta);
}

double golden_min(const std::function<double(double)>& f, double lo, double hi)
{
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && hi - lo > 4 * kEps * std::max(1.0, std::abs(lo)); ++it) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - r * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + r * (hi - lo);
            fd = f(d);
        }
    }
    return fc <= fd ? c : d;
}

double bisect(const std::function<double(double)>& f, double lo, double hi)
{
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

}  // namespace

ZeroList real_zero_scan(const ExponentialSum& f, double a, double b, double h, const ScanOptions& opts)
{
    if (!(b >= a)) throw std::invalid_argument("real_zero_scan: empty window");
    if (!(h > 0)) throw std::invalid_argument("real_zero_scan: step must be positive");

    const Reduction red = validate_and_reduce(f);
    const ExponentialSum& g = red.g;
    ZeroList out{a, b, {}};
    if (g.size() < 2) return out;

    const NumericExpSum num(g);
    const double omega_max = num.lambdas.back().imag();
    if (h >= kPi / omega_max)
        throw StepTooCoarse("step " + std::to_string(h) + " must be below pi/omega_max = " +
                            std::to_string(kPi / omega_max));

    const double scale = num.magnitude(0.0);
    const auto modulus = [&](double x) { return std::abs(num(x)); };
    const auto rotation = real_rotation(g);
    const auto real_part = [&](double x) {
        const Complex rot = std::polar(1.0, -(*rotation) - 0.5 * omega_max * x);
        return (rot * num(x)).real();
    };

    const auto n = static_cast<std::size_t>(std::ceil((b - a) / h)) + 3;
    std::vector<double> xs(n), ms(n), rs(n);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = a - h + static_cast<double>(k) * h;
        ms[k] = modulus(xs[k]);
        if (rotation) rs[k] = real_part(xs[k]);
    }

    const auto polish = [&](double x) {
        for (int it = 0; it < 8; ++it) {
            const Complex d = num.derivative(x);
            if (d == 0.0) break;
            const double step = (num(x) / d).real();
            const double y = x - step;
            if (!(modulus(y) < modulus(x))) break;
            x = y;
        }
        return x;
    };

    std::vector<double> found;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ms[k] == 0.0) found.push_back(xs[k]);
        if (rotation && ((rs[k] < 0 && rs[k + 1] > 0) || (rs[k] > 0 && rs[k + 1] < 0)))
            found.push_back(polish(bisect(real_part, xs[k], xs[k + 1])));
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (ms[k] <= ms[k - 1] && ms[k] <= ms[k + 1]) {
            const double x = polish(golden_min(modulus, xs[k - 1], xs[k + 1]));
            if (modulus(x) <= opts.tol * std::max(1.0, scale)) found.push_back(x);
        }
    }

    std::sort(found.begin(), found.end());
    std::vector<double> zeros;
    for (double x : found) {
        if (!zeros.empty() && std::abs(x - zeros.back()) < 1e-7 * std::max(1.0, std::abs(x))) {
            if (modulus(x) < modulus(zeros.back())) zeros.back() = x;
            continue;
        }
        zeros.push_back(x);
    }

    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const double x = zeros[i];
        if (x < a || x > b) continue;
        double gap = std::numeric_limits<double>::infinity();
        if (i > 0) gap = std::min(gap, x - zeros[i - 1]);
        if (i + 1 < zeros.size()) gap = std::min(gap, zeros[i + 1] - x);
        const double radius = std::min(opts.max_radius, gap / 4);
        out.zeros.push_back({x, multiplicity(num, x, radius), modulus(x)});
    }
    return out;
}

std::string to_csv(const ZeroList& zeros)
{
    std::ostringstream os;
    os.precision(17);
    os << "x,multiplicity,residual\n";
    for (const auto& z : zeros.zeros) os << z.x << "," << z.multiplicity << "," << z.residual << "\n";
    return os.str();
}

}  // namespace leeyang
