#include "leeyang/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "leeyang/polyhedra.hpp"

namespace leeyang {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNewtonRelTol = 1e-13;

template <typename F>
void parallel_for(std::size_t n, F&& f)
{
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (hw == 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + hw - 1) / hw;
    for (std::size_t b = 0; b < n; b += chunk)
        pool.emplace_back([&, b] {
            for (std::size_t i = b; i < std::min(n, b + chunk); ++i) f(i);
        });
    for (auto& t : pool) t.join();
}

double log_abs(const std::complex<double>& c) { return std::log(std::abs(c)); }

/// sum |c_alpha z^alpha|
double magnitude(const NumericPoly& p, std::span<const std::complex<double>> z)
{
    double s = 0.0;
    for (std::size_t t = 0; t < p.coeffs.size(); ++t) {
        double m = std::abs(p.coeffs[t]);
        for (Eigen::Index j = 0; j < p.num_vars; ++j)
            m *= std::pow(std::abs(z[static_cast<std::size_t>(j)]), static_cast<double>(p.exponents[t](j)));
        s += m;
    }
    return s;
}

bool all_finite(const std::vector<std::complex<double>>& z)
{
    return std::all_of(z.begin(), z.end(), [](const auto& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

/// Cartesian product of one list of values per coordinate.
std::vector<std::vector<double>> product_grid(const std::vector<double>& values, Eigen::Index n)
{
    std::vector<std::vector<double>> out{{}};
    for (Eigen::Index j = 0; j < n; ++j) {
        std::vector<std::vector<double>> next;
        for (const auto& prefix : out)
            for (double v : values) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<LopsidedCertificate> lopsided_nonmember(const MultiPoly& p, std::span<const double> w)
{
    if (static_cast<Eigen::Index>(w.size()) != p.num_vars()) throw DimensionMismatch("lopsided_nonmember: w length");
    if (p.is_zero()) return std::nullopt;

    const double log_m = std::log(static_cast<double>(p.size()));
    std::vector<std::pair<double, IntVector>> values;
    for (const auto& [alpha, c] : p.terms()) {
        double v = log_abs(c.to_complex());
        for (Eigen::Index j = 0; j < alpha.size(); ++j) v += static_cast<double>(alpha(j)) * w[static_cast<std::size_t>(j)];
        values.emplace_back(v, alpha);
    }
    auto best = std::max_element(values.begin(), values.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
    double rival = -kInf;
    for (auto it = values.begin(); it != values.end(); ++it)
        if (it != best) rival = std::max(rival, it->first + log_m);

    const double margin = best->first - rival;
    if (!(margin > kLopsidedSlack)) return std::nullopt;
    return LopsidedCertificate{std::vector<double>(w.begin(), w.end()), best->second, margin};
}

// ---------------------------------------------------------------------------

struct TorusSampler::RootTable {
    std::vector<double> cs;  // cos and sin interleaved
};

namespace {

/// N-th roots of unity, shared between samplers of the same size. The most
/// recent table stays alive so short-lived samplers in a loop reuse it.
std::shared_ptr<const TorusSampler::RootTable> root_table(int n)
{
    static std::mutex mutex;
    static std::map<int, std::weak_ptr<const TorusSampler::RootTable>> cache;
    static std::shared_ptr<const TorusSampler::RootTable> last;
    std::lock_guard lock(mutex);
    if (auto hit = cache[n].lock()) return last = hit;
    auto table = std::make_shared<TorusSampler::RootTable>();
    table->cs.resize(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        table->cs[2 * static_cast<std::size_t>(k)] = std::cos(angle);
        table->cs[2 * static_cast<std::size_t>(k) + 1] = std::sin(angle);
    }
    cache[n] = table;
    last = table;
    return table;
}

}  // namespace

TorusSampler::TorusSampler(const MultiPoly& p, const SamplingOptions& opts)
    : poly_(p), num_vars_(p.num_vars()), n_(opts.theta_samples)
{
    if (n_ < 1) throw std::invalid_argument("theta_samples must be positive");
    const auto big_n = static_cast<std::int64_t>(n_);

    std::int64_t a = 1;
    if (big_n > 2) {
        if (opts.seed == 0) {
            a = std::llround(0.6180339887498949 * static_cast<double>(big_n));
        } else {
            std::mt19937_64 rng(opts.seed);
            a = std::uniform_int_distribution<std::int64_t>(1, big_n - 1)(rng);
        }
        while (std::gcd(a, big_n) != 1) ++a;
        a %= big_n;
    }
    generator_.resize(static_cast<std::size_t>(num_vars_));
    std::int64_t g = 1;
    for (auto& gj : generator_) {
        gj = g;
        g = (g * a) % big_n;
    }

    shift_.assign(static_cast<std::size_t>(num_vars_), 0.0);
    if (opts.seed != 0) {
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (auto& s : shift_) s = u(rng);
    }

    for (const auto& alpha : poly_.exponents) {
        std::int64_t step = 0;
        double phase = 0.0;
        for (Eigen::Index j = 0; j < num_vars_; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            step = (step + (alpha(j) % big_n) * generator_[jj]) % big_n;
            phase += static_cast<double>(alpha(j)) * shift_[jj];
        }
        step_.push_back(step);
        twist_.push_back(std::polar(1.0, kTwoPi * (phase - std::floor(phase))));
    }

    roots_ = root_table(n_);
}

std::vector<double> TorusSampler::theta_of(std::int64_t k) const
{
    std::vector<double> theta(static_cast<std::size_t>(num_vars_));
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const auto idx = (k * generator_[j]) % n_;
        double frac = static_cast<double>(idx) / n_ + shift_[j];
        frac -= std::floor(frac);
        theta[j] = kTwoPi * frac;
    }
    return theta;
}

template <typename Visit>
void TorusSampler::sweep(std::span<const double> w, Visit&& visit) const
{
    if (static_cast<Eigen::Index>(w.size()) != num_vars_) throw DimensionMismatch("torus sample: w length");
    const std::size_t m = poly_.coeffs.size();

    // Scale every term by exp(-top) so large |w| cannot overflow.
    std::vector<double> logs(m);
    double top = -kInf;
    for (std::size_t t = 0; t < m; ++t) {
        double v = std::log(std::abs(poly_.coeffs[t]));
        for (Eigen::Index j = 0; j < num_vars_; ++j)
            v += static_cast<double>(poly_.exponents[t](j)) * w[static_cast<std::size_t>(j)];
        logs[t] = v;
        top = std::max(top, v);
    }
    std::vector<double> are(m), aim(m);
    double mag = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        const std::complex<double> a = poly_.coeffs[t] / std::abs(poly_.coeffs[t]) * twist_[t] * std::exp(logs[t] - top);
        are[t] = a.real();
        aim[t] = a.imag();
        mag += std::abs(a);
    }
    const double scale = std::exp(top);

    std::vector<std::int64_t> idx(m, 0);
    const std::int64_t n = n_;
    const double* cs = roots_->cs.data();
    for (std::int64_t k = 0; k < n; ++k) {
        double re = 0.0, im = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            const double* u = cs + 2 * idx[t];
            re += are[t] * u[0] - aim[t] * u[1];
            im += are[t] * u[1] + aim[t] * u[0];
            idx[t] += step_[t];
            if (idx[t] >= n) idx[t] -= n;
        }
        // Scaled terms are at most 1 in modulus, so no overflow guard is needed.
        const double r = std::sqrt(re * re + im * im);
        visit(k, r * scale, r / mag);
    }
}

TorusSample TorusSampler::min_modulus(std::span<const double> w) const
{
    if (poly_.coeffs.empty()) return {theta_of(0), 0.0, 0.0};
    std::int64_t best_k = 0;
    double best = kInf, best_rel = kInf;
    sweep(w, [&](std::int64_t k, double mod, double rel) {
        if (rel < best_rel) {
            best_rel = rel;
            best = mod;
            best_k = k;
        }
    });
    return {theta_of(best_k), best, best_rel};
}

std::vector<TorusSample> TorusSampler::lowest(std::span<const double> w, std::size_t count) const
{
    if (poly_.coeffs.empty()) return {{theta_of(0), 0.0, 0.0}};
    struct Hit {
        double rel, mod;
        std::int64_t k;
        bool operator<(const Hit& o) const { return rel < o.rel; }
    };
    std::vector<Hit> heap;  // max-heap on rel
    sweep(w, [&](std::int64_t k, double mod, double rel) {
        if (heap.size() < count) {
            heap.push_back({rel, mod, k});
            std::push_heap(heap.begin(), heap.end());
        } else if (count > 0 && rel < heap.front().rel) {
            std::pop_heap(heap.begin(), heap.end());
            heap.back() = {rel, mod, k};
            std::push_heap(heap.begin(), heap.end());
        }
    });
    std::sort(heap.begin(), heap.end());
    std::vector<TorusSample> out;
    for (const auto& h : heap) out.push_back({theta_of(h.k), h.mod, h.rel});
    return out;
}

// ---------------------------------------------------------------------------

std::optional<ZeroWitness> polish_zero(const NumericPoly& p, std::vector<std::complex<double>> z, int max_iter)
{
    for (int it = 0; it <= max_iter; ++it) {
        const std::complex<double> v = p(z);
        const double mag = magnitude(p, z);
        if (!(mag > 0.0) || !std::isfinite(mag)) return std::nullopt;
        const double rel = std::abs(v) / mag;
        if (rel < kNewtonRelTol) return ZeroWitness{z, std::abs(v), rel};
        if (it == max_iter) break;

        const auto g = p.gradient(z);
        double g2 = 0.0;
        for (const auto& gj : g) g2 += std::norm(gj);
        if (!(g2 > 0.0)) return std::nullopt;
        for (std::size_t j = 0; j < z.size(); ++j) z[j] -= v * std::conj(g[j]) / g2;
        if (!all_finite(z)) return std::nullopt;
    }
    return std::nullopt;
}

namespace {

/// Minimum-norm Newton on p(exp(t ell + i theta)) = 0 in the real unknowns (t, theta).
std::optional<RayWitness> refine_on_ray(const NumericPoly& p, const std::vector<double>& ell, double t,
                                        std::vector<double> theta, int max_iter = 60)
{
    const std::size_t n = ell.size();
    std::vector<std::complex<double>> z(n);
    for (int it = 0; it <= max_iter; ++it) {
        for (std::size_t j = 0; j < n; ++j) z[j] = std::exp(std::complex<double>(t * ell[j], theta[j]));
        const std::complex<double> v = p(z);
        const double mag = magnitude(p, z);
        if (!(mag > 0.0) || !std::isfinite(mag)) return std::nullopt;
        if (std::abs(v) / mag < kNewtonRelTol) {
            for (auto& th : theta) th -= kTwoPi * std::floor(th / kTwoPi);
            return RayWitness{t, theta, std::abs(v)};
        }
        if (it == max_iter) break;

        const auto g = p.gradient(z);
        Eigen::MatrixXd jac(2, static_cast<Eigen::Index>(n + 1));
        std::complex<double> dt = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            dt += g[j] * z[j] * ell[j];
            const std::complex<double> dth = std::complex<double>(0.0, 1.0) * g[j] * z[j];
            jac(0, static_cast<Eigen::Index>(j + 1)) = dth.real();
            jac(1, static_cast<Eigen::Index>(j + 1)) = dth.imag();
        }
        jac(0, 0) = dt.real();
        jac(1, 0) = dt.imag();
        const Eigen::Matrix2d gram = jac * jac.transpose();
        if (std::abs(gram.determinant()) < 1e-300) return std::nullopt;
        Eigen::VectorXd step = -jac.transpose() * gram.inverse() * Eigen::Vector2d(v.real(), v.imag());
        const double len = step.norm();
        if (len > 0.5) step *= 0.5 / len;
        t += step(0);
        for (std::size_t j = 0; j < n; ++j) theta[j] += step(static_cast<Eigen::Index>(j + 1));
        if (!std::isfinite(t)) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::vector<double> default_t_grid()
{
    std::vector<double> out;
    for (int k = 1; k <= 200; ++k) out.push_back(0.02 * k);
    for (int k = 1; k <= 60; ++k) out.push_back(4.0 * std::pow(10.0, k / 60.0));
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(-out[i]);
    std::sort(out.begin(), out.end());
    return out;
}

RayReport ray_disjointness_check(const MultiPoly& p, const std::vector<double>& ell, const std::vector<double>& t_grid,
                                 const RayOptions& opts)
{
    if (static_cast<Eigen::Index>(ell.size()) != p.num_vars()) throw DimensionMismatch("ray check: ell length");
    RayReport report;
    report.theta_samples = opts.sampling.theta_samples;
    report.min_modulus = kInf;
    if (p.is_zero()) {
        report.verdict = RayReport::Verdict::Falsified;
        report.min_modulus = 0.0;
        return report;
    }

    const TorusSampler sampler(p, opts.sampling);
    std::vector<double> ts;
    for (double t : t_grid)
        if (std::abs(t) >= opts.min_abs_t) ts.push_back(t);
    report.points.resize(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        std::vector<double> w(ell.size());
        for (std::size_t j = 0; j < ell.size(); ++j) w[j] = ts[i] * ell[j];
        const TorusSample s = sampler.min_modulus(w);
        report.points[i] = {ts[i], s.modulus, s.relative, s.theta};
    });

    for (const auto& pt : report.points) {
        report.min_modulus = std::min(report.min_modulus, pt.min_modulus);
        if (pt.min_modulus < opts.tol && !report.witness)
            report.witness = RayWitness{pt.t, pt.theta, pt.min_modulus};
    }

    if (!report.witness) {
        std::vector<const RayPoint*> order;
        for (const auto& pt : report.points) order.push_back(&pt);
        std::sort(order.begin(), order.end(), [](const RayPoint* a, const RayPoint* b) { return a->relative < b->relative; });
        const NumericPoly np(p);
        const std::size_t starts = std::min(order.size(), static_cast<std::size_t>(std::max(0, opts.refine_starts)));
        for (std::size_t i = 0; i < starts && !report.witness; ++i) {
            auto hit = refine_on_ray(np, ell, order[i]->t, order[i]->theta);
            if (hit && std::abs(hit->t) >= opts.min_abs_t) report.witness = hit;
        }
    }
    if (report.witness) report.verdict = RayReport::Verdict::Falsified;
    return report;
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::CertifiedOnSamples: return "CertifiedOnSamples";
    case Verdict::Falsified: return "Falsified";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "CertifiedOnSamples") return Verdict::CertifiedOnSamples;
    if (s == "Falsified") return Verdict::Falsified;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict: " + s);
}

Certification certify_lee_yang(const MultiPoly& p, const CertifyOptions& opts)
{
    if (p.is_zero()) throw ZeroPolynomial("certify_lee_yang: zero polynomial");
    const Eigen::Index n = p.num_vars();
    Certification out;

    if (p.constant_term().is_zero()) {
        out.verdict = Verdict::Falsified;
        out.witness = ZeroWitness{std::vector<std::complex<double>>(static_cast<std::size_t>(n), 0.0), 0.0, 0.0};
        out.notes.push_back("p(0) = 0: the origin of the open polydisc is a zero");
        return out;
    }

    // (b) normal cones containing the closed orthants
    const Polytope newton = newton_polytope(p);
    const RationalCone pos = RationalCone::orthant(n, 1);
    const RationalCone neg = RationalCone::orthant(n, -1);
    const auto covers = [](const RationalCone& cone, const RationalCone& orthant) {
        return std::all_of(orthant.rays.begin(), orthant.rays.end(), [&](const IntVector& r) { return cone.contains(r); });
    };
    for (const auto& beta : newton.vertices) {
        const RationalCone nc = normal_cone(newton, beta);
        if (!out.beta_plus && covers(nc, pos)) out.beta_plus = beta;
        if (!out.beta_minus && covers(nc, neg)) out.beta_minus = beta;
    }
    if (!out.beta_plus) out.notes.push_back("no normal cone contains the positive orthant");
    if (!out.beta_minus) out.notes.push_back("no normal cone contains the negative orthant");

    // (a) lopsidedness and (c) torus sampling on the log-radius grid
    std::vector<std::vector<double>> grid;
    for (const auto* radii : {&opts.radii_inside, &opts.radii_outside}) {
        std::vector<double> logs;
        for (double r : *radii) {
            if (!(r > 0.0) || r == 1.0) throw std::invalid_argument("certify radii must be positive and different from 1");
            logs.push_back(std::log(r));
        }
        if (std::any_of(logs.begin(), logs.end(), [&](double l) { return (l > 0) != (logs.front() > 0); }))
            throw std::invalid_argument("certify radii mix both sides of the unit circle");
        auto g = product_grid(logs, n);
        grid.insert(grid.end(), g.begin(), g.end());
    }
    out.grid_points = grid.size();

    const TorusSampler sampler(p, opts.sampling);
    const NumericPoly np(p);
    std::vector<char> lopsided(grid.size(), 0);
    std::vector<std::vector<TorusSample>> lows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        lopsided[i] = lopsided_nonmember(p, grid[i]).has_value();
        lows[i] = sampler.lowest(grid[i], static_cast<std::size_t>(std::max(1, opts.refine_starts)));
    });
    out.lopsided_points = static_cast<std::size_t>(std::count(lopsided.begin(), lopsided.end(), 1));

    out.min_sampled_modulus = kInf;
    const auto strictly_inside = [&](const std::vector<std::complex<double>>& z) {
        bool in = true, outside = true;
        for (const auto& zj : z) {
            const double l = std::log(std::abs(zj));
            in = in && l < -opts.witness_margin;
            outside = outside && l > opts.witness_margin;
        }
        return in || outside;
    };
    for (std::size_t i = 0; i < grid.size() && !out.witness; ++i) {
        for (const auto& s : lows[i]) {
            std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
            for (std::size_t j = 0; j < z.size(); ++j) z[j] = std::exp(std::complex<double>(grid[i][j], s.theta[j]));
            out.min_sampled_modulus = std::min(out.min_sampled_modulus, s.modulus);
            if (s.modulus < opts.tol) {
                out.witness = ZeroWitness{z, s.modulus, s.relative};
                break;
            }
            auto hit = polish_zero(np, z);
            if (hit && strictly_inside(hit->z)) {
                out.witness = hit;
                break;
            }
        }
    }

    if (out.witness) {
        out.verdict = Verdict::Falsified;
        out.notes.push_back("zero found in an open product of discs or disc exteriors");
    } else if (out.beta_plus && out.beta_minus && out.lopsided_points == out.grid_points) {
        out.verdict = Verdict::CertifiedOnSamples;
    } else {
        out.verdict = Verdict::Inconclusive;
        if (out.lopsided_points < out.grid_points)
            out.notes.push_back("lopsidedness failed at " + std::to_string(out.grid_points - out.lopsided_points) +
                                " of " + std::to_string(out.grid_points) + " grid points");
    }
    return out;
}

// ---------------------------------------------------------------------------

AmoebaGrid amoeba_sample(const MultiPoly& p, const std::vector<double>& lo, const std::vector<double>& hi, int resolution,
                         const SamplingOptions& opts)
{
    const Eigen::Index n = p.num_vars();
    if (static_cast<Eigen::Index>(lo.size()) != n || static_cast<Eigen::Index>(hi.size()) != n)
        throw DimensionMismatch("amoeba_sample: box dimension");
    if (resolution < 1) throw std::invalid_argument("amoeba_sample: resolution must be positive");

    AmoebaGrid g;
    g.num_vars = n;
    g.resolution = resolution;
    g.lo = lo;
    g.hi = hi;
    std::vector<double> axis_step(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < axis_step.size(); ++j)
        axis_step[j] = resolution > 1 ? (hi[j] - lo[j]) / (resolution - 1) : 0.0;

    std::vector<std::vector<double>> values(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < values.size(); ++j)
        for (int k = 0; k < resolution; ++k) values[j].push_back(lo[j] + axis_step[j] * k);
    std::vector<std::vector<double>> pts{{}};
    for (const auto& axis : values) {
        std::vector<std::vector<double>> next;
        for (const auto& prefix : pts)
            for (double v : axis) {
                auto q = prefix;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    g.points = std::move(pts);
    g.min_modulus.resize(g.points.size());

    if (p.is_zero()) return g;
    const TorusSampler sampler(p, opts);
    parallel_for(g.points.size(), [&](std::size_t i) { g.min_modulus[i] = sampler.min_modulus(g.points[i]).modulus; });
    return g;
}

std::string to_csv(const AmoebaGrid& grid)
{
    std::ostringstream os;
    for (Eigen::Index j = 0; j < grid.num_vars; ++j) os << "x" << (j + 1) << ",";
    os << "min_modulus\n";
    os << std::setprecision(12);
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        for (double x : grid.points[i]) os << x << ",";
        os << grid.min_modulus[i] << "\n";
    }
    return os.str();
}

std::string to_svg(const AmoebaGrid& grid)
{
    if (grid.num_vars != 2) throw std::invalid_argument("SVG heatmap needs two variables");
    const int res = grid.resolution;
    const int cell = std::max(1, 600 / res);
    const int size = cell * res;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\" shape-rendering=\"crispEdges\">\n";
    os << "<title>log10 min modulus on [" << grid.lo[0] << "," << grid.hi[0] << "]x[" << grid.lo[1] << ","
       << grid.hi[1] << "]</title>\n";
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const int ix = static_cast<int>(i) / res;  // first coordinate
        const int iy = static_cast<int>(i) % res;  // second coordinate, drawn upwards
        const double m = grid.min_modulus[i];
        const double l = m > 0 ? std::log10(m) : -12.0;
        const double v = std::clamp((l + 4.0) / 5.0, 0.0, 1.0);
        const int shade = static_cast<int>(std::lround(255 * v));
        os << "<rect x=\"" << ix * cell << "\" y=\"" << (res - 1 - iy) * cell << "\" width=\"" << cell
           << "\" height=\"" << cell << "\" fill=\"rgb(" << shade << "," << shade << "," << std::min(255, shade + 30)
           << ")\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace leeyang
