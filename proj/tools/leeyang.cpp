// Command line front end: lift, fq, amoeba, certify, diffract.
//
// Exit codes: 0 success, 1 usage or input error, 2 input provably not
// real-rooted, 3 precision exhausted, 4 certification inconclusive while
// --require-certificate is set.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "leeyang/io.hpp"

namespace {

using namespace leeyang;
using io::Json;

constexpr int kRejected = 2;
constexpr int kPrecision = 3;
constexpr int kInconclusive = 4;

std::string read_all(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_all(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct Common {
    int precision_bits = BasisContext::kDefaultPrecision;
    double tol = 1e-9;
    int theta_samples = 4096;
    std::uint64_t seed = 0;
    bool require_certificate = false;
    std::string output = "-";
};

void add_sampling(CLI::App* cmd, Common& c)
{
    cmd->add_option("--theta-samples", c.theta_samples, "Torus samples per point (rank-1 lattice size)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "Seed for the sampling lattice; 0 keeps it deterministic");
}

MultiPoly poly_input(const Json& j)
{
    return io::poly_from_json(j.contains("q") ? j.at("q") : j);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lift real-rooted exponential sums to Lee-Yang polynomials"};
    app.require_subcommand(1);
    Common c;

    // lift
    std::string lift_in;
    bool assume_real_rooted = false;
    auto* lift_cmd = app.add_subcommand("lift", "Exponential sum JSON -> lift result JSON");
    lift_cmd->add_option("input", lift_in, "Input JSON file, - for stdin")->required();
    lift_cmd->add_option("-o,--output", c.output, "Output file");
    lift_cmd->add_option("--precision-bits", c.precision_bits, "Initial interval precision")->check(CLI::Range(16, 1 << 16));
    lift_cmd->add_option("--tol", c.tol, "Falsification threshold for |p|");
    lift_cmd->add_flag("--assume-real-rooted", assume_real_rooted, "Skip the ray disjointness check");
    lift_cmd->add_flag("--require-certificate", c.require_certificate, "Exit 4 unless certified");
    add_sampling(lift_cmd, c);

    // fq
    std::string fq_in;
    std::vector<double> window;
    double step = 0.0;
    double scan_tol = 1e-12;
    auto* fq_cmd = app.add_subcommand("fq", "Lift result or {basis, q, ell} JSON -> atoms CSV");
    fq_cmd->add_option("input", fq_in, "Input JSON file, - for stdin")->required();
    fq_cmd->add_option("--window", window, "Window a b")->expected(2)->required();
    fq_cmd->add_option("--step", step, "Scan step (default: a quarter of pi/omega_max)");
    fq_cmd->add_option("--tol", scan_tol, "Residual tolerance for zeros");
    fq_cmd->add_option("--precision-bits", c.precision_bits, "Initial interval precision");
    fq_cmd->add_option("-o,--output", c.output, "Output file");

    // amoeba
    std::string am_in, svg_path;
    std::vector<double> box{-3.0, 3.0};
    int resolution = 100;
    auto* am_cmd = app.add_subcommand("amoeba", "Polynomial JSON -> grid of minimum moduli (CSV, optional SVG)");
    am_cmd->add_option("input", am_in, "Polynomial or lift result JSON")->required();
    am_cmd->add_option("--box", box, "lo hi for every coordinate, or lo1 hi1 lo2 hi2 ...");
    am_cmd->add_option("--resolution", resolution, "Grid points per axis")->check(CLI::PositiveNumber);
    am_cmd->add_option("--emit-svg", svg_path, "Write an SVG heatmap (two variables)");
    am_cmd->add_option("-o,--output", c.output, "CSV output file");
    add_sampling(am_cmd, c);

    // certify
    std::string cert_in;
    auto* cert_cmd = app.add_subcommand("certify", "Polynomial JSON -> verdict JSON");
    cert_cmd->add_option("input", cert_in, "Polynomial or lift result JSON")->required();
    cert_cmd->add_option("--tol", c.tol, "Falsification threshold for |p|");
    cert_cmd->add_flag("--require-certificate", c.require_certificate, "Exit 4 unless certified");
    cert_cmd->add_option("-o,--output", c.output, "Output file");
    add_sampling(cert_cmd, c);

    // diffract
    std::string dif_in;
    std::vector<double> xi_range{0.0, 10.0};
    int xi_count = 1001;
    std::vector<double> dif_window;
    auto* dif_cmd = app.add_subcommand("diffract", "Atoms CSV -> |sum a_x exp(-i xi x)| / window length");
    dif_cmd->add_option("input", dif_in, "Atoms CSV (x,weight)")->required();
    dif_cmd->add_option("--xi", xi_range, "xi_min xi_max")->expected(2);
    dif_cmd->add_option("--xi-count", xi_count, "Number of xi values")->check(CLI::PositiveNumber);
    dif_cmd->add_option("--window", dif_window, "Window a b (default: extent of the atoms)")->expected(2);
    dif_cmd->add_option("-o,--output", c.output, "Output file");

    CLI11_PARSE(app, argc, argv);

    try {
        SamplingOptions sampling{c.theta_samples, c.seed};

        if (*lift_cmd) {
            const ExponentialSum f = io::sum_from_json(Json::parse(read_all(lift_in)), c.precision_bits);
            LiftOptions opts;
            opts.assume_real_rooted = assume_real_rooted;
            opts.ray.sampling = sampling;
            opts.ray.tol = c.tol;
            opts.certify.sampling = sampling;
            opts.certify.tol = c.tol;
            if (assume_real_rooted) std::cerr << "warning: ray disjointness check skipped\n";
            const LiftResult r = lift(f, opts);
            write_all(c.output, io::to_json(r).dump(2) + "\n");
            if (r.certification.verdict == Verdict::Falsified) {
                std::cerr << "rejected: the lifted polynomial is not Lee-Yang\n";
                return kRejected;
            }
            if (c.require_certificate && r.certification.verdict != Verdict::CertifiedOnSamples) return kInconclusive;
            return 0;
        }

        if (*fq_cmd) {
            const auto [q, ell] = io::lifted_from_json(Json::parse(read_all(fq_in)), c.precision_bits);
            ScanOptions scan;
            scan.tol = scan_tol;
            const FQMeasure mu = fq_measure(q, ell, window[0], window[1], step, scan);
            write_all(c.output, io::atoms_to_csv(mu.atoms));
            return 0;
        }

        if (*am_cmd) {
            const MultiPoly p = poly_input(Json::parse(read_all(am_in)));
            const auto n = static_cast<std::size_t>(p.num_vars());
            std::vector<double> lo(n), hi(n);
            if (box.size() == 2) {
                std::fill(lo.begin(), lo.end(), box[0]);
                std::fill(hi.begin(), hi.end(), box[1]);
            } else if (box.size() == 2 * n) {
                for (std::size_t j = 0; j < n; ++j) {
                    lo[j] = box[2 * j];
                    hi[j] = box[2 * j + 1];
                }
            } else {
                throw std::invalid_argument("--box needs 2 or 2n values");
            }
            const AmoebaGrid grid = amoeba_sample(p, lo, hi, resolution, sampling);
            write_all(c.output, to_csv(grid));
            if (!svg_path.empty()) write_all(svg_path, to_svg(grid));
            return 0;
        }

        if (*cert_cmd) {
            const MultiPoly p = poly_input(Json::parse(read_all(cert_in)));
            CertifyOptions opts;
            opts.sampling = sampling;
            opts.tol = c.tol;
            const Certification cert = certify_lee_yang(p, opts);
            write_all(c.output, io::to_json(cert).dump(2) + "\n");
            if (c.require_certificate && cert.verdict != Verdict::CertifiedOnSamples) return kInconclusive;
            return 0;
        }

        if (*dif_cmd) {
            const std::vector<Atom> atoms = io::atoms_from_csv(read_all(dif_in));
            if (atoms.empty()) throw std::invalid_argument("no atoms in input");
            double a = atoms.front().x, b = atoms.back().x;
            if (dif_window.size() == 2) {
                a = dif_window[0];
                b = dif_window[1];
            }
            std::vector<double> xi;
            for (int k = 0; k < xi_count; ++k)
                xi.push_back(xi_count == 1 ? xi_range[0]
                                           : xi_range[0] + (xi_range[1] - xi_range[0]) * k / (xi_count - 1));
            write_all(c.output, io::diffraction_to_csv(diffraction_diagnostic(atoms, a, b, xi)));
            return 0;
        }
    } catch (const NotVerticalSegment& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const RayHit& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kPrecision;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
