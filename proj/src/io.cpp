#include "leeyang/io.hpp"

#include <iomanip>
#include <sstream>

namespace leeyang::io {

namespace {

Rational rational_field(const Json& j, bool& inexact)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) {
        inexact = true;
        return rational_from_double(j.get<double>());
    }
    throw std::invalid_argument("expected a rational string or number, got " + j.dump());
}

std::string num(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

ContextPtr basis_from_json(const Json& j, int precision_bits)
{
    if (!j.is_array()) throw std::invalid_argument("basis must be an array");
    std::vector<BasisContext::Entry> entries;
    for (const auto& e : j) {
        if (e.is_string()) {
            entries.push_back({e.get<std::string>(), ""});
            continue;
        }
        BasisContext::Entry entry{e.at("label").get<std::string>(), ""};
        for (const char* key : {"approx", "approx_decimal_string", "approximation"})
            if (e.contains(key)) entry.approximation = e.at(key).get<std::string>();
        entries.push_back(std::move(entry));
    }
    return BasisContext::make(std::move(entries), precision_bits,
                              std::max(precision_bits, BasisContext::kMaxPrecision));
}

Json to_json(const BasisContext& ctx)
{
    Json out = Json::array();
    for (const auto& e : ctx.entries()) {
        Json item = {{"label", e.label}};
        if (!e.approximation.empty() && e.label != "1") item["approx"] = e.approximation;
        out.push_back(item);
    }
    return out;
}

Json to_json(const ExactReal& x)
{
    Json coords = Json::array();
    for (Eigen::Index i = 0; i < x.coords().size(); ++i) coords.push_back(x.coords()(i).str());
    return {{"coords", coords}, {"expr", x.str()}, {"value", num(to_double(x))}};
}

ExactReal exact_from_json(const ContextPtr& ctx, const Json& j)
{
    const Json& coords = j.is_object() ? j.at("coords") : j;
    if (!coords.is_array() || coords.size() != ctx->size())
        throw DimensionMismatch("expected " + std::to_string(ctx->size()) + " basis coordinates, got " + coords.dump());
    RationalVector v(static_cast<Eigen::Index>(ctx->size()));
    bool inexact = false;
    for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_field(coords[i], inexact);
    return ExactReal(ctx, v);
}

Json to_json(const std::vector<ExactReal>& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

std::vector<ExactReal> exact_vector_from_json(const ContextPtr& ctx, const Json& j)
{
    std::vector<ExactReal> out;
    for (const auto& x : j) out.push_back(exact_from_json(ctx, x));
    return out;
}

Json to_json(const GaussianRational& c) { return {{"re", c.re.str()}, {"im", c.im.str()}}; }

std::pair<GaussianRational, bool> gaussian_from_json(const Json& j)
{
    bool inexact = false;
    if (!j.is_object()) {
        const Rational re = rational_field(j, inexact);
        return {GaussianRational(re), inexact};
    }
    const Rational re = j.contains("re") ? rational_field(j.at("re"), inexact) : Rational(0);
    const Rational im = j.contains("im") ? rational_field(j.at("im"), inexact) : Rational(0);
    return {GaussianRational(re, im), inexact};
}

Json to_json(const MultiPoly& p)
{
    Json terms = Json::array();
    for (const auto& [alpha, c] : p.terms()) {
        Json a = Json::array();
        for (Eigen::Index i = 0; i < alpha.size(); ++i) a.push_back(alpha(i));
        terms.push_back({{"alpha", a}, {"re", c.re.str()}, {"im", c.im.str()}});
    }
    return {{"num_vars", p.num_vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j)
{
    const auto n = j.at("num_vars").get<Eigen::Index>();
    MultiPoly p(n);
    for (const auto& t : j.at("terms")) {
        const auto& a = t.at("alpha");
        if (static_cast<Eigen::Index>(a.size()) != n) throw DimensionMismatch("exponent length differs from num_vars");
        IntVector alpha(n);
        for (Eigen::Index i = 0; i < n; ++i) alpha(i) = a[static_cast<std::size_t>(i)].get<std::int64_t>();
        const auto [c, inexact] = gaussian_from_json(t.contains("coeff") ? t.at("coeff") : t);
        p.add_term(alpha, c);
    }
    return p;
}

Json to_json(const IntVector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Json to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(IntVector(m.row(r).transpose())));
    return out;
}

ExponentialSum sum_from_json(const Json& j, int precision_bits)
{
    const ContextPtr ctx = basis_from_json(j.contains("basis") ? j.at("basis") : Json::array(), precision_bits);
    std::vector<ExpTerm> terms;
    bool inexact = false;
    for (const auto& t : j.at("terms")) {
        auto [c, inexact_c] = gaussian_from_json(t.at("coeff"));
        inexact = inexact || inexact_c;
        bool inexact_l = false;
        const Rational re = t.contains("lambda_re") ? rational_field(t.at("lambda_re"), inexact_l) : Rational(0);
        if (inexact_l) throw std::invalid_argument("lambda_re must be an exact rational");
        const ExactReal im = t.contains("lambda_im_coords") ? exact_from_json(ctx, t.at("lambda_im_coords"))
                                                            : ExactReal::zero(ctx);
        terms.push_back({c, re, im});
    }
    if (terms.empty()) throw std::invalid_argument("exponential sum has no terms");
    return ExponentialSum(ctx, std::move(terms), inexact);
}

Json to_json(const ExponentialSum& f)
{
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        Json coords = Json::array();
        for (Eigen::Index i = 0; i < t.lambda_im.coords().size(); ++i) coords.push_back(t.lambda_im.coords()(i).str());
        terms.push_back({{"coeff", to_json(t.coeff)}, {"lambda_re", t.lambda_re.str()}, {"lambda_im_coords", coords}});
    }
    return {{"basis", to_json(*f.context())}, {"terms", terms}};
}

Json to_json(const Certification& c)
{
    Json out = {{"verdict", to_string(c.verdict)},
                {"grid_points", c.grid_points},
                {"lopsided_points", c.lopsided_points},
                {"min_sampled_modulus", c.min_sampled_modulus},
                {"notes", c.notes}};
    out["beta_plus"] = c.beta_plus ? to_json(*c.beta_plus) : Json(nullptr);
    out["beta_minus"] = c.beta_minus ? to_json(*c.beta_minus) : Json(nullptr);
    if (c.witness) {
        Json z = Json::array();
        for (const auto& zj : c.witness->z) z.push_back({{"re", zj.real()}, {"im", zj.imag()}});
        out["witness"] = {{"z", z}, {"modulus", c.witness->modulus}};
    }
    return out;
}

Json to_json(const RayReport& r)
{
    Json out = {{"verdict", r.verdict == RayReport::Verdict::Falsified ? "Falsified" : "CorroboratedUpTo"},
                {"t_values", r.points.size()},
                {"theta_samples", r.theta_samples},
                {"min_modulus", r.min_modulus}};
    if (r.witness) out["witness"] = {{"t", r.witness->t}, {"theta", r.witness->theta}, {"modulus", r.witness->modulus}};
    return out;
}

Json to_json(const LiftResult& r)
{
    Json out;
    out["basis"] = to_json(*r.context);
    out["lambda0"] = {{"re", r.lambda0_re.str()}, {"im", to_json(r.lambda0_im)}};
    out["g"] = to_json(r.g)["terms"];
    out["p_initial"] = to_json(r.p_initial);
    out["ell_initial"] = to_json(r.ell_initial);
    out["A"] = to_json(r.a_matrix);
    out["monomial_change"] = to_json(r.change_matrix);
    out["q"] = to_json(r.q_final);
    out["ell"] = to_json(r.ell_final);
    out["beta_plus"] = to_json(r.beta_plus);
    out["beta_minus"] = to_json(r.beta_minus);
    out["ray_check"] = r.ray ? to_json(*r.ray) : Json(nullptr);
    out["certification"] = to_json(r.certification);
    out["inexact"] = r.inexact;
    out["provenance"] = r.provenance;
    return out;
}

std::pair<MultiPoly, std::vector<ExactReal>> lifted_from_json(const Json& j, int precision_bits)
{
    const ContextPtr ctx = basis_from_json(j.at("basis"), precision_bits);
    MultiPoly q = poly_from_json(j.at("q"));
    std::vector<ExactReal> ell = exact_vector_from_json(ctx, j.at("ell"));
    if (static_cast<Eigen::Index>(ell.size()) != q.num_vars()) throw DimensionMismatch("ell length differs from num_vars");
    return {std::move(q), std::move(ell)};
}

std::string atoms_to_csv(const std::vector<Atom>& atoms)
{
    std::ostringstream os;
    os << "x,weight\n" << std::setprecision(15);
    for (const auto& a : atoms) os << a.x << "," << a.weight << "\n";
    return os.str();
}

std::vector<Atom> atoms_from_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<Atom> out;
    while (std::getline(in, line)) {
        if (line.empty() || !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '-' || line[0] == '.'))
            continue;  // header or blank
        const auto comma = line.find(',');
        Atom a{std::stod(line.substr(0, comma)), 1};
        if (comma != std::string::npos) {
            const auto rest = line.substr(comma + 1);
            a.weight = std::stoi(rest.substr(0, rest.find(',')));
        }
        out.push_back(a);
    }
    return out;
}

std::string diffraction_to_csv(const std::vector<DiffractionPoint>& points)
{
    std::ostringstream os;
    os << "xi,height\n" << std::setprecision(12);
    for (const auto& p : points) os << p.xi << "," << p.height << "\n";
    return os.str();
}

}  // namespace leeyang::io
