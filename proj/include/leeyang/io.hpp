#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "leeyang/pipeline.hpp"

// JSON and CSV formats used by the command line tool.
//
// Exponential sum input:
//   {"basis": [{"label": "pi"}, {"label": "c", "approx": "1.2345..."}],
//    "terms": [{"coeff": {"re": "1/2", "im": "0"}, "lambda_re": "0",
//               "lambda_im_coords": ["-1", "1"]}]}
// lambda_im_coords has one entry per basis label, with "1" at index 0 whether
// or not it is listed. Coefficients given as strings are exact; JSON numbers
// are accepted and mark the sum as inexact.
//
// Polynomial: {"num_vars": n, "terms": [{"alpha": [..], "re": "a/b", "im": "c/d"}]}.

namespace leeyang::io {

using Json = nlohmann::json;

ContextPtr basis_from_json(const Json& j, int precision_bits = BasisContext::kDefaultPrecision);
Json to_json(const BasisContext& ctx);

Json to_json(const ExactReal& x);
ExactReal exact_from_json(const ContextPtr& ctx, const Json& j);
Json to_json(const std::vector<ExactReal>& v);
std::vector<ExactReal> exact_vector_from_json(const ContextPtr& ctx, const Json& j);

Json to_json(const GaussianRational& c);
/// Returns the value and whether it came from a floating-point number.
std::pair<GaussianRational, bool> gaussian_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);

ExponentialSum sum_from_json(const Json& j, int precision_bits = BasisContext::kDefaultPrecision);
Json to_json(const ExponentialSum& f);

Json to_json(const Certification& c);
Json to_json(const RayReport& r);
Json to_json(const LiftResult& r);

/// (q, ell) from a lift result or from {"basis", "q", "ell"}.
std::pair<MultiPoly, std::vector<ExactReal>> lifted_from_json(const Json& j,
                                                              int precision_bits = BasisContext::kDefaultPrecision);

/// Header x,weight.
std::string atoms_to_csv(const std::vector<Atom>& atoms);
std::vector<Atom> atoms_from_csv(const std::string& text);
/// Header xi,height.
std::string diffraction_to_csv(const std::vector<DiffractionPoint>& points);

}  // namespace leeyang::io
