#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rieszlab/dens.hpp"
#include "rieszlab/verify.hpp"

namespace rieszlab {

using nlohmann::json;

json load_json_file(const std::string& path);

/// Matrix literal: {"n":int, "m":int, "beta":int, "re":[[...]], "im":...,
/// "jm":..., "km":...}, row-major, one plane per algebra coordinate.
/// Planes beyond "re" default to zero; unknown fields are rejected.
AlgMatrix matrix_from_json(const json& j);
json matrix_to_json(const AlgMatrix& a);

/// A parsed CLI distribution: family name, variant and the validated
/// parameter bundle.
struct ParsedDist {
    std::string family;   // riesz | kotzriesz | triesz | beta-riesz | sv-triesz | eig-beta-riesz
    Variant variant = Variant::I;
    std::optional<RieszParams> riesz;
    std::optional<KotzRieszParams> kotzriesz;
    std::optional<TRieszParams> triesz;
    std::optional<BetaRieszParams> beta_riesz;
    std::optional<SvParams> sv;

    std::string display_name() const { return family + "-" + variant_name(variant); }
};

/// dist may carry a "-I"/"-II" suffix; an explicit cli_variant wins over
/// both the suffix and a "variant" field inside params.
ParsedDist parse_dist(const std::string& dist, const std::optional<std::string>& cli_variant,
                      const json& params);

/// Evaluate the log density of a parsed distribution at a JSON point
/// (matrix literal, or {"values": [...]} for the sv / eig families).
double eval_logpdf(const ParsedDist& d, const json& point);

/// Flattened sample draw with stable column names (y_i_j_re, ...).
std::vector<std::string> sample_header(const ParsedDist& d);
std::vector<double> draw_sample(RngStream& rng, const ParsedDist& d);

json check_report_to_json(const CheckReport& r);
json jack_table_to_json(int weight, int beta);

/// Number formatting used across CLI output: full round-trip precision,
/// non-finite values as explicit "-inf"/"inf"/"nan" tokens.
std::string format_double(double v);
json json_number_or_token(double v);

} // namespace rieszlab
