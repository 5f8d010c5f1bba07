#include "rieszlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "rieszlab/sampler.hpp"

namespace rieszlab {

namespace {

const char* plane_names[4] = {"re", "im", "jm", "km"};

void reject_unknown_fields(const json& j, const std::set<std::string>& allowed,
                           const std::string& context) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw DomainError(context + ": unknown field \"" + it.key() + "\"");
}

double require_number(const json& j, const std::string& key, const std::string& context) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw DomainError(context + ": missing numeric field \"" + key + "\"");
    return j.at(key).get<double>();
}

int require_int(const json& j, const std::string& key, const std::string& context) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw DomainError(context + ": missing integer field \"" + key + "\"");
    return j.at(key).get<int>();
}

std::vector<double> require_array(const json& j, const std::string& key,
                                  const std::string& context) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw DomainError(context + ": missing array field \"" + key + "\"");
    return j.at(key).get<std::vector<double>>();
}

WeightVector weight_from(const json& j, const std::string& key, const std::string& context) {
    return WeightVector(require_array(j, key, context));
}

Partition partition_from(const json& j, const std::string& key, const std::string& context) {
    const auto vals = require_array(j, key, context);
    std::vector<int> parts;
    for (double v : vals) {
        if (v != std::floor(v) || v < 0)
            throw DomainError(context + ": \"" + key + "\" must hold nonnegative integers");
        parts.push_back(static_cast<int>(v));
    }
    return Partition(parts);
}

HermitianPD hermitian_from(const json& j, const std::string& key,
                           const std::string& context) {
    if (!j.contains(key)) throw DomainError(context + ": missing matrix field \"" + key + "\"");
    const AlgMatrix a = matrix_from_json(j.at(key));
    try {
        return HermitianPD(a);
    } catch (const ShapeMismatch& e) {
        throw DomainError(context + ": field \"" + key + "\": " + e.what());
    }
}

} // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open JSON file: " + path);
    json j;
    in >> j;
    return j;
}

AlgMatrix matrix_from_json(const json& j) {
    reject_unknown_fields(j, {"n", "m", "beta", "re", "im", "jm", "km"}, "matrix literal");
    const int n = require_int(j, "n", "matrix literal");
    const int m = require_int(j, "m", "matrix literal");
    const int beta = require_int(j, "beta", "matrix literal");
    const Algebra alg = Algebra::of(beta);
    alg.require_full_matrix("matrix literal");
    AlgMatrix a(n, m, alg);
    for (int c = 0; c < 4; ++c) {
        if (!j.contains(plane_names[c])) {
            if (c == 0) throw DomainError("matrix literal: missing plane \"re\"");
            continue;
        }
        if (c >= beta)
            throw DomainError(std::string("matrix literal: plane \"") + plane_names[c] +
                              "\" not valid for beta=" + std::to_string(beta));
        const json& plane = j.at(plane_names[c]);
        if (!plane.is_array() || static_cast<int>(plane.size()) != n)
            throw DomainError(std::string("matrix literal: plane \"") + plane_names[c] +
                              "\" must be an n x m array");
        for (int i = 0; i < n; ++i) {
            const json& row = plane.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != m)
                throw DomainError("matrix literal: row length mismatch");
            for (int jj = 0; jj < m; ++jj)
                a(i, jj).set_coord(c, row.at(jj).get<double>());
        }
    }
    return a;
}

json matrix_to_json(const AlgMatrix& a) {
    json j;
    j["n"] = a.rows();
    j["m"] = a.cols();
    j["beta"] = a.beta();
    for (int c = 0; c < a.beta(); ++c) {
        json plane = json::array();
        for (int i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (int jj = 0; jj < a.cols(); ++jj) row.push_back(a(i, jj).coord(c));
            plane.push_back(row);
        }
        j[plane_names[c]] = plane;
    }
    return j;
}

namespace {

Variant variant_from_string(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return Variant::I;
    if (s == "II" || s == "ii" || s == "2") return Variant::II;
    throw DomainError("variant must be I or II (got \"" + s + "\")");
}

} // namespace

ParsedDist parse_dist(const std::string& dist, const std::optional<std::string>& cli_variant,
                      const json& params) {
    ParsedDist d;
    std::string family = dist;
    std::optional<Variant> var;
    if (family.size() > 3 && family.substr(family.size() - 3) == "-II") {
        var = Variant::II;
        family = family.substr(0, family.size() - 3);
    } else if (family.size() > 2 && family.substr(family.size() - 2) == "-I") {
        var = Variant::I;
        family = family.substr(0, family.size() - 2);
    }
    if (params.contains("variant") && !var)
        var = variant_from_string(params.at("variant").get<std::string>());
    if (cli_variant) var = variant_from_string(*cli_variant);
    d.family = family;
    d.variant = var.value_or(Variant::I);

    const std::string ctx = "params (" + family + ")";
    if (family == "riesz") {
        reject_unknown_fields(params, {"a", "kappa", "xi", "variant"}, ctx);
        HermitianPD xi = hermitian_from(params, "xi", ctx);
        const int beta = xi.beta();
        d.riesz.emplace(require_number(params, "a", ctx), weight_from(params, "kappa", ctx),
                        std::move(xi), beta, d.variant);
    } else if (family == "kotzriesz") {
        reject_unknown_fields(params, {"kappa", "mu", "theta", "sigma", "variant"}, ctx);
        d.kotzriesz.emplace(weight_from(params, "kappa", ctx),
                            matrix_from_json(params.at("mu")),
                            hermitian_from(params, "theta", ctx),
                            hermitian_from(params, "sigma", ctx), d.variant);
    } else if (family == "triesz") {
        reject_unknown_fields(params, {"nu", "k", "tau", "rho", "mu", "theta", "sigma",
                                       "variant"},
                              ctx);
        if (!params.contains("mu")) throw DomainError(ctx + ": missing matrix field \"mu\"");
        d.triesz.emplace(require_number(params, "nu", ctx), require_number(params, "k", ctx),
                         weight_from(params, "tau", ctx), require_number(params, "rho", ctx),
                         matrix_from_json(params.at("mu")),
                         hermitian_from(params, "theta", ctx),
                         hermitian_from(params, "sigma", ctx), d.variant);
    } else if (family == "beta-riesz") {
        reject_unknown_fields(params, {"n", "nu", "k", "tau", "rho", "sigma", "variant"}, ctx);
        d.beta_riesz.emplace(require_int(params, "n", ctx), require_number(params, "nu", ctx),
                             require_number(params, "k", ctx), weight_from(params, "tau", ctx),
                             require_number(params, "rho", ctx),
                             hermitian_from(params, "sigma", ctx), d.variant);
    } else if (family == "sv-triesz" || family == "eig-beta-riesz") {
        reject_unknown_fields(params, {"n", "m", "beta", "nu", "k", "rho", "tau", "variant"},
                              ctx);
        d.sv.emplace(require_int(params, "n", ctx), require_int(params, "m", ctx),
                     require_int(params, "beta", ctx), d.variant,
                     require_number(params, "nu", ctx), require_number(params, "k", ctx),
                     require_number(params, "rho", ctx), partition_from(params, "tau", ctx));
    } else {
        throw DomainError("unknown distribution \"" + dist +
                          "\"; expected riesz, kotzriesz, triesz, beta-riesz, sv-triesz or "
                          "eig-beta-riesz (optionally with -I/-II suffix)");
    }
    return d;
}

double eval_logpdf(const ParsedDist& d, const json& point) {
    if (d.family == "riesz")
        return riesz_logpdf(HermitianPD(matrix_from_json(point)), *d.riesz);
    if (d.family == "kotzriesz") return kotzriesz_logpdf(matrix_from_json(point), *d.kotzriesz);
    if (d.family == "triesz") return triesz_logpdf(matrix_from_json(point), *d.triesz);
    if (d.family == "beta-riesz")
        return beta_riesz_logpdf(HermitianPD(matrix_from_json(point)), *d.beta_riesz);
    // ordered-value families
    if (!point.contains("values"))
        throw DomainError("point for " + d.family + " must be {\"values\": [...]}");
    const std::vector<double> vals = point.at("values").get<std::vector<double>>();
    if (d.family == "sv-triesz") return sv_triesz_logpdf(vals, *d.sv);
    return eig_beta_riesz_logpdf(vals, *d.sv);
}

namespace {

std::vector<std::string> matrix_header(const std::string& prefix, int n, int m, int beta) {
    std::vector<std::string> h;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            for (int c = 0; c < beta; ++c)
                h.push_back(prefix + "_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                            plane_names[c]);
    return h;
}

void flatten_matrix(const AlgMatrix& a, std::vector<double>& out) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int c = 0; c < a.beta(); ++c) out.push_back(a(i, j).coord(c));
}

} // namespace

std::vector<std::string> sample_header(const ParsedDist& d) {
    if (d.family == "riesz")
        return matrix_header("v", d.riesz->dim(), d.riesz->dim(), d.riesz->beta);
    if (d.family == "kotzriesz")
        return matrix_header("y", d.kotzriesz->rows(), d.kotzriesz->cols(),
                             d.kotzriesz->beta);
    if (d.family == "triesz")
        return matrix_header("t", d.triesz->rows(), d.triesz->cols(), d.triesz->beta);
    if (d.family == "beta-riesz")
        return matrix_header("f", d.beta_riesz->dim(), d.beta_riesz->dim(),
                             d.beta_riesz->beta);
    throw DomainError("sampling is not defined for \"" + d.family +
                      "\" (densities of derived spectra); sample the underlying triesz "
                      "instead");
}

std::vector<double> draw_sample(RngStream& rng, const ParsedDist& d) {
    std::vector<double> row;
    if (d.family == "riesz") {
        const HermitianPD v = sample_riesz_matrix(rng, d.riesz->a, d.riesz->kappa,
                                                  d.riesz->xi, d.riesz->beta, d.variant);
        flatten_matrix(v.mat(), row);
    } else if (d.family == "kotzriesz") {
        flatten_matrix(sample_kotzriesz(rng, *d.kotzriesz), row);
    } else if (d.family == "triesz") {
        flatten_matrix(sample_triesz(rng, *d.triesz), row);
    } else if (d.family == "beta-riesz") {
        flatten_matrix(sample_beta_riesz(rng, *d.beta_riesz).mat(), row);
    } else {
        throw DomainError("sampling is not defined for \"" + d.family + "\"");
    }
    return row;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json json_number_or_token(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

json check_report_to_json(const CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["statistic"] = json_number_or_token(r.statistic);
    j["target"] = json_number_or_token(r.target);
    j["tolerance"] = r.tolerance;
    j["n"] = r.n;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    return j;
}

json jack_table_to_json(int weight, int beta) {
    const JackTableView view = jack_table_view(weight, beta);
    json coeffs;
    for (const auto& [tau, row] : view.rows) {
        json inner;
        for (const auto& [mu, c] : row) inner[mu.to_string()] = c;
        coeffs[tau.to_string()] = inner;
    }
    json j;
    j["alpha"] = view.alpha;
    j["weight"] = view.weight;
    j["coeffs"] = coeffs;
    return j;
}

} // namespace rieszlab
