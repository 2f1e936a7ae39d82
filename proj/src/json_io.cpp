#include "wrightfrac/json_io.hpp"

#include "wrightfrac/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace wrightfrac {

namespace {

Json numbers(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(number_or_null(x));
    return a;
}

Json points_json(const std::vector<GridPoint>& pts) {
    Json a = Json::array();
    for (const GridPoint& p : pts) {
        a.push_back(Json{{"coords", numbers(p.coords)}, {"lhs", number_or_null(p.lhs)}, {"rhs", number_or_null(p.rhs)}});
    }
    return a;
}

} // namespace

Json number_or_null(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

Json to_json(const GenPowerSeries& s) {
    Json terms = Json::array();
    for (const Term& t : s.terms()) {
        terms.push_back(Json::array({number_or_null(t.coeff), number_or_null(t.exponent)}));
    }
    return Json{{"var", s.var()}, {"terms", terms}};
}

GenPowerSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("var") || !j.contains("terms") || !j["var"].is_string() ||
        !j["terms"].is_array()) {
        throw InvariantViolation("series JSON must be an object with 'var' and 'terms'");
    }
    std::vector<Term> terms;
    for (const Json& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_number()) {
            throw InvariantViolation("series term must be [coeff, exponent]");
        }
        terms.push_back({t[0].get<double>(), t[1].get<double>()});
    }
    return GenPowerSeries(j["var"].get<std::string>(), std::move(terms), NegativeExponents::allow);
}

Json to_json(const EvalResult& r) {
    return Json{{"value", number_or_null(r.value)},
                {"abs_error_bound", number_or_null(r.abs_error_bound)},
                {"terms_used", r.terms_used}};
}

Json to_json(const ResidualReport& r) {
    Json checks = Json::array();
    for (const NamedCheck& c : r.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"value", number_or_null(c.value)},
                              {"threshold", number_or_null(c.threshold)},
                              {"pass", c.pass}});
    }
    Json hyps = Json::array();
    for (const HypothesisResult& h : r.hypotheses) {
        hyps.push_back(Json{{"label", h.label},
                            {"max_abs_residual", number_or_null(h.max_abs_residual)},
                            {"max_rel_residual", number_or_null(h.max_rel_residual)},
                            {"pass", h.pass}});
    }
    Json j{{"claim_id", r.claim_id},
           {"mode", to_string(r.mode)},
           {"pass", r.pass},
           {"max_abs_residual", number_or_null(r.max_abs_residual)},
           {"max_rel_residual", number_or_null(r.max_rel_residual)},
           {"tolerance", number_or_null(r.tolerance)},
           {"truncation_order", r.truncation_order},
           {"diagnostics", r.diagnostics},
           {"points", points_json(r.points)},
           {"checks", checks}};
    if (!r.hypotheses.empty()) j["hypotheses"] = hyps;
    return j;
}

Json to_json(const EigenfactorReport& r) {
    Json cands = Json::array();
    for (const EigenfactorCandidate& c : r.candidates) {
        cands.push_back(Json{{"label", c.label},
                             {"value", number_or_null(c.value)},
                             {"max_deviation", number_or_null(c.max_deviation)}});
    }
    return Json{{"claim_id", r.claim_id},
                {"mode", "eigenfactor"},
                {"pass", r.pass},
                {"truncation_order", r.truncation_order},
                {"per_coefficient_ratios", numbers(r.per_coefficient_ratios)},
                {"fitted_factor", number_or_null(r.fitted_factor)},
                {"ratio_spread", number_or_null(r.ratio_spread)},
                {"candidates", cands},
                {"winner", r.winner},
                {"diagnostics", r.diagnostics}};
}

Json to_json(const LaplaceCheckReport& r) {
    return Json{{"claim_id", std::string("laplace_") + to_string(r.kind)},
                {"kind", to_string(r.kind)},
                {"lambda", number_or_null(r.params.lambda())},
                {"mu", number_or_null(r.params.mu())},
                {"sign", r.sign},
                {"s_values", numbers(r.s_values)},
                {"numeric", numbers(r.numeric)},
                {"closed_form", numbers(r.closed_form)},
                {"quadrature_error", numbers(r.quadrature_error)},
                {"series_error", numbers(r.series_error)},
                {"t_max", numbers(r.t_max)},
                {"max_rel_gap", number_or_null(r.max_rel_gap)},
                {"tolerance", number_or_null(r.tolerance)},
                {"pass", r.pass},
                {"diagnostics", r.diagnostics}};
}

std::string dump_canonical(const Json& j) {
    return j.dump(2);
}

} // namespace wrightfrac
