#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "linrec/filtration.hpp"
#include "linrec/genfun.hpp"
#include "linrec/normal_form.hpp"
#include "linrec/scalar.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

using json = nlohmann::json;

inline json scalar_to_json(const GaussianRational& x) { return x.str(); }

inline GaussianRational scalar_from_json(const json& j) {
    if (!j.is_string()) throw parse_error("expected a scalar string", 0);
    return parse_scalar(j.get<std::string>());
}

inline json scalars_to_json(const std::vector<GaussianRational>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

inline std::vector<GaussianRational> scalars_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected an array of scalar strings", 0);
    std::vector<GaussianRational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(scalar_from_json(item));
    return out;
}

inline json to_json(const RecurrenceSequence& s) {
    return json{{"recurrence", {{"coeffs", scalars_to_json(s.coeffs)},
                                {"initial", scalars_to_json(s.initial)}}}};
}

inline json terms_to_json(const TermVector& t) { return json{{"terms", scalars_to_json(t)}}; }

inline json to_json(const NormalForm& f) {
    json entries = json::array();
    for (const auto& [key, coeff] : f.support())
        entries.push_back(json{{"k", key.k}, {"lambda", key.lambda.str()}, {"coeff", coeff.str()}});
    return json{{"normal_form", entries}};
}

inline json to_json(const RationalOGF& g) {
    return json{{"ogf", {{"num", scalars_to_json(g.num.coeffs())},
                         {"den", scalars_to_json(g.den.coeffs())}}}};
}

inline json to_json(const PowerSeriesTrunc& s) {
    return json{{"series", {{"order", s.order()}, {"coeffs", scalars_to_json(s.coeffs())}}}};
}

inline json to_json(const TensorSum& t) {
    json entries = json::array();
    for (const auto& [pair, coeff] : t.support())
        entries.push_back(json{{"left", {{"k", pair.first.k}, {"lambda", pair.first.lambda.str()}}},
                               {"right", {{"k", pair.second.k}, {"lambda", pair.second.lambda.str()}}},
                               {"coeff", coeff.str()}});
    return json{{"tensor", entries}};
}

inline json degree_to_json(const std::optional<std::size_t>& d) {
    if (!d) return "inf";
    return *d;
}

inline RecurrenceSequence recurrence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("initial"))
        throw parse_error("recurrence needs 'coeffs' and 'initial' arrays", 0);
    RecurrenceSequence s{scalars_from_json(j.at("coeffs")), scalars_from_json(j.at("initial"))};
    s.check();
    return s;
}

inline NormalForm normal_form_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("normal_form must be an array of terms", 0);
    NormalForm f;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("k") || !entry.contains("lambda") ||
            !entry.contains("coeff"))
            throw parse_error("normal_form term needs 'k', 'lambda', 'coeff'", 0);
        if (!entry.at("k").is_number_unsigned())
            throw parse_error("'k' must be a natural number", 0);
        f.add_term(entry.at("k").get<unsigned long>(), scalar_from_json(entry.at("lambda")),
                   scalar_from_json(entry.at("coeff")));
    }
    return f;
}

inline RationalOGF ogf_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("ogf needs 'num' and 'den' coefficient arrays", 0);
    return make_ogf(Polynomial(scalars_from_json(j.at("num"))),
                    Polynomial(scalars_from_json(j.at("den"))));
}

inline PowerSeriesTrunc series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw parse_error("series needs 'order' and 'coeffs'", 0);
    if (!j.at("order").is_number_unsigned())
        throw parse_error("'order' must be a natural number", 0);
    std::size_t order = j.at("order").get<std::size_t>();
    std::vector<GaussianRational> coeffs = scalars_from_json(j.at("coeffs"));
    if (coeffs.size() != order + 1)
        throw parse_error("series must carry exactly order+1 coefficients", 0);
    return {std::move(coeffs), order};
}

/// Any of the element representations accepted on the command line.
using ElementSpec =
    std::variant<RecurrenceSequence, TermVector, NormalForm, RationalOGF, PowerSeriesTrunc>;

inline ElementSpec parse_element(const json& j) {
    if (!j.is_object()) throw parse_error("element must be a JSON object", 0);
    int found = 0;
    for (const char* key : {"recurrence", "terms", "normal_form", "ogf", "series"})
        if (j.contains(key)) ++found;
    if (found != 1)
        throw parse_error("element must contain exactly one of "
                          "'recurrence', 'terms', 'normal_form', 'ogf', 'series'",
                          0);
    if (j.contains("recurrence")) return recurrence_from_json(j.at("recurrence"));
    if (j.contains("terms")) return scalars_from_json(j.at("terms"));
    if (j.contains("normal_form")) return normal_form_from_json(j.at("normal_form"));
    if (j.contains("ogf")) return ogf_from_json(j.at("ogf"));
    return series_from_json(j.at("series"));
}

} // namespace linrec
