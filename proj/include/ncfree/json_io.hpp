#pragma once

// JSON documents for series and distributions. Word keys are comma-joined
// 1-based indices, values reduced-fraction strings, keys emitted in word
// order (length, then lexicographic).

#include <json.hpp>

#include <string>

#include "freeprob/distribution.hpp"
#include "series.hpp"

namespace ncfree {

using json = nlohmann::ordered_json;

inline json to_json(const NCSeries& f) {
    json coeffs = json::object();
    for (const auto& [w, c] : f.coeffs()) coeffs[format_word(w)] = to_string(c);
    return json{{"kind", "series"}, {"n", f.n()}, {"max_degree", f.max_degree()}, {"coeffs", std::move(coeffs)}};
}

inline json to_json(const JointDistribution& mu) {
    json moments = json::object();
    for (const auto& [w, c] : mu.moments()) moments[format_word(w)] = to_string(c);
    return json{{"kind", "distribution"},
                {"n", mu.n()},
                {"max_degree", mu.max_degree()},
                {"tracial", is_tracial(mu)},
                {"moments", std::move(moments)}};
}

namespace detail {

inline int positive_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_number_integer() || doc.at(key).get<long long>() < 1 ||
        doc.at(key).get<long long>() > 1'000'000)
        throw invalid_argument(std::string("document needs a positive integer '") + key + "'");
    return doc.at(key).get<int>();
}

inline void expect_kind(const json& doc, const char* kind) {
    if (!doc.is_object() || !doc.contains("kind") || doc.at("kind") != kind)
        throw invalid_argument(std::string("expected a document of kind '") + kind + "'");
}

template <typename Target>
void load_entries(const json& doc, const char* key, Target& out) {
    if (!doc.contains(key) || !doc.at(key).is_object())
        throw invalid_argument(std::string("document needs an object '") + key + "'");
    for (const auto& [k, v] : doc.at(key).items()) {
        if (!v.is_string()) throw invalid_argument("value at '" + k + "' must be a rational string");
        const Word w = parse_word(k);
        if (w.empty()) throw invalid_argument("the empty word is not a valid key");
        out.set(w, parse_scalar(v.template get<std::string>()));
    }
}

} // namespace detail

inline NCSeries series_from_json(const json& doc) {
    detail::expect_kind(doc, "series");
    NCSeries f(detail::positive_field(doc, "n"), detail::positive_field(doc, "max_degree"));
    detail::load_entries(doc, "coeffs", f);
    return f;
}

/// A present "tracial" field must agree with the moments.
inline JointDistribution distribution_from_json(const json& doc) {
    detail::expect_kind(doc, "distribution");
    JointDistribution mu(detail::positive_field(doc, "n"), detail::positive_field(doc, "max_degree"));
    detail::load_entries(doc, "moments", mu);
    if (doc.contains("tracial")) {
        if (!doc.at("tracial").is_boolean()) throw invalid_argument("'tracial' must be a boolean");
        if (doc.at("tracial").get<bool>() != is_tracial(mu))
            throw invalid_argument("'tracial' field disagrees with the moments");
    }
    return mu;
}

} // namespace ncfree
