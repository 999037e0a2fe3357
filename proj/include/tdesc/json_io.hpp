#pragma once

#include <json.hpp>

#include "tdesc/basis_traits.hpp"
#include "tdesc/linear.hpp"
#include "tdesc/report.hpp"

namespace tdesc {

using Json = nlohmann::ordered_json;

// {"basis_kind": "...", "terms": [{"coeff": "p/q", "key": "<literal>"}, ...]}
template <class K>
Json to_json(const LinearCombination<K>& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms())
        terms.push_back({{"coeff", c.str()}, {"key", BasisTraits<K>::literal(k)}});
    return Json{{"basis_kind", BasisTraits<K>::kind()}, {"terms", terms}};
}

// tensor terms carry a two-element key array
template <class K>
Json to_json(const TensorCombination<K>& x) {
    Json terms = Json::array();
    for (const auto& [pair, c] : x.terms())
        terms.push_back({{"coeff", c.str()},
                         {"key", Json::array({BasisTraits<K>::literal(pair.first),
                                              BasisTraits<K>::literal(pair.second)})}});
    return Json{{"basis_kind", BasisTraits<K>::kind()}, {"terms", terms}};
}

template <class K>
LinearCombination<K> lc_from_json(const Json& j) {
    LinearCombination<K> out;
    for (const auto& term : j.at("terms"))
        out.add(BasisTraits<K>::parse(term.at("key").template get<std::string>()),
                Rational::parse(term.at("coeff").template get<std::string>()));
    return out;
}

Json report_to_json(const Report& report);

} // namespace tdesc
