#pragma once

#include <string>

#include "json.hpp"

#include "element.hpp"

namespace qshuffle {

using json = nlohmann::json;

// Scalar <-> {"num": [[exp, "coeff"], ...], "den": [[exp, "coeff"], ...]}
// with exponents descending and coefficients as decimal strings.
inline json laurent_to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        arr.push_back(json::array({it->first, it->second.str()}));
    return arr;
}

inline LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& entry : j) {
        int exp = entry.at(0).get<int>();
        Int c(entry.at(1).get<std::string>());
        p.add_term(exp, c);
    }
    return p;
}

inline json scalar_to_json(const Scalar& s) {
    return json{{"num", laurent_to_json(s.num())}, {"den", laurent_to_json(s.den())}};
}

inline Scalar scalar_from_json(const json& j) {
    return Scalar(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

// Element <-> {"terms": [{"word": "xxyy", "coeff": <scalar>}, ...]} sorted
// by (length, lex).
inline json element_to_json(const Element& e) {
    json terms = json::array();
    for (const auto& [w, c] : e.sorted_terms())
        terms.push_back(json{{"word", w.str()}, {"coeff", scalar_to_json(c)}});
    return json{{"terms", terms}};
}

inline Element element_from_json(const json& j) {
    Element e;
    for (const auto& t : j.at("terms"))
        e.add_term(Word::from_string(t.at("word").get<std::string>()), scalar_from_json(t.at("coeff")));
    return e;
}

}  // namespace qshuffle
