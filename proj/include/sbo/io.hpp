#pragma once

// JSON (de)serialization for every published type, and the emit() entry
// point.  Wire formats:
//   Rational          "p/q" (q omitted when 1)
//   GaussRational     {"re": "p/q", "im": "r/s"}
//   UniPoly           [[degree, coeff], ...]            degree ascending
//   TriPoly           [[[e1,e2,e3], coeff], ...]        lexicographic
//   SymbolMap         {"N": n, "components": [TriPoly, ...]}
//   GVector           {"N": n, "m": m, "a": a, "entries": [[k, UniPoly], ...]}
//   DiffOperator      {"rank": 2N+1, "restriction": b, "terms":
//                       [{"covector": s, "orders": [d1,d2,d3], "coeff": g}, ...]}
//   PolySection       {"components": [TriPoly, ...]}

#include "sbo/odesolver.hpp"
#include "sbo/opemit.hpp"

#include <json.hpp>

#include <string>

namespace sbo {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }
inline Rational rational_from_json(const json& j) {
    if (!j.is_string())
        throw std::invalid_argument("rational: expected \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

inline json to_json(const GaussRational& g) {
    return json{{"re", g.re().to_string()}, {"im", g.im().to_string()}};
}
inline GaussRational gauss_from_json(const json& j) {
    if (j.is_string())
        return GaussRational(Rational::parse(j.get<std::string>()));
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("gauss rational: expected {\"re\", \"im\"}");
    return GaussRational(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
}

inline json to_json(const UniPoly& p) {
    json arr = json::array();
    for (const auto& [d, c] : p.coeffs())
        arr.push_back(json::array({d, to_json(c)}));
    return arr;
}
inline UniPoly unipoly_from_json(const json& j, Parity parity = Parity::None) {
    UniPoly p(parity);
    for (const auto& item : j)
        p.set_coeff(item.at(0).get<int>(), gauss_from_json(item.at(1)));
    return p;
}

inline json to_json(const TriPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.coeffs())
        arr.push_back(json::array({json::array({e[0], e[1], e[2]}), to_json(c)}));
    return arr;
}
inline TriPoly tripoly_from_json(const json& j) {
    TriPoly p;
    for (const auto& item : j) {
        const auto& e = item.at(0);
        p.set_coeff({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()},
                    gauss_from_json(item.at(1)));
    }
    return p;
}

inline json to_json(const SymbolMap& psi) {
    json comps = json::array();
    for (const auto& c : psi.components)
        comps.push_back(to_json(c));
    return json{{"N", psi.big_n}, {"components", comps}};
}
inline SymbolMap symbolmap_from_json(const json& j) {
    SymbolMap psi(j.at("N").get<int>());
    const auto& comps = j.at("components");
    if (comps.size() != static_cast<std::size_t>(psi.size()))
        throw std::invalid_argument("symbol map: component count must be 2N+1");
    for (int s = 0; s < psi.size(); ++s)
        psi[s] = tripoly_from_json(comps.at(static_cast<std::size_t>(s)));
    return psi;
}

inline json to_json(const GVector& g) {
    json entries = json::array();
    for (const auto& [k, p] : g.entries)
        entries.push_back(json::array({k, to_json(p)}));
    return json{{"N", g.big_n}, {"m", g.m}, {"a", g.a}, {"entries", entries}};
}
inline GVector gvector_from_json(const json& j) {
    GVector g;
    g.big_n = j.at("N").get<int>();
    g.m = j.at("m").get<long long>();
    g.a = j.at("a").get<long long>();
    for (const auto& item : j.at("entries")) {
        long long k = item.at(0).get<long long>();
        g.set_entry(k, unipoly_from_json(item.at(1), parity_of_degree(g.a - k)));
    }
    return g;
}

inline json to_json(const DiffOperator& d) {
    json terms = json::array();
    for (const auto& [key, c] : d.terms)
        terms.push_back(json{{"covector", key.first},
                             {"orders", json::array({key.second[0], key.second[1],
                                                     key.second[2]})},
                             {"coeff", to_json(c)}});
    return json{{"rank", 2 * d.big_n + 1}, {"restriction", d.restriction}, {"terms", terms}};
}
inline DiffOperator diffop_from_json(const json& j) {
    DiffOperator d;
    int rank = j.at("rank").get<int>();
    if (rank < 1 || rank % 2 == 0)
        throw std::invalid_argument("operator: rank must be odd and positive");
    d.big_n = (rank - 1) / 2;
    d.restriction = j.at("restriction").get<bool>();
    for (const auto& t : j.at("terms")) {
        const auto& o = t.at("orders");
        d.add_term(t.at("covector").get<int>(),
                   {o.at(0).get<int>(), o.at(1).get<int>(), o.at(2).get<int>()},
                   gauss_from_json(t.at("coeff")));
    }
    return d;
}

inline json to_json(const PolySection& s) {
    json comps = json::array();
    for (const auto& c : s.components)
        comps.push_back(to_json(c));
    return json{{"components", comps}};
}
inline PolySection section_from_json(const json& j) {
    PolySection s;
    for (const auto& c : j.at("components"))
        s.components.push_back(tripoly_from_json(c));
    return s;
}

enum class EmitFormat { Json, Latex };

inline std::string emit(const DiffOperator& d, EmitFormat format) {
    if (format == EmitFormat::Latex)
        return emit_latex(d);
    return to_json(d).dump();
}

inline DiffOperator parse_operator(const std::string& text) {
    return diffop_from_json(json::parse(text));
}

} // namespace sbo
