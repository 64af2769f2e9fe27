#pragma once

// JSON forms of partitions and ring elements.
//
//   Rational     "num/den" (or "num" when the denominator is 1)
//   YMonomial    {"scalar", "a", "b", "y0_halves", "y": {"index": exp}}
//   YPolynomial  [{"exps": {a, b, y0_halves, y}, "coeff": rational}, ...]
//   TruncatedPoly {"vars": [...], "cap": n, "terms": [{"exps": [...], "coeff": ...}]}
//   SchurTable   [{"partition": [...], "coeff": ...}, ...] in partition order

#include <algorithm>
#include <string>

#include "json.hpp"

#include "partition.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "truncated_poly.hpp"
#include "ymonomial.hpp"

namespace toda {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const Partition& lambda) { return lambda.parts(); }

inline Json signature_json(const YSignature& s)
{
    Json y = Json::object();
    for (auto [i, e] : s.y)
        y[std::to_string(i)] = e;
    return Json{{"a", s.a}, {"b", s.b}, {"y0_halves", s.y0_halves}, {"y", y}};
}

inline Json to_json(const YMonomial& m)
{
    Json out = signature_json(m.signature());
    out["scalar"] = to_string(m.scalar());
    return out;
}

inline Json to_json(const YPolynomial& p)
{
    Json out = Json::array();
    for (const auto& [sig, c] : p.terms())
        out.push_back(Json{{"exps", signature_json(sig)}, {"coeff", to_string(c)}});
    return out;
}

template <class C>
Json to_json(const TruncatedPoly<C>& f)
{
    Json vars = Json::array();
    Json terms = Json::array();
    int cap = 0;
    if (f.space()) {
        cap = f.space()->cap();
        for (const auto& v : f.space()->vars())
            vars.push_back(Json{{"name", v.name()}, {"weight", v.weight}});
    }
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
    return Json{{"vars", vars}, {"cap", cap}, {"terms", terms}};
}

template <class C>
Json schur_table_json(const SchurTable<C>& table)
{
    Json out = Json::array();
    for (const auto& [lambda, c] : table)
        out.push_back(Json{{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
    return out;
}

inline Partition partition_from_json(const Json& j)
{
    if (j.is_string())
        return Partition::parse(j.get<std::string>());
    std::vector<int> parts = j.get<std::vector<int>>();
    for (std::size_t k = 1; k < parts.size(); ++k)
        if (parts[k] > parts[k - 1])
            throw PartitionError("partition parts must be weakly decreasing");
    for (int p : parts)
        if (p <= 0)
            throw PartitionError("partition parts must be positive");
    return Partition(std::move(parts));
}

inline Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

inline YSignature signature_from_json(const Json& j)
{
    YSignature s;
    s.a = j.value("a", 0);
    s.b = j.value("b", 0);
    s.y0_halves = j.value("y0_halves", 0);
    if (j.contains("y"))
        for (const auto& [key, value] : j.at("y").items()) {
            const int index = std::stoi(key);
            const int e = value.get<int>();
            if (index == 0)
                throw RingError("y0 must be given through y0_halves");
            if (e != 0)
                s.y.emplace_back(index, e);
        }
    std::sort(s.y.begin(), s.y.end());
    return s;
}

inline YMonomial ymonomial_from_json(const Json& j)
{
    return YMonomial(rational_from_json(j.at("scalar")), signature_from_json(j));
}

inline YPolynomial ypolynomial_from_json(const Json& j)
{
    YPolynomial out;
    for (const auto& term : j)
        out.add(signature_from_json(term.at("exps")), rational_from_json(term.at("coeff")));
    return out;
}

}  // namespace toda
