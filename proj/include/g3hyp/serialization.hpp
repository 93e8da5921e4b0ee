/**
 * @file serialization.hpp
 * @brief JSON wire formats. Every number is serialized exactly as "p/q"
 *        (or "p" when the denominator is 1); nothing is ever rounded.
 */
#pragma once

#include <g3hyp/dihedral.hpp>
#include <g3hyp/octavic_invariants.hpp>
#include <g3hyp/strata.hpp>

#include <json.hpp>

namespace g3hyp {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const QuadExt& e) {
    return json{{"base", e.base().str()},
                {"coeff", e.coeff().str()},
                {"radicand", e.radicand().get_str()}};
}

inline json to_json(const BinaryForm<Rational>& f) {
    json cs = json::array();
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(f[i].str());
    return json{{"degree", f.degree()}, {"coeffs", cs}};
}

inline json to_json(const BinaryForm<QuadExt>& f) {
    json cs = json::array();
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(to_json(f[i]));
    return json{{"degree", f.degree()}, {"coeffs", cs}};
}

inline json to_json(const ShiodaVector<Rational>& S) {
    json j;
    for (int w = 2; w <= 10; ++w) j["J" + std::to_string(w)] = S[w].str();
    return j;
}

inline json to_json(const ModuliPoint& p) {
    json vals = json::array();
    for (const auto& v : p.values) vals.push_back(v.str());
    return json{{"branch", branch_name(p.branch)}, {"values", vals}};
}

inline json to_json(const DihedralPoint& p) {
    json vals = json::array();
    for (const auto& v : p.values) vals.push_back(v.str());
    return json{{"branch", branch_name(p.branch)}, {"values", vals}};
}

inline json to_json(const ReconstructedModel& m) {
    json j = to_json(m.octavic());
    if (m.field == ModelField::moduli) {
        j["field"] = "moduli";
    } else {
        j["field"] = "quadratic";
        j["d"] = m.d.str();
    }
    return j;
}

inline json to_json(const ClassificationResult& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(json{{"relation", w.relation}, {"paper_ref", w.ref}, {"satisfied", w.satisfied}});
    return json{{"group", group_name(r.label)},
                {"certainty", certainty_name(r.certainty)},
                {"witnesses", ws}};
}

inline BinaryForm<Rational> binary_form_from_json(const json& j) {
    int degree = j.at("degree").get<int>();
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(Rational::parse(c.get<std::string>()));
    return BinaryForm<Rational>(degree, std::move(cs));
}

}  // namespace g3hyp
