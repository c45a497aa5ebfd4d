#pragma once

#include <string>

#include "json.hpp"

#include "repglt/bipartition.hpp"
#include "repglt/diagram.hpp"
#include "repglt/drinfeld.hpp"
#include "repglt/factored_poly.hpp"
#include "repglt/gln_module.hpp"
#include "repglt/modular_weyl.hpp"
#include "repglt/series.hpp"
#include "repglt/yangian.hpp"

namespace repglt {

using Json = nlohmann::json;

// Coefficient field selector, "q" or "fp:<p>[:<m>]".
struct FieldSpec {
    bool rational = true;
    long p = 0;
    int m = 1;

    static FieldSpec parse(const std::string& s);
    std::string str() const;
};

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json elem_to_json(const RationalField& f, const Rational& x);
Rational elem_from_json(const RationalField& f, const Json& j);
Json elem_to_json(const FiniteField& f, const FFElem& x);
FFElem elem_from_json(const FiniteField& f, const Json& j);

Json field_to_json(const RationalField&);
Json field_to_json(const FiniteField& f);

Json poly_to_json(const UniPolyT& p);
UniPolyT poly_from_json(const Json& j);

Json object_word_to_json(const ObjectWord& w);
ObjectWord object_word_from_json(const Json& j);
Json matching_to_json(const Matching& m);
Matching matching_from_json(const Json& j);
Json diagram_to_json(const DiagramLC& d);
DiagramLC diagram_from_json(const Json& j);

Json bipartition_to_json(const Bipartition& b);
Bipartition bipartition_from_json(const Json& j);

Json scan_report_to_json(const ScanReport& r);

template <FieldLike F>
Json series_to_json(const F& field, const TruncSeries<F>& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(elem_to_json(field, s.coeff(k)));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

template <FieldLike F>
TruncSeries<F> series_from_json(const F& field, const Json& j) {
    require(j.is_object() && j.contains("coeffs"), "json", "series requires a coeffs array");
    const auto& coeffs = j.at("coeffs");
    int order = j.contains("order") ? j.at("order").get<int>() : static_cast<int>(coeffs.size()) - 1;
    TruncSeries<F> s(field, order);
    for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k)
        s.set_coeff(k, elem_from_json(field, coeffs.at(static_cast<std::size_t>(k))));
    return s;
}

template <FieldLike F>
Json factored_to_json(const F& field, const FactoredPoly<F>& p) {
    Json roots = Json::array();
    for (const auto& r : p.roots()) roots.push_back(elem_to_json(field, r));
    return Json{{"roots", roots}};
}

template <FieldLike F>
FactoredPoly<F> factored_from_json(const F& field, const Json& j) {
    require(j.is_object() && j.contains("roots"), "json", "factored polynomial requires roots");
    std::vector<typename F::Elem> roots;
    for (const auto& r : j.at("roots")) roots.push_back(elem_from_json(field, r));
    return FactoredPoly<F>(field, std::move(roots));
}

template <FieldLike F>
Json gln_module_to_json(const GlnModule<F>& mod) {
    Json e = Json::object();
    for (int a = 0; a < mod.n; ++a)
        for (int b = 0; b < mod.n; ++b) {
            Json rows = Json::array();
            for (int r = 0; r < mod.dim; ++r) {
                Json row = Json::array();
                for (int c = 0; c < mod.dim; ++c) row.push_back(elem_to_json(mod.field, mod.e_mat(a, b).at(r, c)));
                rows.push_back(row);
            }
            e[std::to_string(a + 1) + "," + std::to_string(b + 1)] = rows;
        }
    Json hw = Json::array();
    for (const auto& x : mod.highest) hw.push_back(elem_to_json(mod.field, x));
    Json out{{"n", mod.n}, {"dim", mod.dim}, {"highest_weight", hw}, {"E", e}};
    if (!mod.highest_int.empty()) out["highest_weight_int"] = mod.highest_int;
    return out;
}

template <FieldLike F>
Json yangian_to_json(const YangianModule<F>& m) {
    Json t = Json::object();
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            for (int mm = 1; mm <= m.trunc; ++mm) {
                Json rows = Json::array();
                for (int r = 0; r < m.dim; ++r) {
                    Json row = Json::array();
                    for (int c = 0; c < m.dim; ++c) row.push_back(elem_to_json(m.field, m.t(i, j, mm).at(r, c)));
                    rows.push_back(row);
                }
                t[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(mm)] = rows;
            }
    Json prov = Json::array();
    for (const auto& f : m.factors) {
        Json hw = Json::array();
        for (const auto& x : f.hw) hw.push_back(elem_to_json(m.field, x));
        prov.push_back(Json{{"highest_weight", hw}, {"shift", elem_to_json(m.field, f.shift)}});
    }
    Json out{{"n", m.n},         {"field", field_to_json(m.field)}, {"truncation", m.trunc},
             {"dim", m.dim},     {"exact", m.exact},               {"T", t},
             {"provenance", prov}};
    if (m.twist) out["twist"] = series_to_json(m.field, *m.twist);
    return out;
}

template <FieldLike F>
YangianModule<F> yangian_from_json(const F& field, const Json& j) {
    require(j.is_object(), "json", "module must be an object");
    int n = j.at("n").get<int>();
    int dim = j.at("dim").get<int>();
    int trunc = j.at("truncation").get<int>();
    bool exact = j.value("exact", true);
    YangianModule<F> m(field, n, dim, trunc, exact);
    const auto& t = j.at("T");
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            for (int mm = 1; mm <= trunc; ++mm) {
                std::string key = std::to_string(i + 1) + "," + std::to_string(jj + 1) + "," + std::to_string(mm);
                if (!t.contains(key)) continue;
                const auto& rows = t.at(key);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c)
                        m.t(i, jj, mm).at(r, c) =
                            elem_from_json(field, rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)));
            }
    if (j.contains("provenance")) {
        for (const auto& f : j.at("provenance")) {
            typename YangianModule<F>::Factor fac;
            for (const auto& x : f.at("highest_weight")) fac.hw.push_back(elem_from_json(field, x));
            fac.shift = elem_from_json(field, f.at("shift"));
            m.factors.push_back(std::move(fac));
        }
        m.has_provenance = !m.factors.empty();
    }
    if (j.contains("twist")) m.twist = series_from_json(field, j.at("twist"));
    return m;
}

template <FieldLike F>
Json highest_weight_to_json(const F& field, const HighestWeightCR<F>& hw) {
    Json b = Json::array(), c = Json::array();
    for (const auto& p : hw.bullet) b.push_back(factored_to_json(field, p));
    for (const auto& p : hw.circ) c.push_back(factored_to_json(field, p));
    return Json{{"lambda_bullet", b},
                {"lambda_circ", c},
                {"lambda_m", factored_to_json(field, hw.master)},
                {"stab_bullet", hw.stab_bullet()},
                {"stab_circ", hw.stab_circ()}};
}

template <FieldLike F>
HighestWeightCR<F> highest_weight_from_json(const F& field, const Json& j) {
    HighestWeightCR<F> hw(field);
    for (const auto& p : j.at("lambda_bullet")) hw.bullet.push_back(factored_from_json(field, p));
    for (const auto& p : j.at("lambda_circ")) hw.circ.push_back(factored_from_json(field, p));
    hw.master = factored_from_json(field, j.at("lambda_m"));
    return hw;
}

template <FieldLike F>
Json drinfeld_to_json(const F& field, const DrinfeldDataCR<F>& d) {
    Json b = Json::array(), c = Json::array();
    for (const auto& p : d.bullet) b.push_back(factored_to_json(field, p));
    for (const auto& p : d.circ) c.push_back(factored_to_json(field, p));
    return Json{{"P_bullet", b}, {"P_circ", c}};
}

template <FieldLike F>
DrinfeldDataCR<F> drinfeld_from_json(const F& field, const Json& j) {
    DrinfeldDataCR<F> d(field);
    for (const auto& p : j.at("P_bullet")) d.bullet.push_back(factored_from_json(field, p));
    if (j.contains("P_circ"))
        for (const auto& p : j.at("P_circ")) d.circ.push_back(factored_from_json(field, p));
    return d;
}

template <FieldLike F>
EvaluationData<F> evaluation_data_from_json(const F& field, const Json& j) {
    EvaluationData<F> data;
    require(j.contains("terms"), "json", "evaluation data requires terms");
    for (const auto& t : j.at("terms")) {
        typename EvaluationData<F>::Term term{bipartition_from_json(t), field.zero()};
        if (t.contains("c")) term.c = elem_from_json(field, t.at("c"));
        data.terms.push_back(std::move(term));
    }
    data.standard_gl_action = j.value("standard_gl_action", false);
    return data;
}

} // namespace repglt
