#include "repglt/json_io.hpp"

namespace repglt {

FieldSpec FieldSpec::parse(const std::string& s) {
    FieldSpec spec;
    if (s == "q" || s == "Q") return spec;
    if (s.rfind("fp:", 0) == 0) {
        spec.rational = false;
        std::string rest = s.substr(3);
        auto colon = rest.find(':');
        try {
            if (colon == std::string::npos) {
                spec.p = std::stol(rest);
            } else {
                spec.p = std::stol(rest.substr(0, colon));
                spec.m = std::stoi(rest.substr(colon + 1));
            }
        } catch (const std::exception&) {
            fail("usage", "malformed field spec: " + s);
        }
        return spec;
    }
    fail("usage", "unknown field spec: " + s + " (expected q or fp:<p>[:<m>])");
}

std::string FieldSpec::str() const {
    if (rational) return "q";
    std::string s = "fp:" + std::to_string(p);
    if (m > 1) s += ":" + std::to_string(m);
    return s;
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    require(j.is_string(), "json", "rational must be an integer or an \"a/b\" string");
    return Rational::parse(j.get<std::string>());
}

Json elem_to_json(const RationalField&, const Rational& x) { return rational_to_json(x); }

Rational elem_from_json(const RationalField&, const Json& j) { return rational_from_json(j); }

Json elem_to_json(const FiniteField& f, const FFElem& x) {
    Json coords = Json::array();
    for (int i = 0; i < f.degree(); ++i) coords.push_back(x.coord(i));
    return Json{{"p", f.characteristic()}, {"m", f.degree()}, {"coords", coords}};
}

FFElem elem_from_json(const FiniteField& f, const Json& j) {
    if (j.is_number_integer()) return f.from_integer(j.get<long>());
    if (j.is_string()) return f.from_rational(Rational::parse(j.get<std::string>()));
    require(j.is_object() && j.contains("coords"), "json", "field element requires coords");
    if (j.contains("p"))
        require(j.at("p").get<long>() == f.characteristic() &&
                    j.value("m", 1) == f.degree(),
                "field-mismatch", "element belongs to a different field");
    std::vector<long> coords;
    for (const auto& c : j.at("coords")) coords.push_back(c.get<long>());
    return f.element(coords);
}

Json field_to_json(const RationalField&) { return "q"; }

Json field_to_json(const FiniteField& f) { return f.describe(); }

Json poly_to_json(const UniPolyT& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return coeffs;
}

UniPolyT poly_from_json(const Json& j) {
    require(j.is_array(), "json", "polynomial must be a coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return UniPolyT(std::move(coeffs));
}

Json object_word_to_json(const ObjectWord& w) { return Json::array({w.bullets, w.circles}); }

ObjectWord object_word_from_json(const Json& j) {
    require(j.is_array() && j.size() == 2, "json", "object word must be [bullets, circles]");
    ObjectWord w{j.at(0).get<int>(), j.at(1).get<int>()};
    require(w.bullets >= 0 && w.circles >= 0, "json", "object word entries must be nonnegative");
    return w;
}

Json matching_to_json(const Matching& m) {
    Json pairs = Json::array();
    const int s = m.src().total();
    for (int x = 0; x < m.total_points(); ++x) {
        int y = m.partner(x);
        if (y < x) continue;
        auto pt = [&](int f) {
            return Json::array({f < s ? "src" : "dst", f < s ? f : f - s});
        };
        pairs.push_back(Json::array({pt(x), pt(y)}));
    }
    return Json{{"src", object_word_to_json(m.src())}, {"dst", object_word_to_json(m.dst())}, {"pairs", pairs}};
}

Matching matching_from_json(const Json& j) {
    ObjectWord src = object_word_from_json(j.at("src"));
    ObjectWord dst = object_word_from_json(j.at("dst"));
    const int s = src.total(), total = s + dst.total();
    std::vector<int> partner(static_cast<std::size_t>(total), -1);
    require(j.contains("pairs"), "json", "matching requires pairs");
    for (const auto& pr : j.at("pairs")) {
        require(pr.is_array() && pr.size() == 2, "json", "pair must have two points");
        auto flat = [&](const Json& pt) {
            require(pt.is_array() && pt.size() == 2, "json", "point must be [row, index]");
            std::string row = pt.at(0).get<std::string>();
            int idx = pt.at(1).get<int>();
            require(row == "src" || row == "dst", "json", "point row must be src or dst");
            int f = row == "src" ? idx : s + idx;
            require(f >= 0 && f < total, "json", "point index out of range");
            return f;
        };
        int a = flat(pr.at(0)), b = flat(pr.at(1));
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    return Matching(src, dst, std::move(partner));
}

Json diagram_to_json(const DiagramLC& d) {
    Json terms = Json::array();
    for (const auto& [m, c] : d.terms())
        terms.push_back(Json{{"matching", matching_to_json(m)}, {"coeff", poly_to_json(c)}});
    return Json{{"src", object_word_to_json(d.src())}, {"dst", object_word_to_json(d.dst())}, {"terms", terms}};
}

DiagramLC diagram_from_json(const Json& j) {
    DiagramLC d(object_word_from_json(j.at("src")), object_word_from_json(j.at("dst")));
    for (const auto& t : j.at("terms"))
        d.add_term(matching_from_json(t.at("matching")), poly_from_json(t.at("coeff")));
    return d;
}

Json bipartition_to_json(const Bipartition& b) {
    return Json{{"lambda_bullet", b.bullet}, {"lambda_circ", b.circ}};
}

Bipartition bipartition_from_json(const Json& j) {
    std::vector<long> bullet, circ;
    if (j.contains("lambda_bullet"))
        for (const auto& x : j.at("lambda_bullet")) bullet.push_back(x.get<long>());
    if (j.contains("lambda_circ"))
        for (const auto& x : j.at("lambda_circ")) circ.push_back(x.get<long>());
    if (j.contains("eta_bullet"))
        for (const auto& x : j.at("eta_bullet")) bullet.push_back(x.get<long>());
    if (j.contains("eta_circ"))
        for (const auto& x : j.at("eta_circ")) circ.push_back(x.get<long>());
    return Bipartition(std::move(bullet), std::move(circ));
}

Json scan_report_to_json(const ScanReport& r) {
    Json cells = Json::array();
    for (const auto& c : r.cells) {
        Json singular = Json::array();
        for (const auto& w : c.singular_weights) singular.push_back(w);
        cells.push_back(Json{{"lambda", c.lambda},
                             {"p", c.p},
                             {"bound_satisfied", c.bound_satisfied},
                             {"outcome", c.outcome},
                             {"irreducible", c.outcome == "ok" && c.irreducible},
                             {"singular_weights", singular},
                             {"linkage_holds", c.linkage_holds}});
    }
    return Json{{"n", r.n},
                {"cells", cells},
                {"bound_violations", r.bound_violations},
                {"reducible_below_bound", r.reducible_below_bound}};
}

} // namespace repglt
