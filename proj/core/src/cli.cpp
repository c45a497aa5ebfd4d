#include "repglt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "repglt/json_io.hpp"
#include "repglt/selftest.hpp"
#include "repglt/walled_brauer.hpp"

namespace repglt {
namespace {

struct Ctx {
    Json input;
    FieldSpec field;
    int trunc = 8;
    std::uint64_t seed = 1;
    bool pretty = false;
};

const char* kUsage =
    "usage: repglt <command> [input.json | '<json>' | -] [--field q|fp:<p>[:<m>]] [--trunc N] [--seed S] [--pretty]\n"
    "\n"
    "scalar commands:    bracket, interpolate, series-shift\n"
    "diagram commands:   matchings, compose, tensor, dual, trace\n"
    "algebra commands:   gram-det, dim-poly, weyl-dim, hom-dim, gln-mod\n"
    "modular commands:   weyl-mod, linkage, bound-scan\n"
    "yangian commands:   yangian build|tensor|verify|weight|irreducible|renumerate|qdet|drinfeld\n"
    "drinfeld commands:  drinfeld restrict|eval-weight|strings|weight-to-poly|poly-to-weight|normalize|label\n"
    "misc commands:      witness-primes, selftest\n"
    "\n"
    "input is read from the positional argument (inline JSON or a file path), or stdin;\n"
    "REPGLT_TRUNC sets the default series truncation order\n";

template <class Fn>
Json with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.rational) return fn(RationalField{});
    return fn(FiniteField(spec.p, spec.m));
}

template <FieldLike F>
YangianModule<F> build_from_spec(const F& field, const Json& j, int trunc) {
    require(j.contains("factors") && j.at("factors").is_array() && !j.at("factors").empty(), "json",
            "yangian build requires a nonempty factors array");
    std::vector<YangianModule<F>> mods;
    for (const auto& fj : j.at("factors")) {
        GlnModule<F> g(field);
        if (fj.contains("lambda")) {
            std::vector<long> lambda;
            for (const auto& x : fj.at("lambda")) lambda.push_back(x.get<long>());
            if (field.characteristic() == 0)
                g = build_irreducible_gln(field, lambda);
            else
                g = build_weyl_module(field, lambda);
        } else if (fj.contains("alpha")) {
            require(field.characteristic() != 2, "argument", "odd characteristic required");
            g = gl2_highest_weight_module(field, elem_from_json(field, fj.at("alpha")),
                                          elem_from_json(field, fj.at("beta")));
        } else {
            fail("json", "factor needs either lambda or alpha/beta");
        }
        auto m = evaluation_module(g);
        if (fj.contains("shift")) {
            auto z = elem_from_json(field, fj.at("shift"));
            if (!field.is_zero(z)) m = apply_shift(m, z, trunc);
        }
        if (fj.contains("twist")) {
            auto f = series_from_json(field, fj.at("twist"));
            int deg = 0;
            for (int k = f.order(); k >= 1; --k)
                if (!field.is_zero(f.coeff(k))) { deg = k; break; }
            // pad to the working order; the JSON coefficients are the whole polynomial
            TruncSeries<F> padded(field, std::max(trunc, deg));
            for (int k = 0; k <= std::min(f.order(), padded.order()); ++k) padded.set_coeff(k, f.coeff(k));
            m = apply_twist(m, padded, deg);
        }
        mods.push_back(std::move(m));
    }
    YangianModule<F> acc = mods.front();
    for (std::size_t i = 1; i < mods.size(); ++i) acc = tensor_module(acc, mods[i]);
    return acc;
}

Json cmd_bracket(const Ctx& ctx) {
    require(!ctx.field.rational, "argument", "bracket lift needs a finite field (--field fp:<p>[:<m>])");
    FiniteField field(ctx.field.p, ctx.field.m);
    auto x = elem_from_json(field, ctx.input.at("x"));
    return Json{{"bracket", bracket_lift(x)}};
}

Json cmd_interpolate(const Ctx& ctx) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& p : ctx.input.at("points"))
        pts.push_back({rational_from_json(p.at(0)), rational_from_json(p.at(1))});
    UniPolyT poly = lagrange_interpolate(pts);
    return Json{{"coeffs", poly_to_json(poly)}, {"poly", poly.str()}};
}

Json cmd_series_shift(const Ctx& ctx) {
    return with_field(ctx.field, [&](auto field) {
        auto s = series_from_json(field, ctx.input.at("series"));
        auto z = elem_from_json(field, ctx.input.at("z"));
        return Json{{"series", series_to_json(field, series_shift_expand(s, z))}};
    });
}

Json cmd_matchings(const Ctx& ctx) {
    auto src = object_word_from_json(ctx.input.at("src"));
    auto dst = object_word_from_json(ctx.input.at("dst"));
    auto ms = enumerate_matchings(src, dst);
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(matching_to_json(m));
    return Json{{"count", ms.size()}, {"matchings", arr}};
}

Json cmd_compose(const Ctx& ctx) {
    auto g = diagram_from_json(ctx.input.at("g"));
    auto f = diagram_from_json(ctx.input.at("f"));
    return Json{{"diagram", diagram_to_json(compose(g, f))}};
}

Json cmd_tensor(const Ctx& ctx) {
    auto f = diagram_from_json(ctx.input.at("f"));
    auto g = diagram_from_json(ctx.input.at("g"));
    return Json{{"diagram", diagram_to_json(tensor(f, g))}};
}

Json cmd_dual(const Ctx& ctx) {
    auto f = diagram_from_json(ctx.input.contains("f") ? ctx.input.at("f") : ctx.input);
    return Json{{"diagram", diagram_to_json(dual(f))}};
}

Json cmd_trace(const Ctx& ctx) {
    auto f = diagram_from_json(ctx.input.contains("f") ? ctx.input.at("f") : ctx.input);
    UniPolyT tr = closure_trace(f);
    return Json{{"coeffs", poly_to_json(tr)}, {"poly", tr.str()}};
}

Json cmd_gram_det(const Ctx& ctx) {
    int r = ctx.input.at("r").get<int>();
    int s = ctx.input.at("s").get<int>();
    long bound = ctx.input.value("bound", 24L);
    UniPolyT det = gram_determinant(r, s, bound);
    Json out{{"coeffs", poly_to_json(det)}, {"poly", det.str()}};
    if (auto fs = factored_str(det)) out["factored"] = *fs;
    return out;
}

Json cmd_dim_poly(const Ctx& ctx) {
    Bipartition bp = bipartition_from_json(ctx.input);
    UniPolyT interp = dimension_poly_interpolated(bp);
    Json out{{"coeffs", poly_to_json(interp)}, {"poly", interp.str()}};
    if (auto fs = factored_str(interp)) out["factored"] = *fs;
    if (bp.circ.empty() && !bp.bullet.empty()) {
        UniPolyT sym = young_symmetrizer_dimension(bp.bullet);
        out["methods_agree"] = sym == interp;
    } else {
        out["methods_agree"] = nullptr;
    }
    return out;
}

Json cmd_weyl_dim(const Ctx& ctx) {
    std::vector<long> lambda;
    for (const auto& x : ctx.input.at("lambda")) lambda.push_back(x.get<long>());
    return Json{{"dim", weyl_dim(lambda).get_str()}};
}

Json cmd_hom_dim(const Ctx& ctx) {
    auto src = object_word_from_json(ctx.input.at("src"));
    auto dst = object_word_from_json(ctx.input.at("dst"));
    int n = ctx.input.at("n").get<int>();
    std::size_t count = enumerate_matchings(src, dst).size();
    int rank = with_field(ctx.field, [&](auto field) {
                   return Json(hom_dim_gln(field, n, src, dst));
               }).get<int>();
    return Json{{"diagrammatic", count}, {"oracle", rank}};
}

Json cmd_gln_mod(const Ctx& ctx) {
    require(ctx.field.rational, "argument", "gln-mod builds over Q; use weyl-mod for characteristic p");
    RationalField Q;
    std::vector<long> lambda;
    for (const auto& x : ctx.input.at("lambda")) lambda.push_back(x.get<long>());
    auto mod = build_irreducible_gln(Q, lambda, ctx.input.value("bound", 64L));
    return Json{{"module", gln_module_to_json(mod)},
                {"relations_hold", mod.check_commutation_relations()}};
}

Json cmd_weyl_mod(const Ctx& ctx) {
    long p = ctx.input.at("p").get<long>();
    int m = ctx.input.value("m", 1);
    FiniteField field(p, m);
    GlnModule<FiniteField> mod(field);
    if (ctx.input.contains("alpha")) {
        mod = gl2_irreducible_modp(field, elem_from_json(field, ctx.input.at("alpha")),
                                   elem_from_json(field, ctx.input.at("beta")));
    } else {
        std::vector<long> lambda;
        for (const auto& x : ctx.input.at("lambda")) lambda.push_back(x.get<long>());
        try {
            mod = weyl_module_modp(p, lambda, ctx.input.value("bound", 64L));
        } catch (const Error& e) {
            if (e.code() != "truncation-exceeded") throw;
            return Json{{"outcome", "truncation-exceeded"}};
        }
    }
    auto rep = singular_vectors(mod);
    Json singular = Json::array();
    for (const auto& line : rep.lines) {
        if (mod.highest_int.empty()) {
            singular.push_back(line.weight_offset);
        } else {
            std::vector<long> w = mod.highest_int;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += line.weight_offset[i];
            singular.push_back(w);
        }
    }
    return Json{{"outcome", "ok"},
                {"dim", mod.dim},
                {"irreducible", is_irreducible(mod)},
                {"singular_weights", singular},
                {"module", gln_module_to_json(mod)}};
}

Json cmd_linkage(const Ctx& ctx) {
    std::vector<long> lambda, mu;
    for (const auto& x : ctx.input.at("lambda")) lambda.push_back(x.get<long>());
    for (const auto& x : ctx.input.at("mu")) mu.push_back(x.get<long>());
    return Json{{"linked", linkage_condition(lambda, mu, ctx.input.at("p").get<long>())}};
}

Json cmd_bound_scan(const Ctx& ctx) {
    std::vector<long> primes;
    for (const auto& x : ctx.input.at("primes")) primes.push_back(x.get<long>());
    auto report = bound_scan(ctx.input.at("n").get<int>(), ctx.input.at("max_gap").get<long>(), primes,
                             ctx.input.value("bound", 64L));
    Json out = scan_report_to_json(report);
    out["csv"] = scan_report_csv(report);
    return out;
}

Json cmd_yangian(const std::string& sub, const Ctx& ctx) {
    return with_field(ctx.field, [&](auto field) -> Json {
        using F = decltype(field);
        if (sub == "build") {
            auto m = build_from_spec(field, ctx.input, ctx.trunc);
            return Json{{"module", yangian_to_json(m)}, {"rtt", verify_rtt(m)}};
        }
        if (sub == "renumerate") {
            std::vector<std::pair<typename F::Elem, typename F::Elem>> pairs;
            for (const auto& pr : ctx.input.at("pairs"))
                pairs.push_back({elem_from_json(field, pr.at(0)), elem_from_json(field, pr.at(1))});
            auto r = renumeration_criterion(field, pairs);
            Json arr = Json::array();
            for (const auto& [a, b] : r.pairs)
                arr.push_back(Json::array({elem_to_json(field, a), elem_to_json(field, b)}));
            return Json{{"pairs", arr}, {"satisfied", r.satisfied}};
        }
        if (sub == "tensor") {
            auto a = yangian_from_json(field, ctx.input.at("a").contains("module") ? ctx.input.at("a").at("module")
                                                                                   : ctx.input.at("a"));
            auto b = yangian_from_json(field, ctx.input.at("b").contains("module") ? ctx.input.at("b").at("module")
                                                                                   : ctx.input.at("b"));
            return Json{{"module", yangian_to_json(tensor_module(a, b))}};
        }

        const Json& mj = ctx.input.contains("module") ? ctx.input.at("module") : ctx.input;
        auto m = yangian_from_json(field, mj);
        if (sub == "verify") return Json{{"rtt", verify_rtt(m)}};
        if (sub == "weight") {
            auto sw = singular_and_weight(m);
            Json out{{"singular_dim", sw.basis.rows()}};
            if (sw.weight) {
                Json arr = Json::array();
                for (const auto& s : *sw.weight) arr.push_back(series_to_json(field, s));
                out["weight"] = arr;
            } else {
                out["weight"] = nullptr;
            }
            return out;
        }
        if (sub == "irreducible") return Json{{"irreducible", is_irreducible(m)}};
        if (sub == "qdet") {
            auto qd = qdet_action(m, std::min(m.avail(), ctx.trunc));
            Json out{{"central", qd.central}};
            out["scalar"] = qd.scalar ? series_to_json(field, *qd.scalar) : Json(nullptr);
            return out;
        }
        if (sub == "drinfeld") {
            auto ps = drinfeld_of_module(m);
            Json arr = Json::array();
            for (const auto& p : ps) arr.push_back(factored_to_json(field, p));
            return Json{{"P", arr}};
        }
        fail("usage", "unknown yangian subcommand: " + sub);
    });
}

Json cmd_drinfeld(const std::string& sub, const Ctx& ctx) {
    if (sub == "restrict") {
        Bipartition bp = bipartition_from_json(ctx.input);
        return Json{{"weight", restrict_bipartition(bp, ctx.input.at("n").get<int>())}};
    }
    return with_field(ctx.field, [&](auto field) -> Json {
        using F = decltype(field);
        if (sub == "eval-weight") {
            auto data = evaluation_data_from_json(field, ctx.input);
            return Json{{"weight", highest_weight_to_json(field, weight_from_evaluation(field, data))}};
        }
        if (sub == "strings") {
            std::vector<typename F::Elem> roots;
            for (const auto& r : ctx.input.at("roots")) roots.push_back(elem_from_json(field, r));
            auto dec = string_decompose(field, roots);
            Json arr = Json::array();
            for (const auto& s : dec.strings)
                arr.push_back(Json{{"start", elem_to_json(field, s.start)}, {"length", s.length}});
            return Json{{"strings", arr}};
        }
        if (sub == "weight-to-poly") {
            auto hw = highest_weight_from_json(field, ctx.input.contains("weight") ? ctx.input.at("weight") : ctx.input);
            return Json{{"P", drinfeld_to_json(field, drinfeld_from_weight(hw))}};
        }
        if (sub == "poly-to-weight") {
            auto data = drinfeld_from_json(field, ctx.input.contains("P") ? ctx.input.at("P") : ctx.input);
            return Json{{"weight", highest_weight_to_json(field, weight_from_drinfeld(data))}};
        }
        if (sub == "normalize") {
            auto p = factored_from_json(field, ctx.input.contains("poly") ? ctx.input.at("poly") : ctx.input);
            return Json{{"poly", factored_to_json(field, qp_normalize(field, p))}};
        }
        if (sub == "label") {
            auto data = drinfeld_from_json(field, ctx.input.at("P"));
            auto f = ctx.input.contains("f") ? series_from_json(field, ctx.input.at("f"))
                                             : TruncSeries<F>::one(field, ctx.trunc);
            auto label = make_gl_t_label(data, f, ctx.input.value("nonstandard", false));
            return Json{{"P", drinfeld_to_json(field, label.P)},
                        {"f", series_to_json(field, label.f)},
                        {"nonstandard", label.nonstandard_action}};
        }
        fail("usage", "unknown drinfeld subcommand: " + sub);
    });
}

Json cmd_witness_primes(const Ctx& ctx) {
    std::vector<long> q;
    for (const auto& x : ctx.input.at("q")) q.push_back(x.get<long>());
    auto pairs = find_modular_specializations(q, ctx.input.at("bound").get<long>());
    Json arr = Json::array(), gaps = Json::array();
    for (const auto& w : pairs) {
        arr.push_back(Json::array({w.t, w.p}));
        gaps.push_back(w.gap);
    }
    return Json{{"pairs", arr}, {"gaps", gaps}};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    std::string command;
    std::string positional;
    Ctx ctx;
    if (const char* env = std::getenv("REPGLT_TRUNC")) ctx.trunc = std::max(1, std::atoi(env));

    auto emit_error = [&](const std::string& code, const std::string& message) {
        Json j{{"schema", "error/1"}, {"status", "error"}, {"code", code}, {"message", message}};
        out << (ctx.pretty ? j.dump(2) : j.dump()) << "\n";
    };

    try {
        std::vector<std::string> positionals;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto next_value = [&](const std::string& flag) {
                require(i + 1 < args.size(), "usage", flag + " needs a value");
                return args[++i];
            };
            if (a == "--field") ctx.field = FieldSpec::parse(next_value(a));
            else if (a.rfind("--field=", 0) == 0) ctx.field = FieldSpec::parse(a.substr(8));
            else if (a == "--trunc") ctx.trunc = std::max(1, std::atoi(next_value(a).c_str()));
            else if (a.rfind("--trunc=", 0) == 0) ctx.trunc = std::max(1, std::atoi(a.substr(8).c_str()));
            else if (a == "--seed") ctx.seed = std::strtoull(next_value(a).c_str(), nullptr, 10);
            else if (a.rfind("--seed=", 0) == 0) ctx.seed = std::strtoull(a.substr(7).c_str(), nullptr, 10);
            else if (a == "--pretty") ctx.pretty = true;
            else if (a == "--help" || a == "-h") { err << kUsage; return 0; }
            else if (!a.empty() && a[0] == '-' && a != "-") fail("usage", "unknown flag: " + a);
            else positionals.push_back(a);
        }
        if (positionals.empty()) {
            err << kUsage;
            return 2;
        }
        command = positionals[0];
        std::size_t consumed = 1;
        if (command == "yangian" || command == "drinfeld") {
            require(positionals.size() >= 2, "usage", command + " needs a subcommand");
            command += " " + positionals[1];
            consumed = 2;
        }
        if (positionals.size() > consumed) positional = positionals[consumed];
        require(positionals.size() <= consumed + 1, "usage", "too many positional arguments");

        static const std::vector<std::string> known = {
            "bracket",        "interpolate",      "series-shift",
            "matchings",      "compose",          "tensor",
            "dual",           "trace",            "gram-det",
            "dim-poly",       "weyl-dim",         "hom-dim",
            "gln-mod",        "weyl-mod",         "linkage",
            "bound-scan",     "witness-primes",   "selftest",
            "yangian build",  "yangian tensor",   "yangian verify",
            "yangian weight", "yangian irreducible", "yangian renumerate",
            "yangian qdet",   "yangian drinfeld",
            "drinfeld restrict", "drinfeld eval-weight", "drinfeld strings",
            "drinfeld weight-to-poly", "drinfeld poly-to-weight",
            "drinfeld normalize", "drinfeld label"};
        require(std::find(known.begin(), known.end(), command) != known.end(), "usage",
                "unknown command: " + command);

        // commands that need no input payload
        bool needs_input = command != "selftest";
        if (needs_input) {
            std::string text;
            if (positional.empty() || positional == "-") {
                std::ostringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            } else if (!positional.empty() && (positional[0] == '{' || positional[0] == '[')) {
                text = positional;
            } else {
                std::ifstream file(positional);
                require(file.good(), "usage", "cannot open input file: " + positional);
                std::ostringstream buf;
                buf << file.rdbuf();
                text = buf.str();
            }
            try {
                ctx.input = Json::parse(text);
            } catch (const Json::parse_error& e) {
                fail("json", std::string("malformed JSON input: ") + e.what());
            }
        } else if (!positional.empty() && positional != "-") {
            try {
                ctx.input = Json::parse(positional);
            } catch (const Json::parse_error& e) {
                fail("json", std::string("malformed JSON input: ") + e.what());
            }
        }

        Json payload;
        Json diagnostics = Json::array();
        if (command == "bracket") payload = cmd_bracket(ctx);
        else if (command == "interpolate") payload = cmd_interpolate(ctx);
        else if (command == "series-shift") payload = cmd_series_shift(ctx);
        else if (command == "matchings") payload = cmd_matchings(ctx);
        else if (command == "compose") payload = cmd_compose(ctx);
        else if (command == "tensor") payload = cmd_tensor(ctx);
        else if (command == "dual") payload = cmd_dual(ctx);
        else if (command == "trace") payload = cmd_trace(ctx);
        else if (command == "gram-det") payload = cmd_gram_det(ctx);
        else if (command == "dim-poly") payload = cmd_dim_poly(ctx);
        else if (command == "weyl-dim") payload = cmd_weyl_dim(ctx);
        else if (command == "hom-dim") payload = cmd_hom_dim(ctx);
        else if (command == "gln-mod") payload = cmd_gln_mod(ctx);
        else if (command == "weyl-mod") payload = cmd_weyl_mod(ctx);
        else if (command == "linkage") payload = cmd_linkage(ctx);
        else if (command == "bound-scan") payload = cmd_bound_scan(ctx);
        else if (command.rfind("yangian ", 0) == 0) payload = cmd_yangian(command.substr(8), ctx);
        else if (command.rfind("drinfeld ", 0) == 0) payload = cmd_drinfeld(command.substr(9), ctx);
        else if (command == "witness-primes") payload = cmd_witness_primes(ctx);
        else if (command == "selftest") {
            std::vector<int> only;
            if (ctx.input.is_object() && ctx.input.contains("criteria"))
                for (const auto& x : ctx.input.at("criteria")) only.push_back(x.get<int>());
            auto results = run_acceptance(ctx.seed, only);
            bool all = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                // wall time stays out of the JSON so output is byte-stable
                arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            }
            payload = Json{{"results", arr}, {"all_pass", all}};
            err << acceptance_table(results); // human table with timings, stderr only
            Json result{{"schema", command + "/1"},
                        {"status", "ok"},
                        {"payload", payload},
                        {"diagnostics", diagnostics}};
            out << (ctx.pretty ? result.dump(2) : result.dump()) << "\n";
            return all ? 0 : 1;
        } else {
            fail("usage", "unknown command: " + command);
        }

        std::string schema = command;
        for (auto& ch : schema)
            if (ch == ' ') ch = '-';
        Json result{{"schema", schema + "/1"},
                    {"status", "ok"},
                    {"payload", payload},
                    {"diagnostics", diagnostics}};
        out << (ctx.pretty ? result.dump(2) : result.dump()) << "\n";
        return 0;
    } catch (const Error& e) {
        emit_error(e.code(), e.what());
        return e.code() == "usage" ? 2 : 1;
    } catch (const Json::exception& e) {
        emit_error("json", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}

} // namespace repglt
