#include "repglt/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace repglt {

Matching::Matching(ObjectWord src, ObjectWord dst, std::vector<int> partner)
    : src_(src), dst_(dst), partner_(std::move(partner)) {
    const int n = total_points();
    require(static_cast<int>(partner_.size()) == n, "argument", "pairing size mismatch");
    for (int x = 0; x < n; ++x) {
        int y = partner_[static_cast<std::size_t>(x)];
        require(y >= 0 && y < n && y != x, "argument", "pairing is not a perfect matching");
        require(partner_[static_cast<std::size_t>(y)] == x, "argument", "pairing is not an involution");
        bool same_row = is_src_point(x) == is_src_point(y);
        bool same_color = is_bullet(x) == is_bullet(y);
        require(same_row != same_color, "argument",
                "color rule violated at point " + std::to_string(x));
    }
}

Matching Matching::identity(const ObjectWord& w) {
    const int n = w.total();
    std::vector<int> partner(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        partner[static_cast<std::size_t>(i)] = n + i;
        partner[static_cast<std::size_t>(n + i)] = i;
    }
    return Matching(w, w, std::move(partner));
}

bool operator<(const Matching& a, const Matching& b) {
    if (a.src_.bullets != b.src_.bullets) return a.src_.bullets < b.src_.bullets;
    if (a.src_.circles != b.src_.circles) return a.src_.circles < b.src_.circles;
    if (a.dst_.bullets != b.dst_.bullets) return a.dst_.bullets < b.dst_.bullets;
    if (a.dst_.circles != b.dst_.circles) return a.dst_.circles < b.dst_.circles;
    return a.partner_ < b.partner_;
}

std::string Matching::str() const {
    std::string s = src_.str() + "->" + dst_.str() + "{";
    bool first = true;
    for (int x = 0; x < total_points(); ++x) {
        int y = partner(x);
        if (y < x) continue;
        if (!first) s += ",";
        first = false;
        auto name = [&](int f) {
            return (is_src_point(f) ? "s" : "d") + std::to_string(is_src_point(f) ? f : f - src_.total());
        };
        s += name(x) + "-" + name(y);
    }
    return s + "}";
}

std::vector<Matching> enumerate_matchings(const ObjectWord& src, const ObjectWord& dst) {
    // Every legal edge joins the class {src bullets, dst circles} to the
    // class {src circles, dst bullets}, so matchings are bijections between
    // the two classes.
    const int S = src.total();
    std::vector<int> left, right;
    for (int i = 0; i < src.bullets; ++i) left.push_back(i);
    for (int j = dst.bullets; j < dst.total(); ++j) left.push_back(S + j);
    for (int i = src.bullets; i < src.total(); ++i) right.push_back(i);
    for (int j = 0; j < dst.bullets; ++j) right.push_back(S + j);

    std::vector<Matching> out;
    if (left.size() != right.size()) return out;

    std::vector<int> perm(right.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> partner(static_cast<std::size_t>(src.total() + dst.total()), -1);
        for (std::size_t k = 0; k < left.size(); ++k) {
            int a = left[k], b = right[static_cast<std::size_t>(perm[k])];
            partner[static_cast<std::size_t>(a)] = b;
            partner[static_cast<std::size_t>(b)] = a;
        }
        out.push_back(Matching(src, dst, std::move(partner)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ComposedMatching compose_matchings(const Matching& g, const Matching& f) {
    require(f.dst() == g.src(), "composition",
            "object mismatch: " + f.dst().str() + " vs " + g.src().str());
    const int a = f.src().total();
    const int b = f.dst().total();
    const int c = g.dst().total();
    // nodes: [0,a) source row, [a,a+b) middle row, [a+b,a+b+c) destination row
    auto f_edge = [&](int x) { return f.partner(x); };                  // x in [0, a+b)
    auto g_edge = [&](int x) { return a + g.partner(x - a); };          // x in [a, a+b+c)
    auto is_middle = [&](int x) { return x >= a && x < a + b; };

    std::vector<bool> seen(static_cast<std::size_t>(a + b + c), false);
    std::vector<int> partner(static_cast<std::size_t>(a + c), -1);
    auto out_id = [&](int x) { return x < a ? x : x - b; };

    for (int start = 0; start < a + b + c; ++start) {
        if (is_middle(start) || seen[static_cast<std::size_t>(start)]) continue;
        seen[static_cast<std::size_t>(start)] = true;
        bool use_f = start < a;
        int cur = start;
        while (true) {
            int nxt = use_f ? f_edge(cur) : g_edge(cur);
            seen[static_cast<std::size_t>(nxt)] = true;
            if (!is_middle(nxt)) {
                partner[static_cast<std::size_t>(out_id(start))] = out_id(nxt);
                partner[static_cast<std::size_t>(out_id(nxt))] = out_id(start);
                break;
            }
            cur = nxt;
            use_f = !use_f;
        }
    }

    int loops = 0;
    for (int start = a; start < a + b; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++loops;
        int cur = start;
        bool use_f = true;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = use_f ? f_edge(cur) : g_edge(cur);
            use_f = !use_f;
        }
    }

    return {Matching(f.src(), g.dst(), std::move(partner)), loops};
}

Matching tensor_matchings(const Matching& f, const Matching& g) {
    ObjectWord src = f.src().tensor(g.src());
    ObjectWord dst = f.dst().tensor(g.dst());
    const int S = src.total();

    // flat index maps into the concatenated rows
    auto map_f = [&](int x) {
        if (f.is_src_point(x))
            return x < f.src().bullets ? x : x + g.src().bullets;
        int j = x - f.src().total();
        return S + (j < f.dst().bullets ? j : j + g.dst().bullets);
    };
    auto map_g = [&](int x) {
        if (g.is_src_point(x))
            return x < g.src().bullets ? f.src().bullets + x : f.src().total() + x;
        int j = x - g.src().total();
        return S + (j < g.dst().bullets ? f.dst().bullets + j : f.dst().total() + j);
    };

    std::vector<int> partner(static_cast<std::size_t>(src.total() + dst.total()), -1);
    for (int x = 0; x < f.total_points(); ++x)
        partner[static_cast<std::size_t>(map_f(x))] = map_f(f.partner(x));
    for (int x = 0; x < g.total_points(); ++x)
        partner[static_cast<std::size_t>(map_g(x))] = map_g(g.partner(x));
    return Matching(src, dst, std::move(partner));
}

Matching dual_matching(const Matching& f) {
    ObjectWord src = f.dst().dual();
    ObjectWord dst = f.src().dual();
    const int S = src.total();
    // rotate 180 degrees: rows swap, each row reverses, colors swap
    auto map_pt = [&](int x) {
        if (f.is_src_point(x))
            return S + (f.src().total() - 1 - x);
        int j = x - f.src().total();
        return f.dst().total() - 1 - j;
    };
    std::vector<int> partner(static_cast<std::size_t>(src.total() + dst.total()), -1);
    for (int x = 0; x < f.total_points(); ++x)
        partner[static_cast<std::size_t>(map_pt(x))] = map_pt(f.partner(x));
    return Matching(src, dst, std::move(partner));
}

int closure_loops(const Matching& m) {
    require(m.src() == m.dst(), "argument", "closure of a non-endomorphism");
    const int n = m.src().total();
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    int loops = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++loops;
        int cur = start;
        bool use_matching = true;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = use_matching ? m.partner(cur) : (cur < n ? cur + n : cur - n);
            use_matching = !use_matching;
        }
    }
    return loops;
}

DiagramLC DiagramLC::basis(const Matching& m, UniPolyT coeff) {
    DiagramLC d(m.src(), m.dst());
    d.add_term(m, coeff);
    return d;
}

void DiagramLC::add_term(const Matching& m, const UniPolyT& coeff) {
    require(m.src() == src_ && m.dst() == dst_, "argument", "term signature mismatch");
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& term, const Matching& key) { return term.first < key; });
    if (it != terms_.end() && it->first == m) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {m, coeff});
    }
}

DiagramLC& DiagramLC::operator+=(const DiagramLC& o) {
    require(src_ == o.src_ && dst_ == o.dst_, "argument", "sum signature mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiagramLC& DiagramLC::operator-=(const DiagramLC& o) {
    require(src_ == o.src_ && dst_ == o.dst_, "argument", "sum signature mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiagramLC DiagramLC::scaled(const UniPolyT& s) const {
    DiagramLC r(src_, dst_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

DiagramLC compose(const DiagramLC& g, const DiagramLC& f) {
    require(f.dst() == g.src(), "composition",
            "object mismatch: " + f.dst().str() + " vs " + g.src().str());
    DiagramLC out(f.src(), g.dst());
    for (const auto& [mg, cg] : g.terms())
        for (const auto& [mf, cf] : f.terms()) {
            auto comp = compose_matchings(mg, mf);
            out.add_term(comp.matching, (cg * cf).shifted_up(comp.loops));
        }
    return out;
}

DiagramLC tensor(const DiagramLC& f, const DiagramLC& g) {
    DiagramLC out(f.src().tensor(g.src()), f.dst().tensor(g.dst()));
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms())
            out.add_term(tensor_matchings(mf, mg), cf * cg);
    return out;
}

DiagramLC dual(const DiagramLC& f) {
    DiagramLC out(f.dst().dual(), f.src().dual());
    for (const auto& [m, c] : f.terms()) out.add_term(dual_matching(m), c);
    return out;
}

UniPolyT closure_trace(const DiagramLC& f) {
    require(f.src() == f.dst(), "argument", "closure trace of a non-endomorphism");
    UniPolyT acc;
    for (const auto& [m, c] : f.terms())
        acc += c.shifted_up(closure_loops(m));
    return acc;
}

} // namespace repglt
