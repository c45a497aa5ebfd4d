#pragma once

#include <string>
#include <vector>

#include "repglt/error.hpp"
#include "repglt/polynomial.hpp"

namespace repglt {

// Object of the skeletal diagram category: a row of `bullets` solid points
// followed by `circles` hollow ones.
struct ObjectWord {
    int bullets = 0;
    int circles = 0;

    int total() const { return bullets + circles; }
    bool is_bullet(int index) const { return index < bullets; }
    ObjectWord dual() const { return {circles, bullets}; }
    ObjectWord tensor(const ObjectWord& o) const { return {bullets + o.bullets, circles + o.circles}; }

    friend bool operator==(const ObjectWord& a, const ObjectWord& b) {
        return a.bullets == b.bullets && a.circles == b.circles;
    }
    friend bool operator!=(const ObjectWord& a, const ObjectWord& b) { return !(a == b); }

    std::string str() const { return "(" + std::to_string(bullets) + "," + std::to_string(circles) + ")"; }
};

// Basis morphism src -> dst: a perfect pairing of all points of both rows.
// Cross-row pairs join equal colors, same-row pairs join opposite colors.
// Points are addressed flat: 0..src.total()-1 on the source row, then the
// destination row.
class Matching {
public:
    Matching(ObjectWord src, ObjectWord dst, std::vector<int> partner);

    static Matching identity(const ObjectWord& w);

    const ObjectWord& src() const { return src_; }
    const ObjectWord& dst() const { return dst_; }
    int src_points() const { return src_.total(); }
    int total_points() const { return src_.total() + dst_.total(); }
    int partner(int flat) const { return partner_[static_cast<std::size_t>(flat)]; }
    const std::vector<int>& partners() const { return partner_; }

    bool is_src_point(int flat) const { return flat < src_.total(); }
    bool is_bullet(int flat) const {
        return is_src_point(flat) ? src_.is_bullet(flat) : dst_.is_bullet(flat - src_.total());
    }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.src_ == b.src_ && a.dst_ == b.dst_ && a.partner_ == b.partner_;
    }
    friend bool operator<(const Matching& a, const Matching& b); // canonical order

    std::string str() const;

private:
    ObjectWord src_, dst_;
    std::vector<int> partner_;
};

// All matchings src -> dst in canonical order; empty iff the color balance
// src.bullets + dst.circles != dst.bullets + src.circles fails, otherwise of
// size (src.bullets + dst.circles)!.
std::vector<Matching> enumerate_matchings(const ObjectWord& src, const ObjectWord& dst);

// Stack g on top of f, trace chains through the middle row; loops is the
// number of closed cycles deleted (each contributes a factor t).
struct ComposedMatching {
    Matching matching;
    int loops;
};
ComposedMatching compose_matchings(const Matching& g, const Matching& f);

Matching tensor_matchings(const Matching& f, const Matching& g);
Matching dual_matching(const Matching& f);

// Loop count after closing every source point to the same-position
// destination point by an outer arc (src == dst required).
int closure_loops(const Matching& m);

// Morphism of the diagram category: finite Q[t]-linear combination of
// matchings with a common (src, dst), zero coefficients pruned, terms kept
// in canonical matching order.
class DiagramLC {
public:
    DiagramLC(ObjectWord src, ObjectWord dst) : src_(src), dst_(dst) {}

    static DiagramLC basis(const Matching& m, UniPolyT coeff = UniPolyT(1));
    static DiagramLC identity(const ObjectWord& w) { return basis(Matching::identity(w)); }

    const ObjectWord& src() const { return src_; }
    const ObjectWord& dst() const { return dst_; }
    const std::vector<std::pair<Matching, UniPolyT>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Matching& m, const UniPolyT& coeff);

    DiagramLC& operator+=(const DiagramLC& o);
    DiagramLC& operator-=(const DiagramLC& o);
    friend DiagramLC operator+(DiagramLC a, const DiagramLC& b) { return a += b; }
    friend DiagramLC operator-(DiagramLC a, const DiagramLC& b) { return a -= b; }
    DiagramLC scaled(const UniPolyT& s) const;

    friend bool operator==(const DiagramLC& a, const DiagramLC& b) {
        return a.src_ == b.src_ && a.dst_ == b.dst_ && a.terms_ == b.terms_;
    }

private:
    ObjectWord src_, dst_;
    std::vector<std::pair<Matching, UniPolyT>> terms_;
};

DiagramLC compose(const DiagramLC& g, const DiagramLC& f);
DiagramLC tensor(const DiagramLC& f, const DiagramLC& g);
DiagramLC dual(const DiagramLC& f);
UniPolyT closure_trace(const DiagramLC& f);

} // namespace repglt
