#pragma once
// Exact planar link diagrams for cycles inside a book representation.
//
// Vertex k sits at P_k = (k, -k^2): convex position on a parabola, labels
// running clockwise, all coordinates integral. Interior edges are straight
// chords; crossings are exactly the interleaving chord pairs, ordered along
// each strand by exact rational intersection parameters. Exterior edges run
// along the boundary and never cross anything. Over-strand = lower sheet
// index (sheet 1 is the top page); sign follows the right-hand rule. The
// whole construction is integer arithmetic, no floats.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "book.hpp"
#include "geometry.hpp"

namespace bookrep {

struct Crossing {
    Edge over_edge, under_edge;
    int8_t sign = 0;  // +1: under direction = over direction turned CCW
    uint8_t over_comp = 0, under_comp = 0;
    uint16_t over_pos = 0, under_pos = 0;  // index into the component's visits
    bool inter() const { return over_comp != under_comp; }
};

struct Visit {
    uint16_t crossing = 0;
    bool under = false;
};

struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<std::vector<Visit>> visits;  // per component, cyclic order
    int writhe = 0;

    int ncomp() const { return static_cast<int>(visits.size()); }
    int ncross() const { return static_cast<int>(crossings.size()); }
};

// At most C(6,2)-6 = 9 interleaving pairs on a 6-cycle; 3x3 = 9 across two
// triangles. Sizes the bracket state sum.
constexpr int max_crossings_bound(int n = K6) { return n == K6 ? 9 : -1; }

namespace detail {

struct Pt {
    int64_t x, y;
};
inline Pt vertex_point(int k) { return {k, -static_cast<int64_t>(k) * k}; }
inline int64_t cross_z(Pt u, Pt v) { return u.x * v.y - u.y * v.x; }

inline int sheet_of(const BookRep& rep, Edge e) {
    for (size_t s = 0; s < rep.sheets.size(); ++s)
        for (Edge f : rep.sheets[s])
            if (f == e) return static_cast<int>(s);
    throw std::invalid_argument("edge " + edge_str(e) + " not in any sheet");
}

}  // namespace detail

// Core builder: one diagram from one or two vertex-disjoint cycles, each
// traversed in the vertex order given.
inline Diagram build_diagram(const BookRep& rep, const std::vector<Cycle>& comps) {
    using detail::Pt;
    struct Arc {
        Pt p1, p2;       // directed segment
        Edge e;
        int sheet = -1;  // -1: exterior, skipped
    };
    std::vector<std::vector<Arc>> arcs(comps.size());
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& v = comps[ci].v;
        for (size_t j = 0; j < v.size(); ++j) {
            Arc a;
            a.p1 = detail::vertex_point(v[j]);
            a.p2 = detail::vertex_point(v[(j + 1) % v.size()]);
            a.e = Edge(v[j], v[(j + 1) % v.size()]);
            a.sheet = is_interior(a.e, rep.n) ? detail::sheet_of(rep, a.e) : -1;
            arcs[ci].push_back(a);
        }
    }

    Diagram d;
    d.visits.resize(comps.size());
    // pending crossings per arc: exact parameter t = num/den (den > 0)
    struct Hit {
        int64_t num, den;
        uint16_t crossing;
        bool under;
    };
    std::vector<std::vector<std::vector<Hit>>> hits(comps.size());
    for (size_t ci = 0; ci < comps.size(); ++ci) hits[ci].resize(arcs[ci].size());

    auto param = [](const Arc& on, const Arc& other) -> std::pair<int64_t, int64_t> {
        Pt dp{on.p2.x - on.p1.x, on.p2.y - on.p1.y};
        Pt dq{other.p2.x - other.p1.x, other.p2.y - other.p1.y};
        Pt w{other.p1.x - on.p1.x, other.p1.y - on.p1.y};
        int64_t den = detail::cross_z(dp, dq);
        int64_t num = detail::cross_z(w, dq);
        if (den < 0) { den = -den; num = -num; }
        return {num, den};
    };

    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (size_t i = 0; i < arcs[ci].size(); ++i)
            for (size_t cj = ci; cj < comps.size(); ++cj)
                for (size_t j = (cj == ci ? i + 1 : 0); j < arcs[cj].size(); ++j) {
                    const Arc& a = arcs[ci][i];
                    const Arc& b = arcs[cj][j];
                    if (a.sheet < 0 || b.sheet < 0) continue;
                    if (!chords_cross(a.e, b.e, rep.n)) continue;
                    // crossing chords always sit in different sheets of a
                    // valid rep; lower index is on top
                    bool a_over = a.sheet < b.sheet;
                    const Arc& ov = a_over ? a : b;
                    const Arc& un = a_over ? b : a;
                    Crossing c;
                    c.over_edge = ov.e;
                    c.under_edge = un.e;
                    c.over_comp = static_cast<uint8_t>(a_over ? ci : cj);
                    c.under_comp = static_cast<uint8_t>(a_over ? cj : ci);
                    int64_t sz = detail::cross_z({ov.p2.x - ov.p1.x, ov.p2.y - ov.p1.y},
                                                 {un.p2.x - un.p1.x, un.p2.y - un.p1.y});
                    c.sign = sz > 0 ? 1 : -1;
                    uint16_t idx = static_cast<uint16_t>(d.crossings.size());
                    d.crossings.push_back(c);
                    d.writhe += c.sign;
                    auto [na, da] = param(a, b);
                    auto [nb, db] = param(b, a);
                    hits[ci][i].push_back({na, da, idx, !a_over});
                    hits[cj][j].push_back({nb, db, idx, a_over});
                }

    for (size_t ci = 0; ci < comps.size(); ++ci) {
        for (size_t i = 0; i < arcs[ci].size(); ++i) {
            auto& h = hits[ci][i];
            std::sort(h.begin(), h.end(), [](const Hit& l, const Hit& r) {
                return l.num * r.den < r.num * l.den;
            });
            for (size_t k = 0; k + 1 < h.size(); ++k)
                if (h[k].num * h[k + 1].den == h[k + 1].num * h[k].den)
                    throw std::logic_error("concurrent crossings on one chord");
            for (const Hit& x : h) {
                auto& c = d.crossings[x.crossing];
                uint16_t pos = static_cast<uint16_t>(d.visits[ci].size());
                if (x.under) { c.under_pos = pos; } else { c.over_pos = pos; }
                d.visits[ci].push_back({x.crossing, x.under});
            }
        }
    }
    return d;
}

inline Diagram build_knot_diagram(const BookRep& rep, const Cycle& c) {
    return build_diagram(rep, {c});
}

// Components oriented by their canonical cycle direction.
inline Diagram build_link_diagram(const BookRep& rep, const TrianglePair& p) {
    return build_diagram(rep, {p.first, p.second});
}

// Debug dump: one crossing per line, then the component traversals.
inline std::string dump(const Diagram& d) {
    std::string out;
    for (const auto& c : d.crossings)
        out += "over=" + edge_str(c.over_edge) + " under=" + edge_str(c.under_edge) +
               " sign=" + (c.sign > 0 ? "+1" : "-1") + "\n";
    for (int ci = 0; ci < d.ncomp(); ++ci) {
        out += "component " + std::to_string(ci + 1) + ":";
        for (const Visit& v : d.visits[static_cast<size_t>(ci)])
            out += " " + std::to_string(v.crossing) + (v.under ? "u" : "o");
        out += "\n";
    }
    out += "writhe=" + std::to_string(d.writhe) + "\n";
    return out;
}

}  // namespace bookrep
