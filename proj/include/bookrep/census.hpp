#pragma once
// Knot/link census of one representation: classify all 10 triangle pairs and
// all 197 cycles (lengths 3-4 as unknot sanity checks, 5-6 for real), plus
// the per-edge incidence profile used to separate representations whose raw
// counts agree. Everything is deterministic: output lists are sorted.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "invariants.hpp"

namespace bookrep {

inline constexpr int N_EDGES_K6 = 15;

// Fixed index for every edge of K6, interior and exterior alike. The profile
// must cover exterior edges too: a vertex exchange trades an interior edge
// for a relabeled exterior one, so only the full 15-edge profile transports
// cleanly along every move.
inline int k6_full_slot(Edge e) {
    return (e.a - 1) * (12 - e.a) / 2 + (e.b - e.a - 1);
}

struct Census {
    std::vector<TrianglePair> hopf, solomon;
    std::vector<Cycle> tref_l, tref_r, fig8;
    // per edge of K6: how many knotted cycles through it are
    // left trefoils / right trefoils / figure-eights
    std::array<std::array<int, 3>, N_EDGES_K6> edge_profile{};

    int links() const { return static_cast<int>(hopf.size() + solomon.size()); }
    int knots() const {
        return static_cast<int>(tref_l.size() + tref_r.size() + fig8.size());
    }
    friend bool operator==(const Census& l, const Census& r) {
        return l.hopf == r.hopf && l.solomon == r.solomon && l.tref_l == r.tref_l &&
               l.tref_r == r.tref_r && l.fig8 == r.fig8;
    }
    friend bool operator!=(const Census& l, const Census& r) { return !(l == r); }
};

inline Census census(const BookRep& rep) {
    if (auto bad = validate(rep))
        throw std::invalid_argument("census of invalid rep: " + *bad);
    Census out;
    for (const TrianglePair& p : enumerate_triangle_pairs(rep.n)) {
        switch (classify_link(build_link_diagram(rep, p))) {
            case LinkType::Hopf: out.hopf.push_back(p); break;
            case LinkType::Solomon: out.solomon.push_back(p); break;
            case LinkType::Unlink: break;
        }
    }
    for (int len = 3; len <= 4; ++len)
        for (const Cycle& c : enumerate_cycles(rep.n, len))
            if (classify_knot(build_knot_diagram(rep, c)) != KnotType::Unknot)
                throw closed_world_error("short cycle " + cycle_str(c) + " is knotted");
    for (int len = 5; len <= rep.n; ++len)
        for (const Cycle& c : enumerate_cycles(rep.n, len)) {
            int col = -1;
            switch (classify_knot(build_knot_diagram(rep, c))) {
                case KnotType::Unknot: break;
                case KnotType::TrefoilLeft: out.tref_l.push_back(c); col = 0; break;
                case KnotType::TrefoilRight: out.tref_r.push_back(c); col = 1; break;
                case KnotType::FigureEight: out.fig8.push_back(c); col = 2; break;
            }
            if (col >= 0)
                for (Edge e : c.edges())
                    ++out.edge_profile[static_cast<size_t>(k6_full_slot(e))]
                                      [static_cast<size_t>(col)];
        }
    std::sort(out.tref_l.begin(), out.tref_l.end());
    std::sort(out.tref_r.begin(), out.tref_r.end());
    std::sort(out.fig8.begin(), out.fig8.end());
    return out;
}

// Census of the mirror image: trefoil chiralities swap, everything else stays.
inline Census mirrored(const Census& c) {
    Census m = c;
    std::swap(m.tref_l, m.tref_r);
    for (auto& t : m.edge_profile) std::swap(t[0], t[1]);
    return m;
}

// Fingerprint invariant under every move: the five counts plus the sorted
// multiset of per-edge incidence triples. Rotations and reflections permute
// the 15 edges; a vertex exchange maps the knotted cycles through its
// transposition, which again only permutes the edges.
inline std::string census_signature(const Census& c) {
    auto prof = c.edge_profile;
    std::sort(prof.begin(), prof.end());
    std::string s = "h" + std::to_string(c.hopf.size()) +
                    " s" + std::to_string(c.solomon.size()) +
                    " l" + std::to_string(c.tref_l.size()) +
                    " r" + std::to_string(c.tref_r.size()) +
                    " f" + std::to_string(c.fig8.size()) + " |";
    for (const auto& t : prof)
        s += " (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + ")";
    return s;
}

}  // namespace bookrep
