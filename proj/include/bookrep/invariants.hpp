#pragma once
// Exact diagram invariants: Kauffman bracket (state sum), the writhe-
// normalized f-polynomial, linking number, knot determinant, and the
// closed-world classifiers. Every cycle in a book representation of K6 is an
// arc presentation, so knots are limited to {unknot, trefoils, figure-eight}
// and triangle-pair links to {unlink, Hopf, Solomon}; anything else raises
// closed_world_error (a bug, never expected on valid input).
//
// Reference values are generated at startup from standard braid closures,
// never typed in as literals: unknot, sigma_1^{+-3} (trefoils),
// (sigma_1 sigma_2^-1)^2 (figure-eight), sigma_1^{+-2} (Hopf),
// sigma_1^{+-4} (Solomon). For two-component references the one-component-
// reversed orientations are included alongside, so classify_link accepts any
// component orientation.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace bookrep {

struct closed_world_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class KnotType { Unknot, TrefoilLeft, TrefoilRight, FigureEight };
enum class LinkType { Unlink, Hopf, Solomon };

inline const char* knot_name(KnotType t) {
    switch (t) {
        case KnotType::Unknot: return "unknot";
        case KnotType::TrefoilLeft: return "trefoil_L";
        case KnotType::TrefoilRight: return "trefoil_R";
        case KnotType::FigureEight: return "fig8";
    }
    return "?";
}

inline const char* link_name(LinkType t) {
    switch (t) {
        case LinkType::Unlink: return "unlink";
        case LinkType::Hopf: return "hopf";
        case LinkType::Solomon: return "solomon";
    }
    return "?";
}

inline int linking_number(const Diagram& d) {
    if (d.ncomp() != 2)
        throw std::invalid_argument("linking number needs exactly two components");
    int sum = 0;
    for (const auto& c : d.crossings)
        if (c.inter()) sum += c.sign;
    // inter-component crossings pair up; the half-sum is an integer
    if (sum % 2 != 0) throw std::logic_error("odd inter-crossing sign sum");
    return sum / 2;
}

namespace detail {

// ports of crossing k: 4k+0 over-in, 4k+1 over-out, 4k+2 under-in, 4k+3 under-out
inline std::vector<int> strand_mates(const Diagram& d, int* free_loops) {
    std::vector<int> mate(static_cast<size_t>(4 * d.ncross()), -1);
    *free_loops = 0;
    for (const auto& comp : d.visits) {
        if (comp.empty()) {
            ++*free_loops;
            continue;
        }
        for (size_t i = 0; i < comp.size(); ++i) {
            const Visit& v = comp[i];
            const Visit& w = comp[(i + 1) % comp.size()];
            int out = 4 * v.crossing + (v.under ? 3 : 1);
            int in = 4 * w.crossing + (w.under ? 2 : 0);
            mate[static_cast<size_t>(out)] = in;
            mate[static_cast<size_t>(in)] = out;
        }
    }
    return mate;
}

inline const LaurentPoly& delta_power(int k) {
    static std::vector<LaurentPoly> pow = [] {
        std::vector<LaurentPoly> p;
        p.push_back(LaurentPoly::mono(1, 0));
        return p;
    }();
    static const LaurentPoly delta =
        LaurentPoly::mono(-1, 2) + LaurentPoly::mono(-1, -2);
    while (static_cast<int>(pow.size()) <= k) pow.push_back(pow.back() * delta);
    return pow[static_cast<size_t>(k)];
}

}  // namespace detail

// State sum over all 2^c smoothings: sum A^(a-b) * delta^(loops-1).
inline LaurentPoly kauffman_bracket(const Diagram& d) {
    const int c = d.ncross();
    int free_loops = 0;
    std::vector<int> mate = detail::strand_mates(d, &free_loops);
    // A-smoothing joins (in,out) ports as (0,3),(1,2) at positive crossings
    // and (0,2),(1,3) at negative ones; B is the complement
    std::vector<int> smooth(static_cast<size_t>(4 * c));
    LaurentPoly total;
    std::vector<char> seen(static_cast<size_t>(4 * c));
    for (uint32_t st = 0; st < (1u << c); ++st) {
        int b = 0;
        for (int k = 0; k < c; ++k) {
            bool a_sm = !(st >> k & 1);
            b += !a_sm;
            bool diag = (d.crossings[static_cast<size_t>(k)].sign > 0) == a_sm;
            int* s = &smooth[static_cast<size_t>(4 * k)];
            if (diag) { s[0] = 4 * k + 3; s[3] = 4 * k + 0; s[1] = 4 * k + 2; s[2] = 4 * k + 1; }
            else      { s[0] = 4 * k + 2; s[2] = 4 * k + 0; s[1] = 4 * k + 3; s[3] = 4 * k + 1; }
        }
        int loops = free_loops;
        std::fill(seen.begin(), seen.end(), 0);
        for (int p = 0; p < 4 * c; ++p) {
            if (seen[static_cast<size_t>(p)]) continue;
            ++loops;
            int q = p;
            do {
                seen[static_cast<size_t>(q)] = 1;
                q = smooth[static_cast<size_t>(q)];
                seen[static_cast<size_t>(q)] = 1;
                q = mate[static_cast<size_t>(q)];
            } while (q != p);
        }
        total += LaurentPoly::mono(1, (c - b) - b) * detail::delta_power(loops - 1);
    }
    return total;
}

// f = (-A^3)^(-writhe) * bracket: invariant under all Reidemeister moves.
inline LaurentPoly f_polynomial(const Diagram& d) {
    int w = d.writhe;
    return LaurentPoly::mono((w & 1) ? -1 : 1, -3 * w) * kauffman_bracket(d);
}

// Closure of a braid word on m strands (letter +-g crosses positions g,g+1;
// positive letters make positive crossings with the over-strand entering
// from position g+1). Used only to generate reference diagrams; the edge
// labels in the result are placeholders.
inline Diagram braid_closure(int m, const std::vector<int>& word) {
    std::vector<int> pos(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) pos[static_cast<size_t>(i)] = i;
    std::vector<std::vector<Visit>> strand(static_cast<size_t>(m));
    Diagram d;
    for (int g : word) {
        int k = std::abs(g) - 1;
        if (k < 0 || k + 1 >= m) throw std::invalid_argument("braid letter out of range");
        int left = pos[static_cast<size_t>(k)], right = pos[static_cast<size_t>(k + 1)];
        Crossing c;
        c.sign = g > 0 ? 1 : -1;
        c.over_edge = c.under_edge = Edge(1, 3);  // placeholder labels
        int over = g > 0 ? right : left;
        int under = g > 0 ? left : right;
        uint16_t idx = static_cast<uint16_t>(d.crossings.size());
        strand[static_cast<size_t>(over)].push_back({idx, false});
        strand[static_cast<size_t>(under)].push_back({idx, true});
        d.crossings.push_back(c);
        d.writhe += c.sign;
        std::swap(pos[static_cast<size_t>(k)], pos[static_cast<size_t>(k + 1)]);
    }
    std::vector<int> endpos(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) endpos[static_cast<size_t>(pos[static_cast<size_t>(i)])] = i;
    std::vector<int> comp_of(static_cast<size_t>(m), -1);
    for (int s0 = 0; s0 < m; ++s0) {
        if (comp_of[static_cast<size_t>(s0)] >= 0) continue;
        int ci = static_cast<int>(d.visits.size());
        d.visits.emplace_back();
        for (int s = s0; comp_of[static_cast<size_t>(s)] < 0; s = endpos[static_cast<size_t>(s)]) {
            comp_of[static_cast<size_t>(s)] = ci;
            for (Visit v : strand[static_cast<size_t>(s)])
                d.visits.back().push_back(v);
        }
    }
    for (size_t ci = 0; ci < d.visits.size(); ++ci)
        for (size_t i = 0; i < d.visits[ci].size(); ++i) {
            const Visit& v = d.visits[ci][i];
            auto& c = d.crossings[v.crossing];
            if (v.under) { c.under_comp = static_cast<uint8_t>(ci); c.under_pos = static_cast<uint16_t>(i); }
            else         { c.over_comp = static_cast<uint8_t>(ci); c.over_pos = static_cast<uint16_t>(i); }
        }
    return d;
}

// Reverse the traversal of one component: its visit order flips, and every
// crossing with exactly one pass on that component changes sign.
inline Diagram reverse_component(const Diagram& d, int ci) {
    Diagram out = d;
    auto& comp = out.visits[static_cast<size_t>(ci)];
    std::reverse(comp.begin(), comp.end());
    out.writhe = 0;
    for (auto& c : out.crossings) {
        bool over_here = c.over_comp == ci, under_here = c.under_comp == ci;
        if (over_here != under_here) c.sign = -c.sign;
        out.writhe += c.sign;
    }
    for (size_t k = 0; k < out.visits.size(); ++k)
        for (size_t i = 0; i < out.visits[k].size(); ++i) {
            const Visit& v = out.visits[k][i];
            auto& c = out.crossings[v.crossing];
            if (v.under) c.under_pos = static_cast<uint16_t>(i);
            else c.over_pos = static_cast<uint16_t>(i);
        }
    return out;
}

struct References {
    LaurentPoly unknot, tref_l, tref_r, fig8;
    LaurentPoly unlink;                            // f of the 2-unlink = delta
    std::vector<LaurentPoly> hopf_pos, hopf_neg;   // admissible f by sign of lk
    std::vector<LaurentPoly> solomon_pos, solomon_neg;
};

inline const References& references() {
    static const References refs = [] {
        References r;
        r.unknot = f_polynomial(braid_closure(1, {}));
        r.tref_r = f_polynomial(braid_closure(2, {1, 1, 1}));
        r.tref_l = f_polynomial(braid_closure(2, {-1, -1, -1}));
        r.fig8 = f_polynomial(braid_closure(3, {1, -2, 1, -2}));
        r.unlink = f_polynomial(braid_closure(2, {}));
        auto add = [](std::vector<LaurentPoly>& v, const LaurentPoly& p) {
            for (const auto& q : v)
                if (q == p) return;
            v.push_back(p);
        };
        Diagram hp = braid_closure(2, {1, 1});
        Diagram hn = braid_closure(2, {-1, -1});
        Diagram sp = braid_closure(2, {1, 1, 1, 1});
        Diagram sn = braid_closure(2, {-1, -1, -1, -1});
        add(r.hopf_pos, f_polynomial(hp));
        add(r.hopf_pos, f_polynomial(reverse_component(hn, 0)));
        add(r.hopf_neg, f_polynomial(hn));
        add(r.hopf_neg, f_polynomial(reverse_component(hp, 0)));
        add(r.solomon_pos, f_polynomial(sp));
        add(r.solomon_pos, f_polynomial(reverse_component(sn, 0)));
        add(r.solomon_neg, f_polynomial(sn));
        add(r.solomon_neg, f_polynomial(reverse_component(sp, 0)));
        return r;
    }();
    return refs;
}

inline KnotType classify_knot(const Diagram& d) {
    if (d.ncomp() != 1)
        throw std::invalid_argument("classify_knot needs one component");
    LaurentPoly f = f_polynomial(d);
    const References& r = references();
    if (f == r.unknot) return KnotType::Unknot;
    if (f == r.tref_l) return KnotType::TrefoilLeft;
    if (f == r.tref_r) return KnotType::TrefoilRight;
    if (f == r.fig8) return KnotType::FigureEight;
    throw closed_world_error("cycle is none of the expected knots: f = " + f.str());
}

inline LinkType classify_link(const Diagram& d) {
    int lk = linking_number(d);
    int alk = std::abs(lk);
    if (alk > 2)
        throw closed_world_error("linking number " + std::to_string(lk) +
                                 " outside the closed world");
    LaurentPoly f = f_polynomial(d);
    const References& r = references();
    const std::vector<LaurentPoly>* accept = nullptr;
    std::vector<LaurentPoly> un{r.unlink};
    LinkType type;
    if (alk == 0) { accept = &un; type = LinkType::Unlink; }
    else if (alk == 1) { accept = lk > 0 ? &r.hopf_pos : &r.hopf_neg; type = LinkType::Hopf; }
    else { accept = lk > 0 ? &r.solomon_pos : &r.solomon_neg; type = LinkType::Solomon; }
    for (const auto& p : *accept)
        if (f == p) return type;
    throw closed_world_error("pair with lk " + std::to_string(lk) +
                             " has unexpected f = " + f.str());
}

// |V(-1)|: 1 for the unknot, 3 for trefoils, 5 for the figure-eight. The f
// exponents of a knot are multiples of 4 (A^-4 = t), so evaluate termwise.
inline int64_t determinant(const Diagram& d) {
    if (d.ncomp() != 1)
        throw std::invalid_argument("determinant needs one component");
    LaurentPoly f = f_polynomial(d);
    int64_t sum = 0;
    for (auto [e, k] : f.c) {
        if (e % 4 != 0)
            throw closed_world_error("knot f has exponent " + std::to_string(e) +
                                     " not divisible by 4");
        sum += ((e / 4) & 1) ? -k : k;
    }
    return std::abs(sum);
}

}  // namespace bookrep
