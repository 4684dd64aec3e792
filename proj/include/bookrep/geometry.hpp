#pragma once
// Vertices-on-a-circle geometry of K_n: edges as chords, crossing predicate,
// cycle and triangle-pair enumeration. Vertices are labeled 1..n clockwise.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bookrep {

struct Edge {
    uint8_t a = 0, b = 0;  // 1 <= a < b <= n

    Edge() = default;
    Edge(int x, int y) {
        if (x > y) std::swap(x, y);
        a = static_cast<uint8_t>(x);
        b = static_cast<uint8_t>(y);
    }
    friend bool operator==(Edge l, Edge r) { return l.a == r.a && l.b == r.b; }
    friend bool operator!=(Edge l, Edge r) { return !(l == r); }
    friend bool operator<(Edge l, Edge r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
};

inline void check_edge(Edge e, int n) {
    if (e.a < 1 || e.b > n || e.a >= e.b)
        throw std::invalid_argument("edge out of range: " + std::to_string(e.a) +
                                    std::to_string(e.b));
}

inline int edge_length(Edge e, int n) {
    check_edge(e, n);
    int d = e.b - e.a;
    return std::min(d, n - d);
}

inline bool is_interior(Edge e, int n) { return edge_length(e, n) >= 2; }

// Chords cross iff exactly one endpoint of e2 lies strictly between the
// endpoints of e1 in cyclic order. Edges sharing a vertex never cross.
inline bool chords_cross(Edge e1, Edge e2, int n) {
    check_edge(e1, n);
    check_edge(e2, n);
    if (e1.a == e2.a || e1.a == e2.b || e1.b == e2.a || e1.b == e2.b)
        return false;
    bool in1 = e1.a < e2.a && e2.a < e1.b;
    bool in2 = e1.a < e2.b && e2.b < e1.b;
    return in1 != in2;
}

inline std::vector<Edge> interior_edges(int n) {
    std::vector<Edge> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (is_interior(Edge(a, b), n)) out.push_back(Edge(a, b));
    return out;
}

inline std::string edge_str(Edge e) {
    return std::to_string(int(e.a)) + std::to_string(int(e.b));
}

// ---- K6 fixed tables -------------------------------------------------------
// Interior edges of K6 in lexicographic order; slot indices are used as the
// packed representation everywhere downstream.

inline constexpr int K6 = 6;
inline constexpr int N_INTERIOR = 9;

inline const std::array<Edge, N_INTERIOR>& k6_edges() {
    static const std::array<Edge, N_INTERIOR> tbl = {
        Edge(1, 3), Edge(1, 4), Edge(1, 5), Edge(2, 4), Edge(2, 5),
        Edge(2, 6), Edge(3, 5), Edge(3, 6), Edge(4, 6)};
    return tbl;
}

inline int k6_edge_slot(Edge e) {
    const auto& tbl = k6_edges();
    for (int i = 0; i < N_INTERIOR; ++i)
        if (tbl[i] == e) return i;
    return -1;
}

// cross_mask()[i] has bit j set iff interior edges i and j cross.
inline const std::array<uint16_t, N_INTERIOR>& cross_mask() {
    static const std::array<uint16_t, N_INTERIOR> tbl = [] {
        std::array<uint16_t, N_INTERIOR> m{};
        const auto& e = k6_edges();
        for (int i = 0; i < N_INTERIOR; ++i)
            for (int j = 0; j < N_INTERIOR; ++j)
                if (i != j && chords_cross(e[i], e[j], K6)) m[i] |= uint16_t(1) << j;
        return m;
    }();
    return tbl;
}

// ---- cycles ----------------------------------------------------------------

struct Cycle {
    std::vector<uint8_t> v;  // canonical: v[0] minimal, v[1] < v.back()

    Cycle() = default;
    explicit Cycle(std::vector<uint8_t> verts) : v(std::move(verts)) { canonicalize(); }
    Cycle(std::initializer_list<int> verts) {
        for (int x : verts) v.push_back(static_cast<uint8_t>(x));
        canonicalize();
    }

    void canonicalize() {
        if (v.size() < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
        auto it = std::min_element(v.begin(), v.end());
        std::rotate(v.begin(), it, v.end());
        if (v[1] > v.back()) std::reverse(v.begin() + 1, v.end());
    }

    size_t size() const { return v.size(); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (size_t i = 0; i < v.size(); ++i)
            out.push_back(Edge(v[i], v[(i + 1) % v.size()]));
        return out;
    }

    friend bool operator==(const Cycle& l, const Cycle& r) { return l.v == r.v; }
    friend bool operator<(const Cycle& l, const Cycle& r) { return l.v < r.v; }
};

inline std::string cycle_str(const Cycle& c) {
    std::string s = "(";
    for (uint8_t x : c.v) s += std::to_string(int(x));
    return s + ")";
}

inline Cycle parse_cycle(std::string_view text) {
    std::vector<uint8_t> verts;
    for (char ch : text) {
        if (ch == '(' || ch == ')' || ch == ' ') continue;
        if (ch < '1' || ch > '9') throw std::invalid_argument("bad cycle char");
        verts.push_back(static_cast<uint8_t>(ch - '0'));
    }
    return Cycle(std::move(verts));
}

// All k-cycles of K_n, canonical, sorted. Count = C(n,k) * (k-1)! / 2.
inline std::vector<Cycle> enumerate_cycles(int n, int k) {
    if (k < 3 || k > n) throw std::invalid_argument("cycle length out of range");
    std::vector<Cycle> out;
    std::vector<uint8_t> verts(static_cast<size_t>(k));
    // choose the vertex set, then all canonical arrangements
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i + 1;
    while (true) {
        std::vector<uint8_t> rest(pick.begin() + 1, pick.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (rest.front() > rest.back()) continue;  // canonical direction
            verts[0] = static_cast<uint8_t>(pick[0]);
            std::copy(rest.begin(), rest.end(), verts.begin() + 1);
            out.push_back(Cycle(verts));
        } while (std::next_permutation(rest.begin(), rest.end()));
        // next k-combination of 1..n
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- disjoint triangle pairs (n = 6) ---------------------------------------

struct TrianglePair {
    Cycle first, second;  // canonical order: triangle containing vertex 1 first

    TrianglePair() = default;
    TrianglePair(Cycle f, Cycle s) : first(std::move(f)), second(std::move(s)) {
        if (second.v[0] < first.v[0]) std::swap(first, second);
    }
    friend bool operator==(const TrianglePair& l, const TrianglePair& r) {
        return l.first == r.first && l.second == r.second;
    }
    friend bool operator<(const TrianglePair& l, const TrianglePair& r) {
        return l.first != r.first ? l.first < r.first : l.second < r.second;
    }
};

inline std::string pair_str(const TrianglePair& p) {
    return cycle_str(p.first) + cycle_str(p.second);
}

inline std::vector<TrianglePair> enumerate_triangle_pairs(int n = K6) {
    if (n != K6) throw std::invalid_argument("triangle pairs need n = 6");
    std::vector<TrianglePair> out;
    // vertex 1 is always in the first triangle; choose its two partners
    for (int x = 2; x <= 6; ++x)
        for (int y = x + 1; y <= 6; ++y) {
            std::vector<uint8_t> rest;
            for (int z = 2; z <= 6; ++z)
                if (z != x && z != y) rest.push_back(static_cast<uint8_t>(z));
            out.push_back(TrianglePair(Cycle({1, x, y}),
                                       Cycle(std::vector<uint8_t>(rest))));
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bookrep
