#pragma once
// Equivalence engine: breadth-first orbit closure under the moves, canonical
// representatives, minimal sheet numbers, and the full 59-class partition.
//
// Everything runs on packed keys (see book.hpp). Successor generation stays
// inside normal forms: an edge move that empties its source sheet renumbers
// the sheets (move + delete), and insert+edge_move is fused into "split one
// edge out of a multi-edge sheet to a fresh sheet directly above or below"
// (other insertion points are reachable through shifts). Vertex exchanges use
// the default placement, which is always crossing-free: the entering edge
// (v-1,v+1) lands where (v,v+2) lived, and an edge of that sheet crossing it
// would have had to cross (v,v+2) already.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "book.hpp"
#include "moves.hpp"

namespace bookrep {

namespace engine {

struct VxTable {
    uint8_t a1 = 0, a2 = 0;             // slots of the departing/re-entering labels
    std::array<uint8_t, 9> tau{};       // slot relabeling for the other seven
    std::array<uint8_t, 3> at_v{}, at_w{};  // interior-edge slots incident to v / w
};

struct Tables {
    std::array<std::array<uint8_t, 9>, 2> rot{};   // vertex rotation +1 / -1
    std::array<std::array<uint8_t, 9>, 6> refl{};  // reflection axis r = 0..5
    std::array<VxTable, 6> vx{};                   // exchange (v, v+1), v = i+1
};

inline const Tables& tables() {
    static const Tables tbl = [] {
        Tables T;
        auto wrap = [](int x) { return (x - 1 + 6) % 6 + 1; };
        auto slot = [](int a, int b) {
            int s = k6_edge_slot(Edge(a, b));
            if (s < 0) throw std::logic_error("interior slot expected");
            return static_cast<uint8_t>(s);
        };
        for (int i = 0; i < N_INTERIOR; ++i) {
            Edge e = k6_edges()[static_cast<size_t>(i)];
            T.rot[0][static_cast<size_t>(i)] = slot(wrap(e.a + 1), wrap(e.b + 1));
            T.rot[1][static_cast<size_t>(i)] = slot(wrap(e.a - 1), wrap(e.b - 1));
        }
        for (int r = 0; r < 6; ++r) {
            auto refl = [&](int x) { return ((r - (x - 1)) % 6 + 6) % 6 + 1; };
            for (int i = 0; i < N_INTERIOR; ++i) {
                Edge e = k6_edges()[static_cast<size_t>(i)];
                T.refl[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                    slot(refl(e.a), refl(e.b));
            }
        }
        for (int v = 1; v <= 6; ++v) {
            VxTable& X = T.vx[static_cast<size_t>(v - 1)];
            int w = wrap(v + 1);
            X.a1 = slot(wrap(v - 1), w);
            X.a2 = slot(v, wrap(w + 1));
            int nv = 0, nw = 0;
            for (int i = 0; i < N_INTERIOR; ++i) {
                Edge e = k6_edges()[static_cast<size_t>(i)];
                if (e.a == v || e.b == v) X.at_v[static_cast<size_t>(nv++)] = static_cast<uint8_t>(i);
                if (e.a == w || e.b == w) X.at_w[static_cast<size_t>(nw++)] = static_cast<uint8_t>(i);
                if (i == X.a1 || i == X.a2) {
                    X.tau[static_cast<size_t>(i)] = static_cast<uint8_t>(i);  // unused
                    continue;
                }
                auto sub = [&](int x) { return x == v ? w : x == w ? v : x; };
                X.tau[static_cast<size_t>(i)] = slot(sub(e.a), sub(e.b));
            }
            if (nv != 3 || nw != 3) throw std::logic_error("vertex degree in slots");
        }
        return T;
    }();
    return tbl;
}

// Emit every one-move neighbor of a valid normal form (which has >= 3 sheets:
// the three long edges pairwise cross). Splits are suppressed at the cap.
template <class F>
inline void for_each_successor(PackedRep key, int cap, F&& f) {
    const Tables& T = tables();
    const auto& CM = cross_mask();
    const int s = packed_sheet_count(key);
    int sh[9];
    uint16_t occ[9] = {};
    for (int i = 0; i < N_INTERIOR; ++i) {
        sh[i] = packed_sheet(key, i);
        occ[sh[i]] |= static_cast<uint16_t>(1u << i);
    }

    for (const auto& perm : {T.rot[0], T.rot[1]}) {
        PackedRep nk = 0;
        for (int i = 0; i < N_INTERIOR; ++i)
            nk |= static_cast<PackedRep>(sh[i]) << 4 * perm[static_cast<size_t>(i)];
        f(nk);
    }
    for (int r = 0; r < 6; ++r) {
        PackedRep nk = 0;
        for (int i = 0; i < N_INTERIOR; ++i)
            nk |= static_cast<PackedRep>(s - 1 - sh[i])
                  << 4 * T.refl[static_cast<size_t>(r)][static_cast<size_t>(i)];
        f(nk);
    }
    for (int delta : {1, s - 1}) {
        PackedRep nk = 0;
        for (int i = 0; i < N_INTERIOR; ++i)
            nk |= static_cast<PackedRep>((sh[i] + delta) % s) << 4 * i;
        f(nk);
    }
    for (int i = 0; i < N_INTERIOR; ++i) {
        int src = sh[i];
        for (int step : {1, s - 1}) {
            int dst = (src + step) % s;
            if (occ[dst] & CM[static_cast<size_t>(i)]) continue;
            PackedRep nk;
            if (occ[src] == (1u << i)) {  // source empties: drop the sheet
                nk = 0;
                for (int j = 0; j < N_INTERIOR; ++j) {
                    int v = j == i ? dst : sh[j];
                    if (v > src) --v;
                    nk |= static_cast<PackedRep>(v) << 4 * j;
                }
            } else {
                nk = (key & ~(static_cast<PackedRep>(0xf) << 4 * i)) |
                     (static_cast<PackedRep>(dst) << 4 * i);
            }
            f(nk);
        }
    }
    if (s < cap && s < N_INTERIOR)
        for (int i = 0; i < N_INTERIOR; ++i) {
            int src = sh[i];
            if (std::popcount(static_cast<unsigned>(occ[src])) < 2) continue;
            for (int where = 0; where < 2; ++where) {
                int tgt = src + where;  // fresh sheet above (src) or below (src+1)
                PackedRep nk = 0;
                for (int j = 0; j < N_INTERIOR; ++j) {
                    int v = sh[j];
                    if (j == i) v = tgt;
                    else if (v >= tgt) ++v;
                    nk |= static_cast<PackedRep>(v) << 4 * j;
                }
                f(nk);
            }
        }
    for (const VxTable& X : T.vx) {
        int lov = 9, hiv = -1, low = 9, hiw = -1;
        for (int t = 0; t < 3; ++t) {
            int a = sh[X.at_v[static_cast<size_t>(t)]];
            int b = sh[X.at_w[static_cast<size_t>(t)]];
            lov = std::min(lov, a); hiv = std::max(hiv, a);
            low = std::min(low, b); hiw = std::max(hiw, b);
        }
        if (!(hiv < low || hiw < lov)) continue;
        PackedRep nk = 0;
        for (int i = 0; i < N_INTERIOR; ++i) {
            if (i == X.a1 || i == X.a2) continue;
            nk |= static_cast<PackedRep>(sh[i]) << 4 * X.tau[static_cast<size_t>(i)];
        }
        nk |= static_cast<PackedRep>(sh[X.a2]) << 4 * X.a1;
        nk |= static_cast<PackedRep>(sh[X.a1]) << 4 * X.a2;
        f(nk);
    }
}

}  // namespace engine

struct Orbit {
    std::vector<PackedRep> members;  // sorted
    std::string canonical;           // lexicographically least sheet-string
    PackedRep canonical_key = 0;
    int min_sheets = 0;
    size_t size() const { return members.size(); }
};

inline Orbit orbit_of(const BookRep& rep, int sheet_cap = 9) {
    if (auto bad = validate(rep))
        throw std::invalid_argument("orbit of invalid rep: " + *bad);
    PackedRep seed = pack(rep);
    Orbit out;
    out.canonical_key = seed;
    out.canonical = packed_str(seed);
    out.min_sheets = packed_sheet_count(seed);
    std::unordered_set<PackedRep> seen{seed};
    std::vector<PackedRep> frontier{seed}, next;
    while (!frontier.empty()) {
        next.clear();
        for (PackedRep k : frontier)
            engine::for_each_successor(k, sheet_cap, [&](PackedRep nk) {
                if (!seen.insert(nk).second) return;
                next.push_back(nk);
                int sc = packed_sheet_count(nk);
                if (sc < out.min_sheets) out.min_sheets = sc;
                std::string str = packed_str(nk);
                if (str < out.canonical) {
                    out.canonical = std::move(str);
                    out.canonical_key = nk;
                }
            });
        frontier.swap(next);
    }
    out.members.assign(seen.begin(), seen.end());
    std::sort(out.members.begin(), out.members.end());
    return out;
}

inline bool equivalent(const BookRep& a, const BookRep& b) {
    if (a.n != b.n) throw std::invalid_argument("representations of different graphs");
    if (auto bad = validate(a)) throw std::invalid_argument("invalid rep: " + *bad);
    if (auto bad = validate(b)) throw std::invalid_argument("invalid rep: " + *bad);
    PackedRep seed = pack(a), target = pack(b);
    if (seed == target) return true;
    std::unordered_set<PackedRep> seen{seed};
    std::vector<PackedRep> frontier{seed}, next;
    while (!frontier.empty()) {
        next.clear();
        for (PackedRep k : frontier) {
            bool hit = false;
            engine::for_each_successor(k, N_INTERIOR, [&](PackedRep nk) {
                if (nk == target) hit = true;
                if (seen.insert(nk).second) next.push_back(nk);
            });
            if (hit) return true;
        }
        frontier.swap(next);
    }
    return false;
}

inline int min_sheet_number(const BookRep& rep) { return orbit_of(rep).min_sheets; }

struct RepClass {
    std::string canonical;
    PackedRep canonical_key = 0;
    int min_sheets = 0;
    uint64_t size = 0;
};

namespace engine {

inline size_t universe_index(const std::vector<PackedRep>& all, PackedRep k) {
    auto it = std::lower_bound(all.begin(), all.end(), k);
    if (it == all.end() || *it != k)
        throw std::logic_error("successor " + packed_str(k) +
                               " escaped the valid universe");
    return static_cast<size_t>(it - all.begin());
}

}  // namespace engine

// Partition the full universe into orbits. Deterministic: seeds ascend, and
// each class carries its lexicographically least member as canonical form.
inline std::vector<RepClass> compute_classes() {
    const auto& all = all_packed_reps();
    std::vector<bool> visited(all.size(), false);
    std::vector<RepClass> classes;
    std::vector<uint32_t> frontier, next;
    for (size_t start = 0; start < all.size(); ++start) {
        if (visited[start]) continue;
        RepClass cls;
        cls.canonical_key = all[start];
        cls.canonical = packed_str(all[start]);
        cls.min_sheets = packed_sheet_count(all[start]);
        cls.size = 1;
        visited[start] = true;
        frontier.assign(1, static_cast<uint32_t>(start));
        while (!frontier.empty()) {
            next.clear();
            for (uint32_t fi : frontier)
                engine::for_each_successor(all[fi], N_INTERIOR, [&](PackedRep nk) {
                    size_t idx = engine::universe_index(all, nk);
                    if (visited[idx]) return;
                    visited[idx] = true;
                    ++cls.size;
                    int sc = packed_sheet_count(nk);
                    if (sc < cls.min_sheets) cls.min_sheets = sc;
                    std::string str = packed_str(nk);
                    if (str < cls.canonical) {
                        cls.canonical = std::move(str);
                        cls.canonical_key = nk;
                    }
                    next.push_back(static_cast<uint32_t>(idx));
                });
            frontier.swap(next);
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const RepClass& a, const RepClass& b) {
        return a.min_sheets != b.min_sheets ? a.min_sheets < b.min_sheets
                                            : a.canonical < b.canonical;
    });
    return classes;
}

// Label every universe entry with its class index (aligned with
// all_packed_reps). One full sweep; used for batch membership lookups.
inline std::vector<uint8_t> class_of_universe(const std::vector<RepClass>& classes) {
    const auto& all = all_packed_reps();
    if (classes.size() > 255) throw std::logic_error("class index does not fit a byte");
    std::vector<uint8_t> label(all.size(), 255);
    std::vector<uint32_t> frontier, next;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        size_t start = engine::universe_index(all, classes[ci].canonical_key);
        label[start] = static_cast<uint8_t>(ci);
        frontier.assign(1, static_cast<uint32_t>(start));
        while (!frontier.empty()) {
            next.clear();
            for (uint32_t fi : frontier)
                engine::for_each_successor(all[fi], N_INTERIOR, [&](PackedRep nk) {
                    size_t idx = engine::universe_index(all, nk);
                    if (label[idx] != 255) return;
                    label[idx] = static_cast<uint8_t>(ci);
                    next.push_back(static_cast<uint32_t>(idx));
                });
            frontier.swap(next);
        }
    }
    for (uint8_t l : label)
        if (l == 255) throw std::logic_error("classes do not cover the universe");
    return label;
}

// ---- orbit cache ------------------------------------------------------------
// One record per class: canonical TAB size TAB min_sheets TAB member_count.
// A cache that does not parse, does not cover the universe, or is internally
// inconsistent is ignored (classify recomputes and rewrites it).

inline bool load_classes(const std::string& path, std::vector<RepClass>& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::vector<RepClass> classes;
    uint64_t total = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        size_t t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
        if (t3 == std::string::npos) return false;
        RepClass cls;
        cls.canonical = line.substr(0, t1);
        try {
            cls.size = std::stoull(line.substr(t1 + 1, t2 - t1 - 1));
            cls.min_sheets = std::stoi(line.substr(t2 + 1, t3 - t2 - 1));
            uint64_t members = std::stoull(line.substr(t3 + 1));
            if (members != cls.size) return false;
            BookRep rep = parse_rep(cls.canonical);
            if (validate(rep)) return false;
            cls.canonical_key = pack(rep);
        } catch (const std::exception&) {
            return false;
        }
        total += cls.size;
        classes.push_back(std::move(cls));
    }
    if (classes.empty() || total != all_packed_reps().size()) return false;
    std::sort(classes.begin(), classes.end(), [](const RepClass& a, const RepClass& b) {
        return a.min_sheets != b.min_sheets ? a.min_sheets < b.min_sheets
                                            : a.canonical < b.canonical;
    });
    out = std::move(classes);
    return true;
}

inline void store_classes(const std::string& path, const std::vector<RepClass>& classes) {
    std::ofstream outf(path);
    if (!outf) throw io_error("cannot write cache file " + path);
    uint64_t total = 0;
    for (const RepClass& c : classes) total += c.size;
    outf << "# classes=" << classes.size() << " total=" << total << '\n';
    for (const RepClass& c : classes)
        outf << c.canonical << '\t' << c.size << '\t' << c.min_sheets << '\t'
             << c.size << '\n';
    if (!outf.flush()) throw io_error("cannot write cache file " + path);
}

inline std::vector<RepClass> classify_all(const std::string& cache_path = "") {
    std::vector<RepClass> classes;
    if (!cache_path.empty() && load_classes(cache_path, classes)) return classes;
    classes = compute_classes();
    if (!cache_path.empty()) store_classes(cache_path, classes);
    return classes;
}

}  // namespace bookrep
