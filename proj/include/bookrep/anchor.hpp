#pragma once
// Anchor sequences: one edge per sheet, top to bottom, with consecutive edges
// crossing. Cyclic variants also require the last edge to cross the first
// (sheets are cyclically adjacent in the open book). Abstract chains drop the
// sheet structure and just enumerate crossing sequences of distinct interior
// edges; symmetry reduction folds out vertex rotations and reflections,
// sequence reversal, and (for cyclic chains) starting-point shifts.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "book.hpp"

namespace bookrep {

using AnchorSequence = std::vector<Edge>;

inline std::vector<AnchorSequence> find_anchor_sequences(const BookRep& rep,
                                                         bool cyclic = false) {
    if (auto bad = validate(rep))
        throw std::invalid_argument("anchor search on invalid rep: " + *bad);
    std::vector<AnchorSequence> out;
    AnchorSequence cur;
    auto dfs = [&](auto&& self, size_t sheet) -> void {
        if (sheet == rep.sheets.size()) {
            if (!cyclic || chords_cross(cur.back(), cur.front(), rep.n))
                out.push_back(cur);
            return;
        }
        for (const Edge& e : rep.sheets[sheet]) {
            if (!cur.empty() && !chords_cross(cur.back(), e, rep.n)) continue;
            cur.push_back(e);
            self(self, sheet + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

// All sequences of `len` distinct interior edges of K6 in which consecutive
// edges cross (cyclically when `cyclic`). Every rotation and both directions
// of a chain appear as separate sequences.
inline std::vector<AnchorSequence> enumerate_anchor_chains(int len, bool cyclic = true) {
    if (len < 2 || len > N_INTERIOR)
        throw std::invalid_argument("chain length out of range");
    const auto& edges = k6_edges();
    std::vector<AnchorSequence> out;
    AnchorSequence cur;
    std::array<bool, N_INTERIOR> used{};
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            if (!cyclic || chords_cross(cur.back(), cur.front(), K6))
                out.push_back(cur);
            return;
        }
        for (int i = 0; i < N_INTERIOR; ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            const Edge& e = edges[static_cast<size_t>(i)];
            if (!cur.empty() && !chords_cross(cur.back(), e, K6)) continue;
            used[static_cast<size_t>(i)] = true;
            cur.push_back(e);
            self(self);
            cur.pop_back();
            used[static_cast<size_t>(i)] = false;
        }
    };
    dfs(dfs);
    return out;
}

namespace detail {

inline std::string anchor_str(const AnchorSequence& s) {
    std::string out;
    for (const Edge& e : s) {
        if (!out.empty()) out += ',';
        out += edge_str(e);
    }
    return out;
}

}  // namespace detail

// Canonical form of a sequence under the 12 vertex symmetries of the hexagon,
// reversal, and (for cyclic chains) rotation of the starting point: the
// lexicographically least serialized image.
inline std::string anchor_canonical(const AnchorSequence& seq, bool cyclic = true) {
    if (seq.empty()) return "";
    size_t len = seq.size();
    std::string best;
    for (int m = 0; m < 12; ++m) {
        auto phi = [m](int x) {
            return m < 6 ? (x - 1 + m) % 6 + 1 : (((m - 6) - (x - 1)) % 6 + 6) % 6 + 1;
        };
        AnchorSequence img;
        img.reserve(len);
        for (const Edge& e : seq) img.emplace_back(phi(e.a), phi(e.b));
        size_t nshift = cyclic ? len : 1;
        for (size_t r = 0; r < nshift; ++r) {
            for (int dir = 0; dir < 2; ++dir) {
                AnchorSequence cand(len);
                for (size_t i = 0; i < len; ++i) {
                    size_t j = dir ? (r + len - i) % len : (r + i) % len;
                    cand[i] = img[cyclic ? j : (dir ? len - 1 - i : i)];
                }
                std::string str = detail::anchor_str(cand);
                if (best.empty() || str < best) best = std::move(str);
            }
        }
    }
    return best;
}

// One representative per symmetry class, sorted by canonical form.
inline std::vector<AnchorSequence> symmetry_reduce(const std::vector<AnchorSequence>& seqs,
                                                   bool cyclic = true) {
    std::vector<std::pair<std::string, const AnchorSequence*>> keyed;
    keyed.reserve(seqs.size());
    for (const AnchorSequence& s : seqs) keyed.emplace_back(anchor_canonical(s, cyclic), &s);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<AnchorSequence> out;
    for (size_t i = 0; i < keyed.size(); ++i)
        if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(*keyed[i].second);
    return out;
}

// A cyclic 9-chain places two edges in each of sheets 1..4 (positions i and
// i+4) and one in sheet 5. Same-sheet edges may not cross in a valid book, so
// a crossing in any of the first three distance-4 pairs rules the chain out.
inline bool cyclic9_conflict(const AnchorSequence& chain) {
    if (chain.size() != 9) throw std::invalid_argument("cyclic 9-chain expected");
    for (int i = 0; i < 3; ++i)
        if (chords_cross(chain[static_cast<size_t>(i)], chain[static_cast<size_t>(i + 4)], K6))
            return true;
    return false;
}

// Can a rep with sheet sizes (2,2,2,2,1) thread a cyclic anchor chain through
// the sheet pattern (1,2,3,4,1,2,3,4,5)? Tries all 16 ways of ordering the
// two edges inside each doubled sheet.
inline bool admits_cyclic9(const BookRep& rep) {
    if (auto bad = validate(rep))
        throw std::invalid_argument("cyclic-9 probe on invalid rep: " + *bad);
    if (config(rep) != std::vector<int>{2, 2, 2, 2, 1})
        throw std::invalid_argument("cyclic-9 probe needs sheet sizes (2,2,2,2,1)");
    for (int mask = 0; mask < 16; ++mask) {
        AnchorSequence chain(9);
        for (int j = 0; j < 8; ++j) {
            int sheet = j % 4;
            int pick = (mask >> sheet) & 1;
            if (j >= 4) pick ^= 1;
            chain[static_cast<size_t>(j)] =
                rep.sheets[static_cast<size_t>(sheet)][static_cast<size_t>(pick)];
        }
        chain[8] = rep.sheets[4][0];
        bool ok = true;
        for (int j = 0; j < 9 && ok; ++j)
            ok = chords_cross(chain[static_cast<size_t>(j)],
                              chain[static_cast<size_t>((j + 1) % 9)], rep.n);
        if (ok) return true;
    }
    return false;
}

}  // namespace bookrep
