#pragma once
// Book representation state: ordered sheets of pairwise non-crossing interior
// edges. Parsing, serialization, validation, packed form, full enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace bookrep {

struct BookRep {
    int n = K6;
    std::vector<std::vector<Edge>> sheets;  // index 0 = top sheet ("sheet 1")

    int sheet_count() const { return static_cast<int>(sheets.size()); }
    friend bool operator==(const BookRep& l, const BookRep& r) {
        return l.n == r.n && l.sheets == r.sheets;
    }
    friend bool operator<(const BookRep& l, const BookRep& r) {
        return l.sheets < r.sheets;
    }
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    size_t pos;
    parse_error(const std::string& what, size_t p)
        : std::runtime_error(what + " (at position " + std::to_string(p) + ")"),
          pos(p) {}
};

// Sheet-string grammar: sheets separated by '|', edges by ',', edge = two
// digits, whitespace ignored. Example: "13,14,46|15,24,25|26,35,36".
inline BookRep parse_rep(std::string_view text, int n = K6) {
    BookRep rep;
    rep.n = n;
    std::vector<Edge> cur;
    int digits[2];
    int ndig = 0;
    bool edge_seen_in_sheet = false;
    auto flush_edge = [&](size_t pos) {
        if (ndig == 0) return;
        if (ndig != 2) throw parse_error("edge needs exactly two digits", pos);
        cur.push_back(Edge(digits[0], digits[1]));
        ndig = 0;
        edge_seen_in_sheet = true;
    };
    size_t i = 0;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t') continue;
        if (ch >= '0' && ch <= '9') {
            if (ndig == 2) throw parse_error("edge needs exactly two digits", i);
            digits[ndig++] = ch - '0';
        } else if (ch == ',') {
            if (ndig != 2) throw parse_error("malformed edge before ','", i);
            flush_edge(i);
        } else if (ch == '|') {
            flush_edge(i);
            if (!edge_seen_in_sheet) throw parse_error("empty sheet", i);
            rep.sheets.push_back(cur);
            cur.clear();
            edge_seen_in_sheet = false;
        } else {
            throw parse_error(std::string("unexpected character '") + ch + "'", i);
        }
    }
    flush_edge(i);
    if (!edge_seen_in_sheet) throw parse_error("empty sheet", i);
    rep.sheets.push_back(cur);
    for (auto& sh : rep.sheets) std::sort(sh.begin(), sh.end());
    return rep;
}

inline std::string serialize(const BookRep& rep) {
    std::string out;
    for (size_t s = 0; s < rep.sheets.size(); ++s) {
        if (s) out += '|';
        for (size_t i = 0; i < rep.sheets[s].size(); ++i) {
            if (i) out += ',';
            out += edge_str(rep.sheets[s][i]);
        }
    }
    return out;
}

// ok -> nullopt; otherwise a report naming the first violated invariant.
// allow_empty admits transient empty sheets (mid-script states between an
// insert and the edge move that fills it, or after moves drain a sheet).
inline std::optional<std::string> validate(const BookRep& rep,
                                           bool allow_empty = false) {
    const int n = rep.n;
    std::vector<int> seen(static_cast<size_t>(n * 10), 0);
    int interior_count = 0;
    for (size_t s = 0; s < rep.sheets.size(); ++s) {
        const auto& sh = rep.sheets[s];
        if (sh.empty() && !allow_empty)
            return "empty sheet " + std::to_string(s + 1);
        for (Edge e : sh) {
            if (e.a < 1 || e.b > n || e.a >= e.b)
                return "edge out of range: " + edge_str(e);
            if (!is_interior(e, n))
                return "exterior edge stored: " + edge_str(e);
            int key = e.a * 10 + e.b;
            if (seen[static_cast<size_t>(key)]++)
                return "duplicate edge " + edge_str(e);
            ++interior_count;
        }
        for (size_t i = 0; i < sh.size(); ++i)
            for (size_t j = i + 1; j < sh.size(); ++j)
                if (chords_cross(sh[i], sh[j], n))
                    return "crossing pair " + edge_str(sh[i]) + "," +
                           edge_str(sh[j]) + " in sheet " + std::to_string(s + 1);
    }
    int expected = n * (n - 3) / 2;
    if (interior_count != expected) {
        for (Edge e : interior_edges(n))
            if (!seen[static_cast<size_t>(e.a * 10 + e.b)])
                return "missing interior edge " + edge_str(e);
    }
    return std::nullopt;
}

inline std::vector<int> config(const BookRep& rep) {
    std::vector<int> out;
    for (const auto& sh : rep.sheets) out.push_back(static_cast<int>(sh.size()));
    return out;
}

// ---- packed form (n = 6 only) ----------------------------------------------
// 9 interior edges x 4-bit 0-based sheet index, slot i at bits 4i..4i+3.
// Valid keys always use contiguous sheets 0..s-1, so s = 1 + max nibble.

using PackedRep = uint64_t;

inline int packed_sheet(PackedRep key, int slot) {
    return static_cast<int>((key >> (4 * slot)) & 0xf);
}

inline int packed_sheet_count(PackedRep key) {
    int m = 0;
    for (int i = 0; i < N_INTERIOR; ++i) m = std::max(m, packed_sheet(key, i));
    return m + 1;
}

inline PackedRep pack(const BookRep& rep) {
    if (rep.n != K6) throw std::invalid_argument("pack requires n = 6");
    PackedRep key = 0;
    for (size_t s = 0; s < rep.sheets.size(); ++s)
        for (Edge e : rep.sheets[s]) {
            int slot = k6_edge_slot(e);
            if (slot < 0) throw std::invalid_argument("not an interior edge");
            key |= static_cast<PackedRep>(s) << (4 * slot);
        }
    return key;
}

inline BookRep unpack(PackedRep key) {
    BookRep rep;
    rep.n = K6;
    rep.sheets.assign(static_cast<size_t>(packed_sheet_count(key)), {});
    for (int i = 0; i < N_INTERIOR; ++i)
        rep.sheets[static_cast<size_t>(packed_sheet(key, i))].push_back(
            k6_edges()[static_cast<size_t>(i)]);
    return rep;  // slot order is lexicographic, so sheets come out sorted
}

// Serialized sheet-string of a packed rep; always 26 chars for K6
// (18 edge digits + 8 separators), so string comparisons are fixed-length.
inline std::string packed_str(PackedRep key) {
    std::string out;
    out.reserve(26);
    int s = packed_sheet_count(key);
    for (int sh = 0; sh < s; ++sh) {
        if (sh) out += '|';
        bool first = true;
        for (int i = 0; i < N_INTERIOR; ++i)
            if (packed_sheet(key, i) == sh) {
                if (!first) out += ',';
                out += edge_str(k6_edges()[static_cast<size_t>(i)]);
                first = false;
            }
    }
    return out;
}

// All valid packed reps of K6, sorted ascending. Deterministic; the count is
// locked by tests (2,290,260). Generated as: unordered partitions of the nine
// interior edges into non-crossing blocks (DFS over least-unused-edge), then
// every ordering of each partition's blocks.
inline const std::vector<PackedRep>& all_packed_reps() {
    static const std::vector<PackedRep> all = [] {
        // collect valid blocks as 9-bit masks (pairwise non-crossing)
        std::vector<uint16_t> blocks;
        for (uint16_t m = 1; m < (1u << N_INTERIOR); ++m) {
            bool ok = true;
            for (int i = 0; i < N_INTERIOR && ok; ++i)
                if ((m >> i) & 1)
                    if (m & cross_mask()[static_cast<size_t>(i)]) ok = false;
            if (ok) blocks.push_back(m);
        }
        // partitions via DFS on the lowest uncovered edge
        std::vector<PackedRep> out;
        std::vector<uint16_t> parts;
        std::vector<int> perm;
        auto emit = [&] {
            perm.resize(parts.size());
            for (size_t i = 0; i < parts.size(); ++i) perm[i] = static_cast<int>(i);
            // all orderings of the blocks
            std::sort(perm.begin(), perm.end());
            do {
                PackedRep key = 0;
                for (size_t pos = 0; pos < perm.size(); ++pos) {
                    uint16_t m = parts[static_cast<size_t>(perm[pos])];
                    for (int i = 0; i < N_INTERIOR; ++i)
                        if ((m >> i) & 1)
                            key |= static_cast<PackedRep>(pos) << (4 * i);
                }
                out.push_back(key);
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        auto dfs = [&](auto&& self, uint16_t covered) -> void {
            if (covered == (1u << N_INTERIOR) - 1) {
                emit();
                return;
            }
            int low = 0;
            while ((covered >> low) & 1) ++low;
            for (uint16_t m : blocks) {
                if (!((m >> low) & 1) || (m & covered)) continue;
                parts.push_back(m);
                self(self, static_cast<uint16_t>(covered | m));
                parts.pop_back();
            }
        };
        dfs(dfs, 0);
        std::sort(out.begin(), out.end());
        return out;
    }();
    return all;
}

}  // namespace bookrep
