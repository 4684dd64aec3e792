#pragma once
// Independent re-derivations used only by the tests: the Kauffman bracket by
// recursive skein resolution with union-find loop counting, and the knot
// determinant from the Wirtinger presentation's Alexander matrix at t = -1.
// Neither shares code with the library's state-sum or Jones-evaluation paths.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <bookrep/invariants.hpp>

namespace oracles {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    }
    // returns true when the two were already connected (a loop closes)
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        up[static_cast<size_t>(a)] = b;
        return false;
    }
};

// <L> = A <L_A> + A^-1 <L_B>, resolved one crossing per recursion level; at
// the leaves the smoothed diagram is a union of circles counted by merging
// strand arcs in a union-find.
class SkeinBracket {
  public:
    explicit SkeinBracket(const bookrep::Diagram& d) : d_(d) {
        mate_.assign(static_cast<size_t>(4 * d.ncross()), -1);
        free_loops_ = 0;
        for (const auto& comp : d.visits) {
            if (comp.empty()) {
                ++free_loops_;
                continue;
            }
            for (size_t i = 0; i < comp.size(); ++i) {
                const bookrep::Visit& v = comp[i];
                const bookrep::Visit& w = comp[(i + 1) % comp.size()];
                int out = 4 * v.crossing + (v.under ? 3 : 1);
                int in = 4 * w.crossing + (w.under ? 2 : 0);
                mate_[static_cast<size_t>(out)] = in;
                mate_[static_cast<size_t>(in)] = out;
            }
        }
        choice_.assign(static_cast<size_t>(d.ncross()), 0);
    }

    bookrep::LaurentPoly eval() { return resolve(0); }

  private:
    bookrep::LaurentPoly resolve(int k) {
        if (k == d_.ncross()) return leaf();
        choice_[static_cast<size_t>(k)] = 0;
        bookrep::LaurentPoly a = resolve(k + 1);
        choice_[static_cast<size_t>(k)] = 1;
        bookrep::LaurentPoly b = resolve(k + 1);
        return bookrep::LaurentPoly::mono(1, 1) * a +
               bookrep::LaurentPoly::mono(1, -1) * b;
    }

    // fully smoothed diagram: a union of circles, worth delta^(loops-1);
    // the A / A^-1 weights were already paid on the way down the recursion
    bookrep::LaurentPoly leaf() {
        const int c = d_.ncross();
        UnionFind uf(4 * c);
        for (size_t p = 0; p < mate_.size(); ++p)
            if (mate_[p] >= 0) uf.join(static_cast<int>(p), mate_[p]);
        int loops = free_loops_;
        for (int k = 0; k < c; ++k) {
            bool a_sm = choice_[static_cast<size_t>(k)] == 0;
            // A joins over-in/under-out and over-out/under-in at positive
            // crossings; at negative crossings the pairings swap
            bool diag = (d_.crossings[static_cast<size_t>(k)].sign > 0) == a_sm;
            int p = 4 * k;
            int j1 = uf.join(p + 0, diag ? p + 3 : p + 2);
            int j2 = uf.join(p + 1, diag ? p + 2 : p + 3);
            loops += j1 + j2;
        }
        if (loops == 0) loops = 1;  // lone crossingless circle
        bookrep::LaurentPoly delta = bookrep::LaurentPoly::mono(-1, 2) +
                                     bookrep::LaurentPoly::mono(-1, -2);
        bookrep::LaurentPoly out = bookrep::LaurentPoly::mono(1, 0);
        for (int i = 1; i < loops; ++i) out = out * delta;
        return out;
    }

    const bookrep::Diagram& d_;
    std::vector<int> mate_;
    std::vector<char> choice_;
    int free_loops_ = 0;
};

inline bookrep::LaurentPoly skein_bracket(const bookrep::Diagram& d) {
    return SkeinBracket(d).eval();
}

inline bookrep::LaurentPoly skein_f(const bookrep::Diagram& d) {
    int w = d.writhe;
    return bookrep::LaurentPoly::mono((w & 1) ? -1 : 1, -3 * w) * skein_bracket(d);
}

// Exact integer determinant, fraction-free (Bareiss).
inline int64_t int_det(std::vector<std::vector<int64_t>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n && piv < 0; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) piv = i;
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                         m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                         m[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                    prev;
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

// Knot determinant from the Wirtinger presentation: arcs run between
// consecutive under-passes; each crossing contributes the Alexander relation
// t*in - out + (1-t)*over, which at t = -1 reads 2*over - in - out for either
// crossing sign. Delete one row and one column, take |det|.
inline int64_t wirtinger_determinant(const bookrep::Diagram& d) {
    if (d.ncomp() != 1)
        throw std::invalid_argument("wirtinger determinant needs one component");
    const int c = d.ncross();
    if (c == 0) return 1;
    const auto& comp = d.visits[0];
    std::vector<int> upos;
    for (size_t i = 0; i < comp.size(); ++i)
        if (comp[i].under) upos.push_back(static_cast<int>(i));
    if (static_cast<int>(upos.size()) != c)
        throw std::logic_error("knot diagram must have one under-pass per crossing");
    // arc t covers positions (upos[t-1], upos[t]] cyclically
    auto arc_of = [&](int q) {
        int t = static_cast<int>(std::lower_bound(upos.begin(), upos.end(), q) -
                                 upos.begin());
        return t % c;
    };
    std::vector<std::vector<int64_t>> m(static_cast<size_t>(c),
                                        std::vector<int64_t>(static_cast<size_t>(c), 0));
    for (int t = 0; t < c; ++t) {
        const bookrep::Visit& uv = comp[static_cast<size_t>(upos[static_cast<size_t>(t)])];
        const bookrep::Crossing& x = d.crossings[uv.crossing];
        int in_arc = t;
        int out_arc = (t + 1) % c;
        int over_arc = arc_of(static_cast<int>(x.over_pos));
        auto& row = m[static_cast<size_t>(t)];
        row[static_cast<size_t>(over_arc)] += 2;
        row[static_cast<size_t>(in_arc)] -= 1;
        row[static_cast<size_t>(out_arc)] -= 1;
    }
    std::vector<std::vector<int64_t>> minor;
    for (int i = 0; i + 1 < c; ++i)
        minor.emplace_back(m[static_cast<size_t>(i)].begin(),
                           m[static_cast<size_t>(i)].end() - 1);
    int64_t det = int_det(std::move(minor));
    return det < 0 ? -det : det;
}

}  // namespace oracles
