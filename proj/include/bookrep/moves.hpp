#pragma once
// The ambient-isotopy-preserving moves on book representations, as total
// checked transformations, plus the move-script parser used for replays.
//
// Sheets are cyclically ordered around the spine, so "adjacent" wraps:
// the top and bottom sheets are neighbors. Every move here has an inverse
// in the move set; in particular edge_move never deletes an emptied source
// sheet (delete_sheet is explicit), so apply-then-invert is the identity.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "book.hpp"
#include "geometry.hpp"

namespace bookrep {

struct move_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline int wrap_vertex(int v, int n) { return (v - 1 + n) % n + 1; }
}  // namespace detail

// Move 1: relabel every vertex by +/-1 mod n.
inline BookRep rotate_vertices(const BookRep& rep, int delta) {
    BookRep out;
    out.n = rep.n;
    out.sheets.resize(rep.sheets.size());
    for (size_t s = 0; s < rep.sheets.size(); ++s) {
        for (Edge e : rep.sheets[s])
            out.sheets[s].push_back(Edge(detail::wrap_vertex(e.a + delta, rep.n),
                                         detail::wrap_vertex(e.b + delta, rep.n)));
        std::sort(out.sheets[s].begin(), out.sheets[s].end());
    }
    return out;
}

// Move 2: renumber every sheet by +/-1 mod s (delta=+1 sends the top sheet
// to the bottom).
inline BookRep shift_sheets(const BookRep& rep, int delta) {
    BookRep out;
    out.n = rep.n;
    int s = rep.sheet_count();
    out.sheets.resize(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i)
        out.sheets[static_cast<size_t>(((i - delta) % s + s) % s)] =
            rep.sheets[static_cast<size_t>(i)];
    return out;
}

enum class Dir { up, down };  // up = toward sheet 1

// Move 3: relocate edge e into the cyclically adjacent sheet it does not
// cross. The source sheet stays even if emptied (see header comment).
inline BookRep edge_move(const BookRep& rep, Edge e, Dir dir) {
    int s = rep.sheet_count();
    if (s < 2) throw move_error("edge move needs at least two sheets");
    int src = -1;
    for (int i = 0; i < s && src < 0; ++i)
        for (Edge f : rep.sheets[static_cast<size_t>(i)])
            if (f == e) { src = i; break; }
    if (src < 0) throw move_error("edge " + edge_str(e) + " not present");
    int dst = (dir == Dir::up) ? (src - 1 + s) % s : (src + 1) % s;
    for (Edge f : rep.sheets[static_cast<size_t>(dst)])
        if (chords_cross(e, f, rep.n))
            throw move_error("edge " + edge_str(e) + " blocked by " + edge_str(f) +
                             " in sheet " + std::to_string(dst + 1));
    BookRep out = rep;
    auto& from = out.sheets[static_cast<size_t>(src)];
    from.erase(std::find(from.begin(), from.end(), e));
    auto& to = out.sheets[static_cast<size_t>(dst)];
    to.insert(std::upper_bound(to.begin(), to.end(), e), e);
    return out;
}

// Move 4: exchange cyclically adjacent vertices v and w. Applicable when the
// sheet range of interior edges at one vertex lies strictly below the range
// at the other (the moving vertex passes under or over everything at its
// neighbor). Two interior edges trade places with two exterior ones:
// (v-1,v+1) and (v,v+2) leave the book, and the relabeled images of the old
// exterior edges (v-1,v) and (w,w+1) enter it. By default each entering edge
// takes the sheet the other leaving edge vacated (always valid); since
// exterior edges can be pre-placed freely, any explicit placement that keeps
// the sheets non-crossing is also legal and may be supplied.
inline BookRep vertex_exchange(const BookRep& rep, int v, int w,
                               const std::map<Edge, int>& placements = {}) {
    const int n = rep.n;
    if (detail::wrap_vertex(v + 1, n) != w) {
        if (detail::wrap_vertex(w + 1, n) == v) return vertex_exchange(rep, w, v, placements);
        throw move_error("vertices " + std::to_string(v) + "," + std::to_string(w) +
                         " not adjacent on the circle");
    }
    // sheet ranges of interior edges at v and at w (edge vw is exterior)
    int lo_v = 1 << 30, hi_v = -1, lo_w = 1 << 30, hi_w = -1;
    for (size_t s = 0; s < rep.sheets.size(); ++s)
        for (Edge e : rep.sheets[s]) {
            int si = static_cast<int>(s);
            if (e.a == v || e.b == v) { lo_v = std::min(lo_v, si); hi_v = std::max(hi_v, si); }
            if (e.a == w || e.b == w) { lo_w = std::min(lo_w, si); hi_w = std::max(hi_w, si); }
        }
    if (!(hi_v < lo_w || hi_w < lo_v))
        throw move_error("vertex exchange " + std::to_string(v) + "," +
                         std::to_string(w) + " blocked: sheet ranges [" +
                         std::to_string(lo_v + 1) + "," + std::to_string(hi_v + 1) +
                         "] and [" + std::to_string(lo_w + 1) + "," +
                         std::to_string(hi_w + 1) + "] overlap");
    Edge leave_v(detail::wrap_vertex(v - 1, n), w);      // spans v; incident to w after relabel
    Edge leave_w(v, detail::wrap_vertex(w + 1, n));      // spans w; incident to v after relabel
    int old_sheet_lv = -1, old_sheet_lw = -1;
    BookRep out;
    out.n = n;
    out.sheets.resize(rep.sheets.size());
    for (size_t s = 0; s < rep.sheets.size(); ++s)
        for (Edge e : rep.sheets[s]) {
            if (e == leave_v) { old_sheet_lv = static_cast<int>(s); continue; }
            if (e == leave_w) { old_sheet_lw = static_cast<int>(s); continue; }
            int a = e.a == v ? w : e.a == w ? v : e.a;
            int b = e.b == v ? w : e.b == w ? v : e.b;
            out.sheets[s].push_back(Edge(a, b));
        }
    if (old_sheet_lv < 0 || old_sheet_lw < 0)
        throw move_error("vertex exchange internal: spanning edges not found");
    // the same two labels re-enter as the relabeled old exterior edges
    auto place = [&](Edge e, int def) {
        auto it = placements.find(e);
        int s = it != placements.end() ? it->second - 1 : def;
        if (s < 0 || s >= static_cast<int>(out.sheets.size()))
            throw move_error("placement sheet out of range for " + edge_str(e));
        for (Edge f : out.sheets[static_cast<size_t>(s)])
            if (chords_cross(e, f, n))
                throw move_error("placement of " + edge_str(e) + " into sheet " +
                                 std::to_string(s + 1) + " blocked by " + edge_str(f));
        out.sheets[static_cast<size_t>(s)].push_back(e);
    };
    for (const auto& [e, s] : placements)
        if (e != leave_v && e != leave_w)
            throw move_error("placement for edge " + edge_str(e) +
                             " which is not re-entering");
    place(leave_v, old_sheet_lw);
    place(leave_w, old_sheet_lv);
    for (auto& sh : out.sheets) std::sort(sh.begin(), sh.end());
    return out;
}

// Move 5: add/remove an empty sheet. position is 1-based: after insert the
// new empty sheet is sheet `position`.
inline BookRep insert_sheet(const BookRep& rep, int position) {
    if (position < 1 || position > rep.sheet_count() + 1)
        throw move_error("insert position out of range");
    BookRep out = rep;
    out.sheets.emplace(out.sheets.begin() + (position - 1));
    return out;
}

inline BookRep delete_sheet(const BookRep& rep, int position) {
    if (position < 1 || position > rep.sheet_count())
        throw move_error("delete position out of range");
    if (!rep.sheets[static_cast<size_t>(position - 1)].empty())
        throw move_error("sheet " + std::to_string(position) + " is not empty");
    BookRep out = rep;
    out.sheets.erase(out.sheets.begin() + (position - 1));
    return out;
}

// Move 6: compose two reflections. With the plane (with_plane = true, the
// isotopy used throughout): reflect labels across diameter axis r and
// reverse the sheet order. Axis r in 0..n-1 maps vertex x to
// ((r - (x-1)) mod n) + 1; even r fixes vertices r/2+1 and its antipode,
// odd r runs through edge midpoints. Without the plane: the axis-r and
// axis-0 reflections compose to the vertex rotation by r.
inline BookRep double_reflection(const BookRep& rep, int axis,
                                 bool with_plane = true) {
    const int n = rep.n;
    if (axis < 0 || axis >= n) throw move_error("axis out of range");
    if (!with_plane) return rotate_vertices(rep, axis);
    BookRep out;
    out.n = n;
    out.sheets.resize(rep.sheets.size());
    size_t s = rep.sheets.size();
    auto refl = [&](int x) { return ((axis - (x - 1)) % n + n) % n + 1; };
    for (size_t i = 0; i < s; ++i) {
        for (Edge e : rep.sheets[i])
            out.sheets[s - 1 - i].push_back(Edge(refl(e.a), refl(e.b)));
        std::sort(out.sheets[s - 1 - i].begin(), out.sheets[s - 1 - i].end());
    }
    return out;
}

inline int axis_through_vertex(int a, int n = K6) { return (2 * (a - 1)) % n; }

// Chirality flip: reverse the sheet order, labels unchanged. NOT an isotopy
// move; exposed for mirror-image analysis.
inline BookRep mirror(const BookRep& rep) {
    BookRep out;
    out.n = rep.n;
    out.sheets.assign(rep.sheets.rbegin(), rep.sheets.rend());
    return out;
}

// ---- move scripts -----------------------------------------------------------
// One move per line:
//   insert P | delete P | shift +1|-1 | rotate +1|-1 | reflect R
//   edgemove AB up|down | vexchange V W [AB:S ...]
// '#' starts a comment; blank lines ignored.

struct ScriptMove {
    std::string verb;
    std::vector<std::string> args;
    int line = 0;
};

inline std::vector<ScriptMove> parse_move_script(std::string_view text) {
    std::vector<ScriptMove> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++lineno;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (auto h = line.find('#'); h != std::string_view::npos)
            line = line.substr(0, h);
        ScriptMove m;
        m.line = lineno;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) {
                if (m.verb.empty())
                    m.verb = std::string(line.substr(i, j - i));
                else
                    m.args.push_back(std::string(line.substr(i, j - i)));
            }
            i = j;
        }
        if (m.verb.empty()) continue;
        // Unknown verbs are grammar failures and die here; argument problems
        // on a known verb are reported by apply_move against the live rep.
        constexpr std::string_view known[]{"insert",  "delete", "shift",    "rotate",
                                           "reflect", "mirror", "edgemove", "vexchange"};
        if (std::find(std::begin(known), std::end(known), m.verb) == std::end(known))
            throw move_error("line " + std::to_string(m.line) + ": unknown move '" +
                             m.verb + "'");
        out.push_back(std::move(m));
    }
    return out;
}

inline Edge parse_edge_token(const std::string& t) {
    if (t.size() != 2 || t[0] < '1' || t[0] > '9' || t[1] < '1' || t[1] > '9')
        throw move_error("bad edge token '" + t + "'");
    return Edge(t[0] - '0', t[1] - '0');
}

inline BookRep apply_move(const BookRep& rep, const ScriptMove& m) {
    auto need = [&](size_t k) {
        if (m.args.size() < k)
            throw move_error("line " + std::to_string(m.line) + ": " + m.verb +
                             " needs " + std::to_string(k) + " arguments");
    };
    try {
        if (m.verb == "insert") { need(1); return insert_sheet(rep, std::stoi(m.args[0])); }
        if (m.verb == "delete") { need(1); return delete_sheet(rep, std::stoi(m.args[0])); }
        if (m.verb == "shift")  { need(1); return shift_sheets(rep, std::stoi(m.args[0])); }
        if (m.verb == "rotate") { need(1); return rotate_vertices(rep, std::stoi(m.args[0])); }
        if (m.verb == "reflect"){ need(1); return double_reflection(rep, std::stoi(m.args[0])); }
        if (m.verb == "mirror") { return mirror(rep); }
        if (m.verb == "edgemove") {
            need(2);
            Dir d = m.args[1] == "up"   ? Dir::up
                  : m.args[1] == "down" ? Dir::down
                  : throw move_error("direction must be up or down");
            return edge_move(rep, parse_edge_token(m.args[0]), d);
        }
        if (m.verb == "vexchange") {
            need(2);
            std::map<Edge, int> placements;
            for (size_t i = 2; i < m.args.size(); ++i) {
                auto colon = m.args[i].find(':');
                if (colon == std::string::npos)
                    throw move_error("placement must be AB:S, got '" + m.args[i] + "'");
                placements[parse_edge_token(m.args[i].substr(0, colon))] =
                    std::stoi(m.args[i].substr(colon + 1));
            }
            return vertex_exchange(rep, std::stoi(m.args[0]), std::stoi(m.args[1]),
                                   placements);
        }
    } catch (const std::invalid_argument&) {
        throw move_error("line " + std::to_string(m.line) + ": bad number in " + m.verb);
    }
    throw move_error("line " + std::to_string(m.line) + ": unknown move '" + m.verb + "'");
}

}  // namespace bookrep
