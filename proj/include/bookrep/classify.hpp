#pragma once
// End-to-end classification support: golden census records, chirality
// pairing, appendix verification against the full 59-class partition, and
// aggregate statistics over all classes.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "census.hpp"
#include "orbit.hpp"

namespace bookrep {

struct GoldenEntry {
    std::string id;   // "6s10": 6-sheet class number 10
    int sheets = 0;   // leading number of the id
    BookRep rep;
    Census expected;  // link/knot lists only; edge_profile stays zero
};

inline std::vector<GoldenEntry> parse_golden(std::istream& in) {
    std::vector<GoldenEntry> out;
    GoldenEntry cur;
    bool open = false;
    std::string line;
    int lineno = 0;
    auto flush = [&] {
        if (open) {
            std::sort(cur.expected.hopf.begin(), cur.expected.hopf.end());
            std::sort(cur.expected.solomon.begin(), cur.expected.solomon.end());
            std::sort(cur.expected.tref_l.begin(), cur.expected.tref_l.end());
            std::sort(cur.expected.tref_r.begin(), cur.expected.tref_r.end());
            std::sort(cur.expected.fig8.begin(), cur.expected.fig8.end());
            out.push_back(std::move(cur));
            cur = GoldenEntry{};
            open = false;
        }
    };
    auto pair_of = [&](const std::string& tok) {
        size_t mid = tok.find(")(");
        if (mid == std::string::npos)
            throw parse_error("expected (abc)(def)", static_cast<size_t>(lineno));
        return TrianglePair(parse_cycle(tok.substr(0, mid + 1)),
                            parse_cycle(tok.substr(mid + 1)));
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) { flush(); continue; }
        if (line[start] == '#') continue;
        std::istringstream ss(line);
        std::string head, arg1, arg2;
        ss >> head;
        try {
            if (!open) {
                ss >> arg1;
                if (arg1.empty()) throw parse_error("missing sheet string", static_cast<size_t>(lineno));
                cur.id = head;
                size_t s = head.find('s');
                cur.sheets = std::stoi(head.substr(0, s));
                cur.rep = parse_rep(arg1);
                open = true;
            } else if (head == "hopf") {
                ss >> arg1;
                cur.expected.hopf.push_back(pair_of(arg1));
            } else if (head == "solomon") {
                ss >> arg1;
                cur.expected.solomon.push_back(pair_of(arg1));
            } else if (head == "trefoil") {
                ss >> arg1 >> arg2;
                if (arg1 == "L") cur.expected.tref_l.push_back(parse_cycle(arg2));
                else if (arg1 == "R") cur.expected.tref_r.push_back(parse_cycle(arg2));
                else throw parse_error("trefoil handedness must be L or R", static_cast<size_t>(lineno));
            } else if (head == "fig8") {
                ss >> arg1;
                cur.expected.fig8.push_back(parse_cycle(arg1));
            } else {
                throw parse_error("unknown record line '" + head + "'", static_cast<size_t>(lineno));
            }
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception& e) {
            throw parse_error(std::string(e.what()), static_cast<size_t>(lineno));
        }
    }
    flush();
    return out;
}

inline std::vector<GoldenEntry> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open golden file " + path);
    return parse_golden(in);
}

// ---- chirality ---------------------------------------------------------------
// Censuses separate all 59 classes, so the mirror partner of a class is the
// unique class whose signature is the mirrored signature. Both facts are
// validated here rather than assumed.

struct Chirality {
    std::vector<int> partner;  // partner[i] = class index of the mirror of class i
    std::vector<int> achiral;  // indices with partner[i] == i
};

inline Chirality chirality(const std::vector<RepClass>& classes,
                           const std::vector<Census>& censuses) {
    if (classes.size() != censuses.size())
        throw std::invalid_argument("one census per class expected");
    std::map<std::string, int> by_sig;
    for (size_t i = 0; i < censuses.size(); ++i)
        if (!by_sig.emplace(census_signature(censuses[i]), static_cast<int>(i)).second)
            throw std::logic_error("census signatures do not separate the classes");
    Chirality out;
    out.partner.resize(classes.size());
    for (size_t i = 0; i < censuses.size(); ++i) {
        auto it = by_sig.find(census_signature(mirrored(censuses[i])));
        if (it == by_sig.end())
            throw std::logic_error("mirror of class " + std::to_string(i) +
                                   " matches no class signature");
        out.partner[i] = it->second;
    }
    for (size_t i = 0; i < classes.size(); ++i) {
        size_t j = static_cast<size_t>(out.partner[i]);
        if (out.partner[j] != static_cast<int>(i) ||
            classes[i].min_sheets != classes[j].min_sheets)
            throw std::logic_error("mirror pairing is not an involution");
        if (j == i) out.achiral.push_back(static_cast<int>(i));
    }
    return out;
}

inline Chirality chirality(const std::vector<RepClass>& classes) {
    std::vector<Census> censuses;
    censuses.reserve(classes.size());
    for (const RepClass& c : classes) censuses.push_back(census(parse_rep(c.canonical)));
    return chirality(classes, censuses);
}

// ---- appendix verification ---------------------------------------------------

struct EntryCheck {
    std::string id;
    bool valid = false;      // sheet string parses and validates
    bool census_ok = false;  // computed census equals the listed one
    bool sheets_ok = false;  // id prefix == rep sheets == class minimum
    int class_index = -1;
    std::string detail;      // first discrepancy, empty when everything checks
    bool ok() const { return valid && census_ok && sheets_ok; }
};

struct AppendixReport {
    std::vector<EntryCheck> entries;
    int covered = 0;   // classes hit by the entries and their mirrors
    int overlaps = 0;  // classes hit more than once (self-paired achiral reps)
    bool coverage_ok = false;
    bool all_ok() const {
        if (!coverage_ok) return false;
        for (const EntryCheck& e : entries)
            if (!e.ok()) return false;
        return true;
    }
    std::string summary() const {
        size_t good = 0;
        for (const EntryCheck& e : entries) good += e.ok();
        std::ostringstream ss;
        ss << good << "/" << entries.size() << " entries verified, coverage "
           << covered << (coverage_ok ? " (complete)" : " (incomplete)")
           << ", overlaps " << overlaps;
        for (const EntryCheck& e : entries)
            if (!e.ok()) ss << "\n  " << e.id << ": " << e.detail;
        return ss.str();
    }
};

namespace detail {

template <class T, class Str>
inline bool diff_list(const char* what, const std::vector<T>& want,
                      const std::vector<T>& got, Str&& str, std::string& detail) {
    if (want == got) return false;
    std::ostringstream ss;
    ss << what << ": listed {";
    for (size_t i = 0; i < want.size(); ++i) ss << (i ? " " : "") << str(want[i]);
    ss << "} computed {";
    for (size_t i = 0; i < got.size(); ++i) ss << (i ? " " : "") << str(got[i]);
    ss << "}";
    detail = ss.str();
    return true;
}

inline std::string census_diff(const Census& want, const Census& got) {
    std::string d;
    auto ps = [](const TrianglePair& p) { return pair_str(p); };
    auto cs = [](const Cycle& c) { return cycle_str(c); };
    if (diff_list("hopf", want.hopf, got.hopf, ps, d)) return d;
    if (diff_list("solomon", want.solomon, got.solomon, ps, d)) return d;
    if (diff_list("trefoil L", want.tref_l, got.tref_l, cs, d)) return d;
    if (diff_list("trefoil R", want.tref_r, got.tref_r, cs, d)) return d;
    if (diff_list("fig8", want.fig8, got.fig8, cs, d)) return d;
    return d;
}

}  // namespace detail

inline AppendixReport verify_appendix(const std::vector<GoldenEntry>& gold,
                                      const std::vector<RepClass>& classes,
                                      const std::vector<uint8_t>& label) {
    const auto& all = all_packed_reps();
    AppendixReport rep;
    std::vector<int> hits(classes.size(), 0);
    for (const GoldenEntry& g : gold) {
        EntryCheck chk;
        chk.id = g.id;
        if (auto bad = validate(g.rep)) {
            chk.detail = "invalid rep: " + *bad;
            rep.entries.push_back(std::move(chk));
            continue;
        }
        chk.valid = true;
        chk.class_index = label[engine::universe_index(all, pack(g.rep))];
        const RepClass& cls = classes[static_cast<size_t>(chk.class_index)];
        ++hits[static_cast<size_t>(chk.class_index)];
        int mirror_ci = label[engine::universe_index(all, pack(mirror(g.rep)))];
        ++hits[static_cast<size_t>(mirror_ci)];

        Census got = census(g.rep);
        chk.census_ok = g.expected == got;
        if (!chk.census_ok) chk.detail = detail::census_diff(g.expected, got);

        chk.sheets_ok = g.rep.sheet_count() == g.sheets && cls.min_sheets == g.sheets;
        if (!chk.sheets_ok && chk.detail.empty())
            chk.detail = "sheet number: id says " + std::to_string(g.sheets) +
                         ", rep has " + std::to_string(g.rep.sheet_count()) +
                         ", class minimum " + std::to_string(cls.min_sheets);
        rep.entries.push_back(std::move(chk));
    }
    for (int h : hits) {
        rep.covered += h > 0;
        rep.overlaps += h > 1;
    }
    rep.coverage_ok = rep.covered == static_cast<int>(classes.size());
    return rep;
}

inline AppendixReport verify_appendix(const std::vector<GoldenEntry>& gold,
                                      const std::vector<RepClass>& classes) {
    return verify_appendix(gold, classes, class_of_universe(classes));
}

// ---- aggregate statistics ----------------------------------------------------

struct Stats {
    int min_links = 0, max_links = 0;
    int max_knots = 0, max_fig8 = 0;
    int max_crossing_number = 0;   // over knot/link types present anywhere
    int min_sheets_4crossing = 0;  // least class minimum with a 4-crossing object
    std::vector<int> max_links_classes, max_knots_classes, max_fig8_classes;
};

inline Stats aggregate_stats(const std::vector<RepClass>& classes,
                             const std::vector<Census>& censuses) {
    if (classes.size() != censuses.size())
        throw std::invalid_argument("one census per class expected");
    Stats st;
    st.min_links = N_INTERIOR + 1;
    st.min_sheets_4crossing = N_INTERIOR + 1;
    for (size_t i = 0; i < censuses.size(); ++i) {
        const Census& c = censuses[i];
        int links = c.links(), knots = c.knots();
        int f8 = static_cast<int>(c.fig8.size());
        st.min_links = std::min(st.min_links, links);
        if (links > st.max_links) { st.max_links = links; st.max_links_classes.clear(); }
        if (links == st.max_links) st.max_links_classes.push_back(static_cast<int>(i));
        if (knots > st.max_knots) { st.max_knots = knots; st.max_knots_classes.clear(); }
        if (knots == st.max_knots) st.max_knots_classes.push_back(static_cast<int>(i));
        if (f8 > st.max_fig8) { st.max_fig8 = f8; st.max_fig8_classes.clear(); }
        if (f8 == st.max_fig8) st.max_fig8_classes.push_back(static_cast<int>(i));
        int cn = 0;
        if (!c.hopf.empty()) cn = std::max(cn, 2);
        if (!c.tref_l.empty() || !c.tref_r.empty()) cn = std::max(cn, 3);
        if (!c.solomon.empty() || !c.fig8.empty()) cn = std::max(cn, 4);
        st.max_crossing_number = std::max(st.max_crossing_number, cn);
        if (cn >= 4)
            st.min_sheets_4crossing = std::min(st.min_sheets_4crossing, classes[i].min_sheets);
    }
    if (st.min_sheets_4crossing > N_INTERIOR) st.min_sheets_4crossing = 0;
    return st;
}

inline Stats aggregate_stats(const std::vector<RepClass>& classes) {
    std::vector<Census> censuses;
    censuses.reserve(classes.size());
    for (const RepClass& c : classes) censuses.push_back(census(parse_rep(c.canonical)));
    return aggregate_stats(classes, censuses);
}

}  // namespace bookrep
