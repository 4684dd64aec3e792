// Command-line front end: validation, classification, census queries, orbit
// probes, anchor chains, move-script replay, and golden-data verification.
//
// Exit codes (stable contract): 0 success, 1 semantic failure (invalid rep,
// blocked move, non-equivalent pair, failed verification), 2 input parse
// failure (bad rep string, bad flags, malformed script/golden file), 3 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <bookrep/anchor.hpp>
#include <bookrep/classify.hpp>

using namespace bookrep;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string bare(const Cycle& c) {
    std::string s;
    for (uint8_t x : c.v) s += static_cast<char>('0' + x);
    return s;
}

std::string census_counts(const Census& c) {
    std::ostringstream ss;
    ss << 'h' << c.hopf.size() << 's' << c.solomon.size() << 'l' << c.tref_l.size()
       << 'r' << c.tref_r.size() << 'f' << c.fig8.size();
    return ss.str();
}

// appendix-style lines, one knotted or linked object per line
std::vector<std::string> census_lines(const Census& c) {
    std::vector<std::string> out;
    for (const auto& p : c.hopf) out.push_back("hopf " + pair_str(p));
    for (const auto& p : c.solomon) out.push_back("solomon " + pair_str(p));
    for (const auto& k : c.tref_l) out.push_back("trefoil L " + cycle_str(k));
    for (const auto& k : c.tref_r) out.push_back("trefoil R " + cycle_str(k));
    for (const auto& k : c.fig8) out.push_back("fig8 " + cycle_str(k));
    return out;
}

ordered_json census_json(const Census& c) {
    auto pairs = [](const std::vector<TrianglePair>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& p : v)
            a.push_back(ordered_json::array({bare(p.first), bare(p.second)}));
        return a;
    };
    auto cycles = [](const std::vector<Cycle>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& k : v) a.push_back(bare(k));
        return a;
    };
    ordered_json j;
    j["hopf"] = pairs(c.hopf);
    j["solomon"] = pairs(c.solomon);
    j["trefoil_l"] = cycles(c.tref_l);
    j["trefoil_r"] = cycles(c.tref_r);
    j["fig8"] = cycles(c.fig8);
    j["links"] = c.links();
    j["knots"] = c.knots();
    return j;
}

// Synthetic ids "<min>s<j>", numbered by canonical order inside each
// min-sheet bucket. These do not follow any published table's numbering.
std::vector<std::string> class_ids(const std::vector<RepClass>& classes) {
    std::vector<std::string> ids;
    ids.reserve(classes.size());
    int last_min = 0, j = 0;
    for (const RepClass& c : classes) {
        if (c.min_sheets != last_min) {
            last_min = c.min_sheets;
            j = 0;
        }
        ids.push_back(std::to_string(c.min_sheets) + "s" + std::to_string(++j));
    }
    return ids;
}

// Censuses of the canonical reps, filled into indexed slots so the output
// is byte-identical no matter how many workers ran.
std::vector<Census> class_censuses(const std::vector<RepClass>& classes, int jobs) {
    std::vector<Census> out(classes.size());
    std::atomic<size_t> cursor{0};
    auto work = [&] {
        for (size_t i; (i = cursor.fetch_add(1)) < classes.size();)
            out[i] = census(parse_rep(classes[i].canonical));
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    std::string rep, rep2, script, golden, cache, format = "text";
    int cap = N_INTERIOR, jobs = 1, length = 0;
    bool linear = false, all_chains = false;
};

int cmd_validate(const Options& o) {
    BookRep r = parse_rep(o.rep);
    auto bad = validate(r);
    if (o.format == "json") {
        ordered_json j{{"command", "validate"}, {"rep", o.rep}, {"valid", !bad}};
        if (bad) j["violation"] = *bad;
        emit(j);
    } else {
        std::cout << (bad ? *bad : "valid") << "\n";
    }
    return bad ? 1 : 0;
}

int cmd_census(const Options& o) {
    BookRep r = parse_rep(o.rep);
    if (auto bad = validate(r)) {
        std::cerr << *bad << "\n";
        return 1;
    }
    Census c = census(r);
    if (o.format == "json") {
        ordered_json j{{"command", "census"}, {"rep", serialize(r)}};
        j.update(census_json(c));
        emit(j);
    } else if (o.format == "csv") {
        std::cout << "kind,first,second\n";
        for (const auto& p : c.hopf)
            std::cout << "hopf," << bare(p.first) << "," << bare(p.second) << "\n";
        for (const auto& p : c.solomon)
            std::cout << "solomon," << bare(p.first) << "," << bare(p.second) << "\n";
        for (const auto& k : c.tref_l) std::cout << "trefoil_l," << bare(k) << ",\n";
        for (const auto& k : c.tref_r) std::cout << "trefoil_r," << bare(k) << ",\n";
        for (const auto& k : c.fig8) std::cout << "fig8," << bare(k) << ",\n";
    } else {
        for (const auto& line : census_lines(c)) std::cout << line << "\n";
    }
    return 0;
}

int cmd_mirror(const Options& o) {
    BookRep r = parse_rep(o.rep);
    if (auto bad = validate(r)) {
        std::cerr << *bad << "\n";
        return 1;
    }
    std::string m = serialize(mirror(r));
    if (o.format == "json")
        emit({{"command", "mirror"}, {"rep", serialize(r)}, {"mirror", m}});
    else
        std::cout << m << "\n";
    return 0;
}

int cmd_orbit(const Options& o) {
    BookRep r = parse_rep(o.rep);
    Orbit orb = orbit_of(r, o.cap);
    if (o.format == "json") {
        emit({{"command", "orbit"},
              {"rep", serialize(r)},
              {"cap", o.cap},
              {"size", orb.size()},
              {"min_sheets", orb.min_sheets},
              {"canonical", orb.canonical}});
    } else {
        std::cout << "size " << orb.size() << "\n"
                  << "min-sheets " << orb.min_sheets << "\n"
                  << "canonical " << orb.canonical << "\n";
    }
    return 0;
}

int cmd_equiv(const Options& o) {
    BookRep a = parse_rep(o.rep), b = parse_rep(o.rep2);
    bool eq = equivalent(a, b);
    if (o.format == "json")
        emit({{"command", "equiv"},
              {"rep", serialize(a)},
              {"rep2", serialize(b)},
              {"equivalent", eq}});
    else
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return eq ? 0 : 1;
}

int cmd_anchors(const Options& o) {
    if (o.rep.empty() == (o.length == 0)) {
        std::cerr << "anchors needs exactly one of --rep or --length\n";
        return 2;
    }
    bool cyclic = !o.linear;
    std::vector<AnchorSequence> chains;
    if (!o.rep.empty()) {
        BookRep r = parse_rep(o.rep);
        if (auto bad = validate(r)) {
            std::cerr << *bad << "\n";
            return 1;
        }
        chains = find_anchor_sequences(r, cyclic);
    } else {
        chains = enumerate_anchor_chains(o.length, cyclic);
        if (!o.all_chains) chains = symmetry_reduce(chains, cyclic);
    }
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& ch : chains) {
            ordered_json row = ordered_json::array();
            for (Edge e : ch) row.push_back(edge_str(e));
            arr.push_back(row);
        }
        emit({{"command", "anchors"}, {"count", chains.size()}, {"chains", arr}});
    } else {
        const char* sep = o.format == "csv" ? "," : " ";
        std::cout << "count " << chains.size() << "\n";
        for (const auto& ch : chains) {
            for (size_t i = 0; i < ch.size(); ++i)
                std::cout << (i ? sep : "") << edge_str(ch[i]);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_replay(const Options& o) {
    BookRep cur = parse_rep(o.rep);
    if (auto bad = validate(cur)) {
        std::cerr << *bad << "\n";
        return 1;
    }
    std::ifstream f(o.script);
    if (!f) throw io_error("cannot open script " + o.script);
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<ScriptMove> script;
    try {
        script = parse_move_script(buf.str());
    } catch (const move_error& e) {  // grammar failure, not a blocked move
        std::cerr << e.what() << "\n";
        return 2;
    }

    ordered_json steps = ordered_json::array();
    bool text = o.format != "json";
    if (text) std::cout << "start " << serialize(cur) << "\n";
    int k = 0;
    for (const auto& m : script) {
        ++k;
        try {
            cur = apply_move(cur, m);
        } catch (const move_error& e) {
            std::cerr << "step " << k << " (" << m.verb << "): " << e.what() << "\n";
            return 1;
        }
        if (auto bad = validate(cur, true)) {
            std::cerr << "step " << k << " (" << m.verb
                      << ") leaves an invalid state: " << *bad << "\n";
            return 1;
        }
        if (text)
            std::cout << k << " " << m.verb << " " << serialize(cur) << "\n";
        else
            steps.push_back(
                {{"step", k}, {"verb", m.verb}, {"rep", serialize(cur)}});
    }
    if (text)
        std::cout << "final " << serialize(cur) << "\n";
    else
        emit({{"command", "replay"},
              {"start", o.rep},
              {"steps", steps},
              {"final", serialize(cur)}});
    return 0;
}

int cmd_classify(const Options& o) {
    auto classes = classify_all(o.cache);
    auto censuses = class_censuses(classes, o.jobs);
    Chirality ch = chirality(classes, censuses);
    auto ids = class_ids(classes);

    std::map<int, int> histogram;
    for (const RepClass& c : classes) ++histogram[c.min_sheets];

    if (o.format == "json") {
        ordered_json hist;
        for (auto [k, v] : histogram) hist[std::to_string(k)] = v;
        ordered_json achiral = ordered_json::array();
        for (int i : ch.achiral) achiral.push_back(ids[static_cast<size_t>(i)]);
        ordered_json entries = ordered_json::array();
        for (size_t i = 0; i < classes.size(); ++i)
            entries.push_back({{"id", ids[i]},
                               {"min_sheets", classes[i].min_sheets},
                               {"size", classes[i].size},
                               {"census", census_json(censuses[i])},
                               {"mirror", ids[static_cast<size_t>(ch.partner[i])]},
                               {"canonical", classes[i].canonical}});
        emit({{"command", "classify"},
              {"classes", classes.size()},
              {"histogram", hist},
              {"achiral", achiral},
              {"entries", entries}});
        return 0;
    }
    if (o.format == "csv") {
        std::cout << "id,min_sheets,size,hopf,solomon,trefoil_l,trefoil_r,fig8,"
                     "mirror,canonical\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            const Census& c = censuses[i];
            std::cout << ids[i] << "," << classes[i].min_sheets << ","
                      << classes[i].size << "," << c.hopf.size() << ","
                      << c.solomon.size() << "," << c.tref_l.size() << ","
                      << c.tref_r.size() << "," << c.fig8.size() << ","
                      << ids[static_cast<size_t>(ch.partner[i])] << ","
                      << csv_field(classes[i].canonical) << "\n";
        }
        return 0;
    }
    std::cout << "classes " << classes.size() << "\n";
    std::cout << "histogram";
    for (auto [k, v] : histogram) std::cout << " " << k << ":" << v;
    std::cout << "\n";
    std::cout << "achiral";
    for (int i : ch.achiral) std::cout << " " << ids[static_cast<size_t>(i)];
    std::cout << "\n";
    std::cout << "id min size census mirror canonical\n";
    for (size_t i = 0; i < classes.size(); ++i)
        std::cout << ids[i] << " " << classes[i].min_sheets << " "
                  << classes[i].size << " " << census_counts(censuses[i]) << " "
                  << ids[static_cast<size_t>(ch.partner[i])] << " "
                  << classes[i].canonical << "\n";
    return 0;
}

int cmd_verify_appendix(const Options& o) {
    auto gold = load_golden(o.golden);
    auto classes = classify_all(o.cache);
    AppendixReport report = verify_appendix(gold, classes);
    if (o.format == "json") {
        ordered_json entries = ordered_json::array();
        for (const EntryCheck& e : report.entries) {
            ordered_json row{{"id", e.id}, {"ok", e.ok()}};
            if (!e.detail.empty()) row["detail"] = e.detail;
            entries.push_back(row);
        }
        emit({{"command", "verify-appendix"},
              {"entries", entries},
              {"covered", report.covered},
              {"overlaps", report.overlaps},
              {"coverage_ok", report.coverage_ok},
              {"all_ok", report.all_ok()}});
    } else {
        for (const EntryCheck& e : report.entries)
            std::cout << e.id << (e.ok() ? " ok" : " FAIL " + e.detail) << "\n";
        std::cout << report.summary() << "\n";
    }
    return report.all_ok() ? 0 : 1;
}

int cmd_stats(const Options& o) {
    auto classes = classify_all(o.cache);
    auto censuses = class_censuses(classes, o.jobs);
    Stats st = aggregate_stats(classes, censuses);
    auto ids = class_ids(classes);
    auto names = [&](const std::vector<int>& v) {
        std::string s;
        for (int i : v) s += (s.empty() ? "" : " ") + ids[static_cast<size_t>(i)];
        return s;
    };
    if (o.format == "json") {
        auto arr = [&](const std::vector<int>& v) {
            ordered_json a = ordered_json::array();
            for (int i : v) a.push_back(ids[static_cast<size_t>(i)]);
            return a;
        };
        emit({{"command", "stats"},
              {"classes", classes.size()},
              {"min_links", st.min_links},
              {"max_links", st.max_links},
              {"max_links_classes", arr(st.max_links_classes)},
              {"max_knots", st.max_knots},
              {"max_knots_classes", arr(st.max_knots_classes)},
              {"max_fig8", st.max_fig8},
              {"max_fig8_classes", arr(st.max_fig8_classes)},
              {"max_crossing_number", st.max_crossing_number},
              {"min_sheets_4crossing", st.min_sheets_4crossing}});
    } else {
        std::cout << "classes " << classes.size() << "\n"
                  << "min-links " << st.min_links << "\n"
                  << "max-links " << st.max_links << " (" << names(st.max_links_classes)
                  << ")\n"
                  << "max-knots " << st.max_knots << " (" << names(st.max_knots_classes)
                  << ")\n"
                  << "max-fig8 " << st.max_fig8 << " (" << names(st.max_fig8_classes)
                  << ")\n"
                  << "max-crossing-number " << st.max_crossing_number << "\n"
                  << "min-sheets-4crossing " << st.min_sheets_4crossing << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"book representations of K6: classification, censuses, moves"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c, bool csv_ok) {
        std::vector<std::string> allowed{"text", "json"};
        if (csv_ok) allowed.push_back("csv");
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember(allowed));
    };

    auto* c_validate = app.add_subcommand("validate", "check a sheet string");
    c_validate->add_option("rep", o.rep, "sheet string")->required();
    add_format(c_validate, false);

    auto* c_census = app.add_subcommand("census", "knots and links of a rep");
    c_census->add_option("rep", o.rep, "sheet string")->required();
    add_format(c_census, true);

    auto* c_mirror = app.add_subcommand("mirror", "mirror image of a rep");
    c_mirror->add_option("rep", o.rep, "sheet string")->required();
    add_format(c_mirror, false);

    auto* c_orbit = app.add_subcommand("orbit", "explore the move closure of a rep");
    c_orbit->add_option("rep", o.rep, "sheet string")->required();
    c_orbit->add_option("--cap", o.cap, "max sheets explored")
        ->check(CLI::Range(1, int(N_INTERIOR)));
    add_format(c_orbit, false);

    auto* c_equiv = app.add_subcommand("equiv", "are two reps move-equivalent");
    c_equiv->add_option("rep", o.rep, "first sheet string")->required();
    c_equiv->add_option("rep2", o.rep2, "second sheet string")->required();
    add_format(c_equiv, false);

    auto* c_anchors = app.add_subcommand("anchors", "anchor sequences and chains");
    c_anchors->add_option("--rep", o.rep, "find anchor sequences of this rep");
    c_anchors->add_option("--length", o.length, "enumerate chains of this length")
        ->check(CLI::Range(2, int(N_INTERIOR)));
    c_anchors->add_flag("--linear", o.linear, "linear chains (default cyclic)");
    c_anchors->add_flag("--all", o.all_chains, "skip symmetry reduction");
    add_format(c_anchors, true);

    auto* c_replay = app.add_subcommand("replay", "apply a move script to a rep");
    c_replay->add_option("rep", o.rep, "starting sheet string")->required();
    c_replay->add_option("script", o.script, "move script path")->required();
    add_format(c_replay, false);

    auto* c_classify = app.add_subcommand("classify", "full classification");
    c_classify->add_option("--cache", o.cache, "class cache file");
    c_classify->add_option("--jobs", o.jobs, "worker threads (wall time only)")
        ->check(CLI::Range(1, 64));
    add_format(c_classify, true);

    auto* c_verify = app.add_subcommand("verify-appendix", "check golden data");
    c_verify->add_option("golden", o.golden, "golden data path")->required();
    c_verify->add_option("--cache", o.cache, "class cache file");
    add_format(c_verify, false);

    auto* c_stats = app.add_subcommand("stats", "aggregate class statistics");
    c_stats->add_option("--cache", o.cache, "class cache file");
    c_stats->add_option("--jobs", o.jobs, "worker threads (wall time only)")
        ->check(CLI::Range(1, 64));
    add_format(c_stats, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (const char* env = std::getenv("BOOKREP_CACHE")) o.cache = env;

    try {
        if (app.got_subcommand(c_validate)) return cmd_validate(o);
        if (app.got_subcommand(c_census)) return cmd_census(o);
        if (app.got_subcommand(c_mirror)) return cmd_mirror(o);
        if (app.got_subcommand(c_orbit)) return cmd_orbit(o);
        if (app.got_subcommand(c_equiv)) return cmd_equiv(o);
        if (app.got_subcommand(c_anchors)) return cmd_anchors(o);
        if (app.got_subcommand(c_replay)) return cmd_replay(o);
        if (app.got_subcommand(c_classify)) return cmd_classify(o);
        if (app.got_subcommand(c_verify)) return cmd_verify_appendix(o);
        if (app.got_subcommand(c_stats)) return cmd_stats(o);
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
