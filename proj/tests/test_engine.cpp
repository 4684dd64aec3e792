// The packed successor generator against the plain move API, orbits,
// equivalence, the full classification, chirality, anchor chains, and the
// golden-data verifier.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <bookrep/anchor.hpp>
#include <bookrep/census.hpp>
#include <bookrep/classify.hpp>
#include <bookrep/moves.hpp>
#include <bookrep/orbit.hpp>

using namespace bookrep;

namespace {

const char* OPTION1 = "13,14,46|15,24,25|26,35,36";
const char* OPTION2 = "13,14,46|26,35,36|15,24,25";
const char* OPTION3 = "14,15,24|13,36,46|25,26,35";
const char* OPTION4 = "14,15,24|25,26,35|13,36,46";
const char* REP_6S2 = "13,14|24,26|35,36|15|46|25";
const char* REP_6S3 = "13,14|24|36|15|26,46|25,35";
const char* NINE_A = "13|25|36|14|26|15|46|35|24";  // orbit of 54
const char* NINE_B = "13|25|46|35|14|26|15|36|24";  // orbit of 18

std::string data_file(const std::string& name) {
    const char* dir = std::getenv("BOOKREP_DATA_DIR");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string out((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    return out;
}

// classification shared by the test cases; cached on disk so reruns are warm
const std::vector<RepClass>& classes() {
    static const std::vector<RepClass> c = [] {
        const char* env = std::getenv("BOOKREP_CACHE");
        return classify_all(env ? env : "bookrep_classes_cache.tsv");
    }();
    return c;
}

const std::vector<Census>& class_censuses() {
    static const std::vector<Census> cs = [] {
        std::vector<Census> out;
        out.reserve(classes().size());
        for (const RepClass& rc : classes()) out.push_back(census(parse_rep(rc.canonical)));
        return out;
    }();
    return cs;
}

const std::vector<uint8_t>& labels() {
    static const std::vector<uint8_t> l = class_of_universe(classes());
    return l;
}

int class_index_of(const BookRep& r) {
    return labels()[engine::universe_index(all_packed_reps(), pack(r))];
}

// every one-move neighbor per the plain move API, in engine normal form
std::set<PackedRep> brute_successors(PackedRep key, int cap) {
    BookRep r = unpack(key);
    const int s = r.sheet_count();
    std::set<PackedRep> out;
    out.insert(pack(rotate_vertices(r, 1)));
    out.insert(pack(rotate_vertices(r, -1)));
    for (int axis = 0; axis < 6; ++axis) out.insert(pack(double_reflection(r, axis)));
    out.insert(pack(shift_sheets(r, 1)));
    out.insert(pack(shift_sheets(r, -1)));
    for (Edge e : k6_edges())
        for (Dir d : {Dir::up, Dir::down}) {
            BookRep m;
            try {
                m = edge_move(r, e, d);
            } catch (const move_error&) {
                continue;
            }
            for (int p = 0; p < m.sheet_count(); ++p)
                if (m.sheets[static_cast<size_t>(p)].empty()) {
                    m = delete_sheet(m, p + 1);  // drained source leaves
                    break;
                }
            out.insert(pack(m));
        }
    if (s < cap && s < 9)
        for (int sp = 0; sp < s; ++sp) {
            if (r.sheets[static_cast<size_t>(sp)].size() < 2) continue;
            for (Edge e : r.sheets[static_cast<size_t>(sp)]) {
                out.insert(pack(edge_move(insert_sheet(r, sp + 1), e, Dir::up)));
                out.insert(pack(edge_move(insert_sheet(r, sp + 2), e, Dir::down)));
            }
        }
    for (int v = 1; v <= 6; ++v) {
        try {
            out.insert(pack(vertex_exchange(r, v, v % 6 + 1)));
        } catch (const move_error&) {
        }
    }
    return out;
}

Cycle relabel(const Cycle& c, const std::array<int, 7>& sigma) {
    std::vector<uint8_t> v;
    for (uint8_t x : c.v) v.push_back(static_cast<uint8_t>(sigma[x]));
    return Cycle(std::move(v));
}

}  // namespace

TEST_CASE("packed successors mirror the move api") {
    const auto& all = all_packed_reps();
    REQUIRE(all.size() == 2290260u);
    int samples = 0;
    for (size_t i = 0; i < all.size(); i += 9161) {
        ++samples;
        PackedRep key = all[i];
        std::set<PackedRep> fast;
        engine::for_each_successor(key, 9, [&](PackedRep nk) { fast.insert(nk); });
        INFO("rep " << packed_str(key));
        CHECK(fast == brute_successors(key, 9));
        for (PackedRep nk : fast) {
            CHECK(std::binary_search(all.begin(), all.end(), nk));
            CHECK(!validate(unpack(nk)));
        }
    }
    CHECK(samples >= 250);

    // the sheet cap only suppresses splits
    PackedRep k1 = pack(parse_rep(OPTION1));
    std::set<PackedRep> capped, full;
    engine::for_each_successor(k1, 3, [&](PackedRep nk) { capped.insert(nk); });
    engine::for_each_successor(k1, 9, [&](PackedRep nk) { full.insert(nk); });
    CHECK(capped == brute_successors(k1, 3));
    CHECK(std::includes(full.begin(), full.end(), capped.begin(), capped.end()));
    for (PackedRep nk : full)
        if (!capped.count(nk)) CHECK(packed_sheet_count(nk) == 4);

    CHECK(engine::universe_index(all, k1) < all.size());
    CHECK_THROWS_AS(engine::universe_index(all, PackedRep{0}), std::logic_error);
}

TEST_CASE("orbit of the three-sheet book") {
    Orbit o = orbit_of(parse_rep(OPTION1), 4);
    CHECK(o.size() == 2868u);
    CHECK(o.min_sheets == 3);
    CHECK(o.canonical == "13,14,15|24,25,26|35,36|46");
    CHECK(o.canonical_key == pack(parse_rep(o.canonical)));
    CHECK(std::is_sorted(o.members.begin(), o.members.end()));
    CHECK(std::adjacent_find(o.members.begin(), o.members.end()) == o.members.end());

    auto has = [&](const char* text) {
        PackedRep k = pack(parse_rep(text));
        return std::binary_search(o.members.begin(), o.members.end(), k);
    };
    CHECK(has(OPTION1));
    CHECK(has(OPTION2));
    CHECK(has(OPTION3));
    CHECK(has(OPTION4));
    CHECK(std::binary_search(o.members.begin(), o.members.end(),
                             pack(mirror(parse_rep(OPTION1)))));

    for (size_t i = 0; i < o.members.size(); i += 97)
        CHECK(!validate(unpack(o.members[i])));
}

TEST_CASE("equivalence queries") {
    BookRep opt1 = parse_rep(OPTION1);
    CHECK(equivalent(opt1, parse_rep(OPTION2)));
    CHECK(equivalent(opt1, parse_rep(OPTION3)));
    CHECK(equivalent(opt1, parse_rep(OPTION4)));
    CHECK(equivalent(opt1, mirror(opt1)));  // the three-sheet class is achiral

    BookRep a = parse_rep(NINE_A), b = parse_rep(NINE_B);
    CHECK(orbit_of(a).size() == 54u);
    CHECK(orbit_of(b).size() == 18u);
    CHECK_FALSE(equivalent(a, b));
    CHECK(min_sheet_number(a) == 9);
    CHECK(min_sheet_number(b) == 9);
}

TEST_CASE("full classification") {
    const auto& cls = classes();
    REQUIRE(cls.size() == 57u);

    std::map<int, int> hist;
    uint64_t total = 0;
    std::set<std::string> canon;
    for (const RepClass& rc : cls) {
        ++hist[rc.min_sheets];
        total += rc.size;
        canon.insert(rc.canonical);
        CHECK(!validate(parse_rep(rc.canonical)));
        CHECK(rc.canonical_key == pack(parse_rep(rc.canonical)));
    }
    CHECK(hist == std::map<int, int>{{3, 1}, {4, 2}, {5, 10}, {6, 18},
                                     {7, 10}, {8, 12}, {9, 4}});
    CHECK(total == 2290260u);
    CHECK(canon.size() == cls.size());

    CHECK(cls[0].canonical == "13,14,15|24,25,26|35,36|46");
    CHECK(cls[0].min_sheets == 3);
    CHECK(cls[0].size == 1157580u);
    CHECK(cls[1].canonical == "13,14,15|24,26|35,36|25|46");
    CHECK(cls[1].min_sheets == 4);
    CHECK(cls[1].size == 276294u);
    CHECK(cls[2].canonical == "13,14,15|24,26|35,36|46|25");
    CHECK(cls[2].min_sheets == 4);
    CHECK(cls[2].size == 276294u);
    CHECK(cls[3].canonical == "13,14,15|24,26|35|46|25|36");
    CHECK(cls[3].min_sheets == 5);
    CHECK(cls[3].size == 155352u);

    // the two smallest nine-sheet orbits
    bool saw_a = false, saw_b = false;
    for (const RepClass& rc : cls) {
        if (rc.canonical == NINE_A) { saw_a = true; CHECK(rc.size == 54u); }
        if (rc.canonical == NINE_B) { saw_b = true; CHECK(rc.size == 18u); }
    }
    CHECK(saw_a);
    CHECK(saw_b);

    // labels agree with the class sizes
    std::vector<uint64_t> counts(cls.size(), 0);
    for (uint8_t l : labels()) ++counts[l];
    for (size_t i = 0; i < cls.size(); ++i) CHECK(counts[i] == cls[i].size);

    CHECK(class_index_of(parse_rep(OPTION1)) == 0);
    CHECK(class_index_of(parse_rep(OPTION2)) == 0);
}

TEST_CASE("classification cache round-trip") {
    const auto& cls = classes();
    std::string tmp = "bookrep_cache_test.tsv";
    store_classes(tmp, cls);
    std::vector<RepClass> loaded;
    REQUIRE(load_classes(tmp, loaded));
    REQUIRE(loaded.size() == cls.size());
    for (size_t i = 0; i < cls.size(); ++i) {
        CHECK(loaded[i].canonical == cls[i].canonical);
        CHECK(loaded[i].canonical_key == cls[i].canonical_key);
        CHECK(loaded[i].min_sheets == cls[i].min_sheets);
        CHECK(loaded[i].size == cls[i].size);
    }

    std::vector<RepClass> junk;
    CHECK_FALSE(load_classes("no_such_cache_file.tsv", junk));
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << "not a cache\n";
    }
    CHECK_FALSE(load_classes(tmp, junk));
    std::remove(tmp.c_str());
}

TEST_CASE("the published six-sheet pair is one class") {
    BookRep r62 = parse_rep(REP_6S2);
    BookRep r63 = parse_rep(REP_6S3);

    // the shipped move script carries one onto the other
    auto moves = parse_move_script(slurp(data_file("merge_6s2_6s3.txt")));
    REQUIRE(moves.size() == 6);
    BookRep cur = r62;
    for (const ScriptMove& m : moves) {
        cur = apply_move(cur, m);
        CHECK(!validate(cur, true));
    }
    CHECK(serialize(cur) == REP_6S3);

    // and so does the raw move API
    BookRep direct = double_reflection(r62, 3);
    direct = shift_sheets(direct, -1);
    direct = shift_sheets(direct, -1);
    direct = edge_move(direct, Edge(2, 6), Dir::up);
    direct = edge_move(direct, Edge(3, 5), Dir::up);
    direct = edge_move(direct, Edge(1, 4), Dir::up);
    CHECK(direct == r63);

    CHECK(equivalent(r62, r63));
    CHECK(class_index_of(r62) == class_index_of(r63));
    CHECK(census_signature(census(r62)) == census_signature(census(r63)));

    // censuses correspond under the vertex relabeling (14)(23)(56)
    const std::array<int, 7> sigma = {0, 4, 3, 2, 1, 6, 5};
    Census c2 = census(r62);
    Census c3 = census(r63);
    auto map_cycles = [&](std::vector<Cycle> v) {
        for (Cycle& c : v) c = relabel(c, sigma);
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(map_cycles(c2.tref_l) == c3.tref_l);
    CHECK(map_cycles(c2.tref_r) == c3.tref_r);
    CHECK(map_cycles(c2.fig8) == c3.fig8);
    std::vector<TrianglePair> hopf;
    for (const TrianglePair& p : c2.hopf)
        hopf.emplace_back(relabel(p.first, sigma), relabel(p.second, sigma));
    std::sort(hopf.begin(), hopf.end());
    CHECK(hopf == c3.hopf);
    CHECK(c2.solomon.empty());
    CHECK(c3.solomon.empty());
}

TEST_CASE("chirality pairing") {
    const auto& cls = classes();
    Chirality ch = chirality(cls, class_censuses());
    REQUIRE(ch.partner.size() == cls.size());

    CHECK(ch.achiral == std::vector<int>{0});  // only the three-sheet class
    int pairs = 0;
    for (size_t i = 0; i < cls.size(); ++i) {
        int p = ch.partner[i];
        REQUIRE(p >= 0);
        CHECK(ch.partner[static_cast<size_t>(p)] == static_cast<int>(i));
        CHECK(cls[static_cast<size_t>(p)].size == cls[i].size);
        CHECK(cls[static_cast<size_t>(p)].min_sheets == cls[i].min_sheets);
        if (static_cast<int>(i) < p) ++pairs;
        CHECK(census_signature(class_censuses()[static_cast<size_t>(p)]) ==
              census_signature(mirrored(class_censuses()[i])));
    }
    CHECK(pairs == 28);

    // the explicit mirror lands in the partner class
    for (size_t i = 0; i < cls.size(); i += 7)
        CHECK(class_index_of(mirror(parse_rep(cls[i].canonical))) == ch.partner[i]);
}

TEST_CASE("census laws by minimum sheet number") {
    const auto& cls = classes();
    const auto& cs = class_censuses();
    auto hamiltonian = [](const std::vector<Cycle>& v) {
        int n = 0;
        for (const Cycle& c : v) n += c.size() == 6;
        return n;
    };
    for (size_t i = 0; i < cls.size(); ++i) {
        CAPTURE(i, cls[i].canonical, cls[i].min_sheets);
        const Census& c = cs[i];
        CHECK(c.links() >= 1);
        if (cls[i].min_sheets <= 5) {
            CHECK(c.fig8.empty());
            CHECK(c.solomon.empty());
        }
        if (cls[i].min_sheets == 6)  // one twist family at most
            CHECK((c.fig8.empty() || c.solomon.empty()));
        if (cls[i].min_sheets == 6 || cls[i].min_sheets == 8)
            CHECK(hamiltonian(c.tref_l) != hamiltonian(c.tref_r));
        if (cls[i].min_sheets == 7) {
            CHECK(c.links() >= 4);
            CHECK(c.knots() >= 5);
        }
    }
}

TEST_CASE("anchor sequences and chains") {
    // concrete anchors of a five-sheet book, one edge per sheet
    auto found = find_anchor_sequences(parse_rep("13,36,46|15,24|35|14|25,26"));
    std::vector<std::string> strs;
    for (const auto& s : found) {
        std::string t;
        for (Edge e : s) t += (t.empty() ? "" : " ") + edge_str(e);
        strs.push_back(t);
    }
    CHECK(strs == std::vector<std::string>{"13 24 35 14 25", "13 24 35 14 26",
                                           "36 24 35 14 25", "36 24 35 14 26"});

    const std::vector<std::vector<const char*>> reps = {
        {"13,24,35,46,25", "13,24,35,14,25", "13,24,36,14,25"},
        {"13,24,35,14,36,25", "13,24,35,46,15,26", "13,24,36,15,46,25"},
        {"13,24,35,46,15,36,25", "13,24,36,14,35,46,25"},
        {"13,24,35,14,26,15,46,25", "13,24,35,14,36,15,46,25",
         "13,24,35,46,15,26,14,25", "13,24,35,46,15,36,14,25"},
        {"13,24,35,46,15,26,14,36,25", "13,24,36,15,26,14,35,46,25"},
    };
    auto parse_chain = [](const std::string& text) {
        AnchorSequence s;
        for (size_t i = 0; i < text.size(); i += 3)
            s.emplace_back(text[i] - '0', text[i + 1] - '0');
        return s;
    };
    for (int len = 5; len <= 9; ++len) {
        auto reduced = symmetry_reduce(enumerate_anchor_chains(len));
        const auto& want = reps[static_cast<size_t>(len - 5)];
        REQUIRE(reduced.size() == want.size());
        std::set<std::string> got_keys, want_keys;
        for (const auto& s : reduced) got_keys.insert(anchor_canonical(s));
        for (const char* t : want) want_keys.insert(anchor_canonical(parse_chain(t)));
        CHECK(got_keys == want_keys);
    }

    auto nine = enumerate_anchor_chains(9);
    CHECK(nine.size() == 144u);
    for (const auto& chain : nine) CHECK(cyclic9_conflict(chain));

    CHECK_THROWS_AS(enumerate_anchor_chains(1), std::invalid_argument);
    CHECK_THROWS_AS(cyclic9_conflict(AnchorSequence{}), std::invalid_argument);
}

TEST_CASE("no sheet pattern 2,2,2,2,1 threads a cyclic nine-chain") {
    const std::vector<int> shape = {2, 2, 2, 2, 1};
    int seen = 0;
    for (PackedRep k : all_packed_reps()) {
        if (packed_sheet_count(k) != 5) continue;
        BookRep r = unpack(k);
        if (config(r) != shape) continue;
        ++seen;
        CHECK_FALSE(admits_cyclic9(r));
    }
    CHECK(seen == 2880);

    CHECK_THROWS_AS(admits_cyclic9(parse_rep(OPTION1)), std::invalid_argument);
}

TEST_CASE("golden appendix verifies against the classification") {
    auto gold = load_golden(data_file("appendix_k6.txt"));
    REQUIRE(gold.size() == 30u);

    AppendixReport report = verify_appendix(gold, classes(), labels());
    for (const EntryCheck& e : report.entries) {
        CAPTURE(e.id, e.detail);
        CHECK(e.ok());
    }
    CHECK(report.covered == 57);
    CHECK(report.coverage_ok);
    CHECK(report.overlaps == 3);
    CHECK(report.all_ok());
    CHECK(report.summary() == "30/30 entries verified, coverage 57 (complete), overlaps 3");

    // a flipped trefoil chirality is caught
    auto flipped = gold;
    for (GoldenEntry& g : flipped)
        if (g.id == "4s1") {
            g.expected.tref_l.push_back(g.expected.tref_r.back());
            g.expected.tref_r.pop_back();
            std::sort(g.expected.tref_l.begin(), g.expected.tref_l.end());
        }
    AppendixReport bad = verify_appendix(flipped, classes(), labels());
    CHECK_FALSE(bad.all_ok());
    int failures = 0;
    for (const EntryCheck& e : bad.entries)
        if (!e.ok()) {
            ++failures;
            CHECK(e.id == "4s1");
            CHECK_FALSE(e.census_ok);
            CHECK(!e.detail.empty());
        }
    CHECK(failures == 1);

    // dropping an entry leaves its class and mirror uncovered
    auto dropped = gold;
    dropped.erase(std::remove_if(dropped.begin(), dropped.end(),
                                 [](const GoldenEntry& g) { return g.id == "6s7"; }),
                  dropped.end());
    AppendixReport partial = verify_appendix(dropped, classes(), labels());
    CHECK(partial.covered == 55);
    CHECK_FALSE(partial.coverage_ok);
    CHECK_FALSE(partial.all_ok());
}

TEST_CASE("aggregate statistics") {
    auto gold = load_golden(data_file("appendix_k6.txt"));
    AppendixReport report = verify_appendix(gold, classes(), labels());
    auto ci = [&](const std::string& id) {
        for (const EntryCheck& e : report.entries)
            if (e.id == id) return e.class_index;
        FAIL("missing entry " + id);
        return -1;
    };

    Stats st = aggregate_stats(classes(), class_censuses());
    CHECK(st.min_links == 1);
    CHECK(st.max_links == 7);
    CHECK(st.max_knots == 9);
    CHECK(st.max_fig8 == 3);
    CHECK(st.max_crossing_number == 4);
    CHECK(st.min_sheets_4crossing == 6);

    auto contains = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    CHECK(contains(st.max_links_classes, ci("6s10")));
    CHECK(contains(st.max_links_classes, ci("9s2")));
    CHECK(contains(st.max_knots_classes, ci("8s3")));
    CHECK(contains(st.max_knots_classes, ci("9s2")));
    CHECK(contains(st.max_knots_classes, ci("8s1")));
    CHECK(contains(st.max_fig8_classes, ci("9s2")));
}
