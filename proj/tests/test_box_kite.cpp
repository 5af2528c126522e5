#include "oracle.hpp"

#include "cdp/box_kite.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace cdp;

namespace {

bool oracle_any_zero(const std::vector<int>& table, int n, Index lo1, Index hi1, Index lo2, Index hi2)
{
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            if (oracle::dyads_annihilate(table, n, lo1, 1, hi1, s1, lo2, 1, hi2, s2)) return true;
        }
    }
    return false;
}

// Independent census: closed triples of strut pairs whose 12 cross edges all make zero.
std::vector<std::set<Index>> oracle_census(int n, Index s)
{
    const auto table = oracle::sign_table(n);
    const Index g = Index{1} << (n - 1);
    const Index x = g + s;
    std::set<std::set<Index>> kites;
    for (Index a = 1; a < g; ++a) {
        for (Index b = 1; b < g; ++b) {
            if (a == s || b == s || b == a || b == (a ^ s)) continue;
            const Index c = a ^ b;
            if (c == s || c == 0) continue;
            const std::array<Index, 6> lo{a, a ^ s, b, b ^ s, c, c ^ s};
            bool all = true;
            for (int i = 0; i < 6 && all; ++i) {
                for (int j = i + 1; j < 6 && all; ++j) {
                    if ((lo[i] ^ lo[j]) == s) continue;
                    all = oracle_any_zero(table, n, lo[i], lo[i] ^ x, lo[j], lo[j] ^ x);
                }
            }
            if (all) kites.insert(std::set<Index>(lo.begin(), lo.end()));
        }
    }
    return {kites.begin(), kites.end()};
}

std::set<Index> lo_set(const BoxKite& bk)
{
    std::set<Index> out;
    for (const auto& v : bk.vertices()) out.insert(v.lo);
    return out;
}

} // namespace

TEST_CASE("S=4 sedenion kite from zigzag (1,2,3)")
{
    const BoxKite bk = build_boxkite(Level(4), 4, {1, 2, 3});
    const std::array<std::pair<Index, Index>, 6> expected{{{1, 13}, {2, 14}, {3, 15}, {7, 11}, {6, 10}, {5, 9}}};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(bk.vertex(kLabels[i]).lo == expected[i].first);
        CHECK(bk.vertex(kLabels[i]).hi == expected[i].second);
    }
    CHECK(check_invariants(bk).empty());

    std::ostringstream os;
    write_boxkite(os, bk);
    CHECK(os.str() ==
          "4 4\nA 1 13\nB 2 14\nC 3 15\nD 7 11\nE 6 10\nF 5 9\n"
          "A B RED\nA C RED\nA D BLUE\nA E BLUE\nB C RED\nB D BLUE\nB F BLUE\n"
          "C E BLUE\nC F BLUE\nD E RED\nD F RED\nE F RED\n");
}

TEST_CASE("build_boxkite accepts any order and rejects bad input")
{
    const BoxKite bk = build_boxkite(Level(4), 7, {5, 1, 4});
    CHECK(bk.vertex(Label::A).lo == 1);
    CHECK(bk.vertex(Label::B).lo == 4);
    CHECK(bk.vertex(Label::C).lo == 5);
    CHECK_THROWS_AS(build_boxkite(Level(4), 1, {2, 3, 1}), DomainError);   // touches S
    CHECK_THROWS_AS(build_boxkite(Level(4), 1, {2, 4, 6}), DomainError);   // not the zigzag
    CHECK_THROWS_AS(build_boxkite(Level(4), 4, {1, 2, 4}), DomainError);   // not a trip
    CHECK_THROWS_AS(build_boxkite(Level(4), 8, {1, 2, 3}), DomainError);   // S out of range
    CHECK_THROWS_AS(build_boxkite(Level(4), 2, {1, 3, 2}), DomainError);
}

TEST_CASE("census matches an independent search at N=4 and N=5")
{
    for (int n : {4, 5}) {
        const Index g = Index{1} << (n - 1);
        for (Index s = 1; s < g; ++s) {
            const Census c = census(Level(n), s);
            const auto expected = oracle_census(n, s);
            REQUIRE(c.kites.size() == expected.size());
            std::vector<std::set<Index>> got;
            for (const auto& bk : c.kites) got.push_back(lo_set(bk));
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
            CHECK(c.kites.size() == (n == 4 ? 1u : (s <= 8 ? 7u : 3u)));
            if (n == 4 || s <= 8) CHECK(c.broken.empty());
        }
    }
    CHECK_THROWS_AS(census(Level(4), 0), DomainError);
    CHECK_THROWS_AS(census(Level(4), 8), DomainError);
}

TEST_CASE("kite invariants across the pathion census")
{
    for (int n : {4, 5}) {
        const Level lvl(n);
        for (Index s = 1; s < lvl.generator(); ++s) {
            for (const BoxKite& bk : census(lvl, s).kites) {
                REQUIRE(check_invariants(bk).empty());
                for (Label l : kLabels) {
                    const auto& v = bk.vertex(l);
                    REQUIRE(v.hi == (v.lo ^ bk.x()));
                    REQUIRE((v.lo ^ bk.vertex(strut_opposite(l)).lo) == s);
                    REQUIRE_FALSE(dmz_pattern(v, bk.vertex(strut_opposite(l))));
                }
                const EdgeColorStats st = edge_color_stats(bk);
                REQUIRE(st.red == 6);
                REQUIRE(st.blue == 6);
                REQUIRE(st.red_is_zigzag_and_vent);

                std::map<Label, int> sail_count;
                for (const Sail& sail : classify_sails(bk)) {
                    for (Label l : sail.labels) ++sail_count[l];
                    for (const auto& t : sail.trips) REQUIRE(is_cpo(t));
                }
                for (Label l : kLabels) REQUIRE(sail_count[l] == 2);
            }
        }
    }
}

TEST_CASE("pathion S>8 kites share one strut")
{
    for (Index s = 9; s < 16; ++s) {
        const Census c = census(Level(5), s);
        std::set<std::set<Index>> common;
        for (Label l : {Label::A, Label::B, Label::C}) {
            const Index lo = c.kites[0].vertex(l).lo;
            common.insert({lo, lo ^ s});
        }
        for (const auto& bk : c.kites) {
            std::set<std::set<Index>> struts;
            for (Label l : {Label::A, Label::B, Label::C}) {
                const Index lo = bk.vertex(l).lo;
                struts.insert({lo, lo ^ s});
            }
            std::set<std::set<Index>> keep;
            std::set_intersection(common.begin(), common.end(), struts.begin(), struts.end(),
                                  std::inserter(keep, keep.begin()));
            common = keep;
        }
        CHECK(common.size() == 1);
        CHECK(c.broken.size() == 4);
        // The shared strut holds G/2 = 8 and S xor 8.
        CHECK(common.begin()->count(8) == 1);
    }
}

TEST_CASE("sails of the S=4 kite")
{
    const auto sails = classify_sails(build_boxkite(Level(4), 4, {1, 2, 3}));
    CHECK(sails[0].kind == SailKind::kZigzag);
    CHECK(sails[0].trips[0] == CpoTriple{1, 2, 3});
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(sails[i].kind == SailKind::kTrefoil);
        int shared = 0;
        for (Label l : sails[i].labels) shared += l <= Label::C ? 1 : 0;
        CHECK(shared == 1);
    }
    const std::set<Index> u_trip(sails[0].trips[1].begin(), sails[0].trips[1].end());
    CHECK(u_trip == std::set<Index>{1, 14, 15});
}

TEST_CASE("sedenion zigzag and trefoil distribution")
{
    std::map<std::set<Index>, int> zig;
    std::map<std::set<Index>, int> tref;
    std::set<std::size_t> slots_365;
    std::set<std::size_t> slots_123;
    for (Index s = 1; s < 8; ++s) {
        const BoxKite bk = census(Level(4), s).kites.at(0);
        const auto sails = classify_sails(bk);
        ++zig[std::set<Index>(sails[0].trips[0].begin(), sails[0].trips[0].end())];
        for (std::size_t i = 1; i < 4; ++i) {
            const std::set<Index> t(sails[i].trips[0].begin(), sails[i].trips[0].end());
            ++tref[t];
            if (t == std::set<Index>{3, 5, 6}) slots_365.insert(i);
            if (t == std::set<Index>{1, 2, 3}) slots_123.insert(i);
        }
    }
    CHECK(zig.size() == 7);
    CHECK(tref.size() == 7);
    for (const auto& [t, k] : zig) CHECK(k == 1);
    for (const auto& [t, k] : tref) CHECK(k == 3);
    CHECK(slots_365 == std::set<std::size_t>{3});  // (F,C,E)
    CHECK(slots_123 == std::set<std::size_t>{1});  // (A,D,E)
}

TEST_CASE("lanyards")
{
    const BoxKite bk = build_boxkite(Level(4), 4, {1, 2, 3});
    const Lanyard zz = trace_lanyard(bk, LanyardKind::kZigzag);
    CHECK(zz.visited.size() == 6);
    CHECK(same_signature(zz.signature, "/\\/\\/\\"));
    for (int t = 0; t < 3; ++t) {
        const Lanyard tr = trace_lanyard(bk, LanyardKind::kTrefoil, t);
        CHECK(tr.visited.size() == 6);
        CHECK(same_signature(tr.signature, "///\\\\\\"));
    }
    for (int c = 0; c < 3; ++c) {
        const Lanyard cat = trace_lanyard(bk, LanyardKind::kCatamaran, c);
        CHECK(cat.visited.size() == 4);
        CHECK(same_signature(cat.signature, "//\\\\"));
        std::set<Index> planes;
        for (const auto& d : cat.visited) planes.insert(d.assessor.lo);
        CHECK(planes.size() == 4);
    }
    CHECK(trace_lanyard(bk, LanyardKind::kBlues, 0).signature == "//////");
    CHECK(trace_lanyard(bk, LanyardKind::kBlues, 1).signature == "\\\\\\\\\\\\");
    for (const auto& kind : {LanyardKind::kZigzag, LanyardKind::kTrefoil, LanyardKind::kCatamaran}) {
        const Lanyard l = trace_lanyard(bk, kind);
        for (std::size_t i = 0; i < l.visited.size(); ++i) {
            REQUIRE(is_dmz(l.visited[i], l.visited[(i + 1) % l.visited.size()]));
        }
    }
    CHECK_THROWS_AS(trace_lanyard(bk, LanyardKind::kTrefoil, 3), DomainError);
    CHECK_THROWS_AS(trace_cycle(bk, {Label::A, Label::F}, Slope::kSlash), DomainError);
    CHECK(same_signature("//\\\\", "\\//\\"));
    CHECK_FALSE(same_signature("//\\\\", "/\\/\\"));
}

TEST_CASE("lanyards close for every kite at N=4 and N=5")
{
    for (int n : {4, 5}) {
        const Level lvl(n);
        for (Index s = 1; s < lvl.generator(); ++s) {
            for (const BoxKite& bk : census(lvl, s).kites) {
                REQUIRE(same_signature(trace_lanyard(bk, LanyardKind::kZigzag).signature, "/\\/\\/\\"));
                for (int t = 0; t < 3; ++t) {
                    REQUIRE(same_signature(trace_lanyard(bk, LanyardKind::kTrefoil, t).signature, "///\\\\\\"));
                    REQUIRE(same_signature(trace_lanyard(bk, LanyardKind::kCatamaran, t).signature, "//\\\\"));
                }
            }
        }
    }
}

TEST_CASE("catamaran twist locality in the sedenions")
{
    for (Index s = 1; s < 8; ++s) {
        const BoxKite bk = census(Level(4), s).kites.at(0);
        for (int which = 0; which < 3; ++which) {
            const auto t = catamaran_twist_targets(bk, which);
            CHECK(t[0] == t[2]);
            CHECK(t[1] == t[3]);
            CHECK(t[0] != t[1]);
            CHECK(t[0] != s);
            CHECK(t[1] != s);
        }
    }
}

TEST_CASE("viziers agree with oracle signs")
{
    for (int n : {4, 5}) {
        const Level lvl(n);
        const auto table = oracle::sign_table(n);
        const Index dim = lvl.dim();
        for (Index s = 1; s < lvl.generator(); ++s) {
            for (const BoxKite& bk : census(lvl, s).kites) {
                const VizierReport r = viziers_check(bk);
                for (const StrutViziers& sv : r.struts) {
                    const Index z = bk.vertex(sv.zigzag).lo, bz = bk.vertex(sv.zigzag).hi;
                    const Index v = bk.vertex(sv.vent).lo, bv = bk.vertex(sv.vent).hi;
                    REQUIRE(sv.vz1[0] == (table[v * dim + z] == 1));
                    REQUIRE(sv.vz2[0] == (table[bv * dim + z] == 1));
                    REQUIRE(sv.vz2[1] == (table[bz * dim + v] == 1));
                    REQUIRE(sv.vz3[1] == (table[z * dim + bz] == 1));
                    REQUIRE(sv.vz1_unsigned);
                    REQUIRE(sv.vz2_unsigned);
                    REQUIRE(sv.vz3_unsigned);
                    REQUIRE(sv.vz2[0]);
                    REQUIRE(sv.vz2[1]);
                }
                if (n == 4) REQUIRE(r.type == KiteType::kTypeI);
            }
        }
    }
}

TEST_CASE("pathion vizier types are recorded")
{
    std::map<Index, int> type2;
    for (Index s = 1; s < 16; ++s) {
        for (const BoxKite& bk : census(Level(5), s).kites) {
            if (viziers_check(bk).type == KiteType::kTypeII) ++type2[s];
        }
    }
    // Observed: two-strut reversals occur only among S < 8 ensembles.
    for (const auto& [s, k] : type2) CHECK(s < 8);
    CHECK_FALSE(type2.empty());
}

TEST_CASE("168 oriented edge flows over the sedenion kites")
{
    std::size_t flows = 0;
    for (Index s = 1; s < 8; ++s) {
        for (const BoxKite& bk : census(Level(4), s).kites) flows += 2 * bk.edges().size();
    }
    CHECK(flows == 168);
}
