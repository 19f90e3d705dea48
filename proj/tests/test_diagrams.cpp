#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parafield/diagrams.hpp"
#include "parafield/json_io.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace parafield;

namespace {

std::vector<std::string> as_strings(const std::vector<ChordDiagram>& ds) {
    std::vector<std::string> out;
    for (const auto& d : ds) {
        out.push_back(d.to_string());
    }
    return out;
}

// Independent enumeration: all permutations of 1..2n read off as consecutive
// pairs, deduplicated after canonicalization.
std::set<ChordDiagram> matchings_from_permutations(int n) {
    std::vector<int> points(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        points[static_cast<std::size_t>(i)] = i + 1;
    }
    std::set<ChordDiagram> out;
    do {
        std::vector<Chord> chords;
        for (int i = 0; i < n; ++i) {
            chords.push_back({points[static_cast<std::size_t>(2 * i)], points[static_cast<std::size_t>(2 * i + 1)]});
        }
        out.insert(ChordDiagram(chords));
    } while (std::next_permutation(points.begin(), points.end()));
    return out;
}

} // namespace

TEST_CASE("enumerate_matchings small cases") {
    CHECK(as_strings(enumerate_matchings(1)) == std::vector<std::string>{"1-2"});
    CHECK(as_strings(enumerate_matchings(2)) == std::vector<std::string>{"1-2,3-4", "1-3,2-4", "1-4,2-3"});
    CHECK(enumerate_matchings(3).size() == 15);
}

TEST_CASE("enumeration matches permutation-based oracle and is sorted") {
    for (int n = 1; n <= 4; ++n) {
        const auto listed = enumerate_matchings(n);
        const auto oracle = matchings_from_permutations(n);
        CHECK(listed.size() == oracle.size());
        CHECK(std::is_sorted(listed.begin(), listed.end()));
        CHECK(std::set<ChordDiagram>(listed.begin(), listed.end()) == oracle);
    }
}

TEST_CASE("(2n-1)!! count for every n up to the default cap") {
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t count = 0;
        for_each_matching(n, [&](const ChordDiagram&) { ++count; });
        CHECK(count == double_factorial_odd(n));
    }
    CHECK(double_factorial_odd(8) == 2'027'025);
}

TEST_CASE("cap") {
    CHECK_THROWS_AS(enumerate_matchings(9), CapExceeded);
    CHECK_THROWS_AS(crossing_census(9), CapExceeded);
    try {
        enumerate_matchings(9);
    } catch (const CapExceeded& e) {
        CHECK(e.flag() == "--max-n");
    }
    CHECK(enumerate_matchings(2, 2).size() == 3);
    CHECK_THROWS_AS(enumerate_matchings(3, 2), CapExceeded);
    CHECK_THROWS_AS(enumerate_matchings(0), std::invalid_argument);
}

TEST_CASE("parse and canonicalize") {
    CHECK(ChordDiagram::parse("4-7,3-8,2-6,1-5").to_string() == "1-5,2-6,3-8,4-7");
    CHECK(ChordDiagram::parse("2-1").to_string() == "1-2");
    CHECK_THROWS_AS(ChordDiagram::parse("1-2,2-3"), InvalidDiagram);
    CHECK_THROWS_AS(ChordDiagram::parse("1-3"), InvalidDiagram);
    CHECK_THROWS_AS(ChordDiagram::parse("1-2,3"), InvalidDiagram);
    CHECK_THROWS_AS(ChordDiagram::parse("1-2,"), InvalidDiagram);
    CHECK_THROWS_AS(ChordDiagram::parse(""), InvalidDiagram);
    CHECK_THROWS_AS(ChordDiagram::parse("1-x"), InvalidDiagram);
    CHECK_THROWS_AS(ChordDiagram::parse("1-1"), InvalidDiagram);
    CHECK(ChordDiagram::saturated(3).to_string() == "1-4,2-5,3-6");
}

TEST_CASE("crossing_count") {
    CHECK(crossing_count(ChordDiagram::parse("1-2,3-4")) == 0);
    CHECK(crossing_count(ChordDiagram::parse("1-3,2-4")) == 1);
    CHECK(crossing_count(ChordDiagram::parse("1-4,2-3")) == 0);
    CHECK(crossing_count(ChordDiagram::parse("1-5,2-6,3-8,4-7")) == 5);
}

TEST_CASE("crossing_graph") {
    const auto two = crossing_graph(ChordDiagram::parse("1-2,3-4"));
    CHECK(two.vertex_count() == 2);
    CHECK(two.edge_count() == 0);

    CHECK(crossing_graph(ChordDiagram::parse("1-4,2-5,3-6")) == CrossingGraph::complete(3));

    const auto fig1 = crossing_graph(ChordDiagram::parse("1-5,2-6,3-8,4-7"));
    const std::vector<std::pair<int, int>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK(fig1.edges() == expected);
    CHECK(fig1.to_string() == "{1,2} {1,3} {1,4} {2,3} {2,4}");
}

TEST_CASE("crossing invariants over all diagrams n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        int saturated_count = 0;
        const int max_m = n * (n - 1) / 2;
        for_each_matching(n, [&](const ChordDiagram& d) {
            const int m = crossing_count(d);
            CHECK(m >= 0);
            CHECK(m <= max_m);
            CHECK(crossing_graph(d).edge_count() == static_cast<std::size_t>(m));
            if (m == max_m) {
                ++saturated_count;
                CHECK(d == ChordDiagram::saturated(n));
            }
        });
        CHECK(saturated_count == 1);
    }
}

TEST_CASE("crossing_census table rows") {
    CHECK(crossing_census(1) == std::map<int, std::uint64_t>{{0, 1}});
    CHECK(crossing_census(2) == std::map<int, std::uint64_t>{{0, 2}, {1, 1}});
    CHECK(crossing_census(3) == std::map<int, std::uint64_t>{{0, 5}, {1, 6}, {2, 3}, {3, 1}});
    CHECK(crossing_census(4) ==
          std::map<int, std::uint64_t>{{0, 14}, {1, 28}, {2, 28}, {3, 20}, {4, 10}, {5, 4}, {6, 1}});
    CHECK(crossing_census(5) == std::map<int, std::uint64_t>{{0, 42}, {1, 120}, {2, 180}, {3, 195}, {4, 165},
                                                             {5, 117}, {6, 70}, {7, 35}, {8, 15}, {9, 5},
                                                             {10, 1}});
    CHECK(census_to_json(2, crossing_census(2)).dump() == R"({"counts":{"0":2,"1":1},"n":2,"total":3})");
}

TEST_CASE("field patterns") {
    CHECK(FieldPattern::parabose(4).statistics() == Statistics::Parabose);
    CHECK(FieldPattern::alternating_parafermi(4).statistics() == Statistics::Parafermi);
    CHECK_THROWS_AS(FieldPattern::parabose(3), InvalidPattern);
    CHECK_THROWS_AS(FieldPattern::parabose(0), InvalidPattern);
    CHECK_THROWS_AS(FieldPattern::parse("phi,psi"), InvalidPattern);
    CHECK_THROWS_AS(FieldPattern::parse("psi,psi"), InvalidPattern);
    CHECK_THROWS_AS(FieldPattern::parse("psi,chi"), InvalidPattern);
    CHECK(FieldPattern::parse("psi,psibar,psibar,psi").tokens() ==
          std::vector<std::string>{"psi", "psibar", "psibar", "psi"});
}

TEST_CASE("admissible_matchings") {
    CHECK(as_strings(admissible_matchings(FieldPattern::parse("psi,psibar"))) == std::vector<std::string>{"1-2"});
    CHECK(admissible_matchings(FieldPattern::parabose(4)).size() == 3);
    CHECK(as_strings(admissible_matchings(FieldPattern::alternating_parafermi(4))) ==
          std::vector<std::string>{"1-2,3-4", "1-4,2-3"});
}

TEST_CASE("charged admissible matchings are the psi-psibar bijections, a subset of all matchings") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<FieldKind> kinds;
            for (int i = 0; i < n; ++i) {
                kinds.push_back(FieldKind::Parafermi);
                kinds.push_back(FieldKind::ParafermiConjugate);
            }
            std::shuffle(kinds.begin(), kinds.end(), rng);
            const FieldPattern pattern(kinds);
            const auto admissible = admissible_matchings(pattern);

            std::vector<ChordDiagram> filtered;
            for (const auto& d : enumerate_matchings(n)) {
                const bool ok = std::all_of(d.chords().begin(), d.chords().end(), [&](const Chord& c) {
                    return kinds[static_cast<std::size_t>(c.a - 1)] != kinds[static_cast<std::size_t>(c.b - 1)];
                });
                if (ok) {
                    filtered.push_back(d);
                }
            }
            CHECK(admissible == filtered);
            std::uint64_t factorial = 1;
            for (int i = 2; i <= n; ++i) {
                factorial *= static_cast<std::uint64_t>(i);
            }
            CHECK(admissible.size() == factorial);
        }
    }
}

TEST_CASE("diagram json") {
    CHECK(to_json(ChordDiagram::parse("1-5,2-6,3-8,4-7")).dump() ==
          R"({"chords":[[1,5],[2,6],[3,8],[4,7]],"n":4})");
}
