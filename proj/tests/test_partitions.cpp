#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parafield/json_io.hpp"
#include "parafield/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace parafield;

namespace {

std::vector<std::string> as_strings(const std::vector<IntegerPartition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) {
        out.push_back(p.to_string());
    }
    return out;
}

// Brute-force count of non-increasing sequences summing to n.
int count_partitions(int n, int largest) {
    if (n == 0) {
        return 1;
    }
    int total = 0;
    for (int part = std::min(n, largest); part >= 1; --part) {
        total += count_partitions(n - part, part);
    }
    return total;
}

// Direct count of index tuples in {0..p-1}^n, classified by coincidence
// shape, for comparison against X * [p]_k.
std::map<std::vector<int>, long long> tuples_by_shape(int n, int p) {
    std::map<std::vector<int>, long long> out;
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    if (p == 0) {
        return out;
    }
    while (true) {
        std::map<int, int> sizes;
        for (int a : alpha) {
            ++sizes[a];
        }
        std::vector<int> shape;
        for (const auto& [value, size] : sizes) {
            shape.push_back(size);
        }
        std::sort(shape.rbegin(), shape.rend());
        ++out[shape];
        int pos = 0;
        while (pos < n && ++alpha[static_cast<std::size_t>(pos)] == p) {
            alpha[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) {
            break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("generate_partitions order and content") {
    CHECK(as_strings(generate_partitions(1)) == std::vector<std::string>{"[1]"});
    CHECK(as_strings(generate_partitions(4)) ==
          std::vector<std::string>{"[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"});
    CHECK(as_strings(generate_partitions(6)) ==
          std::vector<std::string>{"[6]", "[5,1]", "[4,2]", "[4,1,1]", "[3,3]", "[3,2,1]", "[3,1,1,1]",
                                   "[2,2,2]", "[2,2,1,1]", "[2,1,1,1,1]", "[1,1,1,1,1,1]"});
}

TEST_CASE("p(n) and distinctness") {
    for (int n = 1; n <= 20; ++n) {
        const auto ps = generate_partitions(n);
        CHECK(static_cast<int>(ps.size()) == count_partitions(n, n));
        std::set<std::vector<int>> unique;
        for (const auto& p : ps) {
            CHECK(p.weight() == n);
            unique.insert(p.values());
        }
        CHECK(unique.size() == ps.size());
        // reverse-lexicographic
        for (std::size_t i = 1; i < ps.size(); ++i) {
            CHECK(ps[i - 1].values() > ps[i].values());
        }
    }
}

TEST_CASE("IntegerPartition validation") {
    CHECK_THROWS_AS(IntegerPartition({{2, 1}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(IntegerPartition({{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(IntegerPartition(std::vector<Part>{}), std::invalid_argument);
    const std::vector<int> v{3, 2, 2, 1};
    const auto p = IntegerPartition::from_values(v);
    CHECK(p.distinct_part_count() == 3);
    CHECK(p.part_count() == 4);
    CHECK(p.weight() == 8);
}

TEST_CASE("partition_stats") {
    const std::vector<int> v42{4, 2};
    const auto s42 = partition_stats(IntegerPartition::from_values(v42));
    CHECK(s42.k == 2);
    CHECK(s42.A == 8);
    CHECK(s42.X == 15);
    CHECK(s42.E == PPolynomial{0, -15, 15});

    const std::vector<int> ones(6, 1);
    const auto s1 = partition_stats(IntegerPartition::from_values(ones));
    CHECK(s1.k == 6);
    CHECK(s1.A == 15);
    CHECK(s1.X == 1);
    CHECK(s1.E == PPolynomial::falling_factorial(6));

    for (int n = 1; n <= 12; ++n) {
        const std::vector<int> single{n};
        const auto s = partition_stats(IntegerPartition::from_values(single));
        CHECK(s.k == 1);
        CHECK(s.Abar == n * (n - 1) / 2);
        CHECK(s.A == 0);
        CHECK(s.E == PPolynomial{0, 1});
    }
    CHECK(to_json(s42).dump() == R"({"A":8,"E":"15p^2-15p","X":"15","k":2,"partition":[4,2]})");
}

TEST_CASE("A column for n = 6") {
    const std::vector<long long> expected{0, 5, 8, 9, 9, 11, 12, 12, 13, 14, 15};
    std::vector<long long> got;
    for (const auto& p : generate_partitions(6)) {
        got.push_back(partition_stats(p).A);
    }
    CHECK(got == expected);
}

TEST_CASE("E counts index tuples of each coincidence shape") {
    for (int n = 1; n <= 5; ++n) {
        for (int p = 0; p <= 4; ++p) {
            const auto counted = tuples_by_shape(n, p);
            for (const auto& partition : generate_partitions(n)) {
                const auto stats = partition_stats(partition);
                const auto it = counted.find(partition.values());
                const long long direct = it == counted.end() ? 0 : it->second;
                CHECK(stats.E(p) == direct);
            }
        }
    }
}

TEST_CASE("verify_pn_identity") {
    CHECK(verify_pn_identity(2, 3));
    CHECK(verify_pn_identity(6, 1));
    CHECK(verify_pn_identity(6, 10));
    for (int n = 1; n <= 10; ++n) {
        for (int p = 0; p <= 12; ++p) {
            CHECK(verify_pn_identity(n, p));
        }
    }
    CHECK(verify_pn_identity(25, BigInt("123456789012345")));
    CHECK_FALSE(verify_pn_identity(3, -1));
}

TEST_CASE("falling factorial is zero when k > p") {
    CHECK(falling_factorial(3, 4) == 0);
    CHECK(falling_factorial(3, 3) == 6);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial(0, 1) == 0);
}
