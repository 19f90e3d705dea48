#include "parafield/coefficients.hpp"

#include "parafield/partitions.hpp"

#include <bit>
#include <vector>

namespace parafield {

namespace {

void check_vertex_cap(int n, int max_vertices) {
    if (n > max_vertices) {
        throw CapExceeded("crossing graph with " + std::to_string(n) +
                              " vertices exceeds the set-partition cap of " + std::to_string(max_vertices),
                          "--max-coeff-n");
    }
}

// Restricted-growth enumeration carrying, per block, the bitmask of its
// vertices so the crossing sign of each placement is a popcount.
class SignedBlockCounter {
public:
    explicit SignedBlockCounter(const CrossingGraph& g)
        : g_(g), n_(g.vertex_count()), members_(static_cast<std::size_t>(n_), 0),
          counts_(static_cast<std::size_t>(n_) + 1, 0) {}

    // counts[B] = sum of signs over set partitions with B blocks
    std::vector<long long> run() {
        place(0, 0, false);
        return counts_;
    }

private:
    void place(int v, int blocks, bool negative) {
        if (v == n_) {
            counts_[static_cast<std::size_t>(blocks)] += negative ? -1 : 1;
            return;
        }
        const std::uint32_t earlier = g_.neighbours(v) & ((1U << v) - 1U);
        const int earlier_count = std::popcount(earlier);
        for (int b = 0; b <= blocks && b < n_; ++b) {
            auto& block = members_[static_cast<std::size_t>(b)];
            const int differing = earlier_count - std::popcount(earlier & block);
            block |= 1U << v;
            place(v + 1, b == blocks ? blocks + 1 : blocks, negative != (differing % 2 == 1));
            block &= ~(1U << v);
        }
    }

    const CrossingGraph& g_;
    int n_;
    std::vector<std::uint32_t> members_;
    std::vector<long long> counts_;
};

void visit_rgs(std::vector<int>& rgs, std::size_t v, int blocks,
               const std::function<void(std::span<const int>, int)>& visit) {
    if (v == rgs.size()) {
        visit(rgs, blocks);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        rgs[v] = b;
        visit_rgs(rgs, v + 1, b == blocks ? blocks + 1 : blocks, visit);
    }
}

} // namespace

BigInt coefficient_bruteforce(const CrossingGraph& g, std::uint64_t p, Statistics statistics,
                              std::uint64_t budget) {
    const int n = g.vertex_count();
    std::uint64_t assignments = 1;
    for (int i = 0; i < n; ++i) {
        if (p != 0 && assignments > budget / p) {
            throw CapExceeded("oracle sum over p^n = " + std::to_string(p) + "^" + std::to_string(n) +
                                  " assignments exceeds the budget of " + std::to_string(budget),
                              "--oracle-budget");
        }
        assignments *= p;
    }
    if (assignments > budget) {
        throw CapExceeded("oracle budget exceeded", "--oracle-budget");
    }
    if (p == 0 && n > 0) {
        return 0;
    }

    const auto edges = g.edges();
    const int unequal_sign = statistics == Statistics::Parabose ? -1 : 1;
    const int equal_sign = -unequal_sign;
    std::vector<std::uint64_t> alpha(static_cast<std::size_t>(n), 0);
    long long total = 0;
    while (true) {
        int term = 1;
        for (const auto& [i, j] : edges) {
            term *= alpha[static_cast<std::size_t>(i)] == alpha[static_cast<std::size_t>(j)] ? equal_sign
                                                                                               : unequal_sign;
        }
        total += term;

        int pos = 0;
        while (pos < n && ++alpha[static_cast<std::size_t>(pos)] == p) {
            alpha[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) {
            break;
        }
    }
    return total;
}

void for_each_set_partition(int n, const std::function<void(std::span<const int>, int)>& visit) {
    if (n < 0) {
        throw std::invalid_argument("negative set size");
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    visit_rgs(rgs, 0, 0, visit);
}

PPolynomial coefficient_polynomial(const CrossingGraph& g, int max_vertices) {
    check_vertex_cap(g.vertex_count(), max_vertices);
    const auto counts = SignedBlockCounter(g).run();
    PPolynomial result;
    for (std::size_t blocks = 0; blocks < counts.size(); ++blocks) {
        if (counts[blocks] != 0) {
            result += PPolynomial::falling_factorial(blocks) * BigInt(counts[blocks]);
        }
    }
    return result;
}

PPolynomial coefficient_saturated(int n) {
    PPolynomial result;
    for (const auto& partition : generate_partitions(n)) {
        const auto stats = partition_stats(partition);
        if (stats.A % 2 == 0) {
            result += stats.E;
        } else {
            result -= stats.E;
        }
    }
    return result;
}

PPolynomial parafermi_coefficient(const CrossingGraph& g, int max_vertices) {
    auto result = coefficient_polynomial(g, max_vertices);
    return g.edge_count() % 2 == 0 ? result : -result;
}

PPolynomial coefficient_for(const CrossingGraph& g, Statistics statistics, int max_vertices) {
    return statistics == Statistics::Parabose ? coefficient_polynomial(g, max_vertices)
                                              : parafermi_coefficient(g, max_vertices);
}

PPolynomial CoefficientCache::get(const CrossingGraph& g, Statistics statistics) {
    check_vertex_cap(g.vertex_count(), max_vertices_);
    auto key = canonical_key(g);
    auto it = table_.find(key);
    if (it != table_.end()) {
        ++hits_;
    } else {
        it = table_.emplace(std::move(key), coefficient_polynomial(g, max_vertices_)).first;
    }
    if (statistics == Statistics::Parafermi && g.edge_count() % 2 == 1) {
        return -it->second;
    }
    return it->second;
}

} // namespace parafield
