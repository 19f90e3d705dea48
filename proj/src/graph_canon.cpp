#include "parafield/graph_canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace parafield {

namespace {

struct SearchAborted {};

// Colours are dense ranks 0..c-1; refinement keeps their relative order so
// the resulting ordering does not depend on the input labels.
int refine(const CrossingGraph& g, std::vector<int>& colour) {
    const int n = g.vertex_count();
    const auto width = static_cast<std::size_t>(n) + 1;
    int classes = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::uint8_t> signature(static_cast<std::size_t>(n) * width);
    std::vector<int> order(static_cast<std::size_t>(n));
    while (true) {
        std::fill(signature.begin(), signature.end(), 0);
        for (int v = 0; v < n; ++v) {
            auto* row = &signature[static_cast<std::size_t>(v) * width];
            row[0] = static_cast<std::uint8_t>(colour[static_cast<std::size_t>(v)]);
            for (std::uint32_t rest = g.neighbours(v); rest != 0; rest &= rest - 1) {
                ++row[1 + colour[static_cast<std::size_t>(std::countr_zero(rest))]];
            }
        }
        const auto used = static_cast<std::size_t>(classes) + 1;
        const auto row_of = [&](int v) { return signature.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * width); };
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::lexicographical_compare(row_of(a), row_of(a) + static_cast<std::ptrdiff_t>(used), row_of(b),
                                                row_of(b) + static_cast<std::ptrdiff_t>(used));
        });
        int rank = -1;
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k == 0 || !std::equal(row_of(order[k]), row_of(order[k]) + static_cast<std::ptrdiff_t>(used),
                                      row_of(order[k - 1]))) {
                ++rank;
            }
            colour[static_cast<std::size_t>(order[k])] = rank;
        }
        if (rank + 1 == classes) {
            return classes;
        }
        classes = rank + 1;
    }
}

// Swapping u and v is an automorphism iff their neighbourhoods agree outside {u, v}.
bool twins(const CrossingGraph& g, int u, int v) {
    return (g.neighbours(u) & ~(1U << v)) == (g.neighbours(v) & ~(1U << u));
}

class CanonicalSearch {
public:
    CanonicalSearch(const CrossingGraph& g, std::size_t leaf_budget) : g_(g), budget_(leaf_budget) {}

    std::vector<std::uint32_t> run() {
        std::vector<int> colour(static_cast<std::size_t>(g_.vertex_count()), 0);
        search(std::move(colour));
        return best_;
    }

private:
    void search(std::vector<int> colour) {
        const int n = g_.vertex_count();
        const int classes = refine(g_, colour);
        if (classes == n) {
            visit_leaf(colour);
            return;
        }
        std::vector<int> cell_size(static_cast<std::size_t>(classes), 0);
        for (int c : colour) {
            ++cell_size[static_cast<std::size_t>(c)];
        }
        int target = -1;
        for (int c = 0; c < classes; ++c) {
            const int size = cell_size[static_cast<std::size_t>(c)];
            if (size > 1 && (target < 0 || size < cell_size[static_cast<std::size_t>(target)])) {
                target = c;
            }
        }
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] != target) {
                continue;
            }
            // A twin of an already individualized vertex leads to an isomorphic subtree.
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g_, u, v); })) {
                continue;
            }
            tried.push_back(v);
            std::vector<int> next(colour.size());
            for (int u = 0; u < n; ++u) {
                next[static_cast<std::size_t>(u)] = 2 * colour[static_cast<std::size_t>(u)] + (u == v ? 0 : 1);
            }
            compress(next);
            search(std::move(next));
        }
    }

    static void compress(std::vector<int>& colour) {
        std::vector<int> sorted = colour;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& c : colour) {
            c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
        }
    }

    void visit_leaf(const std::vector<int>& position) {
        if (++leaves_ > budget_) {
            throw SearchAborted{};
        }
        const int n = g_.vertex_count();
        std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
        for (const auto& [i, j] : g_.edges()) {
            const auto pi = static_cast<std::size_t>(position[static_cast<std::size_t>(i)]);
            const auto pj = static_cast<std::size_t>(position[static_cast<std::size_t>(j)]);
            rows[pi] |= 1U << pj;
            rows[pj] |= 1U << pi;
        }
        if (best_.empty() || rows < best_) {
            best_ = std::move(rows);
        }
    }

    const CrossingGraph& g_;
    std::size_t budget_;
    std::size_t leaves_ = 0;
    std::vector<std::uint32_t> best_;
};

} // namespace

std::size_t GraphKeyHash::operator()(const GraphKey& key) const noexcept {
    std::size_t h = key.canonical ? 0x9e3779b97f4a7c15ULL : 0x85ebca6bULL;
    for (auto row : key.rows) {
        h ^= std::hash<std::uint32_t>{}(row) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h ^ key.rows.size();
}

GraphKey canonical_key(const CrossingGraph& g, std::size_t leaf_budget) {
    try {
        auto rows = CanonicalSearch(g, leaf_budget).run();
        return {true, std::move(rows)};
    } catch (const SearchAborted&) {
        GraphKey key{false, {}};
        for (int v = 0; v < g.vertex_count(); ++v) {
            key.rows.push_back(g.neighbours(v));
        }
        return key;
    }
}

bool isomorphic_bruteforce(const CrossingGraph& a, const CrossingGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (a.relabeled(perm) == b) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace parafield
