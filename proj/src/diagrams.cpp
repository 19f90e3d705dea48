#include "parafield/diagrams.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace parafield {

namespace {

void check_chord_cap(int n, int max_chords) {
    if (n > max_chords) {
        throw CapExceeded("n = " + std::to_string(n) + " chords exceeds the diagram cap of " +
                              std::to_string(max_chords),
                          "--max-n");
    }
}

int parse_int(std::string_view token, std::string_view context) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty()) {
        throw InvalidDiagram("bad point index '" + std::string(token) + "' in '" +
                             std::string(context) + "'");
    }
    return value;
}

} // namespace

// Recursive "pair the smallest free point with each larger free point".
// Emits diagrams directly in canonical lexicographic order.
class MatchingBuilder {
public:
    using Admissible = std::function<bool(int, int)>;

    MatchingBuilder(int n, Admissible admissible) : n_(n), admissible_(std::move(admissible)) {
        chords_.reserve(static_cast<std::size_t>(n));
    }

    void run(const std::function<void(const ChordDiagram&)>& visit) {
        const std::uint64_t all = (n_ * 2 == 64) ? ~0ULL : ((1ULL << (2 * n_)) - 1);
        recurse(all, visit);
    }

private:
    void recurse(std::uint64_t free, const std::function<void(const ChordDiagram&)>& visit) {
        if (free == 0) {
            visit(ChordDiagram(ChordDiagram::Trusted{}, chords_));
            return;
        }
        const int a = std::countr_zero(free);
        std::uint64_t rest = free & (free - 1);
        for (std::uint64_t candidates = rest; candidates != 0; candidates &= candidates - 1) {
            const int b = std::countr_zero(candidates);
            if (admissible_ && !admissible_(a, b)) {
                continue;
            }
            chords_.push_back({a + 1, b + 1});
            recurse(rest & ~(1ULL << b), visit);
            chords_.pop_back();
        }
    }

    int n_;
    Admissible admissible_;
    std::vector<Chord> chords_;
};

ChordDiagram::ChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
    if (chords_.empty()) {
        throw InvalidDiagram("a diagram needs at least one chord");
    }
    const int points = 2 * static_cast<int>(chords_.size());
    std::vector<bool> seen(static_cast<std::size_t>(points) + 1, false);
    for (auto& c : chords_) {
        if (c.a > c.b) {
            std::swap(c.a, c.b);
        }
        for (int endpoint : {c.a, c.b}) {
            if (endpoint < 1 || endpoint > points) {
                throw InvalidDiagram("point " + std::to_string(endpoint) + " outside 1.." +
                                     std::to_string(points));
            }
            if (seen[static_cast<std::size_t>(endpoint)]) {
                throw InvalidDiagram("point " + std::to_string(endpoint) + " used twice");
            }
            seen[static_cast<std::size_t>(endpoint)] = true;
        }
    }
    std::sort(chords_.begin(), chords_.end());
}

ChordDiagram ChordDiagram::parse(std::string_view text) {
    std::vector<Chord> chords;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto dash = token.find('-');
        if (dash == std::string_view::npos) {
            throw InvalidDiagram("expected 'a-b' but got '" + std::string(token) + "'");
        }
        chords.push_back({parse_int(token.substr(0, dash), text), parse_int(token.substr(dash + 1), text)});
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return ChordDiagram(std::move(chords));
}

ChordDiagram ChordDiagram::saturated(int n) {
    std::vector<Chord> chords;
    for (int i = 1; i <= n; ++i) {
        chords.push_back({i, i + n});
    }
    return ChordDiagram(std::move(chords));
}

std::string ChordDiagram::to_string() const {
    std::string out;
    for (const auto& c : chords_) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(c.a) + '-' + std::to_string(c.b);
    }
    return out;
}

CrossingGraph::CrossingGraph(int vertices) {
    if (vertices < 0 || vertices > kMaxVertices) {
        throw std::out_of_range("crossing graph supports up to 32 vertices");
    }
    adjacency_.assign(static_cast<std::size_t>(vertices), 0);
}

CrossingGraph CrossingGraph::complete(int vertices) {
    CrossingGraph g(vertices);
    for (int i = 0; i < vertices; ++i) {
        for (int j = i + 1; j < vertices; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

void CrossingGraph::add_edge(int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= vertex_count() || j >= vertex_count()) {
        throw std::out_of_range("bad crossing graph edge");
    }
    if (adjacent(i, j)) {
        return;
    }
    adjacency_[static_cast<std::size_t>(i)] |= 1U << j;
    adjacency_[static_cast<std::size_t>(j)] |= 1U << i;
    ++edge_count_;
}

std::vector<std::pair<int, int>> CrossingGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int i = 0; i < vertex_count(); ++i) {
        for (int j = i + 1; j < vertex_count(); ++j) {
            if (adjacent(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

CrossingGraph CrossingGraph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != vertex_count()) {
        throw std::invalid_argument("permutation size does not match vertex count");
    }
    CrossingGraph out(vertex_count());
    for (const auto& [i, j] : edges()) {
        out.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return out;
}

std::string CrossingGraph::to_string() const {
    std::string out;
    for (const auto& [i, j] : edges()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += '{' + std::to_string(i + 1) + ',' + std::to_string(j + 1) + '}';
    }
    return out;
}

FieldPattern::FieldPattern(std::vector<FieldKind> kinds) : kinds_(std::move(kinds)) {
    if (kinds_.empty() || kinds_.size() % 2 != 0) {
        throw InvalidPattern("the number of fields must be even and positive, got " +
                             std::to_string(kinds_.size()));
    }
    const auto count = [&](FieldKind k) { return std::count(kinds_.begin(), kinds_.end(), k); };
    const auto bose = count(FieldKind::NeutralParabose);
    const auto psi = count(FieldKind::Parafermi);
    const auto psibar = count(FieldKind::ParafermiConjugate);
    if (bose != 0 && bose != static_cast<long>(kinds_.size())) {
        throw InvalidPattern("mixed parabose/parafermi field products are not supported");
    }
    if (bose == 0 && psi != psibar) {
        throw InvalidPattern("a charged parafermi pattern needs equally many psi and psibar fields");
    }
}

FieldPattern FieldPattern::parabose(int fields) {
    if (fields <= 0) {
        throw InvalidPattern("the number of fields must be even and positive, got " + std::to_string(fields));
    }
    return FieldPattern(std::vector<FieldKind>(static_cast<std::size_t>(fields), FieldKind::NeutralParabose));
}

FieldPattern FieldPattern::alternating_parafermi(int fields) {
    if (fields <= 0) {
        throw InvalidPattern("the number of fields must be even and positive, got " + std::to_string(fields));
    }
    std::vector<FieldKind> kinds;
    for (int i = 0; i < fields; ++i) {
        kinds.push_back(i % 2 == 0 ? FieldKind::Parafermi : FieldKind::ParafermiConjugate);
    }
    return FieldPattern(std::move(kinds));
}

FieldPattern FieldPattern::parse(std::string_view text) {
    std::vector<FieldKind> kinds;
    std::istringstream in{std::string(text)};
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token == "phi") {
            kinds.push_back(FieldKind::NeutralParabose);
        } else if (token == "psi") {
            kinds.push_back(FieldKind::Parafermi);
        } else if (token == "psibar") {
            kinds.push_back(FieldKind::ParafermiConjugate);
        } else {
            throw InvalidPattern("unknown field '" + token + "' (expected phi, psi or psibar)");
        }
    }
    return FieldPattern(std::move(kinds));
}

Statistics FieldPattern::statistics() const noexcept {
    return kinds_.front() == FieldKind::NeutralParabose ? Statistics::Parabose : Statistics::Parafermi;
}

std::vector<std::string> FieldPattern::tokens() const {
    std::vector<std::string> out;
    for (auto k : kinds_) {
        out.emplace_back(to_string(k));
    }
    return out;
}

std::string_view to_string(FieldKind kind) {
    switch (kind) {
    case FieldKind::NeutralParabose: return "phi";
    case FieldKind::Parafermi: return "psi";
    case FieldKind::ParafermiConjugate: return "psibar";
    }
    return "?";
}

std::string_view to_string(Statistics statistics) {
    return statistics == Statistics::Parabose ? "parabose" : "parafermi";
}

std::uint64_t double_factorial_odd(int n) {
    std::uint64_t out = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2) {
        out *= static_cast<std::uint64_t>(k);
    }
    return out;
}

void for_each_matching(int n, const std::function<void(const ChordDiagram&)>& visit, int max_chords) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    check_chord_cap(n, max_chords);
    if (n > CrossingGraph::kMaxVertices) {
        throw CapExceeded("n above 32 chords is not supported", "--max-n");
    }
    MatchingBuilder(n, nullptr).run(visit);
}

std::vector<ChordDiagram> enumerate_matchings(int n, int max_chords) {
    std::vector<ChordDiagram> out;
    if (n >= 1 && n <= max_chords) {
        out.reserve(static_cast<std::size_t>(double_factorial_odd(n)));
    }
    for_each_matching(n, [&](const ChordDiagram& d) { out.push_back(d); }, max_chords);
    return out;
}

int crossing_count(const ChordDiagram& d) {
    const auto chords = d.chords();
    int m = 0;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            // chords[i].a < chords[j].a by canonical order
            if (chords[j].a < chords[i].b && chords[i].b < chords[j].b) {
                ++m;
            }
        }
    }
    return m;
}

CrossingGraph crossing_graph(const ChordDiagram& d) {
    const auto chords = d.chords();
    CrossingGraph g(d.chord_count());
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            if (chords[j].a < chords[i].b && chords[i].b < chords[j].b) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

std::map<int, std::uint64_t> crossing_census(int n, int max_chords) {
    std::map<int, std::uint64_t> census;
    for_each_matching(n, [&](const ChordDiagram& d) { ++census[crossing_count(d)]; }, max_chords);
    return census;
}

std::vector<ChordDiagram> admissible_matchings(const FieldPattern& pattern, int max_chords) {
    const int n = pattern.chord_count();
    if (pattern.statistics() == Statistics::Parabose) {
        return enumerate_matchings(n, max_chords);
    }
    check_chord_cap(n, max_chords);
    const auto kinds = pattern.kinds();
    std::vector<ChordDiagram> out;
    MatchingBuilder(n, [kinds](int a, int b) {
        return kinds[static_cast<std::size_t>(a)] != kinds[static_cast<std::size_t>(b)];
    }).run([&](const ChordDiagram& d) { out.push_back(d); });
    return out;
}

} // namespace parafield
