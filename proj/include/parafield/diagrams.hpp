#pragma once

#include "parafield/errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parafield {

/// One contraction: a link from point `a` to point `b`, 1-based, a < b.
struct Chord {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// A perfect matching of the points 1..2n, held in canonical form: every
/// chord oriented low-to-high and chords sorted by their first endpoint.
class ChordDiagram {
public:
    /// Validates and canonicalizes. Throws InvalidDiagram unless the
    /// endpoints are exactly {1, ..., 2n} with n >= 1.
    explicit ChordDiagram(std::vector<Chord> chords);

    /// Parses "a1-b1,a2-b2,...". Throws InvalidDiagram.
    static ChordDiagram parse(std::string_view text);

    /// The diagram {(i, i+n)} whose chords all cross each other.
    static ChordDiagram saturated(int n);

    int chord_count() const noexcept { return static_cast<int>(chords_.size()); }
    int point_count() const noexcept { return 2 * chord_count(); }
    std::span<const Chord> chords() const noexcept { return chords_; }

    std::string to_string() const;

    friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;

private:
    struct Trusted {};
    ChordDiagram(Trusted, std::vector<Chord> chords) : chords_(std::move(chords)) {}
    friend class MatchingBuilder;

    std::vector<Chord> chords_;
};

/// Graph on the chords of a diagram (0-based vertex ids in canonical chord
/// order) with an edge for every crossing pair. Adjacency is kept as bitmasks.
class CrossingGraph {
public:
    static constexpr int kMaxVertices = 32;

    explicit CrossingGraph(int vertices);
    static CrossingGraph complete(int vertices);

    void add_edge(int i, int j);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool adjacent(int i, int j) const { return (adjacency_.at(i) >> j) & 1U; }
    std::uint32_t neighbours(int i) const { return adjacency_.at(i); }

    /// Sorted (i, j) pairs with i < j, 0-based.
    std::vector<std::pair<int, int>> edges() const;

    /// Graph with vertex v renamed to perm[v].
    CrossingGraph relabeled(std::span<const int> perm) const;

    /// "{1,2} {1,3}" with 1-based vertex labels; empty string when edgeless.
    std::string to_string() const;

    friend bool operator==(const CrossingGraph&, const CrossingGraph&) = default;

private:
    std::vector<std::uint32_t> adjacency_;
    std::size_t edge_count_ = 0;
};

enum class FieldKind { NeutralParabose, Parafermi, ParafermiConjugate };

enum class Statistics { Parabose, Parafermi };

/// Kinds of the N fields in a vacuum matrix element, left to right.
class FieldPattern {
public:
    /// Throws InvalidPattern if N is odd or zero, bose and fermi kinds are
    /// mixed, or a fermi pattern is not balanced between psi and psi-bar.
    explicit FieldPattern(std::vector<FieldKind> kinds);

    static FieldPattern parabose(int fields);
    /// psi, psibar, psi, psibar, ...
    static FieldPattern alternating_parafermi(int fields);
    /// Comma-separated tokens "phi", "psi", "psibar".
    static FieldPattern parse(std::string_view text);

    std::span<const FieldKind> kinds() const noexcept { return kinds_; }
    int field_count() const noexcept { return static_cast<int>(kinds_.size()); }
    int chord_count() const noexcept { return field_count() / 2; }
    Statistics statistics() const noexcept;

    std::vector<std::string> tokens() const;

    friend bool operator==(const FieldPattern&, const FieldPattern&) = default;

private:
    std::vector<FieldKind> kinds_;
};

std::string_view to_string(FieldKind kind);
std::string_view to_string(Statistics statistics);

/// (2n-1)!! as an unsigned count; n >= 0.
std::uint64_t double_factorial_odd(int n);

/// Visits all (2n-1)!! matchings in canonical lexicographic order without
/// materializing the list. Throws CapExceeded when n > max_chords.
void for_each_matching(int n, const std::function<void(const ChordDiagram&)>& visit,
                       int max_chords = Limits::kDefaultMaxChords);

std::vector<ChordDiagram> enumerate_matchings(int n, int max_chords = Limits::kDefaultMaxChords);

int crossing_count(const ChordDiagram& d);

CrossingGraph crossing_graph(const ChordDiagram& d);

/// Number of diagrams T_{Nm} with exactly m crossings, keyed by achieved m.
std::map<int, std::uint64_t> crossing_census(int n, int max_chords = Limits::kDefaultMaxChords);

/// Diagrams whose every chord joins two fields that may contract: any pair
/// for neutral parabose, psi with psi-bar only for charged parafermi.
std::vector<ChordDiagram> admissible_matchings(const FieldPattern& pattern,
                                               int max_chords = Limits::kDefaultMaxChords);

} // namespace parafield
