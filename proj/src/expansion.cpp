#include "parafield/expansion.hpp"

#include "parafield/json_io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace parafield {

namespace {

std::string text_token(const PropagatorToken& t) {
    return std::string(to_string(t.kind)) + "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

std::string latex_token(const PropagatorToken& t) {
    const char* symbol = t.kind == PropagatorKind::DeltaPlus ? "\\Delta^{(+)}" : "S^{(+)}";
    return std::string(symbol) + "(x_" + std::to_string(t.i) + "-x_" + std::to_string(t.j) + ")";
}

std::string text_product(const ExpansionTerm& term) {
    std::string out;
    for (const auto& t : term.propagators) {
        if (!out.empty()) {
            out += " * ";
        }
        out += text_token(t);
    }
    return out;
}

std::string latex_product(const ExpansionTerm& term) {
    std::string out;
    for (const auto& t : term.propagators) {
        out += latex_token(t);
    }
    return out;
}

std::string text_coefficient(const PPolynomial& c) {
    std::string s = c.to_string();
    const bool single_term = s.find_first_of("+-", 1) == std::string::npos;
    return single_term ? s : "(" + s + ")";
}

// Writes one output unit: a single term, or a run of terms sharing a coefficient.
class ExpansionWriter {
public:
    ExpansionWriter(std::ostream& out, const FieldPattern& pattern, RenderFormat format, const RenderOptions& options)
        : out_(out), pattern_(pattern), format_(format), options_(options) {}

    void begin() {
        switch (format_) {
        case RenderFormat::Text: break;
        case RenderFormat::Latex: latex_header(); break;
        case RenderFormat::Json: json_header(); break;
        }
    }

    void group(std::span<const ExpansionTerm* const> terms) {
        switch (format_) {
        case RenderFormat::Text: text_group(terms); break;
        case RenderFormat::Latex: latex_group(terms); break;
        case RenderFormat::Json:
            for (const auto* term : terms) {
                json_term(*term);
            }
            break;
        }
    }

    void end() {
        switch (format_) {
        case RenderFormat::Text: break;
        case RenderFormat::Latex: latex_footer(); break;
        case RenderFormat::Json: out_ << (first_ ? "]}\n" : "\n]}\n"); break;
        }
    }

private:
    void text_group(std::span<const ExpansionTerm* const> terms) {
        const auto& head = *terms.front();
        out_ << text_coefficient(head.coefficient) << " * ";
        if (terms.size() == 1) {
            out_ << text_product(head);
        } else {
            out_ << "{ ";
            for (std::size_t k = 0; k < terms.size(); ++k) {
                out_ << (k ? " + " : "") << text_product(*terms[k]);
            }
            out_ << " }";
        }
        if (options_.p) {
            out_ << "   [p=" << *options_.p << ": " << head.coefficient(*options_.p) << "]";
        }
        out_ << '\n';
    }

    void latex_header() {
        out_ << "\\[\n\\langle 0|";
        int position = 1;
        for (const auto kind : pattern_.kinds()) {
            switch (kind) {
            case FieldKind::NeutralParabose: out_ << "\\Phi"; break;
            case FieldKind::Parafermi: out_ << "\\Psi"; break;
            case FieldKind::ParafermiConjugate: out_ << "\\bar{\\Psi}"; break;
            }
            out_ << "(x_" << position++ << ")";
        }
        out_ << "|0\\rangle =\n";
    }

    void latex_group(std::span<const ExpansionTerm* const> terms) {
        std::string coefficient = terms.front()->coefficient.to_latex();
        const bool negative = coefficient.front() == '-';
        if (negative) {
            coefficient.erase(0, 1);
        }
        if (first_) {
            out_ << (negative ? "  -" : "  ");
        } else {
            out_ << (negative ? "\n  - " : "\n  + ");
        }
        first_ = false;
        if (coefficient != "1") {
            out_ << coefficient << "\\,";
        }
        if (terms.size() == 1) {
            out_ << latex_product(*terms.front());
        } else {
            out_ << "\\{";
            for (std::size_t k = 0; k < terms.size(); ++k) {
                out_ << (k ? " + " : "") << latex_product(*terms[k]);
            }
            out_ << "\\}";
        }
        if (options_.p) {
            values_.push_back(terms.front()->coefficient(*options_.p));
        }
    }

    void latex_footer() {
        out_ << "\n\\]\n";
        if (options_.p) {
            out_ << "\\[\np = " << *options_.p << ":\\quad ";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                out_ << (i ? ",\\ " : "") << values_[i];
            }
            out_ << "\n\\]\n";
        }
    }

    void json_header() {
        nlohmann::json header = {{"N", pattern_.field_count()},
                                 {"kind", std::string(to_string(pattern_.statistics()))},
                                 {"pattern", pattern_.tokens()}};
        if (options_.p) {
            header["p"] = options_.p->str();
        }
        std::string text = header.dump();
        text.pop_back();
        out_ << text << ",\"terms\":[";
    }

    void json_term(const ExpansionTerm& term) {
        out_ << (first_ ? "\n" : ",\n") << term_to_json(term, options_).dump();
        first_ = false;
    }

    std::ostream& out_;
    const FieldPattern& pattern_;
    RenderFormat format_;
    const RenderOptions& options_;
    bool first_ = true;
    std::vector<BigInt> values_;
};

void write_terms(std::ostream& out, const FieldPattern& pattern, std::span<const ExpansionTerm> terms,
                 RenderFormat format, const RenderOptions& options) {
    ExpansionWriter writer(out, pattern, format, options);
    writer.begin();
    if (options.group_by_coefficient && format != RenderFormat::Json) {
        // groups in order of first appearance, members in canonical order
        std::vector<std::vector<const ExpansionTerm*>> groups;
        for (const auto& term : terms) {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return g.front()->coefficient == term.coefficient; });
            if (it == groups.end()) {
                groups.push_back({&term});
            } else {
                it->push_back(&term);
            }
        }
        for (const auto& g : groups) {
            writer.group(g);
        }
    } else {
        for (const auto& term : terms) {
            const ExpansionTerm* single = &term;
            writer.group({&single, 1});
        }
    }
    writer.end();
}

} // namespace

std::string_view to_string(PropagatorKind kind) {
    return kind == PropagatorKind::DeltaPlus ? "D+" : "S+";
}

void for_each_term(const FieldPattern& pattern, const std::function<void(const ExpansionTerm&)>& visit,
                   const Limits& limits) {
    const auto statistics = pattern.statistics();
    const auto kind = statistics == Statistics::Parabose ? PropagatorKind::DeltaPlus : PropagatorKind::SPlus;
    CoefficientCache cache(limits.max_coefficient_vertices);
    const auto emit = [&](const ChordDiagram& diagram) {
        const auto graph = crossing_graph(diagram);
        ExpansionTerm term{diagram, static_cast<int>(graph.edge_count()), cache.get(graph, statistics), {}};
        for (const auto& c : diagram.chords()) {
            term.propagators.push_back({kind, c.a, c.b});
        }
        visit(term);
    };
    if (statistics == Statistics::Parabose) {
        for_each_matching(pattern.chord_count(), emit, limits.max_chords);
    } else {
        for (const auto& diagram : admissible_matchings(pattern, limits.max_chords)) {
            emit(diagram);
        }
    }
}

Expansion expand(const FieldPattern& pattern, const Limits& limits) {
    Expansion e{pattern, {}};
    for_each_term(pattern, [&](const ExpansionTerm& term) { e.terms.push_back(term); }, limits);
    return e;
}

std::vector<std::pair<ChordDiagram, BigInt>> evaluate_at(const Expansion& e, const BigInt& p) {
    std::vector<std::pair<ChordDiagram, BigInt>> out;
    out.reserve(e.terms.size());
    for (const auto& term : e.terms) {
        out.emplace_back(term.diagram, term.coefficient(p));
    }
    return out;
}

std::string render(const Expansion& e, RenderFormat format, const RenderOptions& options) {
    std::ostringstream out;
    write_terms(out, e.pattern, e.terms, format, options);
    return out.str();
}

void write_expansion(std::ostream& out, const FieldPattern& pattern, RenderFormat format,
                     const RenderOptions& options, const Limits& limits) {
    if (options.group_by_coefficient && format != RenderFormat::Json) {
        const auto e = expand(pattern, limits);
        write_terms(out, pattern, e.terms, format, options);
        return;
    }
    // Caps are checked before the first byte is written.
    if (pattern.chord_count() > limits.max_chords) {
        throw CapExceeded("n = " + std::to_string(pattern.chord_count()) + " chords exceeds the diagram cap of " +
                              std::to_string(limits.max_chords),
                          "--max-n");
    }
    if (pattern.chord_count() > limits.max_coefficient_vertices) {
        throw CapExceeded("crossing graph with " + std::to_string(pattern.chord_count()) +
                              " vertices exceeds the set-partition cap of " +
                              std::to_string(limits.max_coefficient_vertices),
                          "--max-coeff-n");
    }
    ExpansionWriter writer(out, pattern, format, options);
    writer.begin();
    for_each_term(
        pattern,
        [&](const ExpansionTerm& term) {
            const ExpansionTerm* single = &term;
            writer.group({&single, 1});
        },
        limits);
    writer.end();
}

} // namespace parafield
