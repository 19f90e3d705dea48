#include "parafield/json_io.hpp"

#include <stdexcept>

namespace parafield {

using nlohmann::json;

json to_json(const ChordDiagram& d) {
    json chords = json::array();
    for (const auto& c : d.chords()) {
        chords.push_back({c.a, c.b});
    }
    return {{"n", d.chord_count()}, {"chords", std::move(chords)}};
}

json to_json(const PPolynomial& poly) {
    json coeffs = json::array();
    for (const auto& c : poly.coeffs()) {
        coeffs.push_back(c.str());
    }
    return {{"coeffs", std::move(coeffs)}};
}

json census_to_json(int n, const std::map<int, std::uint64_t>& census) {
    json counts = json::object();
    std::uint64_t total = 0;
    for (const auto& [m, count] : census) {
        counts[std::to_string(m)] = count;
        total += count;
    }
    return {{"n", n}, {"counts", std::move(counts)}, {"total", total}};
}

json to_json(const PartitionStats& stats) {
    return {{"partition", stats.partition.values()},
            {"k", stats.k},
            {"X", stats.X.str()},
            {"A", stats.A},
            {"E", stats.E.to_string()}};
}

json term_to_json(const ExpansionTerm& term, const RenderOptions& options) {
    json propagators = json::array();
    for (const auto& t : term.propagators) {
        propagators.push_back({{"kind", std::string(to_string(t.kind))}, {"i", t.i}, {"j", t.j}});
    }
    json entry = {{"chords", to_json(term.diagram)["chords"]},
                  {"crossings", term.crossings},
                  {"coeffs", to_json(term.coefficient)["coeffs"]},
                  {"propagators", std::move(propagators)}};
    if (options.p) {
        entry["value"] = term.coefficient(*options.p).str();
    }
    return entry;
}

json to_json(const Expansion& e, const RenderOptions& options) {
    json terms = json::array();
    for (const auto& term : e.terms) {
        terms.push_back(term_to_json(term, options));
    }
    json out = {{"N", e.pattern.field_count()},
                {"kind", std::string(to_string(e.pattern.statistics()))},
                {"pattern", e.pattern.tokens()},
                {"terms", std::move(terms)}};
    if (options.p) {
        out["p"] = options.p->str();
    }
    return out;
}

PPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw std::invalid_argument("expected {\"coeffs\": [...]}");
    }
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) {
            throw std::invalid_argument("polynomial coefficients must be decimal strings");
        }
        try {
            coeffs.emplace_back(c.get<std::string>());
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("bad coefficient '" + c.get<std::string>() + "'");
        }
    }
    return PPolynomial(std::move(coeffs));
}

} // namespace parafield
