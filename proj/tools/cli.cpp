#include "cli.hpp"

#include "parafield/coefficients.hpp"
#include "parafield/diagrams.hpp"
#include "parafield/expansion.hpp"
#include "parafield/graph_canon.hpp"
#include "parafield/json_io.hpp"
#include "parafield/partitions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace parafield::cli {

namespace {

struct CliConfig {
    int max_n = Limits::kDefaultMaxChords;
    int max_coeff_n = Limits::kDefaultMaxCoefficientVertices;
    std::uint64_t oracle_budget = Limits::kDefaultOracleBudget;
    RenderFormat format = RenderFormat::Text;
    std::string output_path;
    bool group_by_coefficient = false;

    Limits limits() const { return {max_n, max_coeff_n, oracle_budget}; }
};

// Thrown by a command to report a failed check with exit status 1.
struct VerificationFailure {};

int cmd_enumerate(int n, const CliConfig& config, std::ostream& out) {
    const auto diagrams = enumerate_matchings(n, config.max_n);
    if (config.format == RenderFormat::Json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& d : diagrams) {
            auto j = to_json(d);
            j["crossings"] = crossing_count(d);
            list.push_back(std::move(j));
        }
        out << nlohmann::json{{"n", n}, {"diagrams", std::move(list)}}.dump(2) << '\n';
        return kSuccess;
    }
    for (const auto& d : diagrams) {
        out << d.to_string() << " m=" << crossing_count(d) << '\n';
    }
    return kSuccess;
}

int cmd_table(int rows, const CliConfig& config, std::ostream& out) {
    if (rows < 1) {
        throw std::invalid_argument("--max-n must be at least 1");
    }
    nlohmann::json list = nlohmann::json::array();
    for (int n = 1; n <= rows; ++n) {
        const auto census = crossing_census(n, config.max_n);
        if (config.format == RenderFormat::Json) {
            list.push_back(census_to_json(n, census));
            continue;
        }
        std::uint64_t total = 0;
        std::string line;
        for (int m = 0; m <= census.rbegin()->first; ++m) {
            const auto it = census.find(m);
            const auto count = it == census.end() ? 0 : it->second;
            total += count;
            line += std::to_string(count) + ' ';
        }
        out << line << "| " << total << '\n';
    }
    if (config.format == RenderFormat::Json) {
        out << list.dump(2) << '\n';
    }
    return kSuccess;
}

int cmd_coeff(const std::string& diagram_text, Statistics kind, const CliConfig& config, std::ostream& out) {
    const auto diagram = ChordDiagram::parse(diagram_text);
    const auto graph = crossing_graph(diagram);
    const auto poly = coefficient_for(graph, kind, config.max_coeff_n);
    switch (config.format) {
    case RenderFormat::Json: {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& [i, j] : graph.edges()) {
            edges.push_back({i + 1, j + 1});
        }
        auto j = to_json(poly);
        j["diagram"] = to_json(diagram);
        j["crossings"] = graph.edge_count();
        j["edges"] = std::move(edges);
        j["kind"] = std::string(to_string(kind));
        j["polynomial"] = poly.to_string();
        out << j.dump(2) << '\n';
        break;
    }
    case RenderFormat::Latex:
        out << poly.to_latex() << '\n';
        break;
    case RenderFormat::Text:
        out << "m=" << graph.edge_count() << "; " << poly.to_string() << '\n';
        out << "edges: " << (graph.edge_count() == 0 ? "none" : graph.to_string()) << '\n';
        break;
    }
    return kSuccess;
}

int cmd_saturated(int n, const CliConfig& config, std::ostream& out) {
    const auto partitions = generate_partitions(n);
    const auto poly = coefficient_saturated(n);
    if (config.format == RenderFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& partition : partitions) {
            rows.push_back(to_json(partition_stats(partition)));
        }
        auto j = to_json(poly);
        j["n"] = n;
        j["partitions"] = std::move(rows);
        j["polynomial"] = poly.to_string();
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    if (config.format == RenderFormat::Latex) {
        out << poly.to_latex() << '\n';
        return kSuccess;
    }
    out << "s\tpartition\tk\tA\tX\tE\n";
    int s = 1;
    for (const auto& partition : partitions) {
        const auto stats = partition_stats(partition);
        out << s++ << '\t' << partition.to_string() << '\t' << stats.k << '\t' << stats.A << '\t' << stats.X
            << '\t' << stats.E.to_string() << '\n';
    }
    out << poly.to_string() << '\n';
    return kSuccess;
}

int cmd_expand(const FieldPattern& pattern, std::optional<long long> p, const CliConfig& config,
               std::ostream& out) {
    RenderOptions options;
    options.group_by_coefficient = config.group_by_coefficient;
    if (p) {
        if (*p < 0) {
            throw std::invalid_argument("--p must be nonnegative");
        }
        options.p = BigInt(*p);
    }
    write_expansion(out, pattern, config.format, options, config.limits());
    return kSuccess;
}

int cmd_verify(int n, int p_max, const CliConfig& config, std::ostream& out) {
    if (p_max < 0) {
        throw std::invalid_argument("--p-max must be nonnegative");
    }
    const auto diagrams = enumerate_matchings(n, config.max_n);
    std::map<GraphKey, std::set<std::string>, decltype([](const GraphKey& a, const GraphKey& b) {
                 return std::tie(a.canonical, a.rows) < std::tie(b.canonical, b.rows);
             })>
        by_class;
    std::map<int, std::pair<std::size_t, std::set<std::string>>> by_crossings;

    for (const auto& d : diagrams) {
        const auto g = crossing_graph(d);
        const auto bose = coefficient_polynomial(g, config.max_coeff_n);
        const auto fermi = parafermi_coefficient(g, config.max_coeff_n);
        for (int p = 0; p <= p_max; ++p) {
            const auto up = static_cast<std::uint64_t>(p);
            const auto bose_oracle = coefficient_bruteforce(g, up, Statistics::Parabose, config.oracle_budget);
            const auto fermi_oracle = coefficient_bruteforce(g, up, Statistics::Parafermi, config.oracle_budget);
            if (bose(p) != bose_oracle || fermi(p) != fermi_oracle) {
                out << "mismatch: diagram " << d.to_string() << " p=" << p << ": parabose " << bose(p)
                    << " vs oracle " << bose_oracle << ", parafermi " << fermi(p) << " vs oracle "
                    << fermi_oracle << '\n';
                throw VerificationFailure{};
            }
        }
        const auto key = canonical_key(g);
        if (key.canonical) {
            by_class[key].insert(bose.to_string());
        }
        auto& bucket = by_crossings[static_cast<int>(g.edge_count())];
        ++bucket.first;
        bucket.second.insert(bose.to_string());
    }

    for (const auto& [key, polys] : by_class) {
        if (polys.size() != 1) {
            out << "mismatch: isomorphic crossing graphs with different polynomials\n";
            throw VerificationFailure{};
        }
    }
    for (int p = 0; p <= p_max; ++p) {
        if (!verify_pn_identity(n, p)) {
            out << "mismatch: partition identity fails for n=" << n << " p=" << p << '\n';
            throw VerificationFailure{};
        }
    }

    for (const auto& [m, bucket] : by_crossings) {
        out << "m=" << m << ": " << bucket.first << " diagram" << (bucket.first == 1 ? "" : "s") << ", "
            << bucket.second.size() << " distinct polynomial" << (bucket.second.size() == 1 ? "" : "s")
            << '\n';
    }
    out << "isomorphism classes: " << by_class.size() << ", each with one polynomial\n";
    out << "partition identity: p=0.." << p_max << " ok\n";
    out << diagrams.size() << " diagrams × " << (p_max + 1) << " p-values: all match\n";
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vacuum matrix elements of parabose and parafermi field products"};
    app.require_subcommand(1);

    CliConfig config;
    std::string format = "text";
    app.add_option("--max-n", config.max_n, "Largest number of chords (N/2) to enumerate")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-coeff-n", config.max_coeff_n, "Largest crossing graph for set-partition sums")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle-budget", config.oracle_budget, "Largest p^n the brute-force oracle will sum")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--out", config.output_path, "Write output to this file instead of stdout");

    int n = 0;
    int rows = 0;
    int fields = 0;
    int p_max = 0;
    std::string diagram;
    std::string kind = "parabose";
    std::string pattern_text;
    std::optional<long long> p;

    auto* enumerate = app.add_subcommand("enumerate", "List all chord diagrams with their crossing counts");
    enumerate->add_option("--n", n, "Number of chords")->required();

    auto* table = app.add_subcommand("table", "Crossing census T_{Nm} for N = 2 .. 2*max-n");
    table->add_option("--max-n", rows, "Last row, in chords")->required();

    auto* coeff = app.add_subcommand("coeff", "Coefficient polynomial of one diagram");
    coeff->add_option("--diagram", diagram, "Diagram as a-b,c-d,...")->required();
    coeff->add_option("--kind", kind)->check(CLI::IsMember({"parabose", "parafermi"}));

    auto* saturated = app.add_subcommand("saturated", "Coefficient of the fully crossed diagram via partitions");
    saturated->add_option("--n", n, "Number of chords")->required();

    auto* expand_cmd = app.add_subcommand("expand", "Full N-point vacuum matrix element");
    auto* fields_opt = expand_cmd->add_option("--fields", fields, "Number of fields N");
    auto* pattern_opt =
        expand_cmd->add_option("--pattern", pattern_text, "Explicit field list, e.g. psi,psibar,psibar,psi");
    fields_opt->excludes(pattern_opt);
    expand_cmd->add_option("--kind", kind)->check(CLI::IsMember({"parabose", "parafermi"}));
    expand_cmd->add_option("--p", p, "Also evaluate the coefficients at this order");
    expand_cmd->add_flag("--group", config.group_by_coefficient, "Group terms sharing a coefficient");

    auto* verify = app.add_subcommand("verify", "Cross-check coefficients against the brute-force oracle");
    verify->add_option("--n", n, "Number of chords")->required();
    verify->add_option("--p-max", p_max, "Check p = 0 .. p-max")->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<std::string> argv_storage{"parafield"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto chosen = app.get_subcommands();
        out << (chosen.empty() ? app.help() : chosen.back()->help());
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    config.format = format == "json" ? RenderFormat::Json
                    : format == "latex" ? RenderFormat::Latex
                                        : RenderFormat::Text;
    const Statistics statistics = kind == "parafermi" ? Statistics::Parafermi : Statistics::Parabose;

    std::ofstream file;
    if (!config.output_path.empty()) {
        file.open(config.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << config.output_path << '\n';
            return kUsageError;
        }
    }
    std::ostream& target = config.output_path.empty() ? out : file;

    int status = kSuccess;
    try {
        if (enumerate->parsed()) {
            status = cmd_enumerate(n, config, target);
        } else if (table->parsed()) {
            status = cmd_table(rows, config, target);
        } else if (coeff->parsed()) {
            status = cmd_coeff(diagram, statistics, config, target);
        } else if (saturated->parsed()) {
            if (n < 1) {
                throw std::invalid_argument("--n must be at least 1");
            }
            status = cmd_saturated(n, config, target);
        } else if (expand_cmd->parsed()) {
            if (pattern_opt->count() == 0 && fields_opt->count() == 0) {
                throw std::invalid_argument("expand needs --fields or --pattern");
            }
            const auto pattern = pattern_opt->count() > 0  ? FieldPattern::parse(pattern_text)
                                 : statistics == Statistics::Parabose ? FieldPattern::parabose(fields)
                                                                      : FieldPattern::alternating_parafermi(fields);
            status = cmd_expand(pattern, p, config, target);
        } else if (verify->parsed()) {
            status = cmd_verify(n, p_max, config, target);
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "; raise it with " << e.flag() << " (given before the subcommand)\n";
        return kCapExceeded;
    } catch (const VerificationFailure&) {
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    target.flush();
    if (!target) {
        err << "error: failed writing output\n";
        return kUsageError;
    }
    return status;
}

} // namespace parafield::cli
