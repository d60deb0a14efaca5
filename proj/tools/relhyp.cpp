#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "relhyp/cli.hpp"
#include "relhyp/errors.hpp"

namespace {

namespace cli = relhyp::cli;
namespace curves = relhyp::curves;

constexpr int exit_input = 2;
constexpr int exit_resource = 3;

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        out += (i == 0 ? "" : " ") + std::string(argv[i]);
    }
    return out;
}

curves::WitnessKind kind_of(const std::string& name) {
    if (auto k = curves::parse_witness_kind(name)) {
        return *k;
    }
    throw relhyp::InputError("unknown kind " + name);
}

/// "r" or "a..b".
std::pair<std::size_t, std::size_t> radius_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const auto r = std::stoul(text, &used);
            if (used == text.size()) {
                return {r, r};
            }
        } else {
            const auto a = std::stoul(text.substr(0, dots), &used);
            if (used == dots) {
                const auto rest = text.substr(dots + 2);
                const auto b = std::stoul(rest, &used);
                if (used == rest.size()) {
                    return {a, b};
                }
            }
        }
    } catch (const std::logic_error&) {
    }
    throw relhyp::InputError("radius must be r or a..b, got " + text);
}

void print(const cli::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative hyperbolicity experiments on hierarchies, Coxeter groups and curve graphs", "relhyp"};
    app.set_version_flag("--version", std::string(cli::tool_version));
    app.require_subcommand(1);

    cli::Provenance prov;
    prov.command_line = join_args(argc, argv);

    std::string file;
    std::string kind = "sep";
    std::string format = "csv";
    int bound = 8;
    int g = 0;
    int n = 0;
    int chain_bound = curves::default_chain_bound;
    std::string radius = "0..4";
    cli::RhDeltaOptions rh;
    std::optional<int> depth;
    bool prune = true;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 100000;
    bool clean = false;
    std::vector<std::string> isolating;

    auto* racg = app.add_subcommand("racg", "right-angled Coxeter groups")->require_subcommand(1);
    auto* racg_classify = racg->add_subcommand("classify", "peripheral collection of a defining graph");
    racg_classify->add_option("graph", file, "graph file with v/e lines")->required();

    auto* crv = app.add_subcommand("curves", "graphs of multicurves")->require_subcommand(1);
    auto* survey = crv->add_subcommand("survey", "classify every surface with 2g + n <= bound");
    survey->add_option("--kind", kind, "sep, pants or cut")->required();
    survey->add_option("--bound", bound, "largest 2g + n, at most 10")->check(CLI::NonNegativeNumber);
    survey->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    survey->add_option("--chain-bound", chain_bound, "longest chain searched")->check(CLI::PositiveNumber);
    auto* classify = crv->add_subcommand("classify", "classify one surface");
    classify->add_option("--kind", kind, "sep, pants or cut")->required();
    classify->add_option("--g", g, "genus")->required();
    classify->add_option("--n", n, "punctures")->required();
    classify->add_option("--chain-bound", chain_bound, "longest chain searched")->check(CLI::PositiveNumber);
    auto* graph = crv->add_subcommand("graph", "witnesses and index structure on one stable graph");
    graph->add_option("--kind", kind, "sep, pants or cut")->required();
    graph->add_option("graph", file, "stable graph JSON file")->required();
    auto* enumerate = crv->add_subcommand("enumerate", "stable graphs of a surface");
    enumerate->add_option("--g", g, "genus")->required();
    enumerate->add_option("--n", n, "punctures")->required();
    enumerate->add_option("--bound", bound, "cap on 2g + n, at most 10")->check(CLI::NonNegativeNumber);

    auto* experiment = app.add_subcommand("experiment", "reproducible experiments")->require_subcommand(1);
    auto* rh_delta = experiment->add_subcommand("rh-delta", "delta of plain, factored and cusped Cayley balls");
    rh_delta->add_option("graph", file, "graph file with v/e lines")->required();
    rh_delta->add_option("--radius", radius, "r or a..b");
    rh_delta->add_option("--cap-vertices", rh.cap_vertices, "largest space measured");
    rh_delta->add_option("--depth", depth, "horoball depth (default from the region diameter)")
        ->check(CLI::Range(0, relhyp::metric::max_horoball_depth));
    rh_delta->add_flag("--prune,!--no-prune", prune, "drop horizontal horoball edges that are never shortest (default)");
    rh_delta->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));

    auto* metric = app.add_subcommand("metric", "weighted graphs")->require_subcommand(1);
    auto* delta = metric->add_subcommand("delta", "four-point delta of a metric graph");
    delta->add_option("graph", file, "metric graph JSON file")->required();
    delta->add_option("--seed", seed, "sample quadruples with this seed");
    delta->add_option("--samples", samples, "quadruples sampled")->check(CLI::PositiveNumber);

    auto* hhs = app.add_subcommand("hhs", "index structures")->require_subcommand(1);
    auto* validate = hhs->add_subcommand("validate", "check the index-level axioms");
    validate->add_option("structure", file, "index structure JSON file")->required();
    validate->add_flag("--clean", clean, "also check clean containers");
    auto* isolate = hhs->add_subcommand("isolate", "isolated orthogonality");
    isolate->add_option("structure", file, "index structure JSON file")->required();
    isolate->add_option("--isolating", isolating, "check this collection instead of searching");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        const curves::ClassifyOptions options{chain_bound, curves::max_enumeration_bound};
        if (racg_classify->parsed()) {
            const auto text = cli::read_file(file);
            prov.input_hash = cli::fnv1a64(text);
            print(cli::racg_classify(text, prov));
        } else if (survey->parsed()) {
            prov.input_hash = cli::fnv1a64("survey " + kind + " " + std::to_string(bound));
            const auto f = format == "json" ? cli::Format::json : cli::Format::csv;
            std::cout << cli::curves_survey(kind_of(kind), bound, options, f, prov);
        } else if (classify->parsed()) {
            prov.input_hash = cli::fnv1a64("classify " + kind + " " + std::to_string(g) + " " + std::to_string(n));
            print(cli::curves_classify(kind_of(kind), {g, n}, options, prov));
        } else if (graph->parsed()) {
            const auto text = cli::read_file(file);
            prov.input_hash = cli::fnv1a64(text);
            print(cli::curves_graph(kind_of(kind), text, prov));
        } else if (enumerate->parsed()) {
            prov.input_hash = cli::fnv1a64("enumerate " + std::to_string(g) + " " + std::to_string(n));
            const int cap = enumerate->count("--bound") > 0 ? bound : curves::max_enumeration_bound;
            print(cli::curves_enumerate({g, n}, cap, prov));
        } else if (rh_delta->parsed()) {
            const auto text = cli::read_file(file);
            prov.input_hash = cli::fnv1a64(text);
            std::tie(rh.radius_min, rh.radius_max) = radius_range(radius);
            rh.depth = depth;
            rh.prune = prune;
            cli::experiment_rh_delta(text, rh, std::cout, prov);
        } else if (delta->parsed()) {
            const auto text = cli::read_file(file);
            prov.input_hash = cli::fnv1a64(text);
            print(cli::metric_delta(text, seed, samples, prov));
        } else if (validate->parsed()) {
            const auto text = cli::read_file(file);
            prov.input_hash = cli::fnv1a64(text);
            print(cli::hhs_validate(text, clean, prov));
        } else if (isolate->parsed()) {
            const auto text = cli::read_file(file);
            prov.input_hash = cli::fnv1a64(text);
            std::optional<std::vector<std::string>> given;
            if (isolate->count("--isolating") > 0) {
                given = isolating;
            }
            print(cli::hhs_isolate(text, given, prov));
        }
    } catch (const relhyp::InputError& e) {
        std::cout.flush();
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const relhyp::ResourceLimitExceeded& e) {
        std::cout.flush();
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
