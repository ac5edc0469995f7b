#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qclaw/analysis.hpp"
#include "qclaw/checks.hpp"
#include "qclaw/glsinit.hpp"
#include "qclaw/json_io.hpp"

namespace {

using namespace qclaw;

IntVec parse_csv_ints(const std::string& text) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty entry in list '" + text + "'");
        try {
            out.push_back(std::stoll(item));
        } catch (...) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

IntMat parse_matrix(const std::string& text) {
    IntMat m;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) m.push_back(parse_csv_ints(row));
    return m;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text << "\n";
}

QuantumSeed seed_from_input(const std::string& path) { return seed_from_json(load_json(path)); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum seed workbench: construct, mutate and analyze quantum seeds"};
    app.require_subcommand(1);

    std::string type, matrix, word_csv, input, out_path, exp_csv, suite = "all";
    std::vector<Int> at;
    Int max_depth = 64;
    std::uint64_t prng_seed = 12345;

    auto* cmd_init = app.add_subcommand("init", "build the initial seed of a reduced word");
    cmd_init->add_option("--type", type, "named Cartan type, e.g. A2, A3, D4");
    cmd_init->add_option("--matrix", matrix, "explicit Cartan matrix, rows ; separated");
    cmd_init->add_option("--word", word_csv, "comma-separated word, 1-based letters")->required();
    cmd_init->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_mutate = app.add_subcommand("mutate", "apply a mutation sequence to a seed");
    cmd_mutate->add_option("input", input, "seed JSON file, or - for stdin")->required();
    cmd_mutate->add_option("--at", at, "mutation direction, 1-based; repeatable");
    cmd_mutate->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_expand = app.add_subcommand("expand", "expand a cluster monomial in the initial torus");
    cmd_expand->add_option("input", input, "seed JSON file, or - for stdin")->required();
    cmd_expand->add_option("--exp", exp_csv, "comma-separated exponent vector")->required();
    cmd_expand->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_graph = app.add_subcommand("graph", "enumerate the exchange graph");
    cmd_graph->add_option("input", input, "seed JSON file, or - for stdin")->required();
    cmd_graph->add_option("--max-depth", max_depth, "BFS depth cap (default 64)");
    cmd_graph->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_dot = app.add_subcommand("export-dot", "render a graph JSON as DOT");
    cmd_dot->add_option("input", input, "graph JSON file, or - for stdin")->required();
    cmd_dot->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_check = app.add_subcommand("check", "run verification suites over the exchange graph");
    cmd_check->add_option("input", input, "seed JSON file, or - for stdin")->required();
    cmd_check->add_option("--suite", suite, "suite name or 'all'");
    cmd_check->add_option("--seed", prng_seed, "PRNG seed for the randomized suites");
    cmd_check->add_option("--max-depth", max_depth, "BFS depth cap (default 64)");
    cmd_check->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_init->parsed()) {
            if (type.empty() == matrix.empty())
                throw ParseError("give exactly one of --type or --matrix");
            CartanDatum cd = type.empty() ? CartanDatum(parse_matrix(matrix))
                                          : CartanDatum::named(type);
            IntVec letters = parse_csv_ints(word_csv);
            for (auto& x : letters) {
                if (x < 1 || x > cd.rank()) throw ParseError("word letter out of range");
                --x;
            }
            InitialSeedData data = initial_seed(cd, ReducedWord{std::move(letters)});
            emit(seed_to_json(data.seed).dump(2), out_path);
        } else if (cmd_mutate->parsed()) {
            QuantumSeed seed = seed_from_input(input);
            for (Int k : at) {
                if (k < 1 || k > seed.size()) throw ParseError("--at index out of range");
                seed = seed.mutate(k - 1);
            }
            emit(seed_to_json(seed).dump(2), out_path);
        } else if (cmd_expand->parsed()) {
            QuantumSeed seed = seed_from_input(input);
            ExpVec c = parse_csv_ints(exp_csv);
            if (static_cast<Int>(c.size()) != seed.size())
                throw ParseError("--exp length differs from the seed size");
            Json j;
            j["schema"] = kSchemaTag;
            j["terms"] = torus_element_to_json(seed.normalized_monomial(c));
            emit(j.dump(2), out_path);
        } else if (cmd_graph->parsed()) {
            QuantumSeed seed = seed_from_input(input);
            ExchangeGraph g = enumerate_graph(seed, max_depth);
            emit(graph_to_json(g).dump(2), out_path);
        } else if (cmd_dot->parsed()) {
            Json j = load_json(input);
            ExchangeGraph g;
            g.root = j.value("root", 0);
            g.closed = j.value("closed", true);
            const Int n = j.at("node_count").get<Int>();
            // DOT needs only the shape; rebuild edges without seeds.
            for (const auto& e : j.at("edges"))
                g.edges.emplace_back(e[0].get<Int>(), e[1].get<Int>() - 1, e[2].get<Int>());
            std::ostringstream os;
            os << "graph exchange {\n  node [shape=circle];\n";
            for (Int i = 0; i < n; ++i) os << "  n" << i << ";\n";
            for (const auto& [a, k, b] : g.edges)
                os << "  n" << a << " -- n" << b << " [label=\"" << (k + 1) << "\"];\n";
            os << "}";
            emit(os.str(), out_path);
        } else if (cmd_check->parsed()) {
            QuantumSeed seed = seed_from_input(input);
            SuiteOptions opts;
            opts.prng_seed = prng_seed;
            opts.graph_depth = max_depth;
            if (suite != "all") {
                const auto& names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end())
                    throw ParseError("unknown suite '" + suite + "'");
            }
            std::vector<CheckReport> reports = run_suites(suite, seed, opts);
            emit(reports_to_json(reports, opts).dump(2), out_path);
            for (const auto& r : reports)
                if (!r.passed()) return 1;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
