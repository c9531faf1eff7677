#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibcube/factorization.hpp"
#include "fibcube/graph.hpp"
#include "fibcube/io.hpp"
#include "fibcube/relations.hpp"
#include "fibcube/words.hpp"

namespace {

using namespace fibcube;

struct CubeFlags {
    std::string family = "o";
    int p = 1;
    int r = 1;
    int n = 0;
    CubeParams params() const {
        CubeParams out;
        if (family == "o" || family == "O") out.family = Family::O;
        else if (family == "i" || family == "I") out.family = Family::I;
        else throw CLI::ValidationError("--family", "must be o or i");
        out.p = p;
        out.r = r;
        out.n = n;
        validate(out);
        return out;
    }
};

void add_cube_flags(CLI::App* cmd, CubeFlags& flags, bool required) {
    auto* fam = cmd->add_option("--family", flags.family, "word family, o or i");
    auto* p = cmd->add_option("-p", flags.p, "minimum spacing parameter")
                  ->check(CLI::PositiveNumber);
    auto* r = cmd->add_option("-r", flags.r, "maximum chain/run parameter")
                  ->check(CLI::PositiveNumber);
    auto* n = cmd->add_option("-n", flags.n, "word length")
                  ->check(CLI::NonNegativeNumber);
    if (required) {
        fam->required();
        p->required();
        r->required();
        n->required();
    }
}

// either a file path or the compact form family,p,r,n (e.g. o,2,2,4)
Graph load_graph_arg(const std::string& arg) {
    if (std::filesystem::exists(arg)) return read_edge_list_file(arg).graph;
    std::istringstream in(arg);
    std::string family;
    std::getline(in, family, ',');
    CubeFlags flags;
    flags.family = family;
    char comma = 0;
    if (!(in >> flags.p >> comma >> flags.r >> comma >> flags.n))
        throw CLI::ValidationError(
            "graph", arg + " is neither a file nor family,p,r,n");
    return build_cube(flags.params());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

int run_verify(const std::string& suite, int pmax, int rmax, int nmax, int cap) {
    std::vector<GridCell> cells;
    if (suite == "theorem14") cells = primality_grid(pmax, rmax, nmax, cap);
    else if (suite == "lemma31") cells = recognizer_grid(pmax, rmax, nmax, cap);
    else if (suite == "lemma32") cells = layer_grid(pmax, rmax, nmax, cap);
    else if (suite == "cor33") cells = coordinate_theta_grid(pmax, rmax, nmax, cap);
    else if (suite == "prop13") {
        std::vector<FamilyCell> rows;
        for (int p = 1; p <= pmax; ++p)
            for (int r = 1; r <= rmax; ++r)
                for (FamilyCell& cell : family_equivalence_check(p, r, nmax))
                    rows.push_back(std::move(cell));
        std::cout << "1.." << rows.size() << '\n';
        bool all_ok = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            const FamilyCell& cell = rows[i];
            all_ok = all_ok && cell.pass;
            std::cout << (cell.pass ? "ok " : "not ok ") << i + 1 << " - p="
                      << cell.p << " r=" << cell.r << " n=" << cell.n << ' '
                      << cell.detail << '\n';
        }
        return all_ok ? 0 : 1;
    } else {
        throw CLI::ValidationError("--suite",
                                   "unknown suite " + suite +
                                       " (theorem14|lemma31|lemma32|cor33|prop13)");
    }

    std::cout << "1.." << cells.size() << '\n';
    bool all_ok = true;
    for (size_t i = 0; i < cells.size(); ++i) {
        const GridCell& cell = cells[i];
        all_ok = all_ok && cell.pass;
        std::cout << (cell.pass ? "ok " : "not ok ") << i + 1 << " - p=" << cell.p
                  << " r=" << cell.r << " n=" << cell.n;
        if (!cell.evaluated) std::cout << " # SKIP " << cell.detail;
        else std::cout << ' ' << cell.detail;
        std::cout << '\n';
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibonacci (p,r)-cube construction and Cartesian-product "
                 "prime factorization"};
    app.require_subcommand(1);

    CubeFlags flags;
    std::string format = "edges";
    std::string out_path;
    std::string input_path;
    std::string suite;
    std::string iso_a, iso_b;
    int pmax = 3, rmax = 3, nmax = 8, cap = 300;

    auto* gen = app.add_subcommand("gen", "list the words of one cube");
    add_cube_flags(gen, flags, true);

    auto* count = app.add_subcommand("count", "count the words of one cube");
    add_cube_flags(count, flags, true);

    auto* build = app.add_subcommand("build", "emit a cube as edge list or DOT");
    add_cube_flags(build, flags, true);
    build->add_option("--format", format, "edges or dot")
        ->check(CLI::IsMember({"edges", "dot"}));
    build->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* factor = app.add_subcommand(
        "factor", "prime factorization of a cube or graph file");
    add_cube_flags(factor, flags, false);
    factor->add_option("--input", input_path, "graph file in edge-list form");

    auto* prime = app.add_subcommand("prime", "prime or composite");
    add_cube_flags(prime, flags, false);
    prime->add_option("--input", input_path, "graph file in edge-list form");

    auto* iso = app.add_subcommand("iso", "isomorphism of two graphs");
    iso->add_option("a", iso_a, "file or family,p,r,n")->required();
    iso->add_option("b", iso_b, "file or family,p,r,n")->required();

    auto* stats = app.add_subcommand("stats", "order, size, degrees, diameter");
    add_cube_flags(stats, flags, false);
    stats->add_option("--input", input_path, "graph file in edge-list form");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "theorem14|lemma31|lemma32|cor33|prop13")
        ->required();
    verify->add_option("--pmax", pmax)->check(CLI::PositiveNumber);
    verify->add_option("--rmax", rmax)->check(CLI::PositiveNumber);
    verify->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
    verify->add_option("--cap", cap, "skip cells above this vertex count")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        const auto graph_input = [&]() -> Graph {
            if (!input_path.empty()) return read_edge_list_file(input_path).graph;
            return build_cube(flags.params());
        };

        if (gen->parsed()) {
            for (const Word& w : enumerate_words(flags.params()))
                std::cout << w.str() << '\n';
        } else if (count->parsed()) {
            std::cout << count_words(flags.params()) << '\n';
        } else if (build->parsed()) {
            const Graph g = build_cube(flags.params());
            emit(format == "dot" ? write_dot(g)
                                 : write_edge_list(g, flags.params()),
                 out_path);
        } else if (factor->parsed()) {
            const Graph g = graph_input();
            if (is_prime(g)) std::cout << "prime\n";
            else std::cout << write_factorization(factorize(g));
        } else if (prime->parsed()) {
            std::cout << (is_prime(graph_input()) ? "prime" : "composite") << '\n';
        } else if (iso->parsed()) {
            const bool same = is_isomorphic(load_graph_arg(iso_a),
                                            load_graph_arg(iso_b));
            std::cout << (same ? "isomorphic" : "not-isomorphic") << '\n';
        } else if (stats->parsed()) {
            const Graph g = graph_input();
            std::cout << "vertices: " << g.vertex_count() << '\n';
            std::cout << "edges: " << g.edge_count() << '\n';
            std::cout << "degrees:";
            std::vector<int> degrees(static_cast<size_t>(g.vertex_count()));
            for (int v = 0; v < g.vertex_count(); ++v)
                degrees[static_cast<size_t>(v)] = g.degree(v);
            std::sort(degrees.begin(), degrees.end());
            for (int d : degrees) std::cout << ' ' << d;
            std::cout << '\n';
            const auto dist = all_pairs_distances(g);
            int diameter = 0;
            bool connected = true;
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = 0; v < g.vertex_count(); ++v) {
                    const int d = dist.at(u, v);
                    if (d == DistanceTable::unreachable) connected = false;
                    else diameter = std::max(diameter, d);
                }
            std::cout << "diameter: ";
            if (connected) std::cout << diameter << '\n';
            else std::cout << "inf\n";
        } else if (verify->parsed()) {
            return run_verify(suite, pmax, rmax, nmax, cap);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
