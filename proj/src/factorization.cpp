#include "fibcube/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace fibcube {

namespace {

// connected component of start in the spanning subgraph keeping exactly the
// edges whose class matches (keep_class >= 0) or differs (keep_class < 0,
// drop_class dropped); adjacency is the per-vertex (neighbor, class) list
std::vector<int> component_of(
    const std::vector<std::vector<std::pair<int, int>>>& adj, int start,
    int keep_class, int drop_class, std::vector<int>* comp_id = nullptr,
    int comp_label = 0) {
    std::vector<int> comp;
    std::vector<char> seen;
    if (!comp_id) seen.assign(adj.size(), 0);
    const auto visited = [&](int v) {
        return comp_id ? (*comp_id)[static_cast<size_t>(v)] != -1
                       : seen[static_cast<size_t>(v)] != 0;
    };
    const auto mark = [&](int v) {
        if (comp_id)
            (*comp_id)[static_cast<size_t>(v)] = comp_label;
        else
            seen[static_cast<size_t>(v)] = 1;
    };
    std::queue<int> q;
    mark(start);
    q.push(start);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        comp.push_back(u);
        for (const auto& [v, cls] : adj[static_cast<size_t>(u)]) {
            if (keep_class >= 0 && cls != keep_class) continue;
            if (keep_class < 0 && cls == drop_class) continue;
            if (visited(v)) continue;
            mark(v);
            q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> degs(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) degs[static_cast<size_t>(v)] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace

Factorization factorize(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("factorization undefined on trivial graph");
    const EdgePartition part = sigma_classes(g);
    const int k = part.class_count();
    const int order = g.vertex_count();

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(order));
    for (size_t t = 0; t < part.edges.size(); ++t) {
        const Edge& e = part.edges[t];
        const int cls = part.class_of[t];
        adj[static_cast<size_t>(e.u)].emplace_back(e.v, cls);
        adj[static_cast<size_t>(e.v)].emplace_back(e.u, cls);
    }

    Factorization result;
    result.base_vertex = 0;
    result.coordinates.assign(static_cast<size_t>(order), std::vector<int>());

    for (int c = 0; c < k; ++c) {
        // factor: the class-c layer through the base vertex
        const std::vector<int> layer = component_of(adj, result.base_vertex, c, -1);
        if (layer.size() < 2) throw std::runtime_error("not a product coloring");
        std::vector<int> local(static_cast<size_t>(order), -1);
        for (size_t i = 0; i < layer.size(); ++i)
            local[static_cast<size_t>(layer[i])] = static_cast<int>(i);
        std::vector<Edge> factor_edges;
        for (int idx : part.classes[static_cast<size_t>(c)]) {
            const Edge& e = part.edges[static_cast<size_t>(idx)];
            const int lu = local[static_cast<size_t>(e.u)];
            const int lv = local[static_cast<size_t>(e.v)];
            if (lu != -1 && lv != -1) factor_edges.push_back(Edge{lu, lv});
        }
        Graph factor;
        if (g.labeled()) {
            std::vector<Word> labels;
            for (int v : layer) labels.push_back(g.label(v));
            factor = Graph(static_cast<int>(layer.size()), factor_edges,
                           std::move(labels));
        } else {
            factor = Graph(static_cast<int>(layer.size()), factor_edges);
        }

        // coordinate c of a vertex: the base-layer representative of its
        // component once every class-c edge is removed
        std::vector<int> comp_id(static_cast<size_t>(order), -1);
        int comps = 0;
        for (int v = 0; v < order; ++v)
            if (comp_id[static_cast<size_t>(v)] == -1)
                component_of(adj, v, -1, c, &comp_id, comps++);
        std::vector<int> rep(static_cast<size_t>(comps), -1);
        for (int x : layer) {
            const int comp = comp_id[static_cast<size_t>(x)];
            if (rep[static_cast<size_t>(comp)] != -1)
                throw std::runtime_error("not a product coloring");
            rep[static_cast<size_t>(comp)] = local[static_cast<size_t>(x)];
        }
        for (int v = 0; v < order; ++v) {
            const int coord = rep[static_cast<size_t>(comp_id[static_cast<size_t>(v)])];
            if (coord == -1) throw std::runtime_error("not a product coloring");
            result.coordinates[static_cast<size_t>(v)].push_back(coord);
        }
        result.factors.push_back(std::move(factor));
    }

    // canonical factor order: size, edge count, degree sequence, then the
    // smallest edge index of the originating class
    std::vector<int> perm(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) perm[static_cast<size_t>(c)] = c;
    std::vector<std::vector<int>> degs(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c)
        degs[static_cast<size_t>(c)] = sorted_degrees(result.factors[static_cast<size_t>(c)]);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const Graph& fa = result.factors[static_cast<size_t>(a)];
        const Graph& fb = result.factors[static_cast<size_t>(b)];
        if (fa.vertex_count() != fb.vertex_count())
            return fa.vertex_count() < fb.vertex_count();
        if (fa.edge_count() != fb.edge_count())
            return fa.edge_count() < fb.edge_count();
        if (degs[static_cast<size_t>(a)] != degs[static_cast<size_t>(b)])
            return degs[static_cast<size_t>(a)] < degs[static_cast<size_t>(b)];
        return part.classes[static_cast<size_t>(a)][0] <
               part.classes[static_cast<size_t>(b)][0];
    });
    std::vector<Graph> factors;
    for (int c : perm) factors.push_back(std::move(result.factors[static_cast<size_t>(c)]));
    result.factors = std::move(factors);
    for (auto& tuple : result.coordinates) {
        std::vector<int> reordered(static_cast<size_t>(k));
        for (int c = 0; c < k; ++c)
            reordered[static_cast<size_t>(c)] = tuple[static_cast<size_t>(perm[static_cast<size_t>(c)])];
        tuple = std::move(reordered);
    }

    if (!verify_factorization(g, result))
        throw std::runtime_error("not a product coloring");
    return result;
}

bool verify_factorization(const Graph& g, const Factorization& f) {
    const int order = g.vertex_count();
    const int k = static_cast<int>(f.factors.size());

    std::uint64_t product = 1;
    for (const Graph& factor : f.factors) {
        if (factor.vertex_count() < 2) return false;
        product *= static_cast<std::uint64_t>(factor.vertex_count());
        if (product > static_cast<std::uint64_t>(order)) return false;
    }
    if (product != static_cast<std::uint64_t>(order)) return false;

    if (static_cast<int>(f.coordinates.size()) != order) return false;
    for (const auto& tuple : f.coordinates) {
        if (static_cast<int>(tuple.size()) != k) return false;
        for (int c = 0; c < k; ++c) {
            const int x = tuple[static_cast<size_t>(c)];
            if (x < 0 || x >= f.factors[static_cast<size_t>(c)].vertex_count())
                return false;
        }
    }
    {
        auto tuples = f.coordinates;
        std::sort(tuples.begin(), tuples.end());
        if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end())
            return false;  // count equals the order, so distinct means bijective
    }

    for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) {
            int diff = -1;
            int count = 0;
            for (int c = 0; c < k && count < 2; ++c) {
                if (f.coordinates[static_cast<size_t>(u)][static_cast<size_t>(c)] !=
                    f.coordinates[static_cast<size_t>(v)][static_cast<size_t>(c)]) {
                    diff = c;
                    ++count;
                }
            }
            const bool product_edge =
                count == 1 &&
                f.factors[static_cast<size_t>(diff)].adjacent(
                    f.coordinates[static_cast<size_t>(u)][static_cast<size_t>(diff)],
                    f.coordinates[static_cast<size_t>(v)][static_cast<size_t>(diff)]);
            if (product_edge != g.adjacent(u, v)) return false;
        }
    }
    return true;
}

std::vector<std::array<int, 3>> grid_cells(int p_max, int r_max, int n_max) {
    std::vector<std::array<int, 3>> cells;
    for (int p = 1; p <= p_max; ++p) {
        for (int n = 1; n <= n_max; ++n) {
            std::vector<int> rs;
            for (int r = 1; r <= r_max; ++r) rs.push_back(r);
            if (n > r_max) rs.push_back(n);
            for (int r : rs) cells.push_back({p, r, n});
        }
    }
    return cells;
}

namespace {

// shared sweep scaffolding: evaluates fn on every cell under the cap
std::vector<GridCell> run_grid(int p_max, int r_max, int n_max, int vertex_cap,
                               const std::function<void(GridCell&, const Graph&)>& fn) {
    const auto cells = grid_cells(p_max, r_max, n_max);
    std::vector<GridCell> results(cells.size());
    detail::parallel_cells(static_cast<int>(cells.size()), [&](int i) {
        const auto [p, r, n] = cells[static_cast<size_t>(i)];
        GridCell& cell = results[static_cast<size_t>(i)];
        cell.p = p;
        cell.r = r;
        cell.n = n;
        const CubeParams params{Family::O, p, r, n};
        if (count_words(params) > static_cast<std::uint64_t>(vertex_cap)) {
            cell.evaluated = false;
            cell.pass = true;
            cell.detail = "vertex cap";
            return;
        }
        cell.evaluated = true;
        try {
            fn(cell, build_cube(params));
        } catch (const std::exception& ex) {
            cell.pass = false;
            cell.detail = ex.what();
        }
    });
    return results;
}

}  // namespace

std::vector<GridCell> primality_grid(int p_max, int r_max, int n_max,
                                     int vertex_cap) {
    return run_grid(p_max, r_max, n_max, vertex_cap,
                    [](GridCell& cell, const Graph& g) {
        const bool prime = is_prime(g);
        const bool expected = !(cell.p == 1 && 2 <= cell.n && cell.n <= cell.r);
        std::ostringstream detail;
        detail << (prime ? "prime" : "composite");
        cell.pass = prime == expected;
        if (!cell.pass) {
            detail << ", expected " << (expected ? "prime" : "composite");
        } else if (!prime) {
            const Factorization f = factorize(g);
            bool edges_only = true;
            for (const Graph& factor : f.factors)
                edges_only = edges_only && factor.vertex_count() == 2 &&
                             factor.edge_count() == 1;
            cell.pass = static_cast<int>(f.factors.size()) == cell.n && edges_only;
            detail << ", " << f.factors.size() << " edge factors";
            if (!cell.pass) detail << " (expected " << cell.n << ")";
        }
        cell.detail = detail.str();
    });
}

std::vector<GridCell> recognizer_grid(int p_max, int r_max, int n_max,
                                      int vertex_cap) {
    return run_grid(p_max, r_max, n_max, vertex_cap,
                    [](GridCell& cell, const Graph& g) {
        const auto cube_dim = recognize_hypercube(g);
        const auto star_leaves = recognize_star(g);
        const auto cube_want = o_cube_hypercube_dim(cell.p, cell.r, cell.n);
        const auto star_want = o_cube_star_leaves(cell.p, cell.r, cell.n);
        cell.pass = cube_dim == cube_want && star_leaves == star_want;
        std::ostringstream detail;
        detail << "hypercube=";
        cube_dim ? detail << *cube_dim : detail << "no";
        detail << " star=";
        star_leaves ? detail << *star_leaves : detail << "no";
        if (!cell.pass) {
            detail << ", expected hypercube=";
            cube_want ? detail << *cube_want : detail << "no";
            detail << " star=";
            star_want ? detail << *star_want : detail << "no";
        }
        cell.detail = detail.str();
    });
}

std::vector<GridCell> layer_grid(int p_max, int r_max, int n_max, int vertex_cap) {
    return run_grid(p_max, r_max, n_max, vertex_cap,
                    [](GridCell& cell, const Graph& g) {
        const auto reports = layer_structure_check(g);
        cell.pass = true;
        std::ostringstream detail;
        for (const LayerReport& rep : reports) {
            if (rep.ok()) continue;
            cell.pass = false;
            detail << " i=" << rep.coordinate;
        }
        cell.detail = cell.pass
                          ? "all coordinates"
                          : "failing coordinates:" + detail.str();
    });
}

std::vector<GridCell> coordinate_theta_grid(int p_max, int r_max, int n_max,
                                            int vertex_cap) {
    return run_grid(p_max, r_max, n_max, vertex_cap,
                    [](GridCell& cell, const Graph& g) {
        const auto violations = coordinate_theta_check(g);
        cell.pass = violations.empty();
        std::ostringstream detail;
        detail << violations.size() << " violations";
        cell.detail = detail.str();
    });
}

std::vector<FamilyCell> family_equivalence_check(int p, int r, int n_max) {
    std::vector<FamilyCell> results;
    for (int n = 1; n <= n_max; ++n) {
        FamilyCell cell;
        cell.p = p;
        cell.r = r;
        cell.n = n;
        const auto o_words = enumerate_words({Family::O, p, r, n});
        const auto i_words = enumerate_words({Family::I, p, r, n});
        std::ostringstream detail;
        if (o_words == i_words) {
            cell.status = FamilyCell::Status::equal_words;
            detail << "equal word sets (" << o_words.size() << ")";
        } else if (o_words.size() != i_words.size()) {
            cell.status = FamilyCell::Status::not_isomorphic;
            detail << o_words.size() << " vs " << i_words.size() << " vertices";
        } else if (o_words.size() <= 64) {
            const bool iso = is_isomorphic(build_cube({Family::O, p, r, n}),
                                           build_cube({Family::I, p, r, n}));
            cell.status = iso ? FamilyCell::Status::isomorphic
                              : FamilyCell::Status::not_isomorphic;
            detail << (iso ? "isomorphic" : "not isomorphic")
                   << " on " << o_words.size() << " vertices";
        } else {
            cell.status = FamilyCell::Status::size_skipped;
            detail << "equal order " << o_words.size()
                   << ", beyond exact isomorphism limit";
        }
        cell.pass = (p == 1 || r == 1)
                        ? cell.status == FamilyCell::Status::equal_words
                        : true;
        cell.detail = detail.str();
        results.push_back(std::move(cell));
    }
    return results;
}

}  // namespace fibcube
