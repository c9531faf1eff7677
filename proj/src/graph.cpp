#include "fibcube/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace fibcube {

namespace {

std::vector<std::vector<int>> build_adjacency(int vertex_count,
                                              const std::vector<Edge>& edge_list) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count));
    for (const Edge& e : edge_list) {
        int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        if (u == v) throw std::invalid_argument("self loop");
        if (u < 0 || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

}  // namespace

Graph::Graph(int vertex_count, const std::vector<Edge>& edge_list)
    : adj_(build_adjacency(vertex_count, edge_list)) {
    for (const auto& nbrs : adj_) edge_count_ += static_cast<int>(nbrs.size());
    edge_count_ /= 2;
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edge_list,
             std::vector<Word> labels)
    : Graph(vertex_count, edge_list) {
    if (static_cast<int>(labels.size()) != vertex_count)
        throw std::invalid_argument("label count must match vertex count");
    for (size_t i = 1; i < labels.size(); ++i) {
        if (labels[i].length() != labels[0].length())
            throw std::invalid_argument("labels must share one length");
        if (!(labels[i - 1] < labels[i]))
            throw std::invalid_argument("labels must be sorted and distinct");
    }
    labels_ = std::move(labels);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
    return adj_[static_cast<size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.push_back(Edge{u, v});
    return out;
}

const Word& Graph::label(int v) const {
    if (!labeled()) throw std::invalid_argument("graph has no word labels");
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
    return labels_[static_cast<size_t>(v)];
}

std::optional<int> Graph::vertex_of_label(const Word& w) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), w);
    if (it == labels_.end() || *it != w) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

int hamming(const Word& a, const Word& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("word length mismatch");
    int d = 0;
    for (int i = 0; i < a.length(); ++i)
        if (a.str()[static_cast<size_t>(i)] != b.str()[static_cast<size_t>(i)]) ++d;
    return d;
}

Graph build_cube(const CubeParams& params) {
    std::vector<Word> words = enumerate_words(params);
    std::vector<Edge> edge_list;
    const auto find = [&](const Word& w) -> int {
        auto it = std::lower_bound(words.begin(), words.end(), w);
        if (it == words.end() || *it != w) return -1;
        return static_cast<int>(it - words.begin());
    };
    const int order = static_cast<int>(words.size());
    for (int u = 0; u < order; ++u) {
        for (int i = 1; i <= params.n; ++i) {
            const int v = find(flip(words[static_cast<size_t>(u)], i));
            if (v > u) edge_list.push_back(Edge{u, v});
        }
    }
    return Graph(order, edge_list, std::move(words));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()),
                          DistanceTable::unreachable);
    if (g.vertex_count() == 0) return dist;
    std::queue<int> q;
    dist[static_cast<size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<size_t>(v)] != DistanceTable::unreachable) continue;
            dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
            q.push(v);
        }
    }
    return dist;
}

DistanceTable all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceTable table(n);
    for (int s = 0; s < n; ++s) {
        const auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) table.set(s, v, dist[static_cast<size_t>(v)]);
    }
    return table;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    const auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), DistanceTable::unreachable) ==
           dist.end();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int nh = h.vertex_count();
    std::vector<Edge> edge_list;
    edge_list.reserve(static_cast<size_t>(g.edge_count()) * nh +
                      static_cast<size_t>(h.edge_count()) * g.vertex_count());
    for (const Edge& e : g.edges())
        for (int y = 0; y < nh; ++y)
            edge_list.push_back(Edge{e.u * nh + y, e.v * nh + y});
    for (const Edge& e : h.edges())
        for (int x = 0; x < g.vertex_count(); ++x)
            edge_list.push_back(Edge{x * nh + e.u, x * nh + e.v});
    return Graph(g.vertex_count() * nh, edge_list);
}

int product_edge_color(const Edge& e, int right_order) {
    if (e.u % right_order == e.v % right_order) return 0;
    if (e.u / right_order == e.v / right_order) return 1;
    throw std::invalid_argument("not a product edge");
}

std::pair<int, int> product_vertex_coords(int v, int right_order) {
    return {v / right_order, v % right_order};
}

namespace {

// per-vertex invariant: degree followed by the sorted distance row
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
    const auto table = all_pairs_distances(g);
    std::vector<std::vector<int>> sig(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& s = sig[static_cast<size_t>(v)];
        s.push_back(g.degree(v));
        for (int u = 0; u < g.vertex_count(); ++u) s.push_back(table.at(v, u));
        std::sort(s.begin() + 1, s.end());
    }
    return sig;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > 64 || b.vertex_count() > 64)
        throw std::runtime_error("graph too large for exact isomorphism");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    const int n = a.vertex_count();
    if (n == 0) return true;

    const auto sig_a = vertex_signatures(a);
    const auto sig_b = vertex_signatures(b);
    {
        auto ma = sig_a, mb = sig_b;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return false;
    }

    std::vector<std::vector<int>> candidates(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (sig_a[static_cast<size_t>(v)] == sig_b[static_cast<size_t>(w)])
                candidates[static_cast<size_t>(v)].push_back(w);

    // order a's vertices most-constrained first, preferring ones adjacent to
    // vertices already placed so partial maps fail fast
    std::vector<int> order;
    std::vector<char> chosen(static_cast<size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        bool best_touches = false;
        for (int v = 0; v < n; ++v) {
            if (chosen[static_cast<size_t>(v)]) continue;
            bool touches = false;
            for (int u : a.neighbors(v))
                if (chosen[static_cast<size_t>(u)]) { touches = true; break; }
            if (best == -1 || (touches && !best_touches) ||
                (touches == best_touches &&
                 candidates[static_cast<size_t>(v)].size() <
                     candidates[static_cast<size_t>(best)].size())) {
                best = v;
                best_touches = touches;
            }
        }
        chosen[static_cast<size_t>(best)] = 1;
        order.push_back(best);
    }

    std::vector<std::uint64_t> adj_a(static_cast<size_t>(n), 0);
    std::vector<std::uint64_t> adj_b(static_cast<size_t>(n), 0);
    for (const Edge& e : a.edges()) {
        adj_a[static_cast<size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj_a[static_cast<size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    for (const Edge& e : b.edges()) {
        adj_b[static_cast<size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj_b[static_cast<size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }

    std::vector<int> map(static_cast<size_t>(n), -1);
    std::uint64_t used = 0;
    const auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[static_cast<size_t>(depth)];
        for (int w : candidates[static_cast<size_t>(v)]) {
            if (used & (std::uint64_t{1} << w)) continue;
            bool consistent = true;
            for (int d = 0; d < depth && consistent; ++d) {
                const int u = order[static_cast<size_t>(d)];
                const bool in_a = adj_a[static_cast<size_t>(v)] >> u & 1;
                const bool in_b =
                    adj_b[static_cast<size_t>(w)] >> map[static_cast<size_t>(u)] & 1;
                consistent = in_a == in_b;
            }
            if (!consistent) continue;
            map[static_cast<size_t>(v)] = w;
            used |= std::uint64_t{1} << w;
            if (self(self, depth + 1)) return true;
            used &= ~(std::uint64_t{1} << w);
            map[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

namespace {

// verifies that g is one vertex, or splits into two equal halves joined by a
// perfect matching that preserves adjacency, with the lower half again passing
bool halving_structure(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return true;
    const int a = 0;
    if (g.degree(a) == 0) return false;
    const int b = g.neighbors(a)[0];
    const auto da = bfs_distances(g, a);
    const auto db = bfs_distances(g, b);
    std::vector<int> v0, v1;
    for (int x = 0; x < n; ++x) {
        const int dxa = da[static_cast<size_t>(x)], dxb = db[static_cast<size_t>(x)];
        if (dxa == DistanceTable::unreachable || dxb == DistanceTable::unreachable)
            return false;
        if (dxa == dxb - 1)
            v0.push_back(x);
        else if (dxb == dxa - 1)
            v1.push_back(x);
        else
            return false;
    }
    if (v0.size() != v1.size()) return false;

    std::vector<int> side(static_cast<size_t>(n), 0);
    for (int x : v1) side[static_cast<size_t>(x)] = 1;
    std::vector<int> match(static_cast<size_t>(n), -1);
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int x : v0) {
        int partner = -1;
        for (int y : g.neighbors(x)) {
            if (side[static_cast<size_t>(y)] != 1) continue;
            if (partner != -1) return false;  // more than one cross neighbor
            partner = y;
        }
        if (partner == -1 || hit[static_cast<size_t>(partner)]) return false;
        hit[static_cast<size_t>(partner)] = 1;
        match[static_cast<size_t>(x)] = partner;
    }

    int e0 = 0, e1 = 0;
    for (const Edge& e : g.edges()) {
        if (side[static_cast<size_t>(e.u)] == 0 && side[static_cast<size_t>(e.v)] == 0) {
            ++e0;
            if (!g.adjacent(match[static_cast<size_t>(e.u)],
                            match[static_cast<size_t>(e.v)]))
                return false;
        } else if (side[static_cast<size_t>(e.u)] == 1 &&
                   side[static_cast<size_t>(e.v)] == 1) {
            ++e1;
        }
    }
    if (e0 != e1) return false;
    return halving_structure(induced_subgraph(g, v0));
}

}  // namespace

std::optional<int> recognize_hypercube(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) return 0;
    if ((n & (n - 1)) != 0) return std::nullopt;
    const int dim = std::countr_zero(static_cast<unsigned>(n));
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != dim) return std::nullopt;
    if (!halving_structure(g)) return std::nullopt;
    return dim;
}

std::optional<int> recognize_star(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return std::nullopt;
    const int leaves = n - 1;
    int centers = 0, ones = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == leaves) ++centers;
        if (d == 1) ++ones;
    }
    if (leaves == 1) return centers == 2 ? std::optional<int>(1) : std::nullopt;
    if (centers == 1 && ones == leaves) return leaves;
    return std::nullopt;
}

std::optional<int> o_cube_hypercube_dim(int p, int r, int n) {
    if (p == 1 && n <= r) return n;
    // every family collapses to a single vertex or a single edge here
    if (n <= 1) return n;
    return std::nullopt;
}

std::optional<int> o_cube_star_leaves(int p, int r, int n) {
    if (n < 1) return std::nullopt;
    if ((r == 1 && n <= p + 1) || (r >= 2 && n <= p)) return n;
    return std::nullopt;
}

LayerSplit layer_split(const Graph& g, int coordinate) {
    if (!g.labeled()) throw std::invalid_argument("graph has no word labels");
    const int n = g.labels()[0].length();
    if (coordinate < 1 || coordinate > n)
        throw std::out_of_range("coordinate out of range");
    LayerSplit split;
    split.coordinate = coordinate;
    std::vector<char> in0(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> in1(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        const Word& a = g.label(e.u);
        const Word& b = g.label(e.v);
        if (a.bit(coordinate) == b.bit(coordinate) || hamming(a, b) != 1) continue;
        split.cut.push_back(e);
        const int zero_end = a.bit(coordinate) ? e.v : e.u;
        const int one_end = a.bit(coordinate) ? e.u : e.v;
        in0[static_cast<size_t>(zero_end)] = 1;
        in1[static_cast<size_t>(one_end)] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in0[static_cast<size_t>(v)]) split.v0.push_back(v);
        if (in1[static_cast<size_t>(v)]) split.v1.push_back(v);
    }
    return split;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        const int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("vertex out of range");
        if (i > 0 && vertices[i - 1] >= v)
            throw std::invalid_argument("vertex list must be sorted and unique");
        local[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edge_list;
    for (const Edge& e : g.edges()) {
        const int lu = local[static_cast<size_t>(e.u)];
        const int lv = local[static_cast<size_t>(e.v)];
        if (lu != -1 && lv != -1) edge_list.push_back(Edge{lu, lv});
    }
    if (!g.labeled())
        return Graph(static_cast<int>(vertices.size()), edge_list);
    std::vector<Word> labels;
    labels.reserve(vertices.size());
    for (int v : vertices) labels.push_back(g.label(v));
    return Graph(static_cast<int>(vertices.size()), edge_list, std::move(labels));
}

std::vector<LayerReport> layer_structure_check(const Graph& g) {
    if (!g.labeled()) throw std::invalid_argument("graph has no word labels");
    const int n = g.labels().empty() ? 0 : g.labels()[0].length();
    std::vector<LayerReport> reports;
    for (int i = 1; i <= n; ++i) {
        LayerReport rep;
        rep.coordinate = i;
        const LayerSplit split = layer_split(g, i);
        const Graph half0 = induced_subgraph(g, split.v0);
        const Graph half1 = induced_subgraph(g, split.v1);

        // the flip bijection must carry side-0 vertices and edges onto side 1
        const auto mirror = [&](int v) -> int {
            const auto m = g.vertex_of_label(flip(g.label(v), i));
            return m ? *m : -1;
        };
        bool halves_ok = split.v0.size() == split.v1.size() &&
                         half0.edge_count() == half1.edge_count();
        for (size_t a = 0; a < split.v0.size() && halves_ok; ++a) {
            const int m = mirror(split.v0[a]);
            halves_ok = m != -1 &&
                        std::binary_search(split.v1.begin(), split.v1.end(), m);
        }
        for (const Edge& e : half0.edges()) {
            if (!halves_ok) break;
            const int mu = mirror(split.v0[static_cast<size_t>(e.u)]);
            const int mv = mirror(split.v0[static_cast<size_t>(e.v)]);
            halves_ok = mu != -1 && mv != -1 && g.adjacent(mu, mv);
        }
        rep.halves_isomorphic = halves_ok;
        rep.halves_connected = is_connected(half0) && is_connected(half1);

        // explicit bijection of the union onto half0 x K2: side-0 vertex a
        // maps to 2a, its mirror to 2a + 1; edge sets must agree exactly
        std::vector<int> both(split.v0);
        both.insert(both.end(), split.v1.begin(), split.v1.end());
        std::sort(both.begin(), both.end());
        const Graph whole = induced_subgraph(g, both);
        const Graph prod = cartesian_product(half0, path_graph(2));
        bool prod_ok = halves_ok && whole.vertex_count() == prod.vertex_count() &&
                       whole.edge_count() == prod.edge_count();
        if (prod_ok) {
            const auto pos0 = [&](int v) {
                return static_cast<int>(
                    std::lower_bound(split.v0.begin(), split.v0.end(), v) -
                    split.v0.begin());
            };
            std::vector<Edge> mapped;
            for (const Edge& e : whole.edges()) {
                const int gu = both[static_cast<size_t>(e.u)];
                const int gv = both[static_cast<size_t>(e.v)];
                const auto to_prod = [&](int v) -> int {
                    if (std::binary_search(split.v0.begin(), split.v0.end(), v))
                        return pos0(v) * 2;
                    const int m = mirror(v);  // flip is an involution
                    return m == -1 ? -1 : pos0(m) * 2 + 1;
                };
                const int pu = to_prod(gu), pv = to_prod(gv);
                if (pu == -1 || pv == -1) {
                    prod_ok = false;
                    break;
                }
                mapped.push_back(Edge{std::min(pu, pv), std::max(pu, pv)});
            }
            if (prod_ok) {
                std::sort(mapped.begin(), mapped.end());
                prod_ok = mapped == prod.edges();
            }
        }
        rep.product_structure = prod_ok;
        reports.push_back(rep);
    }
    return reports;
}

Graph path_graph(int vertices) {
    std::vector<Edge> edge_list;
    for (int v = 0; v + 1 < vertices; ++v) edge_list.push_back(Edge{v, v + 1});
    return Graph(vertices, edge_list);
}

Graph cycle_graph(int vertices) {
    if (vertices < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edge_list;
    for (int v = 0; v + 1 < vertices; ++v) edge_list.push_back(Edge{v, v + 1});
    edge_list.push_back(Edge{0, vertices - 1});
    return Graph(vertices, edge_list);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> edge_list;
    for (int v = 1; v <= leaves; ++v) edge_list.push_back(Edge{0, v});
    return Graph(leaves + 1, edge_list);
}

Graph complete_graph(int vertices) {
    std::vector<Edge> edge_list;
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v) edge_list.push_back(Edge{u, v});
    return Graph(vertices, edge_list);
}

}  // namespace fibcube
