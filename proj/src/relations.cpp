#include "fibcube/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fibcube {

namespace {

constexpr int kThetaVertexLimit = 2000;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// groups members by union-find root; group ids run by smallest member
std::vector<std::vector<int>> canonical_classes(UnionFind& uf, int count,
                                                std::vector<int>& class_of) {
    class_of.assign(static_cast<size_t>(count), -1);
    std::vector<std::vector<int>> classes;
    std::vector<int> root_class(static_cast<size_t>(count), -1);
    for (int i = 0; i < count; ++i) {
        const int root = uf.find(i);
        if (root_class[static_cast<size_t>(root)] == -1) {
            root_class[static_cast<size_t>(root)] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        const int c = root_class[static_cast<size_t>(root)];
        class_of[static_cast<size_t>(i)] = c;
        classes[static_cast<size_t>(c)].push_back(i);
    }
    return classes;
}

int shared_endpoint(const Edge& e, const Edge& f) {
    int shared = -1, count = 0;
    for (int x : {e.u, e.v})
        for (int y : {f.u, f.v})
            if (x == y) { shared = x; ++count; }
    return count == 1 ? shared : -1;
}

int sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

void require_theta_scale(const Graph& g) {
    if (g.vertex_count() > kThetaVertexLimit)
        throw std::runtime_error("graph too large for theta computation");
}

// coordinate flipped by a cube edge, or 0 when the labels are not at
// hamming distance one
int edge_coordinate(const Graph& g, const Edge& e) {
    const Word& a = g.label(e.u);
    const Word& b = g.label(e.v);
    int coord = 0, diff = 0;
    for (int i = 1; i <= a.length(); ++i) {
        if (a.bit(i) != b.bit(i)) {
            coord = i;
            ++diff;
        }
    }
    return diff == 1 ? coord : 0;
}

}  // namespace

bool theta_test(const DistanceTable& dist, const Edge& e, const Edge& f) {
    const int ax = dist.at(e.u, f.u);
    const int by = dist.at(e.v, f.v);
    const int ay = dist.at(e.u, f.v);
    const int bx = dist.at(e.v, f.u);
    if (ax == DistanceTable::unreachable || by == DistanceTable::unreachable ||
        ay == DistanceTable::unreachable || bx == DistanceTable::unreachable)
        throw std::invalid_argument("theta undefined on disconnected graph");
    return ax + by != ay + bx;
}

bool tau_test(const Graph& g, const Edge& e, const Edge& f) {
    if (e == f) return false;
    const int u = shared_endpoint(e, f);
    if (u == -1) return false;
    const int v = e.u == u ? e.v : e.u;
    const int w = f.u == u ? f.v : f.u;
    return sorted_intersection_size(g.neighbors(v), g.neighbors(w)) == 1;
}

EdgePartition sigma_classes(const Graph& g) {
    require_theta_scale(g);
    if (!is_connected(g))
        throw std::invalid_argument("theta undefined on disconnected graph");

    EdgePartition part;
    part.edges = g.edges();
    const int m = static_cast<int>(part.edges.size());
    UnionFind uf(m);

    const DistanceTable dist = all_pairs_distances(g);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (theta_test(dist, part.edges[static_cast<size_t>(i)],
                           part.edges[static_cast<size_t>(j)]))
                uf.unite(i, j);

    // tau pairs share an endpoint, so scanning per-vertex incident pairs
    // covers them all
    const auto edge_index = [&](int u, int v) {
        const Edge key{std::min(u, v), std::max(u, v)};
        const auto it = std::lower_bound(part.edges.begin(), part.edges.end(), key);
        return static_cast<int>(it - part.edges.begin());
    };
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto& nbrs = g.neighbors(u);
        for (size_t a = 0; a < nbrs.size(); ++a) {
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                const int v = nbrs[a], w = nbrs[b];
                if (sorted_intersection_size(g.neighbors(v), g.neighbors(w)) == 1)
                    uf.unite(edge_index(u, v), edge_index(u, w));
            }
        }
    }

    part.classes = canonical_classes(uf, m, part.class_of);
    return part;
}

bool is_prime(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("primality undefined on trivial graph");
    return sigma_classes(g).class_count() == 1;
}

std::vector<ThetaViolation> coordinate_theta_check(const Graph& g) {
    if (!g.labeled()) throw std::invalid_argument("graph has no word labels");
    require_theta_scale(g);
    if (!is_connected(g))
        throw std::invalid_argument("theta undefined on disconnected graph");
    const DistanceTable dist = all_pairs_distances(g);

    std::map<int, std::vector<Edge>> by_coordinate;
    for (const Edge& e : g.edges()) {
        const int coord = edge_coordinate(g, e);
        if (coord > 0) by_coordinate[coord].push_back(e);
    }
    std::vector<ThetaViolation> violations;
    for (const auto& [coord, group] : by_coordinate)
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t j = i + 1; j < group.size(); ++j)
                if (!theta_test(dist, group[i], group[j]))
                    violations.push_back({coord, group[i], group[j]});
    return violations;
}

CoordRelation coordinate_tau_relation(const Graph& g) {
    if (!g.labeled()) throw std::invalid_argument("graph has no word labels");
    CoordRelation rel;
    rel.n = g.labels()[0].length();
    UnionFind uf(rel.n + 1);  // 1-based coordinates; slot 0 unused

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto& nbrs = g.neighbors(u);
        for (size_t a = 0; a < nbrs.size(); ++a) {
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                const int v = nbrs[a], w = nbrs[b];
                if (sorted_intersection_size(g.neighbors(v), g.neighbors(w)) != 1)
                    continue;
                const int ci = edge_coordinate(g, Edge{std::min(u, v), std::max(u, v)});
                const int cj = edge_coordinate(g, Edge{std::min(u, w), std::max(u, w)});
                if (ci == 0 || cj == 0 || ci == cj) continue;
                pairs.emplace_back(std::min(ci, cj), std::max(ci, cj));
                uf.unite(ci, cj);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    rel.related = std::move(pairs);

    std::vector<int> class_of;
    auto classes = canonical_classes(uf, rel.n + 1, class_of);
    // drop the unused slot-0 singleton
    for (auto& cls : classes)
        cls.erase(std::remove(cls.begin(), cls.end(), 0), cls.end());
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const auto& c) { return c.empty(); }),
                  classes.end());
    rel.classes = std::move(classes);
    return rel;
}

std::vector<ColorThetaViolation> product_projection_theta_check(const Graph& g,
                                                                const Graph& h) {
    if (!is_connected(g) || !is_connected(h))
        throw std::invalid_argument("theta undefined on disconnected graph");
    const Graph prod = cartesian_product(g, h);
    require_theta_scale(prod);
    const DistanceTable dist = all_pairs_distances(prod);
    const int right = h.vertex_count();

    // bucket product edges by (color, projected factor edge)
    std::map<std::pair<int, Edge>, std::vector<Edge>> groups;
    for (const Edge& e : prod.edges()) {
        const int color = product_edge_color(e, right);
        const auto [gu, hu] = product_vertex_coords(e.u, right);
        const auto [gv, hv] = product_vertex_coords(e.v, right);
        const Edge projected = color == 0
                                   ? Edge{std::min(gu, gv), std::max(gu, gv)}
                                   : Edge{std::min(hu, hv), std::max(hu, hv)};
        groups[{color, projected}].push_back(e);
    }
    std::vector<ColorThetaViolation> violations;
    for (const auto& [key, group] : groups)
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t j = i + 1; j < group.size(); ++j)
                if (!theta_test(dist, group[i], group[j]))
                    violations.push_back({key.first, group[i], group[j]});
    return violations;
}

}  // namespace fibcube
