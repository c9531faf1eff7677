#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fibcube/words.hpp"

namespace fibcube {

struct Edge {
    int u = 0;
    int v = 0;  // u < v after graph construction
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph. Vertex indices are 0-based and dense;
// neighbor lists are sorted. When word labels are present, vertex i carries
// the i-th label in ascending lexicographic order and all labels share one
// length.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<Edge>& edge_list);
    Graph(int vertex_count, const std::vector<Edge>& edge_list,
          std::vector<Word> labels);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;  // ascending by (u, v)

    bool labeled() const { return !labels_.empty(); }
    const Word& label(int v) const;
    const std::vector<Word>& labels() const { return labels_; }
    std::optional<int> vertex_of_label(const Word& w) const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<Word> labels_;
    int edge_count_ = 0;
};

// count of differing positions; words must have equal length
int hamming(const Word& a, const Word& b);

// induced subgraph of the hypercube on the family's word set, labels kept
Graph build_cube(const CubeParams& params);

class DistanceTable {
public:
    static constexpr int unreachable = -1;
    DistanceTable() = default;
    explicit DistanceTable(int order)
        : order_(order),
          d_(static_cast<size_t>(order) * static_cast<size_t>(order),
             unreachable) {}
    int order() const { return order_; }
    int at(int u, int v) const {
        return d_[static_cast<size_t>(u) * order_ + v];
    }
    void set(int u, int v, int value) {
        d_[static_cast<size_t>(u) * order_ + v] = value;
    }

private:
    int order_ = 0;
    std::vector<int> d_;
};

std::vector<int> bfs_distances(const Graph& g, int source);
DistanceTable all_pairs_distances(const Graph& g);

// vacuously true for at most one vertex
bool is_connected(const Graph& g);

// vertex (g, h) gets index g * |V(H)| + h; the result carries no labels
Graph cartesian_product(const Graph& g, const Graph& h);
// 0 when the edge moves in the left factor, 1 for the right
int product_edge_color(const Edge& e, int right_order);
std::pair<int, int> product_vertex_coords(int v, int right_order);

// exact backtracking with degree and distance-multiset pruning;
// throws for more than 64 vertices
bool is_isomorphic(const Graph& a, const Graph& b);

// dimension n when the graph is the n-cube, checked structurally by
// recursive halving; 0 for the one-vertex graph
std::optional<int> recognize_hypercube(const Graph& g);

// leaf count n when the graph is the star on n + 1 >= 2 vertices
std::optional<int> recognize_star(const Graph& g);

// parameter ranges where the O-family cube collapses to a known graph
std::optional<int> o_cube_hypercube_dim(int p, int r, int n);
std::optional<int> o_cube_star_leaves(int p, int r, int n);

// split along one coordinate: cut holds the edges whose endpoint labels
// differ exactly at that position, v0/v1 the endpoints by bit value
struct LayerSplit {
    int coordinate = 0;
    std::vector<int> v0, v1;  // sorted vertex indices
    std::vector<Edge> cut;
};
LayerSplit layer_split(const Graph& g, int coordinate);

// vertices must be sorted, unique and in range; labels follow along
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// per-coordinate structure of a labeled cube: the two sides of the cut are
// isomorphic under the bit flip, both connected, and together they form the
// product of one side with a single edge
struct LayerReport {
    int coordinate = 0;
    bool halves_isomorphic = false;
    bool halves_connected = false;
    bool product_structure = false;
    bool ok() const {
        return halves_isomorphic && halves_connected && product_structure;
    }
};
std::vector<LayerReport> layer_structure_check(const Graph& g);

// small fixtures
Graph path_graph(int vertices);
Graph cycle_graph(int vertices);
Graph star_graph(int leaves);
Graph complete_graph(int vertices);

}  // namespace fibcube
