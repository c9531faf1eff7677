#pragma once

#include <utility>
#include <vector>

#include "fibcube/graph.hpp"

namespace fibcube {

// partition of a graph's edge set; edge indices refer to Graph::edges()
// order and class ids are dense, numbered by smallest member edge index
struct EdgePartition {
    std::vector<Edge> edges;
    std::vector<int> class_of;                // per edge index
    std::vector<std::vector<int>> classes;    // class id -> ascending edge indices
    int class_count() const { return static_cast<int>(classes.size()); }
};

// edges e = ab, f = xy are related when d(a,x) + d(b,y) != d(a,y) + d(b,x);
// reflexive, symmetric, orientation-independent
bool theta_test(const DistanceTable& dist, const Edge& e, const Edge& f);

// edges uv, uw sharing exactly one endpoint u, which is the only common
// neighbor of v and w; false for equal or disjoint edges
bool tau_test(const Graph& g, const Edge& e, const Edge& f);

// joint transitive closure of the two relations above over all edges;
// requires a connected graph of at most 2000 vertices
EdgePartition sigma_classes(const Graph& g);

// single closure class on a connected graph with at least 2 vertices
bool is_prime(const Graph& g);

struct ThetaViolation {
    int coordinate = 0;
    Edge e, f;
};

// every pair of edges flipping the same label coordinate must be
// theta-related; returns the offending triples
std::vector<ThetaViolation> coordinate_theta_check(const Graph& g);

// coordinates i, j are related when some edge flipping i and some edge
// flipping j share a tau pair; classes is the transitive closure over [n]
struct CoordRelation {
    int n = 0;
    std::vector<std::pair<int, int>> related;  // i < j, ascending
    std::vector<std::vector<int>> classes;     // partition of 1..n
};
CoordRelation coordinate_tau_relation(const Graph& g);

struct ColorThetaViolation {
    int color = 0;
    Edge e, f;
};

// in the product of two connected graphs, same-color edges with the same
// projection onto their factor must be theta-related
std::vector<ColorThetaViolation> product_projection_theta_check(const Graph& g,
                                                                const Graph& h);

}  // namespace fibcube
