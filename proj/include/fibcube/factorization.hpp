#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fibcube/graph.hpp"
#include "fibcube/relations.hpp"

namespace fibcube {

// prime decomposition with respect to the Cartesian product: the vertex at
// coordinates (x_0, .., x_{k-1}) is adjacent to another exactly when the
// tuples differ in one position c along an edge of factors[c]
struct Factorization {
    std::vector<Graph> factors;
    std::vector<std::vector<int>> coordinates;  // [vertex][factor index]
    int base_vertex = 0;
};

// factors are the base-vertex layers of the closure classes, coordinates the
// base-layer representatives of the complement-class components; the result
// always passes verify_factorization or an exception is thrown
Factorization factorize(const Graph& g);

// exhaustively checks order product, coordinate bijection and the
// edge-by-edge product condition
bool verify_factorization(const Graph& g, const Factorization& f);

// one evaluated (p, r, n) parameter cell of a verification sweep
struct GridCell {
    int p = 0, r = 0, n = 0;
    bool evaluated = false;  // false when the vertex cap skipped the cell
    bool pass = false;
    std::string detail;
};

// cells ordered by p, then n, then r over {1..r_max} extended with r = n
std::vector<std::array<int, 3>> grid_cells(int p_max, int r_max, int n_max);

// primality of each O-cube against the closed-form rule: composite exactly
// when p = 1 and 2 <= n <= r; composite cells must split into n single edges
std::vector<GridCell> primality_grid(int p_max, int r_max, int n_max,
                                     int vertex_cap);

// hypercube/star recognition against the parameter ranges where each applies
std::vector<GridCell> recognizer_grid(int p_max, int r_max, int n_max,
                                      int vertex_cap);

// layer_structure_check over every coordinate of each cube
std::vector<GridCell> layer_grid(int p_max, int r_max, int n_max, int vertex_cap);

// coordinate_theta_check emptiness for each cube
std::vector<GridCell> coordinate_theta_grid(int p_max, int r_max, int n_max,
                                            int vertex_cap);

// comparison of the O and I families at fixed (p, r): when p = 1 or r = 1 the
// word sets must agree verbatim; otherwise the per-n isomorphism outcome is
// reported without asserting a direction
struct FamilyCell {
    enum class Status { equal_words, isomorphic, not_isomorphic, size_skipped };
    int p = 0, r = 0, n = 0;
    Status status = Status::equal_words;
    bool pass = false;
    std::string detail;
};
std::vector<FamilyCell> family_equivalence_check(int p, int r, int n_max);

}  // namespace fibcube
