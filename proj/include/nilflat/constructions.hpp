#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilflat/diagram.hpp"
#include "nilflat/involution.hpp"
#include "nilflat/liealg.hpp"

namespace nilflat {

// Heisenberg algebra of dimension 2n+1: basis e_1..e_{2n}, y with
// [e_{2i}, e_{2i-1}] = y. The involution swaps e_1 with y and e_{2i} with
// e_{2i+1} for i < n, leaving e_{2n} fixed; it breaks every arrow.
std::pair<LieAlgebra, Involution> heisenberg(int n);

// Standard filiform algebra: [e_1, e_i] = e_{i+1} for i = 2..n-1, with the
// order-reversing involution e_i <-> e_{n-i+1}. Arrow-breaking for n >= 5
// but not for n = 4.
std::pair<LieAlgebra, Involution> standard_filiform(int n);

// Simple undirected graph on vertices 1..vertices. Edges are normalized to
// a < b, sorted, and checked for loops and duplicates.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    Graph(int v, std::vector<std::pair<int, int>> e);
};

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph star_graph(int k);
Graph complete_graph(int k);

// Two-step algebra on vertices + edges: [v, v'] = the edge node when v, v'
// are adjacent. Basis order: vertices 1..V, then edges in sorted order.
LieAlgebra graph_algebra(const Graph& g);

// Arrow-breaking involution on the graph algebra, built per connected
// component: pair each vertex with a distinct component edge; a component
// with one edge fewer than its vertex count (a tree) keeps its last vertex
// fixed instead. Leftover edge nodes stay fixed.
Involution graph_sigma(const Graph& g);

enum class RootType { A, B, C, G2 };

// Positive roots as integer coordinate vectors: type A in R^{n+1}
// (eps_i - eps_j), types B and C in R^n, G2 in the simple-root basis.
// theta holds indices into simple; order(v) sums the simple-root
// coordinates of v outside theta.
struct RootDatum {
    RootType type = RootType::A;
    int rank = 0;
    std::vector<std::vector<int>> positive;
    std::vector<std::vector<int>> simple;
    std::vector<int> theta;

    bool is_positive_root(const std::vector<int>& v) const;
    std::vector<int> simple_coords(const std::vector<int>& v) const;
    int order(const std::vector<int>& v) const;

    // Roots of positive order, sorted by (order, coordinates descending);
    // this is the basis order of the nilradical.
    std::vector<std::vector<int>> nilradical_roots() const;
};

// Full positive system with empty theta, listed by (height, coordinates
// descending); the G2 list ends with the maximal root 3a1+2a2.
RootDatum positive_roots(RootType t, int n);

// The theta used for each family: type A (n odd) removes the even-indexed
// simple roots, types B and C remove eps_i - eps_{i+1} for i <= n-2, G2
// keeps theta empty.
RootDatum family_root_datum(RootType t, int n);

// Nilradical spanned by the root vectors of positive order, with structure
// constants computed from matrix realizations (strictly upper triangular
// for A, split so(n,n+1) for B, sp(2n,R) for C; G2 is written out
// directly). basis_roots[i] is the root of node i+1.
struct Nilradical {
    LieAlgebra algebra;
    NiceDiagram diagram;
    std::vector<std::vector<int>> basis_roots;
    std::map<std::vector<int>, int> index_of;
};

Nilradical parabolic_nilradical(const RootDatum& r);

// The per-family involution on the nilradical basis. Type A needs n odd;
// type B uses a deterministic lex-first completion of the fixed frame
// sigma(eps_i - eps_n) = eps_i; type C swaps eps_i - eps_n with 2eps_{n-i}
// and eps_j + eps_n with eps_1 + eps_{n-j+2}; G2 returns (1 6)(3 5).
Involution sigma_parabolic(RootType t, int n);

// Root-level arrow-breaking test: no pair gamma, delta with gamma + delta
// a positive root maps to a pair summing to a positive root, and no pair
// with delta - gamma a nilradical root maps to one.
bool arrow_breaking_roots(const RootDatum& r, const Involution& s);

// Generator spec strings: "heisenberg:N", "filiform:N", "graph:pathN" (also
// cycle/star/complete), "graph:edges=1-2,2-3", "parabolic:A:N", ...,
// "parabolic:G2".
struct Generated {
    LieAlgebra algebra;
    std::optional<Involution> sigma;
};

Generated generate(const std::string& spec);

} // namespace nilflat
