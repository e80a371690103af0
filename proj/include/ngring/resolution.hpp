#pragma once

#include <map>
#include <string>
#include <vector>

#include "ngring/divisors.hpp"
#include "ngring/rational.hpp"

namespace ngring {

struct GraphVertex {
  int id;
  long weight;  // self-intersection
  long genus;
};

// Weighted dual graph of a resolution.  Multiple edges are representable;
// star graphs only ever produce simple ones.
class ResolutionGraph {
 public:
  ResolutionGraph() = default;
  ResolutionGraph(std::vector<GraphVertex> vertices, std::vector<std::pair<int, int>> edges);

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  long size() const { return static_cast<long>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const GraphVertex& vertex_by_id(int id) const;
  bool has_vertex(int id) const;

  // Edge multiplicity between two distinct vertex ids.
  long multiplicity(int a, int b) const;
  // Intersection pairing of basis vectors E_a . E_b.
  Int pairing(int a, int b) const;
  long vertex_degree(int id) const;
  std::vector<int> neighbors(int id) const;

  // K_X . E_v = -E_v^2 + 2 genus(v) - 2 (adjunction)
  long canonical_pairing(int id) const;

  bool connected() const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::map<int, size_t> index_;
  std::map<std::pair<int, int>, long> mult_;
};

// Integer cycle supported on the exceptional set, coefficients by vertex id.
using Cycle = std::map<int, long>;

// Hirzebruch-Jung expansion q/p = [[b_1, ..., b_s]], all b_j >= 2.
std::vector<long> hj_expand(const Int& q, const Int& p);

// Evaluates [[b_1, ..., b_s]]; oracle companion to hj_expand.
Rat hj_evaluate(const std::vector<long>& bs);

// Star-shaped graph: central vertex -deg(B) of the given genus, one
// Hirzebruch-Jung chain per arm.  Throws when the result is not negative
// definite (non-contractible configuration).
ResolutionGraph star_graph(const NormalForm& nf, long central_genus);

bool is_negative_definite(const ResolutionGraph& g);

Int intersection_determinant(const ResolutionGraph& g);

// Laufer's algorithm; requires a connected negative-definite graph.
Cycle fundamental_cycle(const ResolutionGraph& g);

Int cycle_pairing(const ResolutionGraph& g, const Cycle& z, int vertex);
Int cycle_self_intersection(const ResolutionGraph& g, const Cycle& z);

// p_a(Z) = (Z^2 + K.Z)/2 + 1
long cycle_pa(const ResolutionGraph& g, const Cycle& z);

// Contracts genus-0 (-1)-vertices with at most two simply-crossing
// neighbours until none remain.  Throws Unsupported when a contraction
// would need a loop or a multiple edge.
struct UnsupportedContraction : std::runtime_error {
  using std::runtime_error::runtime_error;
};
ResolutionGraph blow_down(const ResolutionGraph& g);

// Anti-nef test for K_X + Z_f on the minimal resolution of a rational
// singularity.  Preconditions (minimality, p_a(Z_f) = 0) are enforced.
bool mowy_ng(const ResolutionGraph& g);

}  // namespace ngring
