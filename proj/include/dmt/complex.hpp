#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmt/error.hpp"
#include "dmt/simplex.hpp"

namespace dmt {

struct CellId {
  int dim = -1;
  std::size_t index = 0;
  auto operator<=>(const CellId&) const = default;
};

struct Cofacet {
  std::size_t index;  // in dimension q+1
  int sign;           // [cofacet : this]
};

// Finite abstract simplicial complex, closed under faces, always contains the
// empty simplex. Simplices of each dimension are kept in lexicographic order,
// so (dim, index) is the canonical address of a simplex.
class SimplicialComplex {
 public:
  SimplicialComplex();  // {empty}

  static SimplicialComplex from_maximal(std::span<const Simplex> generators,
                                        std::span<const Vertex> extra_vertices = {});

  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  // q = -1 gives 1 (the empty simplex)
  std::size_t count(int q) const;
  std::size_t size() const;  // all simplices, empty one included
  const std::vector<Simplex>& simplices(int q) const;
  const Simplex& simplex(int q, std::size_t i) const { return simplices(q)[i]; }
  const Simplex& simplex(CellId c) const { return simplices(c.dim)[c.index]; }

  std::optional<std::size_t> find(const Simplex& s) const;
  std::size_t index_of(const Simplex& s) const;  // DomainError if absent
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  // facet j (j-th vertex deleted, incidence (-1)^j); empty for q <= 0
  std::span<const std::size_t> facets(int q, std::size_t i) const;
  // for q >= 0 and q < dim(); cofacets of the empty simplex are the vertices
  std::span<const Cofacet> cofacets(int q, std::size_t i) const;

  std::vector<Vertex> vertices() const;
  std::vector<Simplex> maximal_simplices() const;
  Vertex max_vertex() const;  // DomainError when no vertices

  SimplicialComplex without_maximal(const Simplex& s) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool operator==(const SimplicialComplex& o) const { return cells_ == o.cells_; }

 private:
  void build_tables();

  std::vector<std::vector<Simplex>> cells_;  // cells_[q], q >= 0
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
  std::vector<std::vector<std::size_t>> facets_;      // flattened, q+1 per simplex
  std::vector<std::vector<std::size_t>> cof_offset_;  // CSR
  std::vector<std::vector<Cofacet>> cof_;
  std::vector<Cofacet> empty_cof_;
  std::vector<std::string> labels_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex k) {
  return std::make_shared<const SimplicialComplex>(std::move(k));
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);

// Delta^n_q: vertices 0..n, all subsets with at most q+1 elements
SimplicialComplex skeleton_of_simplex(int n, int q);

SimplicialComplex cone(Vertex apex, const SimplicialComplex& k);

struct JoinResult {
  SimplicialComplex complex;
  std::int64_t right_offset = 0;  // right vertex v becomes v + right_offset
  Vertex right(Vertex v) const { return static_cast<Vertex>(v + right_offset); }
  Simplex embed(const Simplex& left, const Simplex& right_part) const;
};

// right-hand vertices are shifted so that they come after all left ones
JoinResult join(const SimplicialComplex& a, const SimplicialComplex& b);

struct BarycentricSubdivision {
  ComplexPtr base;
  ComplexPtr complex;
  std::vector<std::size_t> offset;  // first barycenter id per dimension

  Vertex barycenter(int q, std::size_t i) const { return static_cast<Vertex>(offset[q] + i); }
  Vertex barycenter(const Simplex& s) const;
  CellId carrier(Vertex v) const;
};

// barycenter ids follow the (dim, lex) order of the base simplices
BarycentricSubdivision barycentric_subdivision(ComplexPtr k);

struct SubdivisionTower {
  ComplexPtr base;
  std::vector<BarycentricSubdivision> levels;
  static SubdivisionTower build(ComplexPtr k, int iterations);
  const ComplexPtr& top() const { return levels.empty() ? base : levels.back().complex; }
  int iterations() const { return static_cast<int>(levels.size()); }
};

struct PseudomanifoldReport {
  bool ok = false;
  std::string reason;
  std::vector<Simplex> witness;
};

PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k);

// vertices of a connected 1-dim cycle, starting at `start`, heading towards `toward`
std::vector<Vertex> cycle_order(const SimplicialComplex& k, Vertex start, Vertex toward);

}  // namespace dmt
