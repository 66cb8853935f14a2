#pragma once

#include <map>
#include <vector>

#include "dmt/chain.hpp"
#include "dmt/gradient.hpp"
#include "dmt/parallel.hpp"

namespace dmt {

// Degree-preserving homomorphism C(src) -> C(tgt), stored as the image of each simplex.
class ChainMap {
 public:
  ChainMap(ComplexPtr src, ComplexPtr tgt, std::vector<std::vector<Chain>> columns);
  static ChainMap identity(ComplexPtr k);
  static ChainMap zero(ComplexPtr src, ComplexPtr tgt);

  const SimplicialComplex& source() const { return *src_; }
  const SimplicialComplex& target() const { return *tgt_; }
  const ComplexPtr& source_ptr() const { return src_; }
  const ComplexPtr& target_ptr() const { return tgt_; }
  bool is_endomorphism() const { return same_complex(*src_, *tgt_); }

  const Chain& column(int q, std::size_t i) const { return cols_.at(q).at(i); }
  Chain apply(const Chain& c) const;

  ChainMap operator+(const ChainMap& o) const;
  ChainMap scaled(Integer f) const;

 private:
  ComplexPtr src_, tgt_;
  std::vector<std::vector<Chain>> cols_;  // cols_[q][i], q = 0..dim(src)
};

class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr src, ComplexPtr tgt, std::map<Vertex, Vertex> vertex_map);

  const SimplicialComplex& source() const { return *src_; }
  const SimplicialComplex& target() const { return *tgt_; }
  const ComplexPtr& source_ptr() const { return src_; }
  const ComplexPtr& target_ptr() const { return tgt_; }
  const std::map<Vertex, Vertex>& vertex_map() const { return map_; }

  Vertex operator()(Vertex v) const;
  Simplex image(const Simplex& s) const;

 private:
  ComplexPtr src_, tgt_;
  std::map<Vertex, Vertex> map_;
};

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);  // f o g

ChainMap induced_chain_map(const SimplicialMap& f);

struct ChainMapCheck {
  bool ok = true;
  int dim = 0;
  Simplex witness;  // simplex where d(phi s) != phi(d s)
};

ChainMapCheck verify_chain_map(const ChainMap& phi, Execution exec = Execution::parallel);

// g: C(K) -> C(Bd^k K), g(v) = v, g(s) = b_s * g(ds)
ChainMap subdivision_chain_map(const SubdivisionTower& tower, Execution exec = Execution::parallel);
ChainMap subdivision_chain_map(const BarycentricSubdivision& bd, Execution exec = Execution::parallel);

ChainMap compose(const ChainMap& phi, const ChainMap& psi, Execution exec = Execution::parallel);  // phi o psi

}  // namespace dmt
