#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "dmt/chain.hpp"
#include "dmt/linalg.hpp"

namespace dmt {

enum class Provenance { simplex, critical_chain, boundary_of_pair, paired_down };

struct BasisElement {
  Chain chain;
  Provenance provenance = Provenance::simplex;
  std::size_t source = 0;  // index of the simplex the element comes from
};

// Ordered Z-basis of C_q(K), given in standard coordinates.
class BasisQ {
 public:
  BasisQ(ComplexPtr k, int q, std::vector<BasisElement> elements);
  static BasisQ standard(ComplexPtr k, int q);

  int dim() const { return q_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const SimplicialComplex& complex() const { return *k_; }
  bool is_standard() const { return standard_; }

  DenseIntMatrix matrix() const;  // columns are the basis elements
  Integer determinant() const;
  std::vector<Integer> coordinates(const Chain& c) const;  // DomainError if det != +-1

 private:
  const UnimodularSolver& solver() const;

  ComplexPtr k_;
  int q_;
  std::vector<BasisElement> elements_;
  bool standard_ = false;
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<UnimodularSolver> solver;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

Integer inner_product(const Chain& a, const Chain& b, const BasisQ& basis);

}  // namespace dmt
