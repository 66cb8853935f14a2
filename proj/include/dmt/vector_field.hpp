#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

using SimplexPair = std::pair<Simplex, Simplex>;  // (alpha, beta), alpha a facet of beta

struct DvfValidation {
  bool valid = true;
  std::string reason;
  std::vector<Simplex> witness;
};

DvfValidation validate_dvf(const SimplicialComplex& k, std::span<const SimplexPair> pairs);

// Matching on the Hasse diagram. A pair (empty, vertex) is allowed; such a
// vertex still counts as critical and never takes part in trajectories.
class DiscreteVectorField {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit DiscreteVectorField(ComplexPtr k);
  // throws DomainError carrying the validation witness
  static DiscreteVectorField from_pairs(ComplexPtr k, std::span<const SimplexPair> pairs);

  const SimplicialComplex& complex() const { return *k_; }
  const ComplexPtr& complex_ptr() const { return k_; }

  // partner one dimension up / down, npos when unmatched in that direction
  std::size_t up(int q, std::size_t i) const;
  std::size_t down(int q, std::size_t i) const;
  std::optional<std::size_t> empty_partner() const;
  bool matched(int q, std::size_t i) const { return up(q, i) != npos || down(q, i) != npos; }

  // unchecked beyond both ends being free; alpha is in dimension q
  void pair(int q, std::size_t alpha, std::size_t beta);
  void unpair(int q, std::size_t alpha);

  std::vector<SimplexPair> pairs() const;  // canonical order of alpha
  std::size_t size() const { return size_; }

 private:
  ComplexPtr k_;
  std::vector<std::vector<std::size_t>> up_;    // up_[q+1][i], q >= -1
  std::vector<std::vector<std::size_t>> down_;  // down_[q][i], q >= 0
  std::size_t size_ = 0;
};

}  // namespace dmt
