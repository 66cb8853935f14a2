#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmt/basis.hpp"
#include "dmt/chain.hpp"
#include "dmt/parallel.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

// beta_0, alpha_1, beta_1, ..., alpha_r, beta_r with beta_r == beta_0
struct ClosedTrajectory {
  int dim = 0;  // dimension of the betas
  std::vector<Simplex> faces;
};

std::string format_trajectory(const ClosedTrajectory& t);

// topological orders of the two trajectory digraphs on each S_q
struct GradientCertificate {
  std::vector<std::vector<std::size_t>> down_order;  // V-trajectories
  std::vector<std::vector<std::size_t>> up_order;    // co-V-trajectories
};

struct GradientCheck {
  bool gradient = false;
  GradientCertificate certificate;
  std::optional<ClosedTrajectory> cycle;
};

GradientCheck is_gradient(const DiscreteVectorField& v);

// per dimension: critical, paired upwards (U), paired downwards (D)
struct CriticalPartition {
  std::vector<std::vector<std::size_t>> critical, up, down;
  std::size_t total_critical() const;
};

CriticalPartition critical_simplices(const DiscreteVectorField& v);

// A vector field known to be gradient, with its certificate cached.
class GradientField {
 public:
  explicit GradientField(DiscreteVectorField v);  // DomainError naming a closed trajectory

  const DiscreteVectorField& field() const { return v_; }
  const SimplicialComplex& complex() const { return v_.complex(); }
  const ComplexPtr& complex_ptr() const { return v_.complex_ptr(); }
  const GradientCertificate& certificate() const { return cert_; }
  const CriticalPartition& partition() const { return part_; }
  bool is_critical(int q, std::size_t i) const;

  Chain critical_chain(int q, std::size_t sigma) const;
  Chain co_critical_chain(int q, std::size_t sigma) const;
  Chain critical_chain(const Simplex& s) const;
  Chain co_critical_chain(const Simplex& s) const;
  // one chain per critical q-simplex, in partition order
  std::vector<Chain> critical_chains(int q, Execution exec = Execution::parallel) const;
  std::vector<Chain> co_critical_chains(int q, Execution exec = Execution::parallel) const;

  BasisQ modified_basis(int q) const;

 private:
  DiscreteVectorField v_;
  GradientCertificate cert_;
  CriticalPartition part_;
  std::vector<std::vector<std::size_t>> down_pos_, up_pos_;
  std::vector<std::vector<int>> pair_sign_;  // [beta : V^-1(beta)] for beta in D_q, q >= 1
};

}  // namespace dmt
