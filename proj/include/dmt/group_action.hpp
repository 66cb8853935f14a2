#pragma once

#include <map>
#include <optional>

#include "dmt/chain_map.hpp"
#include "dmt/complex.hpp"

namespace dmt {

bool is_prime(unsigned n);

// Z_p acting simplicially on a complex through a generating automorphism.
class GroupAction {
 public:
  GroupAction(ComplexPtr k, unsigned p, std::map<Vertex, Vertex> generator);

  unsigned order() const { return p_; }
  const SimplicialComplex& complex() const { return *k_; }
  const ComplexPtr& complex_ptr() const { return k_; }
  const std::map<Vertex, Vertex>& generator() const { return gen_; }

  Vertex apply(Vertex v, unsigned power = 1) const;
  Simplex apply(const Simplex& s, unsigned power = 1) const;

  struct Freeness {
    bool free = true;
    Simplex witness;  // a simplex fixed setwise
  };
  Freeness check_free() const;
  bool is_free() const { return check_free().free; }

 private:
  ComplexPtr k_;
  unsigned p_;
  std::map<Vertex, Vertex> gen_;
};

GroupAction join_action(const GroupAction& a, const GroupAction& b, const JoinResult& j, ComplexPtr joined);
GroupAction induced_action_on_bd(const GroupAction& a, const BarycentricSubdivision& bd);

struct EquivarianceCheck {
  bool ok = true;
  Vertex witness = 0;
};

EquivarianceCheck verify_equivariance(const SimplicialMap& f, const GroupAction& src, const GroupAction& tgt);

}  // namespace dmt
