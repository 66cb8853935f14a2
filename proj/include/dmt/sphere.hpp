#pragma once

#include <vector>

#include "dmt/chain_map.hpp"
#include "dmt/gradient.hpp"
#include "dmt/group_action.hpp"

namespace dmt {

// Gradient field on a pseudomanifold with exactly one critical top simplex and
// one critical vertex (two critical vertices when d = 0), with d(top chain) = 0.
class SphereWitness {
 public:
  static SphereWitness certify(DiscreteVectorField v);

  const GradientField& field() const { return field_; }
  const SimplicialComplex& complex() const { return field_.complex(); }
  const ComplexPtr& complex_ptr() const { return field_.complex_ptr(); }
  int dim() const { return complex().dim(); }
  std::size_t top_cell() const { return top_; }      // index in S_d
  std::size_t base_vertex() const { return base_; }  // index in S_0

 private:
  explicit SphereWitness(GradientField f) : field_(std::move(f)) {}
  GradientField field_;
  std::size_t top_ = 0, base_ = 0;
};

// +-1 per top simplex
using OrientationVector = std::vector<int>;

OrientationVector orientation_from_witness(const SphereWitness& w);
// propagation across codimension-one faces; {xi, -xi} or empty when non-orientable
std::vector<OrientationVector> solve_orientations(const SimplicialComplex& k);
Chain fundamental_cycle(const SimplicialComplex& k, const OrientationVector& xi);

Integer degree_of_chain_map(const ChainMap& phi, const SimplicialComplex& k, const OrientationVector& xi);
Integer degree_of_chain_map(const ChainMap& phi, const SphereWitness& w);

// degree of g^k o f_# on C(Bd^k S), f: Bd^k S -> S
Integer combinatorial_degree(const SimplicialMap& f, const SubdivisionTower& tower, const SphereWitness& w_bd);

// orientation of Bd^k S carried over from one of S, flag by flag
OrientationVector subdivision_orientation(const SubdivisionTower& tower, const OrientationVector& base);

// signed preimage count; IntegrityError if it differs between top simplices
Integer degree_oracle_preimage(const SimplicialMap& f, const OrientationVector& src, const OrientationVector& tgt);

struct DegreeModP {
  Integer degree = 0;
  unsigned p = 0;
  Integer residue = 0;
  bool pass() const { return residue == 1; }
};

// DomainError naming the hypothesis that fails
DegreeModP verify_degree_mod_p(const SimplicialMap& f, const SubdivisionTower& tower, const SphereWitness& w_bd,
                               const GroupAction& a_src, const GroupAction& a_tgt);

struct ConeCheck {
  bool zero = false;
  Chain image;  // f_#[S]
};

// f: x*S -> T with dim T <= dim S; the image of the fundamental cycle of S
ConeCheck cone_lemma_check(const SimplicialMap& f, const SphereWitness& w);

// for a free Z_p action with p > 2: is the dimension odd
bool odd_dimension_check(const SphereWitness& w, const GroupAction& a);

}  // namespace dmt
