#pragma once

#include <optional>
#include <vector>

#include "dmt/group_action.hpp"
#include "dmt/sphere.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

struct ComplexWithField {
  ComplexPtr complex;
  DiscreteVectorField field;
};

// Delta^n_{n-1} minus the facet {0..n-1}, paired as (a, a + {n}); collapsible
ComplexWithField gvf_skeleton_minus_facet(int n);
// the same pairing on the whole boundary of Delta^n, the facet {0..n-1} left critical
SphereWitness sphere_skeleton_witness(int n);

// Collapsibility witness V on K (one critical vertex, paired with the empty
// simplex) gives W' = {(s + x, t + x)} on x*K, all of K critical.
ComplexWithField gvf_cone_transfer(const DiscreteVectorField& v, Vertex apex);
// W' together with V: a collapsibility witness of x*K
ComplexWithField gvf_cone_collapse(const DiscreteVectorField& v, Vertex apex);

struct CollapseOptions {
  int backtrack_depth = 0;  // number of non-greedy choices allowed
};

struct CollapseError : IntegrityError {
  CollapseError(const std::string& what, std::vector<Simplex> left) : IntegrityError(what), remaining(std::move(left)) {}
  std::vector<Simplex> remaining;
};

struct CollapseResult {
  bool success = false;
  std::optional<DiscreteVectorField> field;
  std::vector<Simplex> remaining;  // what was left when it got stuck
};

// Elementary collapses, smallest free face first (canonical order), until only
// `keep` remains. When keep has no vertex the last vertex is paired with the
// empty simplex.
CollapseResult greedy_collapse(ComplexPtr k, const std::vector<Simplex>& keep, CollapseOptions opt = {});

struct JoinedField {
  JoinResult join;
  ComplexPtr complex;
  DiscreteVectorField field;
};

JoinedField gvf_join(const SphereWitness& c, const SphereWitness& d);

struct SubdividedWitness {
  BarycentricSubdivision bd;
  SphereWitness witness;
};

// remove a top simplex of Bd(S) around the barycenter of the critical top cell, collapse the rest
SubdividedWitness sphere_witness_bd(const SphereWitness& s, CollapseOptions opt = {});

// tries each top simplex as the critical one
std::optional<SphereWitness> find_sphere_witness(ComplexPtr k, CollapseOptions opt = {});

struct ZpSphere {
  SphereWitness witness;
  GroupAction action;
};

// cycle on m*p vertices, rotation by m
ZpSphere build_zp_circle(unsigned p, unsigned m);
ZpSphere join_zp_spheres(const ZpSphere& a, const ZpSphere& b);

struct ZpTower {
  SubdivisionTower tower;
  std::vector<SphereWitness> witnesses;  // per level, index 0 = base
  std::vector<GroupAction> actions;      // per level
  const SphereWitness& top_witness() const { return witnesses.back(); }
  const GroupAction& top_action() const { return actions.back(); }
};

ZpTower subdivide_zp_sphere(const ZpSphere& s, int iterations, CollapseOptions opt = {});

}  // namespace dmt
