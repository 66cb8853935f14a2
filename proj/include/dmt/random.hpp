#pragma once

#include <random>
#include <string>

#include "dmt/chain_map.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

using Rng = std::mt19937_64;

struct RandomComplexOptions {
  int max_dim = 3;
  std::size_t max_simplices = 300;  // empty simplex included
  unsigned min_vertices = 3;
  unsigned max_vertices = 9;
};

SimplicialComplex random_complex(Rng& rng, RandomComplexOptions opt = {});

// maximal acyclic matching built greedily in random order
DiscreteVectorField random_gradient_field(ComplexPtr k, Rng& rng, double empty_pair_probability = 0.5);

// constant map, map into one simplex, or random single-vertex moves from the identity
SimplicialMap random_simplicial_self_map(ComplexPtr k, Rng& rng);

// Bd(K) -> K, barycenter of s to the largest vertex of s
SimplicialMap last_vertex_map(const BarycentricSubdivision& bd);

struct RandomEndomorphism {
  ChainMap map;
  std::string kind;
};

// identity, zero, induced self-map, last-vertex map after subdivision, or an
// integer combination a*id + b*f_#
RandomEndomorphism random_endomorphism(ComplexPtr k, Rng& rng);

}  // namespace dmt
