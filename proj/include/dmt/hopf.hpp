#pragma once

#include "dmt/chain_map.hpp"
#include "dmt/gradient.hpp"

namespace dmt {

Integer alternating_trace(const ChainMap& phi);

// sum_q (-1)^q sum_{critical s} <co-critical(s), phi(critical(s))>
Integer hopf_rhs(const ChainMap& phi, const GradientField& v, Execution exec = Execution::parallel);

struct HopfReport {
  Integer lhs = 0;
  Integer rhs = 0;
  bool equal() const { return lhs == rhs; }
};

HopfReport verify_hopf(const ChainMap& phi, const GradientField& v, Execution exec = Execution::parallel);

}  // namespace dmt
