#include "dmt/hopf.hpp"

namespace dmt {

Integer alternating_trace(const ChainMap& phi) {
  if (!phi.is_endomorphism()) throw DomainError("trace needs an endomorphism");
  const auto& k = phi.source();
  Integer total = 0;
  for (int q = 0; q <= k.dim(); ++q) {
    Integer tr = 0;
    for (std::size_t i = 0; i < k.count(q); ++i) tr = checked_add(tr, phi.column(q, i).coefficient(i));
    total = (q % 2 == 0) ? checked_add(total, tr) : checked_sub(total, tr);
  }
  return total;
}

Integer hopf_rhs(const ChainMap& phi, const GradientField& v, Execution exec) {
  if (!phi.is_endomorphism()) throw DomainError("Hopf formula needs an endomorphism");
  if (!same_complex(phi.source(), v.complex())) throw DomainError("vector field lives on a different complex");
  const auto& k = v.complex();
  Integer total = 0;
  for (int q = 0; q <= k.dim(); ++q) {
    const auto& crit = v.partition().critical[q];
    std::vector<Integer> part(crit.size(), 0);
    parallel_for(crit.size(), exec, [&](std::size_t i) {
      part[i] = inner_product(v.co_critical_chain(q, crit[i]), phi.apply(v.critical_chain(q, crit[i])));
    });
    Integer s = 0;
    for (Integer x : part) s = checked_add(s, x);
    total = (q % 2 == 0) ? checked_add(total, s) : checked_sub(total, s);
  }
  return total;
}

HopfReport verify_hopf(const ChainMap& phi, const GradientField& v, Execution exec) {
  return HopfReport{alternating_trace(phi), hopf_rhs(phi, v, exec)};
}

}  // namespace dmt
