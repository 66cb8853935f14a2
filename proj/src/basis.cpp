#include "dmt/basis.hpp"

namespace dmt {

BasisQ::BasisQ(ComplexPtr k, int q, std::vector<BasisElement> elements)
    : k_(std::move(k)), q_(q), elements_(std::move(elements)) {
  if (elements_.size() != k_->count(q_))
    throw DomainError("basis has " + std::to_string(elements_.size()) + " elements, rank is " +
                      std::to_string(k_->count(q_)));
  for (const auto& e : elements_) {
    if (!e.chain.is_zero() && e.chain.dim() != q_) throw DomainError("basis element of wrong dimension");
    check_chain(*k_, e.chain);
  }
}

BasisQ BasisQ::standard(ComplexPtr k, int q) {
  std::vector<BasisElement> e;
  for (std::size_t i = 0; i < k->count(q); ++i) e.push_back({Chain::unit(q, i), Provenance::simplex, i});
  BasisQ b(std::move(k), q, std::move(e));
  b.standard_ = true;
  return b;
}

DenseIntMatrix BasisQ::matrix() const {
  DenseIntMatrix m(size(), size());
  for (std::size_t c = 0; c < size(); ++c)
    for (const auto& t : elements_[c].chain.terms()) m(t.index, c) = t.coeff;
  return m;
}

Integer BasisQ::determinant() const {
  if (standard_) return 1;
  return dmt::determinant(matrix());
}

const UnimodularSolver& BasisQ::solver() const {
  std::call_once(lazy_->once, [this] { lazy_->solver = std::make_unique<UnimodularSolver>(matrix()); });
  return *lazy_->solver;
}

std::vector<Integer> BasisQ::coordinates(const Chain& c) const {
  std::vector<Integer> rhs(size(), 0);
  if (!c.is_zero()) {
    if (c.dim() != q_) throw DomainError("chain dimension does not match the basis");
    check_chain(*k_, c);
    for (const auto& t : c.terms()) rhs[t.index] = t.coeff;
  }
  if (standard_) return rhs;
  return solver().solve(rhs);
}

Integer inner_product(const Chain& a, const Chain& b, const BasisQ& basis) {
  auto x = basis.coordinates(a);
  auto y = basis.coordinates(b);
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s = checked_add(s, checked_mul(x[i], y[i]));
  return s;
}

}  // namespace dmt
