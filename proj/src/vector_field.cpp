#include "dmt/vector_field.hpp"

#include <unordered_set>

namespace dmt {

DvfValidation validate_dvf(const SimplicialComplex& k, std::span<const SimplexPair> pairs) {
  DvfValidation r;
  std::unordered_set<Simplex, SimplexHash> used;
  for (const auto& [a, b] : pairs) {
    if (!k.contains(a) || !k.contains(b)) {
      r.valid = false;
      r.reason = "pair refers to a simplex absent from the complex";
      r.witness = {a, b};
      return r;
    }
    if (!b.deleted_index(a)) {
      r.valid = false;
      r.reason = "first simplex is not a facet of the second";
      r.witness = {a, b};
      return r;
    }
    for (const auto* s : {&a, &b})
      if (!used.insert(*s).second) {
        r.valid = false;
        r.reason = "simplex occurs in more than one pair";
        r.witness = {*s};
        return r;
      }
  }
  return r;
}

DiscreteVectorField::DiscreteVectorField(ComplexPtr k) : k_(std::move(k)) {
  const int d = k_->dim();
  up_.resize(d + 2);
  down_.resize(d + 1);
  for (int q = -1; q <= d; ++q) up_[q + 1].assign(k_->count(q), npos);
  for (int q = 0; q <= d; ++q) down_[q].assign(k_->count(q), npos);
}

DiscreteVectorField DiscreteVectorField::from_pairs(ComplexPtr k, std::span<const SimplexPair> pairs) {
  auto v = validate_dvf(*k, pairs);
  if (!v.valid) {
    std::string w;
    for (const auto& s : v.witness) w += " " + to_string(s);
    throw DomainError("invalid vector field: " + v.reason + ":" + w);
  }
  DiscreteVectorField f(k);
  for (const auto& [a, b] : pairs) f.pair(a.dim(), k->index_of(a), k->index_of(b));
  return f;
}

std::size_t DiscreteVectorField::up(int q, std::size_t i) const {
  if (q < -1 || q + 1 >= static_cast<int>(up_.size())) return npos;
  return up_[q + 1][i];
}

std::size_t DiscreteVectorField::down(int q, std::size_t i) const {
  if (q < 0 || q >= static_cast<int>(down_.size())) return npos;
  return down_[q][i];
}

std::optional<std::size_t> DiscreteVectorField::empty_partner() const {
  if (up_.empty() || up_[0][0] == npos) return std::nullopt;
  return up_[0][0];
}

void DiscreteVectorField::pair(int q, std::size_t alpha, std::size_t beta) {
  if (up(q, alpha) != npos || (q >= 0 && down(q, alpha) != npos) || matched(q + 1, beta))
    throw DomainError("simplex is already matched");
  up_[q + 1][alpha] = beta;
  down_[q + 1][beta] = alpha;
  ++size_;
}

void DiscreteVectorField::unpair(int q, std::size_t alpha) {
  std::size_t beta = up(q, alpha);
  if (beta == npos) return;
  up_[q + 1][alpha] = npos;
  down_[q + 1][beta] = npos;
  --size_;
}

std::vector<SimplexPair> DiscreteVectorField::pairs() const {
  std::vector<SimplexPair> r;
  for (int q = -1; q < k_->dim(); ++q)
    for (std::size_t i = 0; i < k_->count(q); ++i)
      if (up(q, i) != npos) r.emplace_back(k_->simplex(q, i), k_->simplex(q + 1, up(q, i)));
  return r;
}

}  // namespace dmt
