#include "dmt/chain.hpp"

#include <algorithm>

namespace dmt {

Chain Chain::from_terms(int dim, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  Chain c(dim);
  for (const auto& t : terms) {
    if (!c.terms_.empty() && c.terms_.back().index == t.index)
      c.terms_.back().coeff = checked_add(c.terms_.back().coeff, t.coeff);
    else
      c.terms_.push_back(t);
  }
  std::erase_if(c.terms_, [](const Term& t) { return t.coeff == 0; });
  return c;
}

Chain Chain::unit(int dim, std::size_t index, Integer coeff) {
  Chain c(dim);
  if (coeff != 0) c.terms_.push_back({index, coeff});
  return c;
}

Chain Chain::from_dense(int dim, const std::vector<Integer>& values) {
  Chain c(dim);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) c.terms_.push_back({i, values[i]});
  return c;
}

Integer Chain::coefficient(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.index < i; });
  return (it != terms_.end() && it->index == index) ? it->coeff : 0;
}

Chain& Chain::add_scaled(const Chain& o, Integer f) {
  if (o.is_zero() || f == 0) return *this;
  if (is_zero()) dim_ = o.dim_;
  if (o.dim_ != dim_) throw DomainError("adding chains of different dimension");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->index < a->index) {
      out.push_back({b->index, checked_mul(b->coeff, f)});
      ++b;
    } else {
      Integer v = checked_add(a->coeff, checked_mul(b->coeff, f));
      if (v != 0) out.push_back({a->index, v});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Chain Chain::scaled(Integer f) const {
  Chain r(dim_);
  if (f == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = checked_mul(t.coeff, f);
  return r;
}

Chain chain_of(const SimplicialComplex& k, const Simplex& s, Integer c) {
  return Chain::unit(s.dim(), k.index_of(s), c);
}

void check_chain(const SimplicialComplex& k, const Chain& c) {
  for (const auto& t : c.terms())
    if (t.index >= k.count(c.dim()))
      throw DomainError("chain refers to a simplex absent from the complex");
}

Chain boundary(const SimplicialComplex& k, const Chain& c) {
  check_chain(k, c);
  const int q = c.dim();
  if (q <= 0) return Chain(q - 1);  // C_{-1} is zero
  std::vector<Term> out;
  out.reserve(c.support_size() * (q + 1));
  for (const auto& t : c.terms()) {
    auto f = k.facets(q, t.index);
    for (int j = 0; j <= q; ++j) out.push_back({f[j], j % 2 == 0 ? t.coeff : checked_neg(t.coeff)});
  }
  return Chain::from_terms(q - 1, std::move(out));
}

Integer inner_product(const Chain& a, const Chain& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.dim() != b.dim()) throw DomainError("inner product of chains of different dimension");
  Integer s = 0;
  auto x = a.terms().begin(), y = b.terms().begin();
  while (x != a.terms().end() && y != b.terms().end()) {
    if (x->index < y->index) ++x;
    else if (y->index < x->index) ++y;
    else {
      s = checked_add(s, checked_mul(x->coeff, y->coeff));
      ++x;
      ++y;
    }
  }
  return s;
}

std::string format_chain(const SimplicialComplex& k, const Chain& c) {
  if (c.is_zero()) return "0";
  std::string r;
  bool first = true;
  for (const auto& t : c.terms()) {
    Integer v = t.coeff;
    if (!first) r += v < 0 ? " - " : " + ";
    else if (v < 0) r += "-";
    first = false;
    Integer m = v < 0 ? checked_neg(v) : v;
    if (m != 1) r += std::to_string(m) + "*";
    r += to_string(k.simplex(c.dim(), t.index));
  }
  return r;
}

}  // namespace dmt
