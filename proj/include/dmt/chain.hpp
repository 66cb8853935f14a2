#pragma once

#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/integer.hpp"

namespace dmt {

struct Term {
  std::size_t index;  // simplex index within the chain's dimension
  Integer coeff;
  bool operator==(const Term&) const = default;
};

// Sparse integer q-chain, terms sorted by index, no zero coefficients.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int dim) : dim_(dim) {}
  static Chain from_terms(int dim, std::vector<Term> terms);  // merges repeats
  static Chain unit(int dim, std::size_t index, Integer c = 1);
  static Chain from_dense(int dim, const std::vector<Integer>& values);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Integer coefficient(std::size_t index) const;

  Chain& add_scaled(const Chain& other, Integer factor);
  Chain& operator+=(const Chain& o) { return add_scaled(o, 1); }
  Chain& operator-=(const Chain& o) { return add_scaled(o, -1); }
  Chain operator+(const Chain& o) const { Chain r = *this; return r += o; }
  Chain operator-(const Chain& o) const { Chain r = *this; return r -= o; }
  Chain operator-() const { return scaled(-1); }
  Chain scaled(Integer f) const;

  bool operator==(const Chain& o) const = default;

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
};

Chain chain_of(const SimplicialComplex& k, const Simplex& s, Integer c = 1);
Chain boundary(const SimplicialComplex& k, const Chain& c);
Integer inner_product(const Chain& a, const Chain& b);  // standard basis
void check_chain(const SimplicialComplex& k, const Chain& c);  // DomainError if an index is out of range
std::string format_chain(const SimplicialComplex& k, const Chain& c);

}  // namespace dmt
