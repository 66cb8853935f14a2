#include "dmt/simplex.hpp"

#include <algorithm>

#include "dmt/error.hpp"

namespace dmt {

Simplex::Simplex(std::vector<Vertex> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw DomainError("simplex has a repeated vertex");
}

Simplex Simplex::from_sorted(std::vector<Vertex> vs) {
  Simplex s;
  s.v_ = std::move(vs);
  return s;
}

bool Simplex::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Simplex Simplex::without(std::size_t i) const {
  std::vector<Vertex> r;
  r.reserve(v_.size() - 1);
  for (std::size_t j = 0; j < v_.size(); ++j)
    if (j != i) r.push_back(v_[j]);
  return from_sorted(std::move(r));
}

Simplex Simplex::with(Vertex v) const {
  std::vector<Vertex> r = v_;
  auto it = std::lower_bound(r.begin(), r.end(), v);
  if (it != r.end() && *it == v) throw DomainError("vertex already in simplex");
  r.insert(it, v);
  return from_sorted(std::move(r));
}

std::optional<std::size_t> Simplex::deleted_index(const Simplex& facet) const {
  if (facet.v_.size() + 1 != v_.size()) return std::nullopt;
  std::size_t i = 0;
  while (i < facet.v_.size() && facet.v_[i] == v_[i]) ++i;
  // i is the candidate deleted position; the rest must be shifted by one
  for (std::size_t j = i; j < facet.v_.size(); ++j)
    if (facet.v_[j] != v_[j + 1]) return std::nullopt;
  return i;
}

std::strong_ordering Simplex::operator<=>(const Simplex& o) const {
  if (v_.size() != o.v_.size()) return v_.size() <=> o.v_.size();
  return std::lexicographical_compare_three_way(v_.begin(), v_.end(), o.v_.begin(), o.v_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 1469598103934665603ull ^ s.size();
  for (Vertex v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int incidence_number(const Simplex& sigma, const Simplex& tau) {
  auto i = sigma.deleted_index(tau);
  if (!i) return 0;
  return (*i % 2 == 0) ? 1 : -1;
}

int sort_with_sign(std::vector<Vertex>& vs) {
  // insertion sort, counting transpositions
  int sign = 1;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    for (std::size_t j = i; j > 0 && vs[j - 1] > vs[j]; --j) {
      std::swap(vs[j - 1], vs[j]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return 0;
  return sign;
}

std::string to_string(const Simplex& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += ',';
    r += std::to_string(s[i]);
  }
  return r + "]";
}

}  // namespace dmt
