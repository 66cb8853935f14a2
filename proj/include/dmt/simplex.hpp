#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dmt {

using Vertex = std::uint32_t;

// Sorted set of vertices. Default constructed = the empty simplex.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}
  explicit Simplex(std::vector<Vertex> vs);  // sorts; throws DomainError on repeats

  static Simplex from_sorted(std::vector<Vertex> vs);  // caller guarantees strict order

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  std::span<const Vertex> vertices() const { return v_; }
  Vertex front() const { return v_.front(); }
  Vertex back() const { return v_.back(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  Simplex without(std::size_t i) const;
  Simplex with(Vertex v) const;
  // position of the vertex removed to obtain `facet`, if it is a facet
  std::optional<std::size_t> deleted_index(const Simplex& facet) const;

  // dimension-major, then lexicographic
  std::strong_ordering operator<=>(const Simplex& o) const;
  bool operator==(const Simplex& o) const = default;

 private:
  std::vector<Vertex> v_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

// [sigma : tau]; 0 unless tau is a facet of sigma
int incidence_number(const Simplex& sigma, const Simplex& tau);

// sorts vs in place and returns the permutation sign, 0 on repeats
int sort_with_sign(std::vector<Vertex>& vs);

std::string to_string(const Simplex& s);

}  // namespace dmt
