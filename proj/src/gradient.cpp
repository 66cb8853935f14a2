#include "dmt/gradient.hpp"

#include <algorithm>
#include <deque>

namespace dmt {

namespace {

constexpr std::size_t npos = DiscreteVectorField::npos;

// successor lists of the V-trajectory digraph on S_q (q >= 1)
struct Edge {
  std::size_t to;
  std::size_t via;  // the alpha in between
};

std::vector<std::vector<Edge>> down_graph(const DiscreteVectorField& v, int q) {
  const auto& k = v.complex();
  std::vector<std::vector<Edge>> g(k.count(q));
  if (q < 1) return g;
  for (std::size_t b = 0; b < k.count(q); ++b)
    for (auto a : k.facets(q, b)) {
      auto b2 = v.up(q - 1, a);
      if (b2 != npos && b2 != b) g[b].push_back({b2, a});
    }
  return g;
}

std::vector<std::vector<Edge>> up_graph(const DiscreteVectorField& v, int q) {
  const auto& k = v.complex();
  std::vector<std::vector<Edge>> g(k.count(q));
  for (std::size_t b = 0; b < k.count(q); ++b)
    for (const auto& c : k.cofacets(q, b)) {
      auto b2 = v.down(q + 1, c.index);
      if (b2 != npos && b2 != b) g[b].push_back({b2, c.index});
    }
  return g;
}

std::optional<std::vector<std::size_t>> kahn(const std::vector<std::vector<Edge>>& g) {
  std::vector<std::size_t> indeg(g.size(), 0);
  for (const auto& es : g)
    for (const auto& e : es) ++indeg[e.to];
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::vector<std::size_t> order;
  order.reserve(g.size());
  while (!ready.empty()) {
    auto i = ready.front();
    ready.pop_front();
    order.push_back(i);
    for (const auto& e : g[i])
      if (--indeg[e.to] == 0) ready.push_back(e.to);
  }
  if (order.size() != g.size()) return std::nullopt;
  return order;
}

ClosedTrajectory find_cycle(const DiscreteVectorField& v, int q, const std::vector<std::vector<Edge>>& g) {
  const auto& k = v.complex();
  std::vector<char> color(g.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next edge
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (color[root]) continue;
    stack.assign({{root, 0}});
    color[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == g[node].size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      const Edge e = g[node][next++];
      if (color[e.to] == 1) {
        ClosedTrajectory t;
        t.dim = q;
        std::size_t s = 0;
        while (stack[s].first != e.to) ++s;
        for (std::size_t i = s; i < stack.size(); ++i) {
          std::size_t b = stack[i].first;
          t.faces.push_back(k.simplex(q, b));
          const Edge& used = g[b][stack[i].second - 1];
          t.faces.push_back(k.simplex(q - 1, used.via));
        }
        t.faces.push_back(k.simplex(q, e.to));
        return t;
      }
      if (color[e.to] == 0) {
        color[e.to] = 1;
        stack.push_back({e.to, 0});
      }
    }
  }
  throw IntegrityError("cycle expected but none found");
}

}  // namespace

std::string format_trajectory(const ClosedTrajectory& t) {
  std::string r;
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    if (i) r += (i % 2 == 1) ? " -> " : " >-> ";
    r += to_string(t.faces[i]);
  }
  return r;
}

GradientCheck is_gradient(const DiscreteVectorField& v) {
  GradientCheck r;
  const auto& k = v.complex();
  const int d = k.dim();
  r.certificate.down_order.resize(d + 1);
  r.certificate.up_order.resize(d + 1);
  for (int q = 0; q <= d; ++q) {
    auto g = down_graph(v, q);
    auto order = kahn(g);
    if (!order) {
      r.cycle = find_cycle(v, q, g);
      r.certificate = {};
      return r;
    }
    r.certificate.down_order[q] = std::move(*order);
  }
  for (int q = 0; q <= d; ++q) {
    auto order = kahn(up_graph(v, q));
    if (!order) throw IntegrityError("co-trajectory digraph has a cycle while the trajectory digraph has none");
    r.certificate.up_order[q] = std::move(*order);
  }
  r.gradient = true;
  return r;
}

std::size_t CriticalPartition::total_critical() const {
  std::size_t n = 0;
  for (const auto& c : critical) n += c.size();
  return n;
}

CriticalPartition critical_simplices(const DiscreteVectorField& v) {
  const auto& k = v.complex();
  CriticalPartition p;
  const int d = k.dim();
  p.critical.resize(d + 1);
  p.up.resize(d + 1);
  p.down.resize(d + 1);
  for (int q = 0; q <= d; ++q)
    for (std::size_t i = 0; i < k.count(q); ++i) {
      if (v.up(q, i) != npos) p.up[q].push_back(i);
      else if (q > 0 && v.down(q, i) != npos) p.down[q].push_back(i);
      else p.critical[q].push_back(i);  // includes a vertex paired with the empty simplex
    }
  return p;
}

GradientField::GradientField(DiscreteVectorField v) : v_(std::move(v)) {
  auto check = is_gradient(v_);
  if (!check.gradient)
    throw DomainError("vector field is not gradient: closed trajectory " + format_trajectory(*check.cycle));
  cert_ = std::move(check.certificate);
  part_ = critical_simplices(v_);
  const auto& k = v_.complex();
  const int d = k.dim();
  down_pos_.resize(d + 1);
  up_pos_.resize(d + 1);
  pair_sign_.resize(d + 1);
  for (int q = 0; q <= d; ++q) {
    down_pos_[q].resize(k.count(q));
    up_pos_[q].resize(k.count(q));
    for (std::size_t p = 0; p < k.count(q); ++p) {
      down_pos_[q][cert_.down_order[q][p]] = p;
      up_pos_[q][cert_.up_order[q][p]] = p;
    }
    pair_sign_[q].assign(k.count(q), 0);
    if (q == 0) continue;
    for (auto b : part_.down[q]) {
      auto a = v_.down(q, b);
      auto f = k.facets(q, b);
      for (int j = 0; j <= q; ++j)
        if (f[j] == a) pair_sign_[q][b] = (j % 2 == 0) ? 1 : -1;
    }
  }
}

bool GradientField::is_critical(int q, std::size_t i) const {
  const auto& c = part_.critical.at(q);
  return std::binary_search(c.begin(), c.end(), i);
}

Chain GradientField::critical_chain(int q, std::size_t sigma) const {
  if (q < 0 || q > complex().dim() || !is_critical(q, sigma))
    throw DomainError("critical_chain needs a critical simplex");
  if (q == 0) return Chain::unit(0, sigma);
  const auto& k = complex();
  const auto& order = cert_.down_order[q];
  std::vector<Integer> val(k.count(q), 0);
  val[sigma] = 1;
  for (std::size_t p = down_pos_[q][sigma]; p < order.size(); ++p) {
    const std::size_t b = order[p];
    if (val[b] == 0) continue;
    auto f = k.facets(q, b);
    for (int j = 0; j <= q; ++j) {
      auto b2 = v_.up(q - 1, f[j]);
      if (b2 == npos || b2 == b) continue;
      // weight -[b : a][b2 : a]
      Integer w = -((j % 2 == 0) ? 1 : -1) * pair_sign_[q][b2];
      val[b2] = checked_add(val[b2], checked_mul(val[b], w));
    }
  }
  return Chain::from_dense(q, val);
}

Chain GradientField::co_critical_chain(int q, std::size_t sigma) const {
  if (q < 0 || q > complex().dim() || !is_critical(q, sigma))
    throw DomainError("co_critical_chain needs a critical simplex");
  const auto& k = complex();
  const auto& order = cert_.up_order[q];
  std::vector<Integer> val(k.count(q), 0);
  val[sigma] = 1;
  for (std::size_t p = up_pos_[q][sigma]; p < order.size(); ++p) {
    const std::size_t b = order[p];
    if (val[b] == 0) continue;
    for (const auto& c : k.cofacets(q, b)) {
      auto b2 = v_.down(q + 1, c.index);
      if (b2 == npos || b2 == b) continue;
      Integer w = -c.sign * pair_sign_[q + 1][c.index];
      val[b2] = checked_add(val[b2], checked_mul(val[b], w));
    }
  }
  return Chain::from_dense(q, val);
}

Chain GradientField::critical_chain(const Simplex& s) const {
  return critical_chain(s.dim(), complex().index_of(s));
}

Chain GradientField::co_critical_chain(const Simplex& s) const {
  return co_critical_chain(s.dim(), complex().index_of(s));
}

std::vector<Chain> GradientField::critical_chains(int q, Execution exec) const {
  const auto& crit = part_.critical.at(q);
  std::vector<Chain> out(crit.size());
  parallel_for(crit.size(), exec, [&](std::size_t i) { out[i] = critical_chain(q, crit[i]); });
  return out;
}

std::vector<Chain> GradientField::co_critical_chains(int q, Execution exec) const {
  const auto& crit = part_.critical.at(q);
  std::vector<Chain> out(crit.size());
  parallel_for(crit.size(), exec, [&](std::size_t i) { out[i] = co_critical_chain(q, crit[i]); });
  return out;
}

BasisQ GradientField::modified_basis(int q) const {
  const auto& k = complex();
  if (q < 0 || q > k.dim()) throw DomainError("dimension out of range");
  std::vector<BasisElement> e;
  auto crit = critical_chains(q);
  for (std::size_t i = 0; i < crit.size(); ++i)
    e.push_back({std::move(crit[i]), Provenance::critical_chain, part_.critical[q][i]});
  if (q < k.dim()) {
    // alpha_i before alpha_j when alpha_i is a facet of V(alpha_j): reverse trajectory order one level up
    const auto& order = cert_.down_order[q + 1];
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto a = v_.down(q + 1, *it);
      if (a == npos) continue;
      e.push_back({boundary(k, Chain::unit(q + 1, *it)), Provenance::boundary_of_pair, a});
    }
  }
  for (auto b : part_.down[q]) e.push_back({Chain::unit(q, b), Provenance::paired_down, b});
  return BasisQ(complex_ptr(), q, std::move(e));
}

}  // namespace dmt
