#include "gainsw/gain_graph.hpp"

#include <algorithm>
#include <set>

namespace gainsw {

GainGraph::GainGraph(const Group& g, std::vector<std::string> vertices)
    : group_(g), labels_(std::move(vertices)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
      fail("duplicate vertex label '" + labels_[i] + "'");
  }
}

int GainGraph::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) fail("unknown vertex '" + label + "'");
  return it->second;
}

void GainGraph::add_edge(const std::string& u, const std::string& v, const GroupElement& gain) {
  add_edge(index_of(u), index_of(v), gain);
}

void GainGraph::add_edge(int u, int v, const GroupElement& gain) {
  if (gain.group() != group_) fail("edge gain from a different group");
  if (u == v) fail("loops are not allowed ('" + label(u) + "')");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    fail("edge endpoint out of range");
  const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  if (edges_.count(key))
    fail("duplicate edge " + label(u) + " -- " + label(v));
  edges_.emplace(key, u < v ? gain : inv(gain));
}

void GainGraph::remove_edge(int u, int v) {
  const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  if (!edges_.erase(key)) fail("no edge " + label(u) + " -- " + label(v));
}

void GainGraph::set_gain(int u, int v, const GroupElement& gain) {
  const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  const auto it = edges_.find(key);
  if (it == edges_.end()) fail("no edge " + label(u) + " -- " + label(v));
  it->second = u < v ? gain : inv(gain);
}

bool GainGraph::adjacent(int u, int v) const {
  if (u == v) return false;
  const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  return edges_.count(key) != 0;
}

std::optional<GroupElement> GainGraph::gain(int u, int v) const {
  const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  const auto it = edges_.find(key);
  if (it == edges_.end()) return std::nullopt;
  return u < v ? it->second : inv(it->second);
}

std::vector<int> GainGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [key, gain] : edges_) {
    if (key.first == v) out.push_back(key.second);
    else if (key.second == v) out.push_back(key.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<int, int, GroupElement>> GainGraph::edges() const {
  std::vector<std::tuple<int, int, GroupElement>> out;
  out.reserve(edges_.size());
  for (const auto& [key, gain] : edges_) out.emplace_back(key.first, key.second, gain);
  return out;
}

bool GainGraph::operator==(const GainGraph& o) const {
  if (group_ != o.group_ || labels_ != o.labels_) return false;
  if (edges_.size() != o.edges_.size()) return false;
  for (const auto& [key, gain] : edges_) {
    const auto it = o.edges_.find(key);
    if (it == o.edges_.end() || !(it->second == gain)) return false;
  }
  return true;
}

std::vector<std::vector<int>> resolve_partition(const GainGraph& g, const Partition& p) {
  if (p.cells.empty()) fail("partition needs at least the C_0 cell");
  std::vector<std::vector<int>> cells;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (c > 0 && p.cells[c].empty()) fail("partition cells C_1..C_k must be nonempty");
    std::vector<int> cell;
    for (const auto& label : p.cells[c]) {
      const int v = g.index_of(label);
      if (seen[static_cast<std::size_t>(v)]) fail("vertex '" + label + "' appears in two cells");
      seen[static_cast<std::size_t>(v)] = true;
      cell.push_back(v);
    }
    cells.push_back(std::move(cell));
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[static_cast<std::size_t>(v)])
      fail("vertex '" + g.label(v) + "' is missing from the partition");
  return cells;
}

GAMatrix adjacency(const GainGraph& g) {
  const int n = g.vertex_count();
  GAMatrix a(g.group(), n, n);  // rejects U(H) via GAElement
  for (const auto& [u, v, gain] : g.edges()) {
    a.at(u, v).add_term(gain, 1.0);
    a.at(v, u).add_term(inv(gain), 1.0);
  }
  return a;
}

GroupElement walk_gain(const GainGraph& g, const std::vector<std::string>& walk) {
  GroupElement out = identity(g.group());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const int u = g.index_of(walk[i]);
    const int v = g.index_of(walk[i + 1]);
    const auto gain = g.gain(u, v);
    if (!gain) fail("not a walk: '" + walk[i] + "' and '" + walk[i + 1] + "' are not adjacent");
    out = mul(out, *gain);
  }
  return out;
}

bool is_balanced(const GainGraph& g) {
  // Potentials f with psi(u,v) = f(u) f(v)^-1 exist iff the graph is balanced;
  // assign along a spanning forest and check the remaining edges.
  const int n = g.vertex_count();
  std::vector<std::optional<GroupElement>> pot(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (pot[static_cast<std::size_t>(root)]) continue;
    pot[static_cast<std::size_t>(root)] = identity(g.group());
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (pot[static_cast<std::size_t>(v)]) continue;
        pot[static_cast<std::size_t>(v)] = mul(inv(*g.gain(u, v)), *pot[static_cast<std::size_t>(u)]);
        stack.push_back(v);
      }
    }
  }
  for (const auto& [u, v, gain] : g.edges()) {
    const auto expect = mul(*pot[static_cast<std::size_t>(u)], inv(*pot[static_cast<std::size_t>(v)]));
    if (!(gain == expect)) return false;
  }
  return true;
}

GainGraph multiply_gain(const GainGraph& g, const std::string& u, const std::string& v,
                        const GroupElement& left) {
  const int ui = g.index_of(u), vi = g.index_of(v);
  const auto gain = g.gain(ui, vi);
  if (!gain) fail("no edge " + u + " -- " + v);
  GainGraph out = g;
  out.set_gain(ui, vi, mul(left, *gain));
  return out;
}

GainGraph apply_gauge(const GainGraph& g, const std::map<std::string, GroupElement>& f,
                      const std::map<std::string, std::string>& phi) {
  std::vector<std::string> new_labels(static_cast<std::size_t>(g.vertex_count()), "");
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto it = phi.find(g.label(v));
    if (it == phi.end()) fail("gauge relabeling misses vertex '" + g.label(v) + "'");
    new_labels[static_cast<std::size_t>(v)] = it->second;
  }
  // Keep the target's label set but in the source vertex order, then rebuild.
  GainGraph out(g.group(), g.vertices());
  for (const auto& [u, v, gain] : g.edges()) {
    const auto& fu = f.at(g.label(u));
    const auto& fv = f.at(g.label(v));
    out.add_edge(u, v, mul(mul(inv(fu), gain), fv));
  }
  // Relabel in place: vertices keep their positions, names change.
  GainGraph renamed(g.group(), new_labels);
  for (const auto& [u, v, gain] : out.edges()) renamed.add_edge(u, v, gain);
  return renamed;
}

// ---- switching isomorphism ----

namespace {

struct BijectionSearch {
  const GainGraph& g1;
  const GainGraph& g2;
  int n;
  std::vector<int> phi;        // g1 index -> g2 index, -1 = unassigned
  std::vector<bool> used;
  std::vector<int> deg1, deg2;

  bool compatible(int u, int target) const {
    if (deg1[static_cast<std::size_t>(u)] != deg2[static_cast<std::size_t>(target)]) return false;
    for (int v = 0; v < n; ++v) {
      if (phi[static_cast<std::size_t>(v)] < 0) continue;
      if (g1.adjacent(u, v) != g2.adjacent(target, phi[static_cast<std::size_t>(v)])) return false;
    }
    return true;
  }

  template <typename Fn>
  bool search(int u, Fn&& on_complete) {
    if (u == n) return on_complete(phi);
    for (int target = 0; target < n; ++target) {
      if (used[static_cast<std::size_t>(target)] || !compatible(u, target)) continue;
      phi[static_cast<std::size_t>(u)] = target;
      used[static_cast<std::size_t>(target)] = true;
      if (search(u + 1, on_complete)) return true;
      used[static_cast<std::size_t>(target)] = false;
      phi[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }
};

// Given phi, look for a switching function f. Per connected component the
// spanning tree forces f(v) = a_v g0 b_v with one unknown g0; every non-tree
// edge becomes a conjugacy condition g0^-1 c1 g0 = c2.
std::optional<std::vector<GroupElement>> find_switching_function(
    const GainGraph& g1, const GainGraph& g2, const std::vector<int>& phi) {
  const Group& G = g1.group();
  const int n = g1.vertex_count();
  const auto id = identity(G);
  std::vector<std::optional<std::pair<GroupElement, GroupElement>>> coeff(
      static_cast<std::size_t>(n));  // f(v) = a_v g0 b_v
  std::vector<GroupElement> f(static_cast<std::size_t>(n), id);

  for (int root = 0; root < n; ++root) {
    if (coeff[static_cast<std::size_t>(root)]) continue;
    coeff[static_cast<std::size_t>(root)] = std::make_pair(id, id);
    std::vector<int> order{root};
    std::vector<int> stack{root};
    std::vector<std::pair<int, int>> non_tree;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g1.neighbors(u)) {
        if (coeff[static_cast<std::size_t>(v)]) {
          if (u < v) non_tree.emplace_back(u, v);
          continue;
        }
        // tree edge u -> v: f(v) = psi1(u,v)^-1 f(u) psi2(phi u, phi v)
        const auto psi1 = *g1.gain(u, v);
        const auto psi2 = *g2.gain(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]);
        const auto& [au, bu] = *coeff[static_cast<std::size_t>(u)];
        coeff[static_cast<std::size_t>(v)] = std::make_pair(mul(inv(psi1), au), mul(bu, psi2));
        order.push_back(v);
        stack.push_back(v);
      }
    }
    // Conditions on g0 from the non-tree edges of this component.
    std::vector<std::pair<GroupElement, GroupElement>> conditions;
    for (const auto& [u, v] : non_tree) {
      const auto& [au, bu] = *coeff[static_cast<std::size_t>(u)];
      const auto& [av, bv] = *coeff[static_cast<std::size_t>(v)];
      const auto c1 = mul(mul(inv(au), *g1.gain(u, v)), av);
      const auto c2 = mul(mul(bu, *g2.gain(phi[static_cast<std::size_t>(u)],
                                           phi[static_cast<std::size_t>(v)])),
                          inv(bv));
      conditions.emplace_back(c1, c2);
    }
    std::optional<GroupElement> g0;
    if (G.is_abelian()) {
      bool ok = true;
      for (const auto& [c1, c2] : conditions)
        if (!(c1 == c2)) { ok = false; break; }
      if (ok) g0 = id;
    } else {
      for (const auto& cand : elements(G)) {
        bool ok = true;
        for (const auto& [c1, c2] : conditions)
          if (!(mul(mul(inv(cand), c1), cand) == c2)) { ok = false; break; }
        if (ok) { g0 = cand; break; }
      }
    }
    if (!g0) return std::nullopt;
    for (int v : order) {
      const auto& [av, bv] = *coeff[static_cast<std::size_t>(v)];
      f[static_cast<std::size_t>(v)] = mul(mul(av, *g0), bv);
    }
  }
  return f;
}

}  // namespace

std::optional<SwitchingWitness> switching_isomorphic(const GainGraph& g1, const GainGraph& g2) {
  const Group& G = g1.group();
  if (G != g2.group()) fail("switching_isomorphic: graphs over different groups");
  if (!G.is_finite() && !G.is_abelian())
    fail_unsupported("switching isomorphism over an infinite non-abelian group (U(H)) "
                     "is not supported");
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  const int n = g1.vertex_count();
  if (n > 12) fail_unsupported("switching isomorphism search is capped at 12 vertices");

  BijectionSearch search{g1, g2, n,
                         std::vector<int>(static_cast<std::size_t>(n), -1),
                         std::vector<bool>(static_cast<std::size_t>(n), false),
                         {}, {}};
  search.deg1.resize(static_cast<std::size_t>(n));
  search.deg2.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    search.deg1[static_cast<std::size_t>(v)] = static_cast<int>(g1.neighbors(v).size());
    search.deg2[static_cast<std::size_t>(v)] = static_cast<int>(g2.neighbors(v).size());
  }

  std::optional<SwitchingWitness> witness;
  search.search(0, [&](const std::vector<int>& phi) {
    const auto f = find_switching_function(g1, g2, phi);
    if (!f) return false;
    SwitchingWitness w;
    for (int v = 0; v < n; ++v) {
      w.phi[g1.label(v)] = g2.label(phi[static_cast<std::size_t>(v)]);
      w.f.emplace(g1.label(v), (*f)[static_cast<std::size_t>(v)]);
    }
    witness = std::move(w);
    return true;
  });
  return witness;
}

}  // namespace gainsw
