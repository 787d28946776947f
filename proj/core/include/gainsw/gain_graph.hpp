#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gainsw/gg_matrix.hpp"

namespace gainsw {

// A finite simple gain graph: ordered vertex labels and gain-labelled edges
// with psi(v,u) = psi(u,v)^-1. Gains are stored for the orientation u -> v
// with u before v in the vertex order.
class GainGraph {
 public:
  GainGraph(const Group& g, std::vector<std::string> vertices);

  const Group& group() const { return group_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertices() const { return labels_; }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  int index_of(const std::string& label) const;  // throws on unknown label

  void add_edge(const std::string& u, const std::string& v, const GroupElement& gain);
  void add_edge(int u, int v, const GroupElement& gain);  // gain for u -> v
  void remove_edge(int u, int v);
  void set_gain(int u, int v, const GroupElement& gain);  // edge must exist

  bool adjacent(int u, int v) const;
  // psi(u, v); nullopt when not adjacent.
  std::optional<GroupElement> gain(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Edges as (u, v, gain) with u < v, ascending.
  std::vector<std::tuple<int, int, GroupElement>> edges() const;

  bool operator==(const GainGraph& o) const;

 private:
  Group group_;
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, GroupElement> edges_;
};

// An ordered cell partition {C_0, ..., C_k} of the vertex set; C_0 is
// distinguished and may be empty, C_1..C_k must be nonempty.
struct Partition {
  std::vector<std::vector<std::string>> cells;
};

// Resolve cells to vertex indices and validate: disjoint, covering, nonempty
// past C_0.
std::vector<std::vector<int>> resolve_partition(const GainGraph& g, const Partition& p);

// Hermitian adjacency matrix over CG in vertex order. Rejects U(H) graphs
// (the quaternion pipeline works in H; see quaternions.hpp).
GAMatrix adjacency(const GainGraph& g);

// Product of the gains along a walk given by vertex labels; the empty and
// one-vertex walks have gain 1_G.
GroupElement walk_gain(const GainGraph& g, const std::vector<std::string>& walk);

// True iff every closed walk has gain 1_G (spanning-forest potential check).
bool is_balanced(const GainGraph& g);

// Left-multiplies psi(u, v) for one existing edge; the reverse orientation picks
// up the inverse. Returns the modified copy.
GainGraph multiply_gain(const GainGraph& g, const std::string& u, const std::string& v,
                        const GroupElement& left);

struct SwitchingWitness {
  std::map<std::string, std::string> phi;   // vertex bijection g1 -> g2
  std::map<std::string, GroupElement> f;    // switching function on V(g1)
};

// Searches for (phi, f) with psi2(phi u, phi v) = f(u)^-1 psi1(u, v) f(v).
// Brute-force bijection enumeration with degree/neighborhood pruning,
// |V| <= 12; switching functions propagate along a spanning tree and reduce
// to conjugacy conditions on the non-tree edges. Deterministic: first witness
// in lexicographic candidate order. Throws UnsupportedError over U(H).
std::optional<SwitchingWitness> switching_isomorphic(const GainGraph& g1, const GainGraph& g2);

// Applies a gauge f and a relabeling phi; used to build switching-isomorphic
// controls: psi'(phi u, phi v) = f(u)^-1 psi(u, v) f(v).
GainGraph apply_gauge(const GainGraph& g, const std::map<std::string, GroupElement>& f,
                      const std::map<std::string, std::string>& phi);

// ---- file format (one JSON object; see README) ----
GainGraph parse_graph(const std::string& text);
std::string format_graph(const GainGraph& g);
GainGraph load_graph(const std::string& path);
void save_graph(const GainGraph& g, const std::string& path);

Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);
Partition load_partition(const std::string& path);

}  // namespace gainsw
