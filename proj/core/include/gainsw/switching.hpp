#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gainsw/gain_graph.hpp"
#include "gainsw/representations.hpp"

namespace gainsw {

// What the switch does between one C_0 vertex and one cell C_i.
struct CellAction {
  enum class Kind { Skip, Swap, CentralMultiply };
  Kind kind = Kind::Skip;
  // Swap: the two gains (nullopt encodes 0, i.e. non-adjacency).
  std::optional<GroupElement> g1, g2;
  // CentralMultiply: the element s with pi(s) = -I.
  std::optional<GroupElement> s;

  static CellAction skip() { return {}; }
  static CellAction swap(std::optional<GroupElement> a, std::optional<GroupElement> b) {
    CellAction act;
    act.kind = Kind::Swap;
    act.g1 = std::move(a);
    act.g2 = std::move(b);
    return act;
  }
  static CellAction central(GroupElement s_) {
    CellAction act;
    act.kind = Kind::CentralMultiply;
    act.s = std::move(s_);
    return act;
  }
};

struct CellPlan {
  // Keyed by (C_0 vertex index, cell index 1..k).
  std::map<std::pair<int, int>, CellAction> actions;
  // E.g. "swap and central cases both hold; swap takes priority".
  std::vector<std::string> notices;

  const CellAction* action(int c0_vertex, int cell) const {
    const auto it = actions.find({c0_vertex, cell});
    return it == actions.end() ? nullptr : &it->second;
  }
};

// Outcome of a GM-partition check: a plan, or the first violation found
// (cell order, then vertex order) with enough structure for diagnostics.
struct GMCheck {
  std::optional<CellPlan> plan;
  std::string failure;
  int fail_cell = -1;
  std::string fail_vertex;
  std::string fail_ref_vertex;                    // bullet-1 reference vertex
  std::optional<std::pair<cplx, cplx>> fail_values;  // degree-1 represented sums

  explicit operator bool() const { return plan.has_value(); }
};

// Sum of the gains from v into the cell, as an element of CG.
GAElement psi_sum(const GainGraph& g, const std::string& v, const std::vector<std::string>& cell);

// G-GM partition check: cell-regular gain sums in CG and half/half rows from C_0.
GMCheck check_g_gm(const GainGraph& g, const Partition& alpha);

// pi-GM partition check: the first condition is tested on pi-images (tolerance
// kRepTol); with allow_central, a C_0 row may instead satisfy pi(Psi_i(v)) = 0
// when some s has pi(s) = -I. The swap case has priority.
GMCheck check_pi_gm(const GainGraph& g, const Partition& alpha, const Representation& rep,
                    bool allow_central);

// Builds the switched graph from a plan produced by one of the checks.
GainGraph apply_switch(const GainGraph& g, const Partition& alpha, const CellPlan& plan);

// Verifies the conjugation identity for the switch: exactly in CG when rep is
// null (A' = Q_alpha A Q_alpha), or on pi-images within kRepTol otherwise.
bool verify_conjugation(const GainGraph& g, const Partition& alpha, const CellPlan& plan,
                        const Representation* rep = nullptr);

std::string format_action(const CellAction& act);
std::string format_plan(const GainGraph& g, const CellPlan& plan);

namespace detail {
// Classifies the gain multiset from one C_0 vertex into one cell as a swap
// row: |C|/2 copies of g1 plus |C|/2 copies of g2 (0 = non-adjacency), or |C|
// copies of a single gain. Used by both the CG and the quaternionic checks.
std::optional<CellAction> classify_swap_row(const GainGraph& g, int v,
                                            const std::vector<int>& cell);
}  // namespace detail

}  // namespace gainsw
