#include "gainsw/switching.hpp"

#include <algorithm>
#include <sstream>

namespace gainsw {

namespace {

std::string cell_name(int i) { return "C" + std::to_string(i); }

GAElement psi_sum_indices(const GainGraph& g, int v, const std::vector<int>& cell) {
  GAElement out(g.group());
  for (int w : cell) {
    if (w == v) continue;
    if (const auto gain = g.gain(v, w)) out.add_term(*gain, 1.0);
  }
  return out;
}

// Shared driver for the CG-level and the pi-level checks. bullet-1 equality
// and the central fallback are the only parts that differ.
struct CheckHooks {
  std::function<bool(const GAElement&, const GAElement&)> sums_equal;
  std::function<void(GMCheck&, const GAElement&, const GAElement&)> record_values;
  // Returns the central action when pi(Psi_i(v)) = 0 and some pi(s) = -I.
  std::function<std::optional<CellAction>(const GAElement&)> central_fallback;
  std::string mode_name;
};

GMCheck run_check(const GainGraph& g, const Partition& alpha, const CheckHooks& hooks) {
  const auto cells = resolve_partition(g, alpha);
  const int k = static_cast<int>(cells.size()) - 1;
  GMCheck result;

  // First condition: within each C_i (i >= 1) the gain sums into every C_j agree.
  for (int i = 1; i <= k; ++i) {
    const auto& cell = cells[static_cast<std::size_t>(i)];
    for (std::size_t vi = 1; vi < cell.size(); ++vi) {
      for (int j = 1; j <= k; ++j) {
        const auto ref = psi_sum_indices(g, cell[0], cells[static_cast<std::size_t>(j)]);
        const auto cur = psi_sum_indices(g, cell[vi], cells[static_cast<std::size_t>(j)]);
        if (!hooks.sums_equal(ref, cur)) {
          result.fail_cell = i;
          result.fail_vertex = g.label(cell[vi]);
          result.fail_ref_vertex = g.label(cell[0]);
          hooks.record_values(result, ref, cur);
          std::ostringstream msg;
          msg << "not a " << hooks.mode_name << " partition: in cell " << cell_name(i)
              << ", vertices " << result.fail_ref_vertex << " and " << result.fail_vertex
              << " have different gain sums into " << cell_name(j);
          if (result.fail_values)
            msg << " (" << result.fail_values->first.real() << " vs "
                << result.fail_values->second.real() << ")";
          msg << ": " << format_ga(ref) << " vs " << format_ga(cur);
          result.failure = msg.str();
          return result;
        }
      }
    }
  }

  // Second condition: each C_0 row into each C_i is a swap row, or (pi-level
  // with a central involution) has vanishing represented sum.
  CellPlan plan;
  for (int v : cells[0]) {
    for (int i = 1; i <= k; ++i) {
      const auto& cell = cells[static_cast<std::size_t>(i)];
      auto swap_action = detail::classify_swap_row(g, v, cell);
      std::optional<CellAction> central_action;
      if (hooks.central_fallback)
        central_action = hooks.central_fallback(psi_sum_indices(g, v, cell));
      if (swap_action && central_action && swap_action->kind == CellAction::Kind::Swap) {
        plan.notices.push_back("(" + g.label(v) + ", " + cell_name(i) +
                               "): swap and central cases both hold; swap takes priority");
      }
      if (swap_action) {
        plan.actions.emplace(std::make_pair(v, i), *swap_action);
      } else if (central_action) {
        plan.actions.emplace(std::make_pair(v, i), *central_action);
      } else {
        result.fail_cell = i;
        result.fail_vertex = g.label(v);
        std::ostringstream msg;
        msg << "not a " << hooks.mode_name << " partition: the gains from " << g.label(v)
            << " into " << cell_name(i) << " are not half/half over two values"
            << (cell.size() % 2 ? " (odd cell size admits only a single full-adjacency gain)"
                                : "");
        if (hooks.central_fallback) msg << " and the represented sum does not vanish";
        result.failure = msg.str();
        return result;
      }
    }
  }
  result.plan = std::move(plan);
  return result;
}

}  // namespace

namespace detail {

std::optional<CellAction> classify_swap_row(const GainGraph& g, int v,
                                            const std::vector<int>& cell) {
  const std::size_t m = cell.size();
  std::vector<std::optional<GroupElement>> gains;
  gains.reserve(m);
  std::size_t adjacent = 0;
  for (int w : cell) {
    auto gain = g.gain(v, w);
    if (gain) ++adjacent;
    gains.push_back(std::move(gain));
  }
  if (adjacent == 0) return CellAction::skip();

  // Distinct nonzero gains with multiplicities, in cell order.
  std::vector<std::pair<GroupElement, std::size_t>> distinct;
  for (const auto& gain : gains) {
    if (!gain) continue;
    bool found = false;
    for (auto& [val, count] : distinct) {
      if (val == *gain) {
        ++count;
        found = true;
        break;
      }
    }
    if (!found) distinct.emplace_back(*gain, 1);
  }

  if (adjacent == m && distinct.size() == 1)
    return CellAction::swap(distinct[0].first, distinct[0].first);
  if (m % 2 != 0) return std::nullopt;
  if (adjacent == m && distinct.size() == 2 && distinct[0].second == m / 2 &&
      distinct[1].second == m / 2) {
    auto a = distinct[0].first, b = distinct[1].first;
    if (a.group().is_finite() && b < a) std::swap(a, b);
    return CellAction::swap(a, b);
  }
  if (adjacent == m / 2 && distinct.size() == 1)
    return CellAction::swap(distinct[0].first, std::nullopt);
  return std::nullopt;
}

}  // namespace detail

GAElement psi_sum(const GainGraph& g, const std::string& v, const std::vector<std::string>& cell) {
  std::vector<int> idx;
  idx.reserve(cell.size());
  for (const auto& label : cell) idx.push_back(g.index_of(label));
  return psi_sum_indices(g, g.index_of(v), idx);
}

GMCheck check_g_gm(const GainGraph& g, const Partition& alpha) {
  CheckHooks hooks;
  hooks.sums_equal = [](const GAElement& a, const GAElement& b) { return ga_equal(a, b); };
  hooks.record_values = [](GMCheck&, const GAElement&, const GAElement&) {};
  hooks.central_fallback = nullptr;
  hooks.mode_name = g.group().name() + "-GM";
  return run_check(g, alpha, hooks);
}

GMCheck check_pi_gm(const GainGraph& g, const Partition& alpha, const Representation& rep,
                    bool allow_central) {
  if (rep.group() != g.group()) fail("check_pi_gm: representation over a different group");
  CheckHooks hooks;
  hooks.sums_equal = [&rep](const GAElement& a, const GAElement& b) {
    return max_abs(apply_cg(rep, a) - apply_cg(rep, b)) <= kRepTol;
  };
  hooks.record_values = [&rep](GMCheck& r, const GAElement& a, const GAElement& b) {
    if (rep.degree() == 1)
      r.fail_values = std::make_pair(apply_cg(rep, a)(0, 0), apply_cg(rep, b)(0, 0));
  };
  if (allow_central) {
    if (const auto s = find_minus_identity(g.group(), rep)) {
      hooks.central_fallback = [&rep, s](const GAElement& psi) -> std::optional<CellAction> {
        if (max_abs(apply_cg(rep, psi)) <= kRepTol) return CellAction::central(*s);
        return std::nullopt;
      };
    }
  }
  hooks.mode_name = rep.name() + "-GM";
  return run_check(g, alpha, hooks);
}

GainGraph apply_switch(const GainGraph& g, const Partition& alpha, const CellPlan& plan) {
  const auto cells = resolve_partition(g, alpha);
  GainGraph out = g;
  for (const auto& [key, act] : plan.actions) {
    const auto& [v, i] = key;
    if (i < 1 || i >= static_cast<int>(cells.size())) fail("plan references a missing cell");
    const auto& cell = cells[static_cast<std::size_t>(i)];
    switch (act.kind) {
      case CellAction::Kind::Skip:
        for (int w : cell)
          if (g.adjacent(v, w)) fail("inconsistent plan: skip entry but edges exist");
        break;
      case CellAction::Kind::Swap: {
        for (int w : cell) {
          const auto cur = g.gain(v, w);
          auto matches = [&](const std::optional<GroupElement>& target) {
            if (!cur || !target) return !cur && !target;
            return *cur == *target;
          };
          std::optional<GroupElement> next;
          if (matches(act.g1)) next = act.g2;
          else if (matches(act.g2)) next = act.g1;
          else fail("inconsistent plan: gain from " + g.label(v) + " to " + g.label(w) +
                    " matches neither swap value");
          if (cur && next) out.set_gain(v, w, *next);
          else if (cur && !next) out.remove_edge(v, w);
          else if (!cur && next) out.add_edge(v, w, *next);
        }
        break;
      }
      case CellAction::Kind::CentralMultiply: {
        if (!act.s) fail("inconsistent plan: central entry without its element");
        for (int w : cell)
          if (const auto cur = g.gain(v, w)) out.set_gain(v, w, mul(*act.s, *cur));
        break;
      }
    }
  }
  return out;
}

bool verify_conjugation(const GainGraph& g, const Partition& alpha, const CellPlan& plan,
                        const Representation* rep) {
  const auto cells = resolve_partition(g, alpha);
  const auto switched = apply_switch(g, alpha, plan);
  const auto a = adjacency(g);
  const auto a_switched = adjacency(switched);
  const auto q = build_qalpha(cells, g.group());
  const auto conj = mat_mul(mat_mul(q, a), q);
  if (rep == nullptr) return mat_equal(a_switched, conj);
  return max_abs(fourier(*rep, a_switched) - fourier(*rep, conj)) <= kRepTol;
}

std::string format_action(const CellAction& act) {
  auto gain_str = [](const std::optional<GroupElement>& g) {
    return g ? format_element_display(*g) : std::string("0");
  };
  switch (act.kind) {
    case CellAction::Kind::Skip: return std::string("skip");
    case CellAction::Kind::Swap: return "swap(" + gain_str(act.g1) + ", " + gain_str(act.g2) + ")";
    case CellAction::Kind::CentralMultiply:
      return "central-multiply(" + format_element_display(*act.s) + ")";
  }
  return "?";
}

std::string format_plan(const GainGraph& g, const CellPlan& plan) {
  std::ostringstream out;
  for (const auto& [key, act] : plan.actions)
    out << "  (" << g.label(key.first) << ", " << cell_name(key.second)
        << "): " << format_action(act) << "\n";
  for (const auto& note : plan.notices) out << "  note: " << note << "\n";
  return out.str();
}

}  // namespace gainsw
