#include "gainsw/demos.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "gainsw/quaternions.hpp"
#include "gainsw/spectra.hpp"
#include "gainsw/switching.hpp"

namespace gainsw {
namespace demos {

namespace {

std::vector<std::string> labels(const char* prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

// ---- mu_4 example ----

GainGraph t_graph() {
  const Group G = Group::roots_of_unity(4);
  GainGraph g(G, labels("v", 0, 8));
  const auto one = identity(G);
  const auto i = make_exponent(G, 1);
  for (int j = 1; j <= 8; ++j)
    g.add_edge("v" + std::to_string(j), "v" + std::to_string(j % 8 + 1), one);
  for (int j : {2, 3, 7, 8}) g.add_edge("v0", "v" + std::to_string(j), i);
  for (int j : {1, 4, 5, 6}) g.add_edge("v0", "v" + std::to_string(j), one);
  return g;
}

GainGraph t_switched() {
  const Group G = Group::roots_of_unity(4);
  GainGraph g(G, labels("v", 0, 8));
  const auto one = identity(G);
  const auto i = make_exponent(G, 1);
  for (int j = 1; j <= 8; ++j)
    g.add_edge("v" + std::to_string(j), "v" + std::to_string(j % 8 + 1), one);
  for (int j : {2, 3, 7, 8}) g.add_edge("v0", "v" + std::to_string(j), one);
  for (int j : {1, 4, 5, 6}) g.add_edge("v0", "v" + std::to_string(j), i);
  return g;
}

Partition t_partition() {
  return Partition{{{"v0"}, labels("v", 1, 8)}};
}

// ---- S_4 example ----

GainGraph s4_graph() {
  const Group G = Group::symmetric(4);
  GainGraph g(G, labels("v", 1, 9));
  const auto e = identity(G);
  const auto p1234 = parse_element(G, "(1 2)(3 4)");
  const auto p12 = parse_element(G, "(1 2)");
  const auto p34 = parse_element(G, "(3 4)");
  g.add_edge("v2", "v3", p1234);
  g.add_edge("v4", "v5", p1234);
  g.add_edge("v3", "v4", e);
  g.add_edge("v2", "v5", e);
  g.add_edge("v1", "v3", e);
  g.add_edge("v1", "v4", e);
  g.add_edge("v1", "v5", e);
  g.add_edge("v1", "v6", e);
  g.add_edge("v6", "v7", p12);
  g.add_edge("v8", "v9", p12);
  g.add_edge("v7", "v8", p34);
  g.add_edge("v6", "v9", p34);
  return g;
}

GainGraph s4_switched() {
  const Group G = Group::symmetric(4);
  GainGraph g(G, labels("v", 1, 9));
  const auto e = identity(G);
  const auto p1234 = parse_element(G, "(1 2)(3 4)");
  const auto p12 = parse_element(G, "(1 2)");
  const auto p34 = parse_element(G, "(3 4)");
  g.add_edge("v2", "v3", p1234);
  g.add_edge("v4", "v5", p1234);
  g.add_edge("v3", "v4", e);
  g.add_edge("v2", "v5", e);
  g.add_edge("v1", "v2", e);
  g.add_edge("v1", "v7", e);
  g.add_edge("v1", "v8", e);
  g.add_edge("v1", "v9", e);
  g.add_edge("v6", "v7", p12);
  g.add_edge("v8", "v9", p12);
  g.add_edge("v7", "v8", p34);
  g.add_edge("v6", "v9", p34);
  return g;
}

Partition s4_partition() {
  return Partition{{{"v1"}, labels("v", 2, 9)}};
}

// ---- S_4 kernel-multiplication chain ----

GainGraph s4k_psi1() {
  const Group G = Group::symmetric(4);
  GainGraph g(G, labels("v", 1, 7));
  g.add_edge("v1", "v2", identity(G));
  g.add_edge("v2", "v3", parse_element(G, "(1 2)"));
  g.add_edge("v4", "v3", parse_element(G, "(1 2 3)"));
  g.add_edge("v4", "v1", parse_element(G, "(1 3)"));
  g.add_edge("v1", "v7", parse_element(G, "(1 2)(3 4)"));
  g.add_edge("v7", "v5", identity(G));
  g.add_edge("v7", "v6", identity(G));
  return g;
}

GainGraph s4k_psi2() {
  GainGraph g = s4k_psi1();
  g.set_gain(g.index_of("v1"), g.index_of("v7"), identity(g.group()));
  return g;
}

GainGraph s4k_psi2_switched() {
  const Group G = Group::symmetric(4);
  GainGraph g(G, labels("v", 1, 7));
  g.add_edge("v1", "v2", identity(G));
  g.add_edge("v2", "v3", parse_element(G, "(1 2)"));
  g.add_edge("v4", "v3", parse_element(G, "(1 2 3)"));
  g.add_edge("v4", "v1", parse_element(G, "(1 3)"));
  g.add_edge("v7", "v2", identity(G));
  g.add_edge("v7", "v3", identity(G));
  g.add_edge("v7", "v4", identity(G));
  return g;
}

GainGraph s4k_psi3() {
  const Group G = Group::symmetric(4);
  GainGraph g(G, labels("v", 1, 7));
  g.add_edge("v1", "v2", identity(G));
  g.add_edge("v2", "v3", parse_element(G, "(1 2)"));
  g.add_edge("v4", "v3", parse_element(G, "(1 4 3)"));
  g.add_edge("v4", "v1", parse_element(G, "(1 3)"));
  g.add_edge("v7", "v2", parse_element(G, "(1 2)(3 4)"));
  g.add_edge("v7", "v3", identity(G));
  g.add_edge("v7", "v4", parse_element(G, "(1 2)(3 4)"));
  return g;
}

Partition s4k_partition() {
  return Partition{{{"v7"}, labels("v", 1, 6)}};
}

// ---- D_8 example ----

GainGraph d8_graph() {
  const Group G = Group::dihedral(8);
  GainGraph g(G, labels("v", 1, 8));
  const auto e = identity(G);
  const auto a = make_dihedral(G, 1, false);
  const auto b = make_dihedral(G, 0, true);
  g.add_edge("v1", "v2", e);
  g.add_edge("v2", "v3", e);
  g.add_edge("v4", "v3", e);
  g.add_edge("v1", "v4", e);
  g.add_edge("v7", "v3", a);
  g.add_edge("v4", "v7", a);
  g.add_edge("v2", "v5", a);
  g.add_edge("v6", "v2", a);
  g.add_edge("v4", "v6", a);
  g.add_edge("v5", "v4", a);
  g.add_edge("v8", "v3", e);
  g.add_edge("v8", "v2", e);
  g.add_edge("v8", "v7", b);
  return g;
}

GainGraph d8_switched() {
  const Group G = Group::dihedral(8);
  GainGraph g(G, labels("v", 1, 8));
  const auto e = identity(G);
  const auto a = make_dihedral(G, 1, false);
  const auto b = make_dihedral(G, 0, true);
  g.add_edge("v1", "v2", e);
  g.add_edge("v2", "v3", e);
  g.add_edge("v4", "v3", e);
  g.add_edge("v1", "v4", e);
  g.add_edge("v3", "v7", a);
  g.add_edge("v7", "v4", a);
  g.add_edge("v2", "v5", a);
  g.add_edge("v6", "v2", a);
  g.add_edge("v4", "v6", a);
  g.add_edge("v5", "v4", a);
  g.add_edge("v8", "v4", e);
  g.add_edge("v8", "v1", e);
  g.add_edge("v8", "v7", b);
  return g;
}

Partition d8_partition() {
  return Partition{{{"v7", "v8"}, {"v1", "v2", "v3", "v4"}, {"v5", "v6"}}};
}

const char* const d8_charpoly =
    "x^16 - 26x^14 + 263x^12 - 1306x^10 + 3297x^8 - 3968x^6 + 1984x^4 - 256x^2";

// ---- U(H) example ----

namespace {
const double kHalfSqrt2 = std::sqrt(2.0) / 2.0;
}

GainGraph quat_graph() {
  const Group G = Group::unit_quaternions();
  GainGraph g(G, labels("v", 1, 8));
  const auto one = identity(G);
  const auto qi = make_unit_quaternion(Quaternion::unit_i());
  const auto rj = make_unit_quaternion({kHalfSqrt2, 0, kHalfSqrt2, 0});
  const auto rk = make_unit_quaternion({-kHalfSqrt2, 0, 0, kHalfSqrt2});
  g.add_edge("v1", "v2", qi);
  g.add_edge("v2", "v3", qi);
  g.add_edge("v3", "v4", qi);
  g.add_edge("v4", "v1", qi);
  g.add_edge("v8", "v2", one);
  g.add_edge("v8", "v1", one);
  g.add_edge("v8", "v4", one);
  g.add_edge("v7", "v4", rj);
  g.add_edge("v3", "v7", rj);
  g.add_edge("v7", "v5", rk);
  g.add_edge("v6", "v7", rk);
  return g;
}

GainGraph quat_switched() {
  const Group G = Group::unit_quaternions();
  GainGraph g(G, labels("v", 1, 8));
  const auto one = identity(G);
  const auto qi = make_unit_quaternion(Quaternion::unit_i());
  const auto rj = make_unit_quaternion({kHalfSqrt2, 0, kHalfSqrt2, 0});
  const auto rk = make_unit_quaternion({-kHalfSqrt2, 0, 0, kHalfSqrt2});
  g.add_edge("v1", "v2", qi);
  g.add_edge("v2", "v3", qi);
  g.add_edge("v3", "v4", qi);
  g.add_edge("v4", "v1", qi);
  g.add_edge("v8", "v3", one);
  g.add_edge("v8", "v5", one);
  g.add_edge("v8", "v6", one);
  g.add_edge("v7", "v4", make_unit_quaternion(-rj.quaternion()));
  g.add_edge("v3", "v7", make_unit_quaternion(-rj.quaternion()));
  g.add_edge("v7", "v5", make_unit_quaternion(-rk.quaternion()));
  g.add_edge("v6", "v7", make_unit_quaternion(-rk.quaternion()));
  return g;
}

Partition quat_partition() {
  return Partition{{{"v7", "v8"}, labels("v", 1, 6)}};
}

const char* const quat_charpoly =
    "x^16 - 22x^14 + 187x^12 - 776x^10 + 1639x^8 - 1650x^6 + 625x^4";

std::vector<std::string> ids() {
  return {"t-example", "s4-example", "s4-kernel-example", "d8-example", "quat-example"};
}

// ---- runner ----

namespace {

struct DemoRun {
  std::ostream& out;
  bool json;
  std::string out_file;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  bool ok = true;

  void write_switched(const GainGraph& g) {
    if (out_file.empty()) return;
    save_graph(g, out_file);
    info("switched graph written to " + out_file);
  }

  void step(const std::string& name, bool pass, const std::string& detail = "") {
    ok = ok && pass;
    if (json) {
      nlohmann::ordered_json c;
      c["name"] = name;
      c["pass"] = pass;
      if (!detail.empty()) c["detail"] = detail;
      checks.push_back(c);
    } else {
      out << (pass ? "  [ok] " : "  [FAIL] ") << name;
      if (!detail.empty()) out << ": " << detail;
      out << "\n";
    }
  }

  void info(const std::string& line) {
    if (!json) out << "  " << line << "\n";
  }

  int finish(const std::string& id) {
    if (json) {
      nlohmann::ordered_json j;
      j["demo"] = id;
      j["checks"] = checks;
      j["ok"] = ok;
      out << j.dump(2) << "\n";
    } else {
      out << (ok ? "demo " + id + ": all checks passed"
                 : "demo " + id + ": SELF-VERIFICATION FAILED")
          << "\n";
    }
    return ok ? 0 : 1;
  }
};

int run_t(DemoRun& run) {
  const auto g = t_graph();
  const auto alpha = t_partition();
  const auto psi0 = psi_sum(g, "v0", alpha.cells[1]);
  run.info("Psi_1(v0) = " + format_ga(psi0));
  GAElement expect0(g.group());
  expect0.add_term(identity(g.group()), 4.0);
  expect0.add_term(make_exponent(g.group(), 1), 4.0);
  run.step("Psi_1(v0) = 4*1 + 4*i", ga_equal(psi0, expect0), format_ga(psi0));
  bool rim_ok = true;
  for (int j = 1; j <= 8; ++j) {
    const auto psij = psi_sum(g, "v" + std::to_string(j), alpha.cells[1]);
    GAElement expect(g.group());
    expect.add_term(identity(g.group()), 2.0);
    rim_ok = rim_ok && ga_equal(psij, expect);
  }
  run.step("Psi_1(v_j) = 2*1 for j = 1..8", rim_ok);

  const auto check = check_g_gm(g, alpha);
  run.step("mu4-GM partition check succeeds", static_cast<bool>(check), check.failure);
  if (!check) return run.finish("t-example");
  run.info("plan:\n" + format_plan(g, *check.plan));

  const auto switched = apply_switch(g, alpha, *check.plan);
  run.step("switched graph matches the expected one edge-for-edge",
           switched == t_switched());
  run.write_switched(switched);
  run.step("conjugation identity holds exactly in CG",
           verify_conjugation(g, alpha, *check.plan));
  run.step("G-cospectral (regular representation)",
           g_cospectral(g, switched, GMode::Regular));
  const auto witness = switching_isomorphic(g, switched);
  run.step("not switching isomorphic", !witness.has_value());
  return run.finish("t-example");
}

int run_s4(DemoRun& run) {
  const auto g = s4_graph();
  const auto alpha = s4_partition();
  const auto pi_p = permutation_rep(g.group());
  const auto pi_s = sign_rep(g.group());

  const auto psi6 = psi_sum(g, "v6", alpha.cells[1]);
  run.info("Psi_1(v6) = " + format_ga(psi6));
  GAElement expect6(g.group());
  expect6.add_term(parse_element(g.group(), "(1 2)"), 1.0);
  expect6.add_term(parse_element(g.group(), "(3 4)"), 1.0);
  run.step("Psi_1(v6) = (1 2) + (3 4)", ga_equal(psi6, expect6));

  const auto check_p = check_pi_gm(g, alpha, pi_p, false);
  run.step("permutation-representation GM check succeeds", static_cast<bool>(check_p),
           check_p.failure);
  const auto check_s = check_pi_gm(g, alpha, pi_s, false);
  run.step("sign-representation GM check fails", !check_s, check_s.failure);
  if (check_s.fail_values) {
    std::ostringstream vals;
    vals << check_s.fail_values->first.real() << " vs " << check_s.fail_values->second.real();
    run.step("sign values are 2 vs -2",
             std::abs(check_s.fail_values->first.real() - 2.0) <= 1e-12 &&
                 std::abs(check_s.fail_values->second.real() + 2.0) <= 1e-12,
             vals.str());
  } else {
    run.step("sign values are 2 vs -2", false, "no values recorded");
  }
  const auto check_g = check_g_gm(g, alpha);
  run.step("S4-GM check fails (gain sums differ in CG)", !check_g, check_g.failure);
  if (!check_p) return run.finish("s4-example");

  const auto switched = apply_switch(g, alpha, *check_p.plan);
  run.step("switched graph matches the expected one", switched == s4_switched());
  run.write_switched(switched);
  run.step("pi_p-cospectral", pi_cospectral(g, switched, pi_p));
  run.step("not pi_s-cospectral", !pi_cospectral(g, switched, pi_s));
  return run.finish("s4-example");
}

int run_s4_kernel(DemoRun& run) {
  const auto g1 = s4k_psi1();
  const auto alpha = s4k_partition();
  const auto pi_s = sign_rep(g1.group());

  const auto g2 = multiply_gain(g1, "v1", "v7", parse_element(g1.group(), "(1 2)(3 4)"));
  run.step("multiplying edge (v1, v7) by (1 2)(3 4) gives the second gain function",
           g2 == s4k_psi2());
  run.step("sign-represented adjacency unchanged by the kernel multiplication",
           max_abs(fourier(pi_s, adjacency(g1)) - fourier(pi_s, adjacency(g2))) == 0.0);

  const auto check1 = check_pi_gm(g1, alpha, pi_s, false);
  run.step("first gain function is not sign-GM", !check1, check1.failure);
  const auto check2 = check_pi_gm(g2, alpha, pi_s, false);
  run.step("second gain function is sign-GM", static_cast<bool>(check2), check2.failure);
  if (!check2) return run.finish("s4-kernel-example");

  const auto switched = apply_switch(g2, alpha, *check2.plan);
  run.step("switched graph matches the expected one", switched == s4k_psi2_switched());
  run.write_switched(switched);

  const auto g3 = s4k_psi3();
  run.step("third gain function is a kernel multiplication of the switched graph",
           max_abs(fourier(pi_s, adjacency(switched)) - fourier(pi_s, adjacency(g3))) == 0.0);
  run.step("end-to-end sign-cospectrality", pi_cospectral(g1, g3, pi_s));
  return run.finish("s4-kernel-example");
}

int run_d8(DemoRun& run) {
  const auto g = d8_graph();
  const auto alpha = d8_partition();
  const auto pi2 = dihedral2_rep(g.group());

  const auto plain = check_pi_gm(g, alpha, pi2, false);
  run.step("without the central case the check fails", !plain, plain.failure);
  const auto check = check_pi_gm(g, alpha, pi2, true);
  run.step("with the central case the check succeeds", static_cast<bool>(check),
           check.failure);
  if (!check) return run.finish("d8-example");
  run.info("plan:\n" + format_plan(g, *check.plan));

  const auto* act = check.plan->action(g.index_of("v7"), 1);
  const auto a2 = make_dihedral(g.group(), 2, false);
  run.step("(v7, C1) action is central-multiply(a^2)",
           act && act->kind == CellAction::Kind::CentralMultiply && act->s && *act->s == a2);

  const auto switched = apply_switch(g, alpha, *check.plan);
  run.step("switched graph matches the expected one", switched == d8_switched());
  run.write_switched(switched);

  const auto p1 = char_poly(fourier(pi2, adjacency(g)));
  const auto p2 = char_poly(fourier(pi2, adjacency(switched)));
  run.info("charpoly = " + format_charpoly(p1));
  run.step("both characteristic polynomials equal the expected one",
           format_charpoly(p1) == d8_charpoly && format_charpoly(p2) == d8_charpoly,
           format_charpoly(p1));
  run.step("pi_2-cospectral", pi_cospectral(g, switched, pi2));
  return run.finish("d8-example");
}

int run_quat(DemoRun& run) {
  const auto g = quat_graph();
  const auto alpha = quat_partition();

  const auto psi7 = psi_h_sum(g, "v7", alpha.cells[1]);
  run.step("Psi_1(v7) vanishes in H", psi7.is_zero(1e-9));

  const auto check = check_quat_gm(g, alpha);
  run.step("quaternionic GM check succeeds", static_cast<bool>(check), check.failure);
  if (!check) return run.finish("quat-example");
  run.info("plan:\n" + format_plan(g, *check.plan));

  const auto* act7 = check.plan->action(g.index_of("v7"), 1);
  const auto* act8 = check.plan->action(g.index_of("v8"), 1);
  const auto minus_one = make_unit_quaternion(-Quaternion::one());
  run.step("(v7, C1) action is central-multiply(-1)",
           act7 && act7->kind == CellAction::Kind::CentralMultiply && act7->s &&
               *act7->s == minus_one);
  run.step("(v8, C1) action is swap(1, 0)",
           act8 && act8->kind == CellAction::Kind::Swap && act8->g1 && !act8->g2 &&
               act8->g1->is_identity());

  const auto switched = apply_quat_switch(g, alpha, *check.plan);
  run.step("switched graph matches the expected one", switched == quat_switched());
  run.write_switched(switched);

  const auto a = quat_adjacency(g);
  const auto a2 = quat_adjacency(switched);
  const auto pf1 = char_poly(complex_adjoint(a));
  const auto pf2 = char_poly(complex_adjoint(a2));
  const auto pp1 = char_poly(pi_h_matrix(a));
  const auto pp2 = char_poly(pi_h_matrix(a2));
  run.info("charpoly = " + format_charpoly(pf1));
  run.step("complex-adjoint characteristic polynomials equal the expected one",
           format_charpoly(pf1) == quat_charpoly && format_charpoly(pf2) == quat_charpoly,
           format_charpoly(pf1));
  run.step("blockwise degree-2 image gives the same polynomial",
           format_charpoly(pp1) == quat_charpoly && format_charpoly(pp2) == quat_charpoly);
  run.step("shuffle identity holds for both graphs",
           shuffle_identity(a) && shuffle_identity(a2));
  run.step("right spectra agree",
           spectra_equal(right_spectrum(a), right_spectrum(a2)));

  // The general switching-isomorphism decider does not cover U(H); the
  // underlying degree sequences already separate this pair.
  auto degrees = [](const GainGraph& graph) {
    std::vector<int> d;
    for (int v = 0; v < graph.vertex_count(); ++v)
      d.push_back(static_cast<int>(graph.neighbors(v).size()));
    std::sort(d.begin(), d.end());
    return d;
  };
  run.step("underlying degree sequences differ, so the pair is not switching isomorphic",
           degrees(g) != degrees(switched));
  return run.finish("quat-example");
}

}  // namespace

int run_demo(const std::string& id, std::ostream& out, bool json,
             const std::string& out_file) {
  DemoRun run{out, json, out_file};
  if (!json) out << "demo " << id << "\n";
  if (id == "t-example") return run_t(run);
  if (id == "s4-example") return run_s4(run);
  if (id == "s4-kernel-example") return run_s4_kernel(run);
  if (id == "d8-example") return run_d8(run);
  if (id == "quat-example") return run_quat(run);
  fail("unknown demo '" + id + "'; available: t-example, s4-example, s4-kernel-example, "
       "d8-example, quat-example");
}

}  // namespace demos
}  // namespace gainsw
