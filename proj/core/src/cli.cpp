#include "gainsw/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "gainsw/demos.hpp"
#include "gainsw/quaternions.hpp"
#include "gainsw/spectra.hpp"
#include "gainsw/switching.hpp"

namespace gainsw {
namespace cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

struct Options {
  std::string graph, graph2, partition, mode = "G", rep, out_file;
  bool central = false;
  bool json = false;
  int hmax = -1;
  std::string demo_id;
};

bool is_quat(const GainGraph& g) {
  return g.group().kind() == GroupKind::UnitQuaternion;
}

Representation rep_for(const GainGraph& g, const std::string& name) {
  if (is_quat(g)) {
    if (!name.empty() && name != "piH")
      fail("U(H)-gain graphs use the built-in degree-2 representation; drop --rep");
    return pi_h_rep();
  }
  if (name.empty()) fail("this command needs --rep NAME for finite gain groups");
  return parse_rep(g.group(), name);
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json arr = ordered_json::array();
  for (double v : s.eigenvalues) arr.push_back(v);
  return arr;
}

std::string spectrum_line(const Spectrum& s) {
  std::ostringstream out;
  out.precision(12);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << " ";
    out << s.eigenvalues[i];
  }
  return out.str();
}

ordered_json plan_json(const GainGraph& g, const CellPlan& plan) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, act] : plan.actions) {
    ordered_json ja;
    ja["vertex"] = g.label(key.first);
    ja["cell"] = key.second;
    switch (act.kind) {
      case CellAction::Kind::Skip: ja["action"] = "skip"; break;
      case CellAction::Kind::Swap:
        ja["action"] = "swap";
        ja["g1"] = act.g1 ? format_element(*act.g1) : "0";
        ja["g2"] = act.g2 ? format_element(*act.g2) : "0";
        break;
      case CellAction::Kind::CentralMultiply:
        ja["action"] = "central-multiply";
        ja["s"] = format_element(*act.s);
        break;
    }
    arr.push_back(ja);
  }
  return arr;
}

GMCheck run_gm_check(const GainGraph& g, const Partition& alpha, const Options& opt) {
  if (opt.mode == "G") {
    if (is_quat(g))
      fail_unsupported("G-GM checks need a finite gain group; use --mode quat for U(H)");
    return check_g_gm(g, alpha);
  }
  if (opt.mode == "pi") {
    if (is_quat(g)) {
      rep_for(g, opt.rep);  // rejects any --rep other than the built-in one
      return check_quat_gm(g, alpha);
    }
    return check_pi_gm(g, alpha, rep_for(g, opt.rep), opt.central);
  }
  if (opt.mode == "quat") {
    if (!is_quat(g)) fail("--mode quat expects a U(H)-gain graph");
    return check_quat_gm(g, alpha);
  }
  fail("unknown mode '" + opt.mode + "' (expected G, pi, or quat)");
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto g = load_graph(opt.graph);
  const auto alpha = load_partition(opt.partition);
  const auto result = run_gm_check(g, alpha, opt);
  if (opt.json) {
    ordered_json j;
    j["command"] = "check";
    j["mode"] = opt.mode;
    if (!opt.rep.empty()) j["rep"] = opt.rep;
    j["ok"] = static_cast<bool>(result);
    if (result) {
      j["plan"] = plan_json(g, *result.plan);
      j["notices"] = result.plan->notices;
    } else {
      j["failure"]["message"] = result.failure;
      j["failure"]["cell"] = result.fail_cell;
      j["failure"]["vertex"] = result.fail_vertex;
      if (result.fail_values) {
        j["failure"]["value1"] = result.fail_values->first.real();
        j["failure"]["value2"] = result.fail_values->second.real();
      }
    }
    out << j.dump(2) << "\n";
  } else if (result) {
    out << "GM partition: yes\n" << format_plan(g, *result.plan);
  } else {
    out << "GM partition: no\n  " << result.failure << "\n";
  }
  return result ? kOk : kNegative;
}

int cmd_switch(const Options& opt, std::ostream& out) {
  const auto g = load_graph(opt.graph);
  const auto alpha = load_partition(opt.partition);
  const auto result = run_gm_check(g, alpha, opt);
  if (!result) {
    out << (opt.json ? ordered_json{{"command", "switch"}, {"ok", false},
                                    {"failure", result.failure}}
                           .dump(2) +
                           "\n"
                     : "cannot switch: " + result.failure + "\n");
    return kNegative;
  }
  const auto switched = apply_switch(g, alpha, *result.plan);
  if (!opt.out_file.empty()) {
    save_graph(switched, opt.out_file);
    if (opt.json)
      out << ordered_json{{"command", "switch"}, {"ok", true}, {"out", opt.out_file}}.dump(2)
          << "\n";
    else
      out << "switched graph written to " << opt.out_file << "\n";
  } else {
    out << format_graph(switched);
  }
  return kOk;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  const auto g = load_graph(opt.graph);
  Spectrum s;
  std::string what;
  if (is_quat(g)) {
    s = right_spectrum(quat_adjacency(g));
    what = "right spectrum";
  } else {
    const auto rep = rep_for(g, opt.rep);
    s = hermitian_eigs(fourier(rep, adjacency(g)));
    what = rep.name() + "-spectrum";
  }
  if (opt.json) {
    out << ordered_json{{"command", "spectrum"}, {"kind", what},
                        {"eigenvalues", spectrum_json(s)}}
               .dump(2)
        << "\n";
  } else {
    out << what << ": " << spectrum_line(s) << "\n";
  }
  return kOk;
}

int cmd_charpoly(const Options& opt, std::ostream& out) {
  const auto g = load_graph(opt.graph);
  CharPoly p;
  if (is_quat(g)) {
    p = char_poly(complex_adjoint(quat_adjacency(g)));
  } else {
    const auto rep = rep_for(g, opt.rep);
    p = char_poly(fourier(rep, adjacency(g)));
  }
  if (opt.json) {
    ordered_json coeffs = ordered_json::array();
    for (int k = p.degree(); k >= 0; --k) coeffs.push_back(p.coeffs[static_cast<std::size_t>(k)]);
    out << ordered_json{{"command", "charpoly"}, {"coefficients", coeffs},
                        {"rendered", format_charpoly(p)}}
               .dump(2)
        << "\n";
  } else {
    out << format_charpoly(p) << "\n";
  }
  return kOk;
}

int cmd_cospectral(const Options& opt, std::ostream& out) {
  const auto g1 = load_graph(opt.graph);
  const auto g2 = load_graph(opt.graph2);
  if (g1.group() != g2.group()) fail("cospectral: the two graphs use different gain groups");

  bool verdict = false;
  ordered_json j{{"command", "cospectral"}, {"mode", opt.mode}};
  std::ostringstream text;
  if (opt.mode == "quat" || (opt.mode == "pi" && is_quat(g1))) {
    if (!is_quat(g1)) fail("--mode quat expects U(H)-gain graphs");
    const auto s1 = right_spectrum(quat_adjacency(g1));
    const auto s2 = right_spectrum(quat_adjacency(g2));
    verdict = spectra_equal(s1, s2);
    j["spectrum1"] = spectrum_json(s1);
    j["spectrum2"] = spectrum_json(s2);
    text << "right spectrum 1: " << spectrum_line(s1) << "\n"
         << "right spectrum 2: " << spectrum_line(s2) << "\n"
         << (verdict ? "right cospectral: yes" : "right cospectral: no") << "\n";
  } else if (opt.mode == "pi") {
    const auto rep = rep_for(g1, opt.rep);
    const auto s1 = hermitian_eigs(fourier(rep, adjacency(g1)));
    const auto s2 = hermitian_eigs(fourier(rep, adjacency(g2)));
    verdict = spectra_equal(s1, s2);
    j["rep"] = rep.name();
    j["spectrum1"] = spectrum_json(s1);
    j["spectrum2"] = spectrum_json(s2);
    text << "spectrum 1: " << spectrum_line(s1) << "\n"
         << "spectrum 2: " << spectrum_line(s2) << "\n"
         << (verdict ? "cospectral: yes" : "cospectral: no") << "\n";
  } else if (opt.mode == "G") {
    if (is_quat(g1))
      fail_unsupported("G-cospectrality is decided for finite gain groups only");
    if (opt.hmax > 0) {
      verdict = g_cospectral(g1, g2, GMode::Traces, opt.hmax);
      j["hmax"] = opt.hmax;
      text << (verdict ? "trace sequences consistent up to h = " + std::to_string(opt.hmax)
                       : "trace sequences differ")
           << "\n";
    } else {
      const auto rep = regular_rep(g1.group());
      const auto s1 = hermitian_eigs(fourier(rep, adjacency(g1)));
      const auto s2 = hermitian_eigs(fourier(rep, adjacency(g2)));
      verdict = spectra_equal(s1, s2);
      j["spectrum1"] = spectrum_json(s1);
      j["spectrum2"] = spectrum_json(s2);
      text << "regular spectrum 1: " << spectrum_line(s1) << "\n"
           << "regular spectrum 2: " << spectrum_line(s2) << "\n"
           << (verdict ? "G-cospectral: yes" : "G-cospectral: no") << "\n";
    }
  } else {
    fail("unknown mode '" + opt.mode + "' (expected G, pi, or quat)");
  }
  j["cospectral"] = verdict;
  out << (opt.json ? j.dump(2) + "\n" : text.str());
  return verdict ? kOk : kNegative;
}

int cmd_swiso(const Options& opt, std::ostream& out) {
  const auto g1 = load_graph(opt.graph);
  const auto g2 = load_graph(opt.graph2);
  const auto witness = switching_isomorphic(g1, g2);
  if (opt.json) {
    ordered_json j{{"command", "swiso"}, {"isomorphic", witness.has_value()}};
    if (witness) {
      ordered_json phi, f;
      for (const auto& [u, v] : witness->phi) phi[u] = v;
      for (const auto& [u, g] : witness->f) f[u] = format_element(g);
      j["phi"] = phi;
      j["f"] = f;
    }
    out << j.dump(2) << "\n";
  } else if (witness) {
    out << "switching isomorphic: yes\n";
    for (const auto& [u, v] : witness->phi)
      out << "  phi(" << u << ") = " << v << ", f(" << u << ") = "
          << format_element(witness->f.at(u)) << "\n";
  } else {
    out << "NONE\n";
  }
  return witness ? kOk : kNegative;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Godsil-McKay switchings for gain graphs over groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", opt.graph, "gain graph file")->required();
  };
  auto add_two_graphs = [&](CLI::App* cmd) {
    add_graph(cmd);
    cmd->add_option("--graph2", opt.graph2, "second gain graph file")->required();
  };
  auto add_gm_flags = [&](CLI::App* cmd) {
    cmd->add_option("--partition", opt.partition, "partition file")->required();
    cmd->add_option("--mode", opt.mode, "G | pi | quat (default G)");
    cmd->add_option("--rep", opt.rep, "representation name for --mode pi");
    cmd->add_flag("--central", opt.central,
                  "allow the central-involution case in pi-GM checks");
  };

  auto* check = app.add_subcommand("check", "test a partition for the GM property");
  add_graph(check);
  add_gm_flags(check);
  check->add_flag("--json", opt.json, "machine-readable output");

  auto* sw = app.add_subcommand("switch", "apply the switch and write the new graph");
  add_graph(sw);
  add_gm_flags(sw);
  sw->add_option("--out", opt.out_file, "output graph file (stdout when omitted)");
  sw->add_flag("--json", opt.json, "machine-readable output");

  auto* spectrum = app.add_subcommand("spectrum", "represented adjacency spectrum");
  add_graph(spectrum);
  spectrum->add_option("--rep", opt.rep, "representation name");
  spectrum->add_flag("--json", opt.json, "machine-readable output");

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  add_graph(charpoly);
  charpoly->add_option("--rep", opt.rep, "representation name");
  charpoly->add_flag("--json", opt.json, "machine-readable output");

  auto* cosp = app.add_subcommand("cospectral", "compare two graphs' spectra");
  add_two_graphs(cosp);
  cosp->add_option("--mode", opt.mode, "G | pi | quat (default G)");
  cosp->add_option("--rep", opt.rep, "representation name for --mode pi");
  cosp->add_option("--hmax", opt.hmax, "trace-sequence diagnostic bound for --mode G");
  cosp->add_flag("--json", opt.json, "machine-readable output");

  auto* swiso = app.add_subcommand("swiso", "search for a switching isomorphism");
  add_two_graphs(swiso);
  swiso->add_flag("--json", opt.json, "machine-readable output");

  auto* demo = app.add_subcommand("demo", "run a built-in worked example end to end");
  demo->add_option("id", opt.demo_id, "t-example | s4-example | s4-kernel-example | "
                                      "d8-example | quat-example")
      ->required();
  demo->add_option("--out", opt.out_file, "write the demo's switched graph here");
  demo->add_flag("--json", opt.json, "machine-readable output");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (sw->parsed()) return cmd_switch(opt, out);
    if (spectrum->parsed()) return cmd_spectrum(opt, out);
    if (charpoly->parsed()) return cmd_charpoly(opt, out);
    if (cosp->parsed()) return cmd_cospectral(opt, out);
    if (swiso->parsed()) return cmd_swiso(opt, out);
    if (demo->parsed()) return demos::run_demo(opt.demo_id, out, opt.json, opt.out_file);
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cli
}  // namespace gainsw
