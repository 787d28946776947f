#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gainsw/gain_graph.hpp"

namespace gainsw {
namespace demos {

// Built-in instances behind the `demo` subcommand. Each pairs a gain graph
// with a GM partition and the expected switched graph.

GainGraph t_graph();              // mu_4 gains on a wheel-like 9-vertex graph
GainGraph t_switched();
Partition t_partition();

GainGraph s4_graph();             // S_4 gains, 9 vertices
GainGraph s4_switched();
Partition s4_partition();

GainGraph s4k_psi1();             // S_4 kernel-multiplication chain, 7 vertices
GainGraph s4k_psi2();
GainGraph s4k_psi2_switched();
GainGraph s4k_psi3();
Partition s4k_partition();

GainGraph d8_graph();             // D_8 gains, 8 vertices, central-involution switch
GainGraph d8_switched();
Partition d8_partition();
extern const char* const d8_charpoly;

GainGraph quat_graph();           // U(H) gains, 8 vertices
GainGraph quat_switched();
Partition quat_partition();
extern const char* const quat_charpoly;

std::vector<std::string> ids();

// Runs one demo end to end, printing its steps and self-verifying every
// expected output. Returns 0 on success, 1 when a verification fails.
// A nonempty out_file receives the demo's switched graph.
int run_demo(const std::string& id, std::ostream& out, bool json,
             const std::string& out_file = "");

}  // namespace demos
}  // namespace gainsw
