#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gainsw/gain_graph.hpp"

namespace gainsw {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(std::string("malformed ") + what + " file: not valid JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

GainGraph parse_graph(const std::string& text) {
  const json j = parse_json(text, "graph");
  try {
    if (!j.contains("group") || !j.contains("vertices") || !j.contains("edges"))
      fail("graph file needs the fields group, vertices, edges");

    const auto& jg = j.at("group");
    std::optional<int> n;
    if (jg.contains("n")) n = jg.at("n").get<int>();
    const Group group = parse_group_kind(jg.at("kind").get<std::string>(), n);

    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    GainGraph g(group, std::move(vertices));

    for (const auto& je : j.at("edges")) {
      const auto u = je.at("u").get<std::string>();
      const auto v = je.at("v").get<std::string>();
      const auto gain = parse_element(group, je.at("gain").get<std::string>());
      g.add_edge(u, v, gain);
    }
    return g;
  } catch (const json::exception& e) {
    fail(std::string("malformed graph file: ") + e.what());
  }
}

std::string format_graph(const GainGraph& g) {
  ordered_json j;
  j["group"]["kind"] = g.group().kind_string();
  if (g.group().is_finite()) j["group"]["n"] = g.group().param();
  j["vertices"] = g.vertices();
  j["edges"] = ordered_json::array();
  for (const auto& [u, v, gain] : g.edges()) {
    ordered_json je;
    je["u"] = g.label(u);
    je["v"] = g.label(v);
    je["gain"] = format_element(gain);
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

GainGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const Error& e) {
    fail(std::string(e.what()) + " (in graph file '" + path + "')");
  }
}

void save_graph(const GainGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot write file '" + path + "'");
  out << format_graph(g);
}

Partition parse_partition(const std::string& text) {
  const json j = parse_json(text, "partition");
  try {
    if (!j.contains("cells")) fail("partition file needs the field cells");
    Partition p;
    for (const auto& jc : j.at("cells")) {
      std::vector<std::string> cell;
      for (const auto& v : jc) cell.push_back(v.get<std::string>());
      p.cells.push_back(std::move(cell));
    }
    return p;
  } catch (const json::exception& e) {
    fail(std::string("malformed partition file: ") + e.what());
  }
}

std::string format_partition(const Partition& p) {
  ordered_json j;
  j["cells"] = p.cells;
  return j.dump(2) + "\n";
}

Partition load_partition(const std::string& path) {
  try {
    return parse_partition(read_file(path));
  } catch (const Error& e) {
    fail(std::string(e.what()) + " (in partition file '" + path + "')");
  }
}

}  // namespace gainsw
