#include "rainbow/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

Json edge_list(const EdgeSet &e) {
  auto edges = e.edges();
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  Json out = Json::array();
  for (Edge x : edges) out.push_back({x.u, x.v});
  return out;
}

Json vertex_list(VertexSet vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json cycle_json(const EdgeSet &c) { return Json(cycle_order(c)); }

int as_int(const Json &j, const std::string &where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

const Json &field(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

Json cactus_node(const PrunedCactusCert &cert, int node) {
  const auto &nd = cert.nodes[node];
  Json j;
  if (nd.leaf) {
    j["node"] = "leaf";
    j["cycle"] = cycle_json(nd.cycle);
    j["multiplicity"] = nd.multiplicity;
    j["members"] = nd.members;
  } else {
    j["node"] = "split";
    j["shared"] = nd.shared;
    j["children"] = Json::array({cactus_node(cert, nd.left), cactus_node(cert, nd.right)});
  }
  return j;
}

Json saguaro_node(const SaguaroCert &cert, int node) {
  const auto &nd = cert.nodes[node];
  Json j;
  if (!nd.bridge) {
    j["node"] = "cactus";
    j["cactus"] = cactus_node(nd.cactus, nd.cactus.root);
  } else {
    j["node"] = "bridge";
    j["separatorMember"] = nd.separator_member;
    j["separator"] = cycle_json(nd.separator);
    j["children"] = Json::array({saguaro_node(cert, nd.left), saguaro_node(cert, nd.right)});
  }
  return j;
}

Json linkleaf_node(const LinkleafCert &cert, int node) {
  const auto &nd = cert.nodes[node];
  Json j;
  if (!nd.link) {
    j["node"] = "empty";
    j["ground"] = nd.ground_vertex;
  } else {
    j["node"] = "link";
    j["bridgeMember"] = nd.bridge_member;
    j["bridge"] = edge_list(nd.bridge);
    j["children"] = Json::array({linkleaf_node(cert, nd.left), linkleaf_node(cert, nd.right)});
  }
  return j;
}

Json with_kind(const char *kind, const Json &body) {
  Json j;
  j["kind"] = kind;
  for (const auto &[k, v] : body.items()) j[k] = v;
  return j;
}

SaguaroScript::Side side_from(const Json &j, const std::string &where) {
  if (j == "L") return SaguaroScript::Side::Left;
  if (j == "R") return SaguaroScript::Side::Right;
  throw ParseError(where + ": side must be \"L\" or \"R\"");
}

// -------------------------------------------------------------------- DOT

struct Cluster {
  std::string label;
  VertexSet vertices;
  std::vector<Cluster> children;
};

Cluster cactus_cluster(const PrunedCactusCert &cert, int node) {
  const auto &nd = cert.nodes[node];
  if (nd.leaf) return {"cycle x" + std::to_string(nd.multiplicity), nd.cycle.vertices(), {}};
  return {"split at " + std::to_string(nd.shared), {}, {cactus_cluster(cert, nd.left), cactus_cluster(cert, nd.right)}};
}

Cluster saguaro_cluster(const SaguaroCert &cert, int node) {
  const auto &nd = cert.nodes[node];
  if (!nd.bridge) return {"cactus", {}, {cactus_cluster(nd.cactus, nd.cactus.root)}};
  return {"separator " + std::to_string(nd.separator_member), {}, {saguaro_cluster(cert, nd.left), saguaro_cluster(cert, nd.right)}};
}

Cluster linkleaf_cluster(const LinkleafCert &cert, int node) {
  const auto &nd = cert.nodes[node];
  if (!nd.link) return {"ground " + std::to_string(nd.ground_vertex), VertexSet{nd.ground_vertex}, {}};
  return {"bridge " + std::to_string(nd.bridge_member), {}, {linkleaf_cluster(cert, nd.left), linkleaf_cluster(cert, nd.right)}};
}

void render(std::ostream &os, const Cluster &c, int depth, int &counter, VertexSet &placed) {
  const std::string pad(2 * depth, ' ');
  os << pad << "subgraph cluster_" << counter++ << " {\n" << pad << "  label=\"" << c.label << "\";\n";
  for (Vertex v : c.vertices - placed) os << pad << "  " << v << ";\n";
  placed |= c.vertices;
  for (const auto &child : c.children) render(os, child, depth + 1, counter, placed);
  os << pad << "}\n";
}

constexpr const char *kPalette[] = {"red",   "blue",   "forestgreen", "orange", "purple", "brown",
                                    "cyan4", "magenta", "gold3",       "gray40", "navy",   "olivedrab"};

void render_edges(std::ostream &os, const CycleFamily &family, const RainbowSet *highlight) {
  for (int c = 0; c < family.size(); ++c) {
    for (const auto &pair : edge_list(family[c])) {
      const Edge e(pair[0].get<int>(), pair[1].get<int>());
      const bool bold = highlight && highlight->color_of(e) == c;
      os << "  " << e.u << " -- " << e.v << " [color=\"" << kPalette[c % std::size(kPalette)] << "\", label=\"" << c
         << "\"" << (bold ? ", penwidth=3" : "") << "];\n";
    }
  }
}

std::string dot(const CycleFamily &family, const Cluster *cluster, const RainbowSet *highlight) {
  std::ostringstream os;
  os << "graph family {\n  node [shape=circle];\n";
  VertexSet placed;
  int counter = 0;
  if (cluster) render(os, *cluster, 1, counter, placed);
  for (Vertex v = 0; v < family.n(); ++v)
    if (!placed.contains(v)) os << "  " << v << ";\n";
  render_edges(os, family, highlight);
  os << "}\n";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- family

Json family_to_json(const CycleFamily &family) {
  Json j;
  j["n"] = family.n();
  j["members"] = Json::array();
  for (const auto &m : family) j["members"].push_back(edge_list(m));
  return j;
}

CycleFamily family_from_json(const Json &j) {
  const int n = as_int(field(j, "n", "family"), "n");
  if (n < 1 || n > kMaxVertices) throw ParseError("n: must be in [1, 64]");
  const Json &members = field(j, "members", "family");
  if (!members.is_array()) throw ParseError("members: expected an array");
  CycleFamily family(n);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string where = "members[" + std::to_string(i) + "]";
    const Json &m = members[i];
    if (!m.is_array() || m.empty()) throw ParseError(where + ": expected a nonempty array of edges");
    EdgeSet e(n);
    for (std::size_t k = 0; k < m.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      if (!m[k].is_array() || m[k].size() != 2) throw ParseError(at + ": expected [u, v]");
      const int u = as_int(m[k][0], at), v = as_int(m[k][1], at);
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(at + ": vertex out of range for n=" + std::to_string(n));
      if (u == v) throw ParseError(at + ": loop edge");
      if (e.contains(Edge(u, v))) throw ParseError(at + ": duplicate edge within member");
      e.insert(Edge(u, v));
    }
    family.push_back(std::move(e));
  }
  return family;
}

Json parse_json(const std::string &text, const std::string &where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &err) {
    throw ParseError(where + ": malformed JSON at byte " + std::to_string(err.byte));
  }
}

CycleFamily import_family(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return family_from_json(parse_json(buf.str(), path.string()));
  } catch (const ParseError &err) {
    const std::string msg = err.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

void export_family(const CycleFamily &family, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << family_to_json(family).dump(2) << '\n';
}

// ----------------------------------------------------------- certificates

Json to_json(const RainbowCycleCert &cert) {
  Json j;
  j["kind"] = "rainbowCycle";
  j["parity"] = to_string(cert.parity);
  const auto order = cycle_order(cert.rainbow.edges);
  j["cycle"] = order;
  Json edges = Json::array(), colors = Json::array();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Edge e(order[i], order[(i + 1) % order.size()]);
    edges.push_back({e.u, e.v});
    colors.push_back(*cert.rainbow.color_of(e));
  }
  j["edges"] = edges;
  j["colors"] = colors;
  return j;
}

Json to_json(const PrunedCactusCert &cert) { return with_kind("prunedCactus", cactus_node(cert, cert.root)); }
Json to_json(const SaguaroCert &cert) { return with_kind("saguaro", saguaro_node(cert, cert.root)); }
Json to_json(const LinkleafCert &cert) { return with_kind("linkleaf", linkleaf_node(cert, cert.root)); }

Json to_json(const MonoCutCert &cert) {
  Json j;
  j["kind"] = "monoCut";
  j["sideA"] = vertex_list(cert.side_a);
  j["sideB"] = vertex_list(cert.side_b);
  j["crossingColor"] = cert.crossing_color;
  return j;
}

Json to_json(const StructureCert &cert) {
  return std::visit([](const auto &c) { return to_json(c); }, cert);
}

// ---------------------------------------------------------------- scripts

CactusScript cactus_script_from_json(const Json &j) {
  const Json &blocks = field(j, "blocks", "cactus script");
  if (!blocks.is_array()) throw ParseError("blocks: expected an array");
  CactusScript s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string where = "blocks[" + std::to_string(i) + "]";
    CactusScript::Block b;
    b.length = as_int(field(blocks[i], "length", where), where + ".length");
    if (blocks[i].contains("glue")) b.glue = as_int(blocks[i]["glue"], where + ".glue");
    s.blocks.push_back(b);
  }
  return s;
}

SaguaroScript saguaro_script_from_json(const Json &j) {
  SaguaroScript s;
  if (j.contains("cactus")) {
    s.cactus = cactus_script_from_json(j["cactus"]);
    return s;
  }
  s.sides.push_back(saguaro_script_from_json(field(j, "left", "saguaro script")));
  s.sides.push_back(saguaro_script_from_json(field(j, "right", "saguaro script")));
  const Json &sep = field(j, "separator", "saguaro script");
  for (std::size_t i = 0; i < sep.size(); ++i) {
    const std::string where = "separator[" + std::to_string(i) + "]";
    if (!sep[i].is_array() || sep[i].size() != 2) throw ParseError(where + ": expected [side, vertex]");
    s.separator.push_back({side_from(sep[i][0], where), as_int(sep[i][1], where)});
  }
  return s;
}

LinkleafScript linkleaf_script_from_json(const Json &j) {
  LinkleafScript s;
  if (!j.contains("left") && !j.contains("right")) return s;
  s.sides.push_back(linkleaf_script_from_json(field(j, "left", "linkleaf script")));
  s.sides.push_back(linkleaf_script_from_json(field(j, "right", "linkleaf script")));
  const Json &bridge = field(j, "bridge", "linkleaf script");
  for (std::size_t i = 0; i < bridge.size(); ++i) {
    const std::string where = "bridge[" + std::to_string(i) + "]";
    const Json &e = bridge[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_array() || !e[1].is_array() || e[0].size() != 2 || e[1].size() != 2)
      throw ParseError(where + ": expected [[side, vertex], [side, vertex]]");
    s.bridge.push_back({{side_from(e[0][0], where), as_int(e[0][1], where)},
                        {side_from(e[1][0], where), as_int(e[1][1], where)}});
  }
  return s;
}

// -------------------------------------------------------------------- DOT

std::string to_dot(const CycleFamily &family) { return dot(family, nullptr, nullptr); }

std::string to_dot(const CycleFamily &family, const StructureCert &cert) {
  if (const auto *c = std::get_if<RainbowCycleCert>(&cert)) {
    const Cluster cl{"rainbow " + std::string(to_string(c->parity)) + " cycle", c->rainbow.edges.vertices(), {}};
    return dot(family, &cl, &c->rainbow);
  }
  Cluster cl;
  if (const auto *c = std::get_if<PrunedCactusCert>(&cert)) cl = cactus_cluster(*c, c->root);
  else if (const auto *c = std::get_if<SaguaroCert>(&cert)) cl = saguaro_cluster(*c, c->root);
  else if (const auto *c = std::get_if<LinkleafCert>(&cert)) cl = linkleaf_cluster(*c, c->root);
  else {
    const auto &cut = std::get<MonoCutCert>(cert);
    cl = {"cut, color " + std::to_string(cut.crossing_color), {}, {{"side A", cut.side_a, {}}, {"side B", cut.side_b, {}}}};
  }
  return dot(family, &cl, nullptr);
}

}  // namespace rainbow
