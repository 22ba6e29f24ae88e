#include "rainbow/structures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rainbow/decide.hpp"

namespace rainbow {

namespace {

bool lex_less(VertexSet a, VertexSet b) {
  const auto x = a.to_vector(), y = b.to_vector();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

VertexSet vertices_of(const CycleFamily &family, const std::vector<int> &members) {
  VertexSet vs;
  for (int i : members) vs |= family[i].vertices();
  return vs;
}

// Collects members covered by a certificate subtree, returning false on any
// structural defect. Children must have smaller indices than their parent.
bool check_cactus(const PrunedCactusCert &cert, int node, const CycleFamily &family, std::vector<int> &covered) {
  if (node < 0 || node >= static_cast<int>(cert.nodes.size())) return false;
  const auto &nd = cert.nodes[node];
  if (nd.leaf) {
    if (!is_cycle(nd.cycle) || nd.members.empty()) return false;
    if (nd.multiplicity != static_cast<int>(nd.members.size()) || nd.multiplicity != nd.cycle.size() - 1) return false;
    for (int m : nd.members) {
      if (m < 0 || m >= family.size() || !(family[m] == nd.cycle)) return false;
      covered.push_back(m);
    }
    return true;
  }
  if (nd.left >= node || nd.right >= node) return false;
  if (!check_cactus(cert, nd.left, family, covered) || !check_cactus(cert, nd.right, family, covered)) return false;
  return (cert.vertices(nd.left) & cert.vertices(nd.right)) == VertexSet{nd.shared};
}

bool covers_each_once(std::vector<int> covered, int size) {
  std::sort(covered.begin(), covered.end());
  std::vector<int> all(size);
  std::iota(all.begin(), all.end(), 0);
  return covered == all;
}

}  // namespace

// ----------------------------------------------------------- cert helpers

VertexSet PrunedCactusCert::vertices(int node) const {
  const auto &nd = nodes[node];
  return nd.leaf ? nd.cycle.vertices() : vertices(nd.left) | vertices(nd.right);
}

std::vector<int> PrunedCactusCert::members(int node) const {
  const auto &nd = nodes[node];
  if (nd.leaf) return nd.members;
  auto out = members(nd.left);
  const auto r = members(nd.right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

VertexSet SaguaroCert::vertices(int node) const {
  const auto &nd = nodes[node];
  return nd.bridge ? vertices(nd.left) | vertices(nd.right) : nd.cactus.vertices(nd.cactus.root);
}

std::vector<int> SaguaroCert::members(int node) const {
  const auto &nd = nodes[node];
  if (!nd.bridge) return nd.cactus.members(nd.cactus.root);
  auto out = members(nd.left);
  out.push_back(nd.separator_member);
  const auto r = members(nd.right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

VertexSet LinkleafCert::ground(int node) const {
  const auto &nd = nodes[node];
  return nd.link ? ground(nd.left) | ground(nd.right) : VertexSet{nd.ground_vertex};
}

std::vector<int> LinkleafCert::members(int node) const {
  const auto &nd = nodes[node];
  if (!nd.link) return {};
  auto out = members(nd.left);
  out.push_back(nd.bridge_member);
  const auto r = members(nd.right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

// ---------------------------------------------------------- pruned cactus

std::optional<PrunedCactusCert> is_pruned_cactus(const CycleFamily &family) {
  if (family.empty()) return std::nullopt;
  const EdgeSet u = family.union_edges();
  if (components(u).size() != 1) return std::nullopt;
  const auto bl = blocks(u);
  for (const auto &b : bl)
    if (!is_cycle(b)) return std::nullopt;

  std::vector<std::vector<int>> members_of(bl.size());
  for (int i = 0; i < family.size(); ++i) {
    const auto it = std::find(bl.begin(), bl.end(), family[i]);
    if (it == bl.end()) return std::nullopt;
    members_of[it - bl.begin()].push_back(i);
  }
  for (std::size_t j = 0; j < bl.size(); ++j)
    if (static_cast<int>(members_of[j].size()) != bl[j].size() - 1) return std::nullopt;

  // Peel leaf blocks of the block-cut tree one at a time.
  PrunedCactusCert cert;
  std::function<int(std::vector<int>)> build = [&](std::vector<int> rest) -> int {
    auto leaf = [&](int b) {
      PrunedCactusCert::Node nd;
      nd.cycle = bl[b];
      nd.multiplicity = static_cast<int>(members_of[b].size());
      nd.members = members_of[b];
      cert.nodes.push_back(std::move(nd));
      return static_cast<int>(cert.nodes.size()) - 1;
    };
    if (rest.size() == 1) return leaf(rest.front());

    int pick = -1;
    Vertex shared = -1;
    for (int b : rest) {
      VertexSet others;
      for (int o : rest)
        if (o != b) others |= bl[o].vertices();
      const VertexSet common = bl[b].vertices() & others;
      if (common.size() != 1) continue;
      if (pick < 0 || lex_less(bl[b].vertices(), bl[pick].vertices())) {
        pick = b;
        shared = common.min();
      }
    }
    rest.erase(std::find(rest.begin(), rest.end(), pick));
    int a = leaf(pick);
    int b = build(rest);
    if (lex_less(cert.vertices(b), cert.vertices(a))) std::swap(a, b);
    PrunedCactusCert::Node nd;
    nd.leaf = false;
    nd.left = a;
    nd.right = b;
    nd.shared = shared;
    cert.nodes.push_back(std::move(nd));
    return static_cast<int>(cert.nodes.size()) - 1;
  };
  std::vector<int> all(bl.size());
  std::iota(all.begin(), all.end(), 0);
  cert.root = build(all);
  return cert;
}

bool validate(const PrunedCactusCert &cert, const CycleFamily &family) {
  std::vector<int> covered;
  return check_cactus(cert, cert.root, family, covered) && covers_each_once(covered, family.size());
}

// ---------------------------------------------------------------- saguaro

std::optional<SaguaroCert> is_saguaro(const CycleFamily &family) {
  const int m = family.size();
  if (m == 0) return std::nullopt;
  if (m > 63) throw PreconditionError("is_saguaro supports at most 63 members");
  for (int i = 0; i < m; ++i)
    if (!is_cycle(family[i])) throw PreconditionError("member " + std::to_string(i) + " is not a cycle");

  using Mask = std::uint64_t;
  auto indices = [&](Mask mask) {
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1U) out.push_back(i);
    return out;
  };

  struct Choice {
    bool ok = false;
    int separator = -1;  // -1: pruned cactus
    Mask left = 0, right = 0;
  };
  std::map<Mask, Choice> memo;
  std::vector<VertexSet> vs(m);
  for (int i = 0; i < m; ++i) vs[i] = family[i].vertices();
  std::vector<std::vector<Vertex>> orders(m);
  for (int i = 0; i < m; ++i) orders[i] = cycle_order(family[i]);

  std::function<bool(Mask)> solve = [&](Mask mask) -> bool {
    if (auto it = memo.find(mask); it != memo.end()) return it->second.ok;
    Choice &slot = memo[mask];
    const auto idx = indices(mask);
    if (is_pruned_cactus(family.subfamily(idx))) {
      slot.ok = true;
      return true;
    }
    std::vector<EdgeSet> tried;
    for (int o : idx) {
      if (is_cycle(family[o]) != Parity::Even) continue;
      if (std::find(tried.begin(), tried.end(), family[o]) != tried.end()) continue;
      tried.push_back(family[o]);
      const Mask rest = mask & ~(Mask{1} << o);
      if (!rest) continue;

      // Sides are vertex-disjoint, so members sharing a vertex stay together.
      std::vector<int> comp(m, -1);
      std::vector<VertexSet> comp_vs;
      for (int i : indices(rest)) {
        int into = -1;
        for (int c = 0; c < static_cast<int>(comp_vs.size()); ++c) {
          if ((comp_vs[c] & vs[i]).empty()) continue;
          if (into < 0) {
            into = c;
            comp_vs[c] |= vs[i];
          } else {
            comp_vs[into] |= comp_vs[c];
            comp_vs[c] = VertexSet();
            for (int &x : comp)
              if (x == c) x = into;
          }
        }
        if (into < 0) {
          into = static_cast<int>(comp_vs.size());
          comp_vs.push_back(vs[i]);
        }
        comp[i] = into;
      }
      const int nc = static_cast<int>(comp_vs.size());

      // Alternation fixes the side of every component the separator touches.
      std::vector<int> side(nc, -1);
      bool consistent = true;
      const auto &ord = orders[o];
      for (std::size_t p = 0; p < ord.size() && consistent; ++p) {
        int c = -1;
        for (int x = 0; x < nc; ++x)
          if (comp_vs[x].contains(ord[p])) c = x;
        const int want = static_cast<int>(p % 2);
        if (c < 0 || (side[c] >= 0 && side[c] != want)) consistent = false;
        else side[c] = want;
      }
      if (!consistent) continue;

      std::vector<int> free;
      for (int c = 0; c < nc; ++c)
        if (side[c] < 0 && !comp_vs[c].empty()) free.push_back(c);
      for (Mask pattern = 0; pattern < (Mask{1} << free.size()); ++pattern) {
        std::vector<int> assign = side;
        for (std::size_t f = 0; f < free.size(); ++f) assign[free[f]] = static_cast<int>((pattern >> f) & 1U);
        Mask left = 0, right = 0;
        for (int i : indices(rest)) (assign[comp[i]] == 0 ? left : right) |= Mask{1} << i;
        if (!left || !right) throw std::logic_error("separator alternates against an empty side");
        if (solve(left) && solve(right)) {
          Choice &c = memo[mask];
          c = Choice{true, o, left, right};
          return true;
        }
      }
    }
    memo[mask].ok = false;
    return false;
  };

  const Mask all = (Mask{1} << m) - 1;
  if (!solve(all)) return std::nullopt;

  SaguaroCert cert;
  std::function<int(Mask)> build = [&](Mask mask) -> int {
    const Choice c = memo.at(mask);
    SaguaroCert::Node nd;
    if (c.separator < 0) {
      const auto idx = indices(mask);
      auto sub = *is_pruned_cactus(family.subfamily(idx));
      for (auto &leaf : sub.nodes)
        for (int &mem : leaf.members) mem = idx[mem];
      nd.cactus = std::move(sub);
    } else {
      int a = build(c.left);
      int b = build(c.right);
      if (lex_less(cert.vertices(b), cert.vertices(a))) std::swap(a, b);
      nd.bridge = true;
      nd.separator_member = c.separator;
      nd.separator = family[c.separator];
      nd.left = a;
      nd.right = b;
    }
    cert.nodes.push_back(std::move(nd));
    return static_cast<int>(cert.nodes.size()) - 1;
  };
  cert.root = build(all);
  return cert;
}

bool validate(const SaguaroCert &cert, const CycleFamily &family) {
  std::vector<int> covered;
  std::function<bool(int)> check = [&](int node) -> bool {
    if (node < 0 || node >= static_cast<int>(cert.nodes.size())) return false;
    const auto &nd = cert.nodes[node];
    if (!nd.bridge) return check_cactus(nd.cactus, nd.cactus.root, family, covered);
    if (nd.left >= node || nd.right >= node || !check(nd.left) || !check(nd.right)) return false;
    const int s = nd.separator_member;
    if (s < 0 || s >= family.size() || !(family[s] == nd.separator)) return false;
    if (is_cycle(nd.separator) != Parity::Even) return false;
    covered.push_back(s);
    const VertexSet l = cert.vertices(nd.left), r = cert.vertices(nd.right);
    if (!(l & r).empty()) return false;
    const auto ord = cycle_order(nd.separator);
    const bool starts_left = l.contains(ord[0]);
    for (std::size_t p = 0; p < ord.size(); ++p) {
      const bool want_left = (p % 2 == 0) == starts_left;
      if (!(want_left ? l : r).contains(ord[p])) return false;
    }
    return true;
  };
  return check(cert.root) && covers_each_once(covered, family.size());
}

// --------------------------------------------------------------- linkleaf

std::optional<LinkleafCert> is_linkleaf(const CycleFamily &family) {
  if (!family.pairwise_edge_disjoint()) throw PreconditionError("family members share an edge");
  LinkleafCert cert;
  if (family.empty()) {
    cert.nodes.emplace_back().ground_vertex = 0;
    cert.root = 0;
    return cert;
  }

  std::function<int(const std::vector<int> &, VertexSet)> rec = [&](const std::vector<int> &members,
                                                                     VertexSet ground) -> int {
    if (members.empty()) {
      if (ground.size() != 1) return -1;
      cert.nodes.emplace_back().ground_vertex = ground.min();
      return static_cast<int>(cert.nodes.size()) - 1;
    }
    if (vertices_of(family, members) != ground || ground.size() != static_cast<int>(members.size()) + 1) return -1;
    const auto sub = family.subfamily(members);
    const auto split = cut_or_rainbow_cycle(sub);
    const auto *cut = std::get_if<MonoCutCert>(&split);
    if (!cut) return -1;

    const int bridge = members[cut->crossing_color];
    const EdgeSet &be = family[bridge];
    if (!be.induced(cut->side_a).empty() || !be.induced(cut->side_b).empty()) return -1;
    std::vector<int> in_a, in_b;
    for (int i : members) {
      if (i == bridge) continue;
      const VertexSet v = family[i].vertices();
      if ((v - cut->side_a).empty()) in_a.push_back(i);
      else if ((v - cut->side_b).empty()) in_b.push_back(i);
      else return -1;
    }
    if (static_cast<int>(in_a.size()) != cut->side_a.size() - 1) return -1;

    int a = rec(in_a, cut->side_a);
    if (a < 0) return -1;
    int b = rec(in_b, cut->side_b);
    if (b < 0) return -1;
    if (lex_less(cert.ground(b), cert.ground(a))) std::swap(a, b);
    LinkleafCert::Node nd;
    nd.link = true;
    nd.bridge_member = bridge;
    nd.bridge = be;
    nd.left = a;
    nd.right = b;
    cert.nodes.push_back(std::move(nd));
    return static_cast<int>(cert.nodes.size()) - 1;
  };

  std::vector<int> all(family.size());
  std::iota(all.begin(), all.end(), 0);
  cert.root = rec(all, family.union_vertices());
  if (cert.root < 0) return std::nullopt;
  return cert;
}

bool validate(const LinkleafCert &cert, const CycleFamily &family) {
  std::vector<int> covered;
  std::function<bool(int)> check = [&](int node) -> bool {
    if (node < 0 || node >= static_cast<int>(cert.nodes.size())) return false;
    const auto &nd = cert.nodes[node];
    if (!nd.link) return nd.ground_vertex >= 0 && nd.ground_vertex < family.n();
    if (nd.left >= node || nd.right >= node || !check(nd.left) || !check(nd.right)) return false;
    const int b = nd.bridge_member;
    if (b < 0 || b >= family.size() || !(family[b] == nd.bridge) || nd.bridge.empty()) return false;
    covered.push_back(b);
    const VertexSet l = cert.ground(nd.left), r = cert.ground(nd.right);
    if (!(l & r).empty()) return false;
    bool crossing = true;
    nd.bridge.for_each([&](Edge e) { crossing = crossing && ((l.contains(e.u) && r.contains(e.v)) || (r.contains(e.u) && l.contains(e.v))); });
    if (!crossing) return false;
    return vertices_of(family, cert.members(node)) == (l | r);
  };
  return check(cert.root) && covers_each_once(covered, family.size());
}

// ------------------------------------------------------------- generators

CycleFamily gen_pruned_cactus(const CactusScript &script, bool odd_only) {
  if (script.blocks.empty()) throw PreconditionError("cactus script has no blocks");
  int n = 0;
  for (std::size_t i = 0; i < script.blocks.size(); ++i) {
    const auto &b = script.blocks[i];
    if (b.length < 3) throw PreconditionError("block " + std::to_string(i) + " is shorter than 3");
    if (odd_only && b.length % 2 == 0) throw PreconditionError("block " + std::to_string(i) + " is even");
    if (i == 0 && b.glue) throw PreconditionError("the first block cannot be glued");
    if (i > 0 && (!b.glue || *b.glue < 0 || *b.glue >= n))
      throw PreconditionError("block " + std::to_string(i) + " has an invalid glue vertex");
    n += i == 0 ? b.length : b.length - 1;
  }
  if (n > kMaxVertices) throw PreconditionError("cactus script needs more than 64 vertices");

  CycleFamily family(n);
  Vertex next = 0;
  for (const auto &b : script.blocks) {
    std::vector<Vertex> order;
    if (b.glue) order.push_back(*b.glue);
    while (static_cast<int>(order.size()) < b.length) order.push_back(next++);
    const EdgeSet c = EdgeSet::cycle(n, order);
    for (int k = 0; k < b.length - 1; ++k) family.push_back(c);
  }
  return family;
}

namespace {

CycleFamily shift_into(const CycleFamily &f, int n, int offset) {
  CycleFamily out(n);
  for (const auto &m : f) {
    EdgeSet e(n);
    m.for_each([&](Edge x) { e.insert(Edge(x.u + offset, x.v + offset)); });
    out.push_back(e);
  }
  return out;
}

Vertex place(const SaguaroScript::Side side, Vertex local, int left_n, int right_n) {
  const int limit = side == SaguaroScript::Side::Left ? left_n : right_n;
  if (local < 0 || local >= limit) throw PreconditionError("script vertex " + std::to_string(local) + " is outside its side");
  return side == SaguaroScript::Side::Left ? local : left_n + local;
}

}  // namespace

CycleFamily gen_saguaro(const SaguaroScript &script) {
  if (script.cactus) return gen_pruned_cactus(*script.cactus);
  if (script.sides.size() != 2) throw PreconditionError("saguaro bridge needs exactly two sides");
  const CycleFamily left = gen_saguaro(script.sides[0]);
  const CycleFamily right = gen_saguaro(script.sides[1]);
  const int n = left.n() + right.n();
  if (n > kMaxVertices) throw PreconditionError("saguaro script needs more than 64 vertices");

  const auto &sep = script.separator;
  if (sep.size() < 4 || sep.size() % 2) throw PreconditionError("separator must be an even cycle of length >= 4");
  std::vector<Vertex> order;
  for (std::size_t i = 0; i < sep.size(); ++i) {
    if (sep[i].side == sep[(i + 1) % sep.size()].side) throw PreconditionError("separator does not alternate between sides");
    order.push_back(place(sep[i].side, sep[i].local, left.n(), right.n()));
  }
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw PreconditionError("separator repeats a vertex");

  CycleFamily out = shift_into(left, n, 0);
  out.push_back(EdgeSet::cycle(n, order));
  for (const auto &m : shift_into(right, n, left.n())) out.push_back(m);
  return out;
}

CycleFamily gen_linkleaf(const LinkleafScript &script) {
  if (script.sides.empty()) {
    if (!script.bridge.empty()) throw PreconditionError("an empty linkleaf has no bridge");
    return CycleFamily(1);
  }
  if (script.sides.size() != 2) throw PreconditionError("linkleaf link needs exactly two sides");
  const CycleFamily left = gen_linkleaf(script.sides[0]);
  const CycleFamily right = gen_linkleaf(script.sides[1]);
  const int n = left.n() + right.n();
  if (n > kMaxVertices) throw PreconditionError("linkleaf script needs more than 64 vertices");
  if (script.bridge.empty()) throw PreconditionError("bridge must be nonempty");

  EdgeSet bridge(n);
  for (const auto &[a, b] : script.bridge) {
    if (a.side == b.side) throw PreconditionError("bridge edge does not cross the bipartition");
    const Edge e(place(a.side, a.local, left.n(), right.n()), place(b.side, b.local, left.n(), right.n()));
    if (bridge.contains(e)) throw PreconditionError("bridge repeats an edge");
    bridge.insert(e);
  }
  CycleFamily out = shift_into(left, n, 0);
  out.push_back(bridge);
  for (const auto &m : shift_into(right, n, left.n())) out.push_back(m);
  return out;
}

CycleFamily gen_glued_squares(int copies) {
  if (copies < 1) throw PreconditionError("glued squares need at least one copy");
  const int n = 5 * copies + 1;
  if (n > kMaxVertices) throw PreconditionError("too many copies for 64 vertices");
  CycleFamily family(n);
  for (int j = 0; j < copies; ++j) {
    const Vertex o = 5 * j;
    const EdgeSet green = EdgeSet::cycle(n, {o + 0, o + 3, o + 1, o + 2});
    const EdgeSet red = EdgeSet::cycle(n, {o + 2, o + 3, o + 4, o + 5});
    for (int k = 0; k < 3; ++k) family.push_back(green);
    for (int k = 0; k < 3; ++k) family.push_back(red);
  }
  return family;
}

}  // namespace rainbow
