#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each runs a fixed number of cases from a fixed seed and reports
// the first counterexample.

#include <sstream>
#include <string>

#include "rainbow/decide.hpp"
#include "rainbow/io.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structures.hpp"
#include "support.hpp"

namespace props {

using namespace rainbow;

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first;

  bool ok() const { return failures == 0; }
  void fail(const std::string &what, const CycleFamily &f) {
    if (failures++ == 0) first = what + ": " + family_to_json(f).dump();
  }
  void fail(const std::string &what) {
    if (failures++ == 0) first = what;
  }
};

inline oracle::Rng rng_for(std::uint64_t seed) { return oracle::Rng(seed); }

/// Cycle family shapes where both answers are common: n <= 6, up to 5 members.
inline CycleFamily mixed_family(oracle::Rng &rng, ParityFilter parity) {
  const int n = std::uniform_int_distribution<int>(3, 6)(rng);
  const int size = std::uniform_int_distribution<int>(1, 5)(rng);
  return oracle::random_cycle_family(n, size, parity == ParityFilter::Odd ? ParityFilter::Odd : ParityFilter::Any, rng);
}

/// Every certificate the library hands out validates, and every recognized
/// structure is rejected by the exact rainbow oracle.
inline Outcome certificate_soundness(int cases, std::uint64_t seed) {
  Outcome out;
  auto rng = rng_for(seed);
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const auto odd = mixed_family(rng, ParityFilter::Odd);
    const auto any = mixed_family(rng, ParityFilter::Any);
    if (auto c = find_rainbow_odd_cycle(odd); c && (!validate(*c, odd) || c->parity != Parity::Odd))
      out.fail("find_rainbow_odd_cycle certificate", odd);
    if (auto c = find_rainbow_cycle(any); c && !validate(*c, any)) out.fail("find_rainbow_cycle certificate", any);
    for (auto p : {ParityFilter::Odd, ParityFilter::Even, ParityFilter::Any})
      if (auto c = exhaustive_rainbow_cycle(any, p); c && (!validate(*c, any) || !matches(p, c->parity)))
        out.fail("exhaustive certificate", any);
    if (auto c = is_pruned_cactus(odd)) {
      if (!validate(*c, odd)) out.fail("pruned cactus certificate", odd);
      if (exhaustive_rainbow_cycle(odd, ParityFilter::Odd)) out.fail("pruned cactus with rainbow odd cycle", odd);
    }
    if (auto c = is_saguaro(any)) {
      if (!validate(*c, any)) out.fail("saguaro certificate", any);
      if (exhaustive_rainbow_cycle(any)) out.fail("saguaro with rainbow cycle", any);
    }
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto disjoint = oracle::random_edge_disjoint(n, n - 1, rng);
    const auto r = cut_or_rainbow_cycle(disjoint);
    if (const auto *cut = std::get_if<MonoCutCert>(&r); cut && !validate(*cut, disjoint))
      out.fail("cut certificate", disjoint);
    if (const auto *cyc = std::get_if<RainbowCycleCert>(&r); cyc && !validate(*cyc, disjoint))
      out.fail("cut-or-cycle rainbow certificate", disjoint);
    if (auto c = is_linkleaf(disjoint)) {
      if (!validate(*c, disjoint)) out.fail("linkleaf certificate", disjoint);
      if (exhaustive_rainbow_cycle(disjoint)) out.fail("linkleaf with rainbow cycle", disjoint);
    }
  }
  return out;
}

/// Constructive searches and the exhaustive oracle agree with brute force.
inline Outcome oracle_agreement(int cases, std::uint64_t seed) {
  Outcome out;
  auto rng = rng_for(seed);
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const auto odd = mixed_family(rng, ParityFilter::Odd);
    const auto any = mixed_family(rng, ParityFilter::Any);
    if (find_rainbow_odd_cycle(odd).has_value() != oracle::rainbow_cycle(odd, ParityFilter::Odd))
      out.fail("find_rainbow_odd_cycle disagrees", odd);
    if (find_rainbow_cycle(any).has_value() != oracle::rainbow_cycle(any, ParityFilter::Any))
      out.fail("find_rainbow_cycle disagrees", any);
    for (auto p : {ParityFilter::Odd, ParityFilter::Even, ParityFilter::Any})
      if (exhaustive_rainbow_cycle(any, p).has_value() != oracle::rainbow_cycle(any, p))
        out.fail(std::string("exhaustive disagrees, parity ") + to_string(p), any);
  }
  return out;
}

/// Contracting a proper subset S of K_n leaves n - |S| + 1 vertices, and an
/// edge survives exactly when it is not inside S.
inline Outcome contraction_vertex_count(int cases, std::uint64_t seed) {
  Outcome out;
  auto rng = rng_for(seed);
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    VertexSet s;
    while (s.empty() || s.size() == n)
      s = VertexSet(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
    const Contraction pi(n, s);
    const auto image = pi.apply(EdgeSet::complete(n));
    if (image.vertices().size() != n - s.size() + 1 || pi.target_n() != n - s.size() + 1)
      out.fail("vertex count of contracted K_" + std::to_string(n));
    const auto g = oracle::random_graph(n, 0.4, rng);
    const auto h = pi.apply(g);
    EdgeSet expected(pi.target_n());
    g.for_each([&](Edge e) {
      if (!(s.contains(e.u) && s.contains(e.v))) expected.insert(Edge(pi.image(e.u), pi.image(e.v)));
    });
    if (!(h == expected)) out.fail("contracted edge set on K_" + std::to_string(n));
  }
  return out;
}

/// Symmetric difference is commutative, associative and self-inverse.
inline Outcome symmetric_difference_algebra(int cases, std::uint64_t seed) {
  Outcome out;
  auto rng = rng_for(seed);
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    const auto a = oracle::random_graph(n, 0.3, rng), b = oracle::random_graph(n, 0.3, rng),
               c = oracle::random_graph(n, 0.3, rng);
    auto sd = [](std::initializer_list<EdgeSet> xs) {
      return symmetric_difference(std::span<const EdgeSet>(xs.begin(), xs.size()));
    };
    if (!(sd({a, b}) == sd({b, a}))) out.fail("not commutative");
    if (!(sd({sd({a, b}), c}) == sd({a, sd({b, c})}))) out.fail("not associative");
    if (!sd({a, a}).empty() || !(sd({a, b, b}) == a)) out.fail("not self-inverse");
    if (!(sd({a, b, c}) == (a ^ b ^ c))) out.fail("differs from pairwise xor");
  }
  return out;
}

/// Random gluing script whose blocks contribute at most `budget` members.
inline CactusScript random_cactus_script(oracle::Rng &rng, int budget, bool odd_only) {
  CactusScript s;
  int vertices = 0;
  while (budget >= 2) {
    std::vector<int> lengths;
    for (int l = 3; l - 1 <= budget; ++l)
      if (!odd_only || l % 2) lengths.push_back(l);
    if (lengths.empty()) break;
    const int len = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];
    CactusScript::Block b{len, std::nullopt};
    if (vertices > 0) b.glue = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
    s.blocks.push_back(b);
    vertices += vertices == 0 ? len : len - 1;
    budget -= len - 1;
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
  }
  return s;
}

/// Block-structure recognition matches the recursive definition on families
/// of at most six members: generated cacti, perturbed cacti and random
/// families.
inline Outcome pruned_cactus_equivalence(int cases, std::uint64_t seed) {
  Outcome out;
  auto rng = rng_for(seed);
  int accepted = 0;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    CycleFamily f;
    const int kind = i % 3;
    if (kind == 2) {
      f = oracle::random_cycle_family(std::uniform_int_distribution<int>(3, 6)(rng),
                                      std::uniform_int_distribution<int>(1, 6)(rng), ParityFilter::Any, rng);
    } else {
      auto script = random_cactus_script(rng, 6, false);
      if (script.blocks.empty()) script.blocks.push_back({3, std::nullopt});
      f = gen_pruned_cactus(script);
      if (kind == 1 && f.size() > 1) {
        // Drop, duplicate, or rotate one member into another block's cycle.
        std::vector<EdgeSet> ms = f.members();
        const auto at = std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng);
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
          case 0: ms.erase(ms.begin() + at); break;
          case 1: ms.push_back(ms[at]); break;
          default: ms[at] = oracle::random_cycle(f.n(), ParityFilter::Any, rng);
        }
        if (ms.size() > 6) ms.resize(6);
        f = CycleFamily(f.n(), ms);
      }
    }
    const bool fast = is_pruned_cactus(f).has_value();
    accepted += fast;
    if (fast != oracle::pruned_cactus(f)) out.fail("block recognition disagrees with the definition", f);
  }
  if (accepted == 0) out.fail("no family was accepted; the suite is vacuous");
  return out;
}

/// Rainbow spanning tree presence, Rado's condition and brute force agree on
/// families of m <= 5 connected members in K_{m+1}.
inline Outcome rado_equivalence(int cases, std::uint64_t seed) {
  Outcome out;
  auto rng = rng_for(seed);
  int present = 0;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    CycleFamily f(m + 1);
    for (int c = 0; c < m; ++c) f.push_back(oracle::random_connected(m + 1, rng));
    const auto tree = rainbow_spanning_tree(f);
    const auto rado = rado_condition(f);
    if (tree.has_value() != rado.satisfied) out.fail("spanning tree and Rado's condition disagree", f);
    if (rado.satisfied != oracle::rainbow_spanning_tree(f)) out.fail("Rado's condition disagrees with brute force", f);
    if (tree) {
      ++present;
      if (!is_rainbow_for(*tree, f) || tree->size() != m || contains_cycle(tree->edges) ||
          tree->edges.vertices().size() != m + 1)
        out.fail("returned set is not a rainbow spanning tree", f);
    } else if (rado.violating) {
      VertexSet u;
      for (int c : *rado.violating) u |= f[c].vertices();
      if (u.size() >= static_cast<int>(rado.violating->size()) + 1) out.fail("reported index set does not violate", f);
    }
  }
  if (present == 0 || present == cases) out.fail("only one answer was ever seen; the suite is vacuous");
  return out;
}

inline std::string describe(const Outcome &o) {
  std::ostringstream os;
  os << o.cases << " cases, " << o.failures << " failures";
  if (!o.ok()) os << "; first: " << o.first;
  return os.str();
}

}  // namespace props
