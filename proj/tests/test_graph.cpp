#include "doctest.h"
#include "properties.hpp"
#include "rainbow/graph.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

EdgeSet es(int n, std::initializer_list<std::pair<int, int>> edges) {
  EdgeSet e(n);
  for (auto [a, b] : edges) e.insert(Edge(a, b));
  return e;
}

long long closed_form_cycle_count(int n) {
  long long total = 0;
  for (int k = 3; k <= n; ++k) {
    long long choose = 1, fact = 1;
    for (int i = 1; i <= k; ++i) choose = choose * (n - k + i) / i;
    for (int i = 2; i < k; ++i) fact *= i;
    total += choose * fact / 2;
  }
  return total;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edge index is a bijection onto the slots of K_n") {
  for (int i = 0; i < edge_count(kMaxVertices); ++i) CHECK(Edge::from_index(i).index() == i);
  CHECK(Edge(3, 1) == Edge(1, 3));
  CHECK(Edge(1, 3).u == 1);
  CHECK(Edge(0, 1) < Edge(0, 2));
}

TEST_CASE("edge set basics") {
  auto e = es(5, {{0, 1}, {1, 2}});
  CHECK(e.size() == 2);
  CHECK(e.vertices() == VertexSet{0, 1, 2});
  CHECK(e.degree(1) == 2);
  e.toggle(Edge(0, 1));
  CHECK(!e.contains(Edge(0, 1)));
  CHECK(EdgeSet::complete(6).size() == 15);
  CHECK_THROWS_AS(void(es(4, {{0, 1}}) | es(5, {{0, 1}})), PreconditionError);
}

TEST_CASE("is_cycle") {
  CHECK(is_cycle(es(3, {{0, 1}, {1, 2}, {0, 2}})) == Parity::Odd);
  CHECK(is_cycle(es(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == Parity::Even);
  CHECK(!is_cycle(es(3, {{0, 1}, {1, 2}})));
  CHECK(!is_cycle(EdgeSet(4)));
  // Two disjoint triangles: all degrees 2 but disconnected.
  CHECK(!is_cycle(es(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("cycle order starts at the smallest vertex toward its smaller neighbor") {
  CHECK(cycle_order(EdgeSet::cycle(6, {4, 2, 5, 0, 3})) == std::vector<Vertex>{0, 3, 4, 2, 5});
}

TEST_CASE("contraction examples") {
  const auto pentagon = EdgeSet::cycle(5, {0, 1, 2, 3, 4});
  const auto c = contract(pentagon, VertexSet{0, 1});
  CHECK(c.n() == 4);
  CHECK(is_cycle(c) == Parity::Even);
  CHECK(c == EdgeSet::cycle(4, {0, 1, 2, 3}));  // 0 is the merged vertex, 2,3,4 compact to 1,2,3

  const auto tri = es(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(contract(tri, VertexSet{0, 1}) == es(2, {{0, 1}}));
  CHECK(contract(tri, VertexSet{0, 1, 2}).empty());
  CHECK_THROWS_AS(contract(tri, VertexSet{}), PreconditionError);

  const Contraction pi(6, VertexSet{2, 4});
  CHECK(pi.merged_vertex() == 2);
  CHECK(pi.image(5) == 4);
  CHECK(pi.image(3) == 3);
}

TEST_CASE("symmetric difference examples") {
  const auto a = es(4, {{0, 1}, {1, 2}, {0, 2}});
  const auto b = es(4, {{1, 2}, {2, 3}, {1, 3}});
  const std::vector<EdgeSet> aa{a, a}, one{a}, ab{a, b};
  CHECK(symmetric_difference(aa).empty());
  CHECK(symmetric_difference(one) == a);
  CHECK(symmetric_difference(ab) == es(4, {{0, 1}, {0, 2}, {2, 3}, {1, 3}}));
}

TEST_CASE("eulerian decomposition examples") {
  const auto bowtie = es(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  const auto parts = eulerian_cycle_decomposition(bowtie);
  REQUIRE(parts.size() == 2);
  CHECK((parts[0] | parts[1]) == bowtie);
  const auto square = EdgeSet::cycle(4, {0, 1, 2, 3});
  CHECK(eulerian_cycle_decomposition(square) == std::vector<EdgeSet>{square});
  CHECK(eulerian_cycle_decomposition(EdgeSet(4)).empty());
  CHECK_THROWS_AS(eulerian_cycle_decomposition(es(3, {{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("eulerian decomposition on random even-degree graphs") {
  oracle::Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    EdgeSet e(n);
    const int k = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int j = 0; j < k; ++j) e ^= oracle::random_cycle(n, ParityFilter::Any, rng);
    const auto parts = eulerian_cycle_decomposition(e);
    EdgeSet joined(n);
    int total = 0;
    for (const auto &p : parts) {
      REQUIRE(is_cycle(p));
      REQUIRE(!p.intersects(joined));
      joined |= p;
      total += p.size();
    }
    REQUIRE(joined == e);
    REQUIRE(total == e.size());
  }
}

TEST_CASE("arcs examples") {
  const auto square = EdgeSet::cycle(4, {0, 1, 2, 3});
  auto arcs = arcs_by_vertex_set(square, VertexSet{0, 2});
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].path == std::vector<Vertex>{0, 1, 2});
  CHECK(arcs[1].path == std::vector<Vertex>{2, 3, 0});

  const auto pentagon = EdgeSet::cycle(5, {0, 1, 2, 3, 4});
  arcs = arcs_by_vertex_set(pentagon, VertexSet{0});
  REQUIRE(arcs.size() == 1);
  CHECK(arcs[0].closed);
  CHECK(arcs[0].length() == 5);

  arcs = arcs_by_vertex_set(pentagon, VertexSet{0, 2});
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].path == std::vector<Vertex>{0, 1, 2});
  CHECK(arcs[0].parity() == Parity::Even);
  CHECK(arcs[1].path == std::vector<Vertex>{2, 3, 4, 0});
  CHECK(arcs[1].parity() == Parity::Odd);

  arcs = arcs_by_vertex_set(pentagon, VertexSet{});
  REQUIRE(arcs.size() == 1);
  CHECK(arcs[0].closed);
}

TEST_CASE("arcs partition the cycle") {
  oracle::Rng rng(12);
  for (int i = 0; i < 10000; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const auto c = oracle::random_cycle(n, ParityFilter::Any, rng);
    const VertexSet vs(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
    const auto arcs = arcs_by_vertex_set(c, vs);
    EdgeSet joined(n);
    int length = 0, parity = 0;
    for (const auto &a : arcs) {
      REQUIRE((a.interior() & vs).empty());
      REQUIRE(!a.edge_set(n).intersects(joined));
      joined |= a.edge_set(n);
      length += a.length();
      parity += a.length() % 2;
    }
    REQUIRE(joined == c);
    REQUIRE(length == c.size());
    REQUIRE(parity % 2 == c.size() % 2);
  }
}

TEST_CASE("cycle enumeration counts and order") {
  CHECK(enumerate_cycles(3).size() == 1);
  CHECK(enumerate_cycles(4).size() == 7);
  CHECK(enumerate_cycles(5, ParityFilter::Odd).size() == 22);
  CHECK(enumerate_cycles(5).size() == 37);
  CHECK(enumerate_cycles(6, ParityFilter::Any, 4).size() == 20 + 45);
  for (int n = 3; n <= 6; ++n) {
    const auto all = enumerate_cycles(n);
    REQUIRE(static_cast<long long>(all.size()) == closed_form_cycle_count(n));
    const auto brute = oracle::cycles_of(EdgeSet::complete(n));
    REQUIRE(std::set<EdgeSet>(all.begin(), all.end()) == std::set<EdgeSet>(brute.begin(), brute.end()));
    for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(all[i - 1].size() <= all[i].size());
    const auto odd = enumerate_cycles(n, ParityFilter::Odd);
    const auto even = enumerate_cycles(n, ParityFilter::Even);
    REQUIRE(odd.size() + even.size() == all.size());
  }
}

TEST_CASE("blocks and cycle predicates against brute force") {
  oracle::Rng rng(13);
  for (int i = 0; i < 10000; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    const auto g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), rng);
    const auto cycles = oracle::cycles_of(g);
    REQUIRE(contains_cycle(g) == !cycles.empty());
    REQUIRE(contains_odd_cycle(g) == oracle::has_odd_cycle(g));
    REQUIRE(contains_even_cycle(g) == oracle::has_even_cycle(g));
    EdgeSet joined(n);
    for (const auto &b : blocks(g)) {
      REQUIRE(!b.intersects(joined));
      joined |= b;
      // Every cycle lies inside one block.
      for (const auto &c : cycles) REQUIRE((c.subset_of(b) || !c.intersects(b)));
    }
    REQUIRE(joined == g);
  }
}

TEST_CASE("forest helpers") {
  const auto path = es(5, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(forest_path(path, 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(forest_path(path, 0, 4).empty());
  CHECK(even_side(path, 0) == VertexSet{0, 2});
  CHECK(components(path).size() == 1);
}

TEST_CASE("family basics") {
  CycleFamily f(4);
  f.push_back(es(4, {{0, 1}}));
  CHECK_THROWS_AS(f.push_back(EdgeSet(4)), PreconditionError);
  CHECK_THROWS_AS(f.push_back(es(5, {{0, 1}})), PreconditionError);
  f.push_back(es(4, {{1, 2}}));
  CHECK(f.pairwise_edge_disjoint());
  f.push_back(es(4, {{0, 1}, {2, 3}}));
  CHECK(!f.pairwise_edge_disjoint());
  CHECK(f.union_vertices() == VertexSet{0, 1, 2, 3});
}

TEST_CASE("property: contraction vertex count") {
  const auto r = props::contraction_vertex_count(10000, 101);
  INFO(props::describe(r));
  CHECK(r.ok());
}

TEST_CASE("property: symmetric difference algebra") {
  const auto r = props::symmetric_difference_algebra(10000, 102);
  INFO(props::describe(r));
  CHECK(r.ok());
}

}  // TEST_SUITE
