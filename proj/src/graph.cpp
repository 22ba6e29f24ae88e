#include "rainbow/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace rainbow {

namespace {

constexpr auto kEdgeTable = [] {
  std::array<Edge, kMaxEdges> t{};
  for (int v = 1; v < kMaxVertices; ++v)
    for (int u = 0; u < v; ++u) t[v * (v - 1) / 2 + u] = Edge(u, v);
  return t;
}();

int words_for(int n) { return (edge_count(n) + 63) / 64; }

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) throw PreconditionError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
}

// Adjacency lists (sorted ascending) of an edge set.
std::array<std::vector<Vertex>, kMaxVertices> adjacency(const EdgeSet &e) {
  std::array<std::vector<Vertex>, kMaxVertices> adj;
  e.for_each([&](Edge x) {
    adj[x.u].push_back(x.v);
    adj[x.v].push_back(x.u);
  });
  for (auto &a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

const char *to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }
const char *to_string(ParityFilter f) {
  switch (f) {
    case ParityFilter::Odd: return "odd";
    case ParityFilter::Even: return "even";
    default: return "any";
  }
}

Edge Edge::from_index(int idx) { return kEdgeTable[idx]; }

// ---------------------------------------------------------------- EdgeSet

EdgeSet::EdgeSet(int n) : n_(n), words_(words_for(n)) {
  if (n < 0 || n > kMaxVertices) throw PreconditionError("vertex count outside [0, 64]");
}

EdgeSet::EdgeSet(int n, std::initializer_list<Edge> edges) : EdgeSet(n) {
  for (Edge e : edges) insert(e);
}

EdgeSet::EdgeSet(int n, std::span<const Edge> edges) : EdgeSet(n) {
  for (Edge e : edges) insert(e);
}

EdgeSet EdgeSet::complete(int n) {
  EdgeSet s(n);
  for (int i = 0; i < edge_count(n); ++i) s.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  return s;
}

EdgeSet EdgeSet::cycle(int n, std::span<const Vertex> order) {
  EdgeSet s(n);
  const auto k = order.size();
  for (std::size_t i = 0; i < k; ++i) s.insert(Edge(order[i], order[(i + 1) % k]));
  return s;
}

void EdgeSet::insert(Edge e) {
  check_vertex(n_, e.v);
  if (e.u == e.v) throw PreconditionError("loops are not edges");
  const int i = e.index();
  bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void EdgeSet::erase(Edge e) {
  if (e.v >= n_) return;
  const int i = e.index();
  bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

void EdgeSet::toggle(Edge e) {
  check_vertex(n_, e.v);
  const int i = e.index();
  bits_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

int EdgeSet::size() const {
  int s = 0;
  for (int w = 0; w < words_; ++w) s += std::popcount(bits_[w]);
  return s;
}

bool EdgeSet::empty() const {
  for (int w = 0; w < words_; ++w)
    if (bits_[w]) return false;
  return true;
}

VertexSet EdgeSet::vertices() const {
  VertexSet vs;
  for_each([&](Edge e) {
    vs.insert(e.u);
    vs.insert(e.v);
  });
  return vs;
}

int EdgeSet::degree(Vertex v) const {
  int d = 0;
  for (Vertex u = 0; u < n_; ++u)
    if (u != v && contains(Edge(u, v))) ++d;
  return d;
}

Edge EdgeSet::first() const {
  for (int w = 0; w < words_; ++w)
    if (bits_[w]) return Edge::from_index(w * 64 + std::countr_zero(bits_[w]));
  throw PreconditionError("first() of an empty edge set");
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  for_each([&](Edge e) { out.push_back(e); });
  return out;
}

EdgeSet EdgeSet::induced(VertexSet vs) const {
  EdgeSet out(n_);
  for_each([&](Edge e) {
    if (vs.contains(e.u) && vs.contains(e.v)) out.insert(e);
  });
  return out;
}

bool EdgeSet::subset_of(const EdgeSet &o) const {
  check_same_n(o);
  for (int w = 0; w < words_; ++w)
    if (bits_[w] & ~o.bits_[w]) return false;
  return true;
}

bool EdgeSet::intersects(const EdgeSet &o) const {
  check_same_n(o);
  for (int w = 0; w < words_; ++w)
    if (bits_[w] & o.bits_[w]) return true;
  return false;
}

void EdgeSet::check_same_n(const EdgeSet &o) const {
  if (n_ != o.n_) throw PreconditionError("edge sets live on different vertex counts");
}

EdgeSet &EdgeSet::operator|=(const EdgeSet &o) {
  check_same_n(o);
  for (int w = 0; w < words_; ++w) bits_[w] |= o.bits_[w];
  return *this;
}
EdgeSet &EdgeSet::operator&=(const EdgeSet &o) {
  check_same_n(o);
  for (int w = 0; w < words_; ++w) bits_[w] &= o.bits_[w];
  return *this;
}
EdgeSet &EdgeSet::operator^=(const EdgeSet &o) {
  check_same_n(o);
  for (int w = 0; w < words_; ++w) bits_[w] ^= o.bits_[w];
  return *this;
}
EdgeSet &EdgeSet::operator-=(const EdgeSet &o) {
  check_same_n(o);
  for (int w = 0; w < words_; ++w) bits_[w] &= ~o.bits_[w];
  return *this;
}

bool operator==(const EdgeSet &a, const EdgeSet &b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.bits_.begin(), a.bits_.begin() + a.words_, b.bits_.begin());
}

bool operator<(const EdgeSet &a, const EdgeSet &b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (int w = 0; w < a.words_; ++w) {
    if (a.bits_[w] == b.bits_[w]) continue;
    // The set holding the lowest differing edge sorts first.
    const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
    return (a.bits_[w] >> std::countr_zero(diff)) & 1U;
  }
  return false;
}

// ------------------------------------------------------------ CycleFamily

CycleFamily::CycleFamily(int n, std::vector<EdgeSet> members) : n_(n) {
  members_.reserve(members.size());
  for (auto &m : members) push_back(std::move(m));
}

void CycleFamily::push_back(EdgeSet member) {
  if (member.n() != n_) throw PreconditionError("member lives on a different vertex count than the family");
  if (member.empty()) throw PreconditionError("family members must be nonempty");
  members_.push_back(std::move(member));
}

EdgeSet CycleFamily::union_edges() const {
  EdgeSet u(n_);
  for (const auto &m : members_) u |= m;
  return u;
}

VertexSet CycleFamily::union_vertices() const { return union_edges().vertices(); }

CycleFamily CycleFamily::subfamily(std::span<const int> indices) const {
  CycleFamily f(n_);
  for (int i : indices) f.members_.push_back(members_.at(i));
  return f;
}

bool CycleFamily::pairwise_edge_disjoint() const {
  EdgeSet seen(n_);
  for (const auto &m : members_) {
    if (seen.intersects(m)) return false;
    seen |= m;
  }
  return true;
}

// ------------------------------------------------------------- predicates

std::optional<Parity> is_cycle(const EdgeSet &e) {
  const int m = e.size();
  if (m < 3) return std::nullopt;
  const VertexSet vs = e.vertices();
  if (vs.size() != m) return std::nullopt;
  for (Vertex v : vs)
    if (e.degree(v) != 2) return std::nullopt;
  if (components(e).size() != 1) return std::nullopt;
  return parity_of(m);
}

std::vector<Vertex> cycle_order(const EdgeSet &c) {
  const auto adj = adjacency(c);
  const Vertex start = c.vertices().min();
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = adj[start].front();
  while (cur != start) {
    order.push_back(cur);
    const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return order;
}

std::vector<VertexSet> components(const EdgeSet &e) {
  std::array<int, kMaxVertices> parent;
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  e.for_each([&](Edge x) { parent[find(x.u)] = find(x.v); });
  const VertexSet vs = e.vertices();
  std::vector<VertexSet> out;
  std::array<int, kMaxVertices> slot;
  slot.fill(-1);
  for (Vertex v : vs) {
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].insert(v);
  }
  return out;
}

std::vector<EdgeSet> blocks(const EdgeSet &e) {
  const auto adj = adjacency(e);
  std::array<int, kMaxVertices> disc, low;
  disc.fill(-1);
  low.fill(0);
  int timer = 0;
  std::vector<Edge> stack;
  std::vector<EdgeSet> out;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex w : adj[v]) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          EdgeSet blk(e.n());
          const Edge top(v, w);
          while (true) {
            const Edge x = stack.back();
            stack.pop_back();
            blk.insert(x);
            if (x == top) break;
          }
          out.push_back(std::move(blk));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v : e.vertices())
    if (disc[v] < 0) dfs(v, -1);
  std::sort(out.begin(), out.end(), [](const EdgeSet &a, const EdgeSet &b) { return a.first() < b.first(); });
  return out;
}

bool contains_cycle(const EdgeSet &e) {
  return e.size() > e.vertices().size() - static_cast<int>(components(e).size());
}

bool contains_odd_cycle(const EdgeSet &e) {
  const auto adj = adjacency(e);
  std::array<int, kMaxVertices> colour;
  colour.fill(-1);
  for (Vertex s : e.vertices()) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (Vertex w : adj[v]) {
        if (colour[w] < 0) {
          colour[w] = colour[v] ^ 1;
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return true;
        }
      }
    }
  }
  return false;
}

bool contains_even_cycle(const EdgeSet &e) {
  // Even-cycle-free graphs are exactly those whose blocks are bridges or odd cycles.
  for (const auto &b : blocks(e)) {
    if (b.size() == 1) continue;
    const auto p = is_cycle(b);
    if (!p || *p == Parity::Even) return true;
  }
  return false;
}

std::vector<Vertex> forest_path(const EdgeSet &f, Vertex a, Vertex b) {
  const auto adj = adjacency(f);
  std::array<int, kMaxVertices> parent;
  parent.fill(-2);
  parent[a] = -1;
  std::vector<Vertex> queue{a};
  for (std::size_t h = 0; h < queue.size() && parent[b] == -2; ++h) {
    for (Vertex w : adj[queue[h]]) {
      if (parent[w] != -2) continue;
      parent[w] = queue[h];
      queue.push_back(w);
    }
  }
  if (parent[b] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex x = b; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

VertexSet even_side(const EdgeSet &forest, Vertex root) {
  const auto adj = adjacency(forest);
  std::array<int, kMaxVertices> dist;
  dist.fill(-1);
  dist[root] = 0;
  VertexSet even{root};
  std::vector<Vertex> queue{root};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (Vertex w : adj[queue[h]]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[queue[h]] + 1;
      if (dist[w] % 2 == 0) even.insert(w);
      queue.push_back(w);
    }
  }
  return even;
}

// ------------------------------------------------------------ contraction

Contraction::Contraction(int n, VertexSet merged) : n_(n), merged_(merged) {
  if (merged.empty()) throw PreconditionError("contraction needs a nonempty vertex set");
  if ((merged - VertexSet::range(n)).size() > 0) throw PreconditionError("contracted vertex outside [0, n)");
  const Vertex keep = merged.min();
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (merged.contains(v) && v != keep) continue;
    image_[v] = next++;
  }
  for (Vertex v : merged) image_[v] = image_[keep];
}

Vertex Contraction::image(Vertex v) const {
  check_vertex(n_, v);
  return image_[v];
}

EdgeSet Contraction::apply(const EdgeSet &e) const {
  if (e.n() != n_) throw PreconditionError("contraction applied to an edge set on a different vertex count");
  EdgeSet out(target_n());
  e.for_each([&](Edge x) {
    const Vertex a = image_[x.u], b = image_[x.v];
    if (a != b) out.insert(Edge(a, b));
  });
  return out;
}

EdgeSet contract(const EdgeSet &e, VertexSet merged) { return Contraction(e.n(), merged).apply(e); }

EdgeSet symmetric_difference(std::span<const EdgeSet> sets) {
  if (sets.empty()) return EdgeSet();
  EdgeSet out(sets.front().n());
  for (const auto &s : sets) out ^= s;
  return out;
}

std::vector<EdgeSet> eulerian_cycle_decomposition(const EdgeSet &e) {
  for (Vertex v : e.vertices())
    if (e.degree(v) % 2) throw PreconditionError("vertex " + std::to_string(v) + " has odd degree");

  std::vector<EdgeSet> out;
  EdgeSet rest = e;
  while (!rest.empty()) {
    // Walk unused edges until the walk revisits a vertex, then cut that loop off.
    const Vertex start = rest.first().u;
    std::vector<Vertex> walk{start};
    std::array<int, kMaxVertices> pos;
    pos.fill(-1);
    pos[start] = 0;
    EdgeSet used(e.n());
    while (true) {
      const Vertex cur = walk.back();
      Vertex next = -1;
      for (Vertex w = 0; w < e.n(); ++w) {
        if (w == cur) continue;
        const Edge x(cur, w);
        if (rest.contains(x) && !used.contains(x)) {
          next = w;
          break;
        }
      }
      used.insert(Edge(cur, next));
      if (pos[next] >= 0) {
        const std::vector<Vertex> loop(walk.begin() + pos[next], walk.end());
        const EdgeSet c = EdgeSet::cycle(e.n(), loop);
        out.push_back(c);
        rest -= c;
        break;
      }
      pos[next] = static_cast<int>(walk.size());
      walk.push_back(next);
    }
  }
  return out;
}

// ------------------------------------------------------------------ arcs

std::vector<Edge> Arc::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  return out;
}

EdgeSet Arc::edge_set(int n) const {
  const auto es = edges();
  return EdgeSet(n, std::span<const Edge>(es));
}

VertexSet Arc::interior() const {
  VertexSet vs;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) vs.insert(path[i]);
  return vs;
}

std::vector<Arc> arcs_by_vertex_set(const EdgeSet &c, VertexSet vs) {
  if (!is_cycle(c)) throw PreconditionError("arcs_by_vertex_set needs a cycle");
  const auto order = cycle_order(c);
  const VertexSet shared = vs & c.vertices();
  if (shared.empty()) {
    Arc whole{order, true};
    whole.path.push_back(order.front());
    return {whole};
  }
  const auto k = order.size();
  const auto start = static_cast<std::size_t>(std::find(order.begin(), order.end(), shared.min()) - order.begin());
  std::vector<Arc> arcs;
  Arc cur{{order[start]}, false};
  for (std::size_t step = 1; step <= k; ++step) {
    const Vertex v = order[(start + step) % k];
    cur.path.push_back(v);
    if (shared.contains(v)) {
      cur.closed = v == order[start];
      arcs.push_back(std::move(cur));
      cur = Arc{{v}, false};
    }
  }
  return arcs;
}

// ----------------------------------------------------------- enumeration

std::vector<EdgeSet> enumerate_cycles(int n, ParityFilter parity, std::optional<int> max_length) {
  if (n < 3) throw PreconditionError("enumerate_cycles needs n >= 3");
  const int top = std::min(n, max_length.value_or(n));
  std::vector<EdgeSet> out;
  for (int k = 3; k <= top; ++k) {
    if (!matches(parity, parity_of(k))) continue;
    // k-subsets in lexicographic order.
    std::vector<Vertex> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      // Rotations fixed by the smallest vertex; reflections by second < last.
      std::vector<Vertex> rest(subset.begin() + 1, subset.end());
      do {
        if (rest.front() < rest.back()) {
          std::vector<Vertex> order{subset[0]};
          order.insert(order.end(), rest.begin(), rest.end());
          out.push_back(EdgeSet::cycle(n, order));
        }
      } while (std::next_permutation(rest.begin(), rest.end()));

      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return out;
}

std::string to_string(const EdgeSet &e) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  e.for_each([&](Edge x) {
    if (!first) os << ',';
    first = false;
    os << x.u << '-' << x.v;
  });
  os << '}';
  return os.str();
}

}  // namespace rainbow
