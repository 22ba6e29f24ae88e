#include "rainbow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "rainbow/decide.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structures.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

enum class SpaceKind { Multiset, Coloring };

struct Space {
  SpaceKind kind = SpaceKind::Multiset;
  int ambient = 0;  // vertices of the complete graph
  int k = 0;        // family size
  ParityFilter pool = ParityFilter::Any;
};

struct TheoremInfo {
  const char *id;
  int min_n;
  int max_exhaustive;
  int max_sample;
  Space (*space)(int n);
};

const std::vector<TheoremInfo> &theorems() {
  static const std::vector<TheoremInfo> table = {
      {"odd-cycles", 3, 5, 7, [](int n) { return Space{SpaceKind::Multiset, n, 2 * ((n + 1) / 2) - 1, ParityFilter::Odd}; }},
      {"woc", 3, 5, 7, [](int n) { return Space{SpaceKind::Multiset, n, n, ParityFilter::Odd}; }},
      {"odd-char", 2, 4, 7, [](int n) { return Space{SpaceKind::Multiset, n + 1, n, ParityFilter::Odd}; }},
      {"rgc", 3, 5, 7, [](int n) { return Space{SpaceKind::Multiset, n, n, ParityFilter::Any}; }},
      {"cycles-char", 2, 4, 7, [](int n) { return Space{SpaceKind::Multiset, n + 1, n, ParityFilter::Any}; }},
      {"edge-disjoint", 3, 5, 8, [](int n) { return Space{SpaceKind::Coloring, n, n, ParityFilter::Any}; }},
      {"linkleaf", 1, 4, 7, [](int n) { return Space{SpaceKind::Coloring, n + 1, n, ParityFilter::Any}; }},
      {"cut", 1, 4, 7, [](int n) { return Space{SpaceKind::Coloring, n + 1, n, ParityFilter::Any}; }},
      {"even-cycles-bound", 4, 4, 6,
       [](int n) { return Space{SpaceKind::Multiset, n, even_cycle_bound(n), ParityFilter::Even}; }},
      {"matroid-span", 3, 5, 7, [](int n) { return Space{SpaceKind::Multiset, n, n, ParityFilter::Odd}; }},
  };
  return table;
}

const TheoremInfo &theorem_info(const std::string &id) {
  for (const auto &t : theorems())
    if (id == t.id) return t;
  throw PreconditionError("unknown theorem id: " + id);
}

const std::vector<EdgeSet> &cycle_pool(int n, ParityFilter parity) {
  static std::mutex mu;
  static std::map<std::pair<int, ParityFilter>, std::vector<EdgeSet>> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({n, parity});
  if (fresh) it->second = enumerate_cycles(n, parity);
  return it->second;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Stirling numbers of the second kind.
std::uint64_t stirling2(int n, int k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

std::optional<std::string> check_certificate(const std::optional<RainbowCycleCert> &cert, const CycleFamily &family,
                                             ParityFilter parity) {
  if (cert && (!validate(*cert, family) || !matches(parity, cert->parity)))
    return std::string("invalid rainbow cycle certificate");
  return std::nullopt;
}

std::optional<std::string> check_presence(const std::optional<RainbowCycleCert> &cert, const CycleFamily &family,
                                          ParityFilter parity) {
  if (!cert) return std::string("no rainbow ") + (parity == ParityFilter::Any ? "" : to_string(parity)) +
                    (parity == ParityFilter::Any ? "cycle" : " cycle");
  return check_certificate(cert, family, parity);
}

template <class Cert>
std::optional<std::string> check_characterization(const std::optional<RainbowCycleCert> &rainbow,
                                                  const std::optional<Cert> &structure, const CycleFamily &family,
                                                  ParityFilter parity, const char *name) {
  if (auto bad = check_certificate(rainbow, family, parity)) return bad;
  if (structure && !validate(*structure, family)) return std::string("invalid ") + name + " certificate";
  if (rainbow && structure) return std::string("rainbow cycle found but recognized as ") + name;
  if (!rainbow && !structure) return std::string("no rainbow cycle but not recognized as ") + name;
  return std::nullopt;
}

std::optional<std::string> check_matroid_span(const CycleFamily &family) {
  const auto enc = encode_odd_cycle_instance(family);
  const auto r = matroid_rainbow_span(enc.matroid, enc.e0, enc.family);
  std::vector<bool> used(family.size(), false);
  RainbowSet rainbow(family.n());
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    const int c = r.colors[i];
    if (c < 0 || c >= family.size() || used[c]) return std::string("matroid span: colors not injective");
    used[c] = true;
    const auto &members = enc.family[c];
    if (std::find(members.begin(), members.end(), r.elements[i]) == members.end())
      return std::string("matroid span: element outside its member");
    rainbow.add(OddCycleEncoding::edge_of(r.elements[i]), c);
  }
  if (!binary_closure_contains(enc.matroid, r.elements, enc.e0)) return std::string("matroid span: e0 not spanned");
  if (!contains_odd_cycle(rainbow.edges)) return std::string("matroid span: rainbow set has no odd cycle");

  const auto direct = find_rainbow_odd_cycle(family);
  if (!direct) return std::string("matroid span found a rainbow odd cycle, direct search did not");
  return check_certificate(direct, family, ParityFilter::Odd);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CycleFamily sample_family(const Space &space, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  if (space.kind == SpaceKind::Multiset) {
    const auto &pool = cycle_pool(space.ambient, space.pool);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::vector<int> idx(space.k);
    for (int &i : idx) i = pick(rng);
    std::sort(idx.begin(), idx.end());
    CycleFamily f(space.ambient);
    for (int i : idx) f.push_back(pool[i]);
    return f;
  }
  const int edges = edge_count(space.ambient);
  if (edges < space.k) throw PreconditionError("too few edges for the family size");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> color(0, space.k - 1);
  for (;;) {
    const double unused = 0.6 * unit(rng);
    std::vector<int> colors(edges);
    std::vector<int> count(space.k, 0);
    for (int &c : colors) {
      c = unit(rng) < unused ? -1 : color(rng);
      if (c >= 0) ++count[c];
    }
    if (std::find(count.begin(), count.end(), 0) == count.end())
      return family_from_coloring(space.ambient, space.k, colors);
  }
}

}  // namespace

const char *to_string(Mode m) { return m == Mode::Exhaustive ? "exhaustive" : "sample"; }

const std::vector<std::string> &theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto &t : theorems()) out.emplace_back(t.id);
    return out;
  }();
  return ids;
}

int exhaustive_envelope(const std::string &theorem) { return theorem_info(theorem).max_exhaustive; }

std::uint64_t family_space_size(const std::string &theorem, int n) {
  const Space s = theorem_info(theorem).space(n);
  if (s.kind == SpaceKind::Multiset) {
    const std::uint64_t pool = cycle_pool(s.ambient, s.pool).size();
    return pool == 0 ? 0 : binomial(pool + s.k - 1, s.k);
  }
  // Colorings with k labelled-by-first-appearance classes plus an optional
  // unused class: S(E + 1, k + 1).
  return stirling2(edge_count(s.ambient) + 1, s.k + 1);
}

std::optional<std::string> check_family(const std::string &theorem, int n, const CycleFamily &family) {
  const auto &info = theorem_info(theorem);
  const Space space = info.space(n);
  if (family.n() != space.ambient || family.size() != space.k)
    return "family shape does not match the theorem at n=" + std::to_string(n);
  const std::string id = info.id;

  if (id == "odd-cycles" || id == "woc") return check_presence(find_rainbow_odd_cycle(family), family, ParityFilter::Odd);
  if (id == "rgc") return check_presence(find_rainbow_cycle(family), family, ParityFilter::Any);
  if (id == "even-cycles-bound")
    return check_presence(exhaustive_rainbow_cycle(family, ParityFilter::Even), family, ParityFilter::Even);
  if (id == "odd-char")
    return check_characterization(find_rainbow_odd_cycle(family), is_pruned_cactus(family), family, ParityFilter::Odd,
                                  "pruned cactus");
  if (id == "cycles-char")
    return check_characterization(find_rainbow_cycle(family), is_saguaro(family), family, ParityFilter::Any,
                                  "saguaro");
  if (id == "linkleaf")
    return check_characterization(exhaustive_rainbow_cycle(family), is_linkleaf(family), family, ParityFilter::Any,
                                  "linkleaf");
  if (id == "edge-disjoint") {
    if (auto bad = check_presence(exhaustive_rainbow_cycle(family), family, ParityFilter::Any)) return bad;
    const auto r = cut_or_rainbow_cycle(family);
    if (const auto *c = std::get_if<RainbowCycleCert>(&r)) return check_certificate(*c, family, ParityFilter::Any);
    if (!validate(std::get<MonoCutCert>(r), family)) return std::string("invalid cut certificate");
    return std::nullopt;
  }
  if (id == "cut") {
    const auto r = cut_or_rainbow_cycle(family);
    if (const auto *c = std::get_if<RainbowCycleCert>(&r)) return check_certificate(*c, family, ParityFilter::Any);
    if (!validate(std::get<MonoCutCert>(r), family)) return std::string("invalid cut certificate");
    if (!find_monochromatic_cut(family)) return std::string("cut returned but the exact search finds none");
    return std::nullopt;
  }
  return check_matroid_span(family);
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("RAINBOW_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

VerificationReport verify_theorem(const std::string &theorem, int n, const VerifyOptions &options) {
  const auto &info = theorem_info(theorem);
  if (n < info.min_n) throw PreconditionError(theorem + " needs n >= " + std::to_string(info.min_n));
  if (options.mode == Mode::Exhaustive && n > info.max_exhaustive)
    throw PreconditionError(theorem + " is exhaustive only for n <= " + std::to_string(info.max_exhaustive) +
                            "; use sample mode");
  if (options.mode == Mode::Sample && n > info.max_sample)
    throw PreconditionError(theorem + " is sampled only for n <= " + std::to_string(info.max_sample));
  const Space space = info.space(n);
  if (space.kind == SpaceKind::Multiset) cycle_pool(space.ambient, space.pool);  // warm the cache

  const auto start = Clock::now();
  const int workers = worker_count(options.workers);
  std::atomic<bool> out_of_time{false};
  struct Shard {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<Failure> failures;
  };
  std::vector<Shard> shards(workers);

  auto run = [&](int w) {
    Shard &shard = shards[w];
    auto handle = [&](std::uint64_t index, const CycleFamily &family) -> bool {
      if (options.budget_seconds > 0 && (shard.checked & 63) == 0 && seconds_since(start) > options.budget_seconds)
        out_of_time = true;
      if (out_of_time) return false;
      ++shard.checked;
      std::optional<std::string> reason;
      try {
        reason = check_family(theorem, n, family);
      } catch (const std::exception &err) {
        reason = std::string("exception: ") + err.what();
      }
      if (reason) {
        ++shard.failed;
        if (shard.failures.size() < options.max_failures) shard.failures.push_back({index, *reason, family});
      }
      return true;
    };

    if (options.mode == Mode::Sample) {
      for (std::uint64_t i = w; i < options.samples; i += workers)
        if (!handle(i, sample_family(space, options.seed, i))) return;
      return;
    }
    std::uint64_t index = 0;
    if (space.kind == SpaceKind::Multiset) {
      const auto &pool = cycle_pool(space.ambient, space.pool);
      for_each_multiset(static_cast<int>(pool.size()), space.k, [&](const std::vector<int> &idx) {
        if (index++ % workers != static_cast<std::uint64_t>(w)) return true;
        CycleFamily f(space.ambient);
        for (int i : idx) f.push_back(pool[i]);
        return handle(index - 1, f);
      });
    } else {
      for_each_edge_coloring(space.ambient, space.k, [&](const std::vector<int> &colors) {
        if (index++ % workers != static_cast<std::uint64_t>(w)) return true;
        return handle(index - 1, family_from_coloring(space.ambient, space.k, colors));
      });
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto &t : pool) t.join();
  }

  VerificationReport report;
  report.theorem = theorem;
  report.n = n;
  report.mode = options.mode;
  for (auto &shard : shards) {
    report.families_checked += shard.checked;
    report.failure_count += shard.failed;
    for (auto &f : shard.failures) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure &a, const Failure &b) { return a.index < b.index; });
  if (report.failures.size() > options.max_failures) report.failures.resize(options.max_failures);
  report.complete = !out_of_time;
  report.elapsed = seconds_since(start);
  return report;
}

Json to_json(const VerificationReport &report) {
  Json j;
  j["theorem"] = report.theorem;
  j["n"] = report.n;
  j["mode"] = to_string(report.mode);
  j["familiesChecked"] = report.families_checked;
  j["failureCount"] = report.failure_count;
  j["failures"] = Json::array();
  for (const auto &f : report.failures)
    j["failures"].push_back({{"index", f.index}, {"reason", f.reason}, {"family", family_to_json(f.family)}});
  j["elapsed"] = report.elapsed;
  j["complete"] = report.complete;
  j["passed"] = report.passed();
  return j;
}

VerificationReport report_from_json(const Json &j) {
  VerificationReport r;
  try {
    r.theorem = j.at("theorem").get<std::string>();
    r.n = j.at("n").get<int>();
    r.mode = j.at("mode").get<std::string>() == "sample" ? Mode::Sample : Mode::Exhaustive;
    r.families_checked = j.at("familiesChecked").get<std::uint64_t>();
    r.failure_count = j.value("failureCount", std::uint64_t{0});
    for (std::size_t i = 0; i < j.at("failures").size(); ++i) {
      const Json &f = j["failures"][i];
      r.failures.push_back({f.at("index").get<std::uint64_t>(), f.at("reason").get<std::string>(),
                            family_from_json(f.at("family"))});
    }
    r.elapsed = j.value("elapsed", 0.0);
    r.complete = j.value("complete", true);
  } catch (const nlohmann::json::exception &err) {
    throw ParseError(std::string("report: ") + err.what());
  }
  return r;
}

// ------------------------------------------------------------ enumeration

void for_each_multiset(int pool, int k, const std::function<bool(const std::vector<int> &)> &visit) {
  if (k < 0) throw PreconditionError("multiset size must be non-negative");
  if (k == 0) {
    visit({});
    return;
  }
  if (pool <= 0) return;
  std::vector<int> idx(k, 0);
  for (;;) {
    if (!visit(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == pool - 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[i];
  }
}

void for_each_edge_coloring(int n, int k, const std::function<bool(const std::vector<int> &)> &visit) {
  const int edges = edge_count(n);
  std::vector<int> colors(edges, -1);
  bool stop = false;
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (stop) return;
    if (k - used > edges - pos) return;  // not enough edges left to use every color
    if (pos == edges) {
      if (!visit(colors)) stop = true;
      return;
    }
    for (int c = -1; c <= std::min(used, k - 1) && !stop; ++c) {
      colors[pos] = c;
      rec(pos + 1, c == used ? used + 1 : used);
    }
    colors[pos] = -1;
  };
  rec(0, 0);
}

CycleFamily family_from_coloring(int n, int k, const std::vector<int> &colors) {
  std::vector<EdgeSet> members(k, EdgeSet(n));
  for (int i = 0; i < static_cast<int>(colors.size()); ++i)
    if (colors[i] >= 0) members.at(colors[i]).insert(Edge::from_index(i));
  return CycleFamily(n, std::move(members));
}

// -------------------------------------------------------------- even cycles

int even_cycle_bound(int n) {
  if (n < 3) throw PreconditionError("even_cycle_bound needs n >= 3");
  return 3 * (n - 1) / 2 + 1;
}

EdgeBoundReport check_even_cycle_edge_bound(int n) {
  if (n < 3 || n > 7) throw PreconditionError("edge bound check supports 3 <= n <= 7");
  EdgeBoundReport report;
  report.n = n;
  const int edges = edge_count(n);
  const int limit = even_cycle_bound(n) - 1;

  auto for_each_graph = [&](int size, const std::function<bool(const EdgeSet &)> &visit) {
    if (size > edges) return;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      EdgeSet g(n);
      for (int i : pick) g.insert(Edge::from_index(i));
      if (!visit(g)) return;
      int i = size - 1;
      while (i >= 0 && pick[i] == edges - size + i) --i;
      if (i < 0) return;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  };

  for_each_graph(limit + 1, [&](const EdgeSet &g) {
    ++report.graphs_checked;
    if (!contains_even_cycle(g)) report.failures.push_back(g);
    return true;
  });
  for_each_graph(limit, [&](const EdgeSet &g) {
    report.tight = !contains_even_cycle(g);
    return !report.tight;
  });
  return report;
}

ThresholdResult search_even_threshold(int n, double budget_seconds) {
  if (n < 4) throw PreconditionError("search_even_threshold needs n >= 4");
  if (n > 8) throw PreconditionError("search_even_threshold supports n <= 8");
  const auto start = Clock::now();
  const auto &pool = cycle_pool(n, ParityFilter::Even);
  const int p = static_cast<int>(pool.size());

  ThresholdResult result;
  result.n = n;
  int best = 0;
  auto record = [&](const std::vector<int> &idx) {
    const int size = static_cast<int>(idx.size());
    if (size < best) return;
    if (size > best) {
      best = size;
      result.extremal.clear();
      result.extremal_count = 0;
    }
    ++result.extremal_count;
    if (result.extremal.size() < 256) {
      CycleFamily f(n);
      for (int i : idx) f.push_back(pool[i]);
      result.extremal.push_back(std::move(f));
    }
  };

  bool out_of_time = false;
  std::vector<int> idx;
  CycleFamily family(n);
  std::function<void(int)> extend = [&](int from) {
    record(idx);
    for (int j = from; j < p && !out_of_time; ++j) {
      ++result.nodes;
      if (budget_seconds > 0 && (result.nodes & 255) == 0 && seconds_since(start) > budget_seconds) {
        out_of_time = true;
        return;
      }
      CycleFamily next = family;
      next.push_back(pool[j]);
      if (exhaustive_rainbow_cycle(next, ParityFilter::Even)) continue;
      std::swap(family, next);
      idx.push_back(j);
      extend(j);
      idx.pop_back();
      std::swap(family, next);
    }
  };

  // One branch per shortest length: the family contains the first cycle of
  // that length and otherwise only cycles at least as long.
  for (int first = 0; first < p && !out_of_time; ++first) {
    if (first > 0 && pool[first].size() == pool[first - 1].size()) continue;
    idx = {first};
    family = CycleFamily(n);
    family.push_back(pool[first]);
    extend(first);
  }

  result.exact = !out_of_time;
  // A partial search can fall short of glued squares, a known free family.
  if (const int copies = (n - 1) / 5; !result.exact && copies >= 1 && 6 * copies > best) {
    CycleFamily f(n);
    for (const auto &m : gen_glued_squares(copies)) {
      EdgeSet e(n);
      m.for_each([&](Edge x) { e.insert(x); });
      f.push_back(e);
    }
    if (!exhaustive_rainbow_cycle(f, ParityFilter::Even)) {
      best = f.size();
      result.extremal = {f};
      result.extremal_count = 1;
    }
  }
  result.f_of_n = best + 1;
  result.elapsed = seconds_since(start);
  return result;
}

Json to_json(const ThresholdResult &result) {
  Json j;
  j["n"] = result.n;
  j["fOfN"] = result.f_of_n;
  j["exact"] = result.exact;
  j["bound"] = even_cycle_bound(result.n);
  j["extremalCount"] = result.extremal_count;
  j["extremalFamilies"] = Json::array();
  for (const auto &f : result.extremal) j["extremalFamilies"].push_back(family_to_json(f));
  j["nodes"] = result.nodes;
  j["elapsed"] = result.elapsed;
  return j;
}

}  // namespace rainbow
