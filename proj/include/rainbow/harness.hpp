#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"

namespace rainbow {

enum class Mode { Exhaustive, Sample };
const char *to_string(Mode m);

struct VerifyOptions {
  Mode mode = Mode::Exhaustive;
  std::uint64_t samples = 0;  // sample mode only
  std::uint64_t seed = 0;
  double budget_seconds = 0;  // 0 = unlimited
  int workers = 0;            // 0 = RAINBOW_THREADS or hardware concurrency
  std::size_t max_failures = 16;
};

struct Failure {
  std::uint64_t index = 0;
  std::string reason;
  CycleFamily family;
};

struct VerificationReport {
  std::string theorem;
  int n = 0;
  Mode mode = Mode::Exhaustive;
  std::uint64_t families_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // the first max_failures by index
  double elapsed = 0;
  /// False when the budget ran out before the space was covered.
  bool complete = true;

  bool passed() const { return complete && failure_count == 0; }
};

Json to_json(const VerificationReport &report);
VerificationReport report_from_json(const Json &j);

/// Known theorem ids, in display order.
const std::vector<std::string> &theorem_ids();

/// Largest n accepted in exhaustive mode for `theorem`.
int exhaustive_envelope(const std::string &theorem);

/// Size of the family space checked for (theorem, n) in exhaustive mode.
std::uint64_t family_space_size(const std::string &theorem, int n);

/// Checks one family against the claim `theorem` makes at parameter n.
/// Returns the reason on failure.
std::optional<std::string> check_family(const std::string &theorem, int n, const CycleFamily &family);

/// Exhaustive enumeration or seeded sampling of the family space, sharded
/// across workers by index. Identical options give identical reports apart
/// from elapsed time.
VerificationReport verify_theorem(const std::string &theorem, int n, const VerifyOptions &options = {});

/// Worker count: `requested` if positive, else RAINBOW_THREADS, else the
/// hardware concurrency.
int worker_count(int requested = 0);

// ------------------------------------------------------------ enumeration

/// Calls visit(indices) for every non-decreasing k-tuple over [0, pool).
/// Stops early when visit returns false.
void for_each_multiset(int pool, int k, const std::function<bool(const std::vector<int> &)> &visit);

/// Calls visit(colors) for every assignment of the edges of K_n (by edge
/// index) to colors 0..k-1 or -1 (unused), every color used, colors in order
/// of first appearance. Stops early when visit returns false.
void for_each_edge_coloring(int n, int k, const std::function<bool(const std::vector<int> &)> &visit);

CycleFamily family_from_coloring(int n, int k, const std::vector<int> &colors);

// -------------------------------------------------------------- even cycles

/// floor(3(n-1)/2) + 1.
int even_cycle_bound(int n);

struct EdgeBoundReport {
  int n = 0;
  std::uint64_t graphs_checked = 0;
  std::vector<EdgeSet> failures;  // graphs above the bound without an even cycle
  /// Some graph with exactly floor(3(n-1)/2) edges has no even cycle.
  bool tight = false;
};

/// Every graph on n vertices with floor(3(n-1)/2) + 1 edges, checked for an
/// even cycle (supersets follow). n <= 7.
EdgeBoundReport check_even_cycle_edge_bound(int n);

struct ThresholdResult {
  int n = 0;
  /// Smallest t such that every t even cycles have a rainbow even cycle;
  /// a lower bound only when !exact.
  int f_of_n = 0;
  std::vector<CycleFamily> extremal;  // largest rainbow-even-cycle-free families found
  std::uint64_t extremal_count = 0;   // extremal holds at most the first 256
  bool exact = false;
  std::uint64_t nodes = 0;
  double elapsed = 0;
};

/// Backtracking over multisets of even cycles of K_n, pruning at the first
/// rainbow even cycle. The first member is fixed to the first cycle of the
/// family's shortest length (all cycles of one length are isomorphic), so
/// extremal families are listed up to that symmetry.
ThresholdResult search_even_threshold(int n, double budget_seconds = 0);

Json to_json(const ThresholdResult &result);

}  // namespace rainbow
