// Command-line front end: rainbow <subcommand> ...
// Exit codes: 0 found/verified, 1 not found/refuted, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rainbow/decide.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/io.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structures.hpp"

using namespace rainbow;

namespace {

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kError = 2;

Json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

void emit(const Json &j, const std::string &out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error(out + ": cannot write");
  f << j.dump(2) << '\n';
}

bool all_cycles(const CycleFamily &family, std::optional<Parity> parity) {
  for (const auto &m : family) {
    const auto p = is_cycle(m);
    if (!p || (parity && *p != *parity)) return false;
  }
  return true;
}

std::optional<RainbowCycleCert> find_cycle(const CycleFamily &family, ParityFilter parity) {
  if (parity == ParityFilter::Odd && all_cycles(family, Parity::Odd)) return find_rainbow_odd_cycle(family);
  if (parity == ParityFilter::Any && all_cycles(family, std::nullopt)) return find_rainbow_cycle(family);
  return exhaustive_rainbow_cycle(family, parity);
}

std::optional<StructureCert> recognize(const CycleFamily &family, const std::string &structure) {
  if (structure == "cactus") {
    if (auto c = is_pruned_cactus(family)) return StructureCert{*c};
  } else if (structure == "saguaro") {
    if (auto c = is_saguaro(family)) return StructureCert{*c};
  } else if (auto c = is_linkleaf(family)) {
    return StructureCert{*c};
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Rainbow cycles in complete graphs"};
  app.require_subcommand(1);

  std::string in, out, parity = "any", structure, theorem, kind, script, replay, certify = "none";
  int n = 0, threads = 0;
  std::uint64_t samples = 0, seed = 0;
  double budget = 0;
  bool odd_only = false;

  const std::map<std::string, ParityFilter> parities{
      {"odd", ParityFilter::Odd}, {"even", ParityFilter::Even}, {"any", ParityFilter::Any}};

  auto *find = app.add_subcommand("find", "Search for a rainbow cycle");
  find->add_option("--parity", parity)->check(CLI::IsMember({"odd", "even", "any"}));
  find->add_option("--in", in, "Family JSON")->required();
  find->add_option("--out", out, "Write the certificate here instead of stdout");

  auto *rec = app.add_subcommand("recognize", "Recognize an extremal structure");
  rec->add_option("--structure", structure)->required()->check(CLI::IsMember({"cactus", "saguaro", "linkleaf"}));
  rec->add_option("--in", in)->required();
  rec->add_option("--out", out);

  auto *cut = app.add_subcommand("decide-cut", "Monochromatic cut or rainbow cycle for an edge-disjoint family");
  cut->add_option("--in", in)->required();
  cut->add_option("--out", out);

  auto *verify = app.add_subcommand("verify", "Check a theorem over a family space");
  verify->add_option("--theorem", theorem)->check(CLI::IsMember(theorem_ids()));
  verify->add_option("--n", n);
  verify->add_option("--sample", samples, "Number of sampled families (default: exhaustive)");
  verify->add_option("--seed", seed);
  verify->add_option("--budget", budget, "Seconds; 0 = unlimited");
  verify->add_option("--threads", threads, "Workers; default RAINBOW_THREADS or all cores");
  verify->add_option("--replay", replay, "Re-check the failures of a saved report");
  verify->add_option("--out", out);

  auto *threshold = app.add_subcommand("threshold", "Search the even-cycle threshold f(n)");
  threshold->add_option("--n", n)->required();
  threshold->add_option("--budget", budget, "Seconds; 0 = unlimited");
  threshold->add_option("--out", out);

  auto *gen = app.add_subcommand("gen", "Generate a family from a script");
  gen->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"cactus", "saguaro", "linkleaf", "glued-squares"}));
  gen->add_option("--script", script, "Script JSON")->required();
  gen->add_flag("--odd-only", odd_only, "Reject even blocks (cactus)");
  gen->add_option("--out", out);

  auto *dot = app.add_subcommand("export-dot", "Render a family as Graphviz DOT");
  dot->add_option("--in", in)->required();
  dot->add_option("--out", out)->required();
  dot->add_option("--certify", certify, "Draw a certificate as clusters")
      ->check(CLI::IsMember({"none", "odd", "even", "any", "cactus", "saguaro", "linkleaf", "cut"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*find) {
      const auto family = import_family(in);
      const auto cert = find_cycle(family, parities.at(parity));
      emit(cert ? to_json(*cert) : Json{{"found", false}}, out);
      return cert ? kFound : kNotFound;
    }
    if (*rec) {
      const auto family = import_family(in);
      const auto cert = recognize(family, structure);
      emit(cert ? to_json(*cert) : Json{{"recognized", false}}, out);
      return cert ? kFound : kNotFound;
    }
    if (*cut) {
      const auto family = import_family(in);
      const auto r = cut_or_rainbow_cycle(family);
      emit(std::visit([](const auto &c) { return to_json(c); }, r), out);
      return kFound;
    }
    if (*verify) {
      if (!replay.empty()) {
        const auto report = report_from_json(read_json(replay));
        Json j = Json::array();
        bool any_confirmed = false;
        for (const auto &f : report.failures) {
          const auto reason = check_family(report.theorem, report.n, f.family);
          any_confirmed |= reason.has_value();
          j.push_back({{"index", f.index}, {"confirmed", reason.has_value()}, {"reason", reason.value_or("")}});
        }
        emit(j, out);
        return any_confirmed ? kNotFound : kFound;
      }
      if (theorem.empty() || n == 0) throw PreconditionError("verify needs --theorem and --n (or --replay)");
      VerifyOptions opts;
      opts.mode = samples > 0 ? Mode::Sample : Mode::Exhaustive;
      opts.samples = samples;
      opts.seed = seed;
      opts.budget_seconds = budget;
      opts.workers = threads;
      const auto report = verify_theorem(theorem, n, opts);
      emit(to_json(report), out);
      return report.passed() ? kFound : kNotFound;
    }
    if (*threshold) {
      const auto result = search_even_threshold(n, budget);
      emit(to_json(result), out);
      return result.exact ? kFound : kNotFound;
    }
    if (*gen) {
      const Json s = read_json(script);
      CycleFamily family;
      if (kind == "cactus") family = gen_pruned_cactus(cactus_script_from_json(s), odd_only || s.value("oddOnly", false));
      else if (kind == "saguaro") family = gen_saguaro(saguaro_script_from_json(s));
      else if (kind == "linkleaf") family = gen_linkleaf(linkleaf_script_from_json(s));
      else {
        if (!s.contains("copies") || !s["copies"].is_number_integer()) throw ParseError(script + ": missing \"copies\"");
        family = gen_glued_squares(s["copies"].get<int>());
      }
      emit(family_to_json(family), out);
      return kFound;
    }
    if (*dot) {
      const auto family = import_family(in);
      std::string text;
      std::optional<StructureCert> cert;
      if (parities.contains(certify)) {
        if (auto c = find_cycle(family, parities.at(certify))) cert = StructureCert{*c};
      } else if (certify == "cut") {
        const auto r = cut_or_rainbow_cycle(family);
        cert = std::visit([](const auto &c) { return StructureCert{c}; }, r);
      } else if (certify != "none") {
        cert = recognize(family, certify);
      }
      text = cert ? to_dot(family, *cert) : to_dot(family);
      std::ofstream f(out);
      if (!f) throw std::runtime_error(out + ": cannot write");
      f << text;
      return certify == "none" || cert ? kFound : kNotFound;
    }
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << '\n';
    return kError;
  }
  return kError;
}
