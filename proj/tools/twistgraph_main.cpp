// Command-line surface for the twisted-graph flip machinery.
//
// Subcommands:
//   enumerate  list maximal plane subgraphs or plane perfect matchings
//   path       construct or search a flip path between two subgraphs
//   verify     run the property suites and emit a deterministic report
//   export     write a flip graph or matching graph as JSON or DOT
//
// Exit codes: 0 success, 1 check failure (a falsified property, a missing
// path, a claim violation), 2 usage or validation error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twist/constructive.hpp"
#include "twist/error.hpp"
#include "twist/serialize.hpp"
#include "twist/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& content, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_file);
  if (!out) {
    throw twist::Error(twist::ErrorCode::ParseError, "cannot write " + out_file);
  }
  out << content;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void print_error(const twist::Error& e) {
  const nlohmann::json payload{
      {"error", {{"code", twist::error_code_name(e.code())}, {"message", e.what()}}}};
  std::cerr << payload.dump() << "\n";
}

int exit_code_for(const twist::Error& e) {
  switch (e.code()) {
    case twist::ErrorCode::ClaimViolation:
    case twist::ErrorCode::NoPath:
      return kExitCheckFailure;
    default:
      return kExitUsage;
  }
}

struct EnumerateOptions {
  std::string kind;
  int n = 0;
  std::string format = "json";
  int limit = 0;
  std::string out_file;
};

int run_enumerate(const EnumerateOptions& opt) {
  std::vector<twist::EdgeSet> sets;
  std::string prefix;
  if (opt.kind == "max-plane") {
    const int limit = opt.limit > 0 ? opt.limit : twist::kMaxPlaneDefaultLimit;
    for (const auto& g : twist::enumerate_maximal_plane(opt.n, limit)) sets.push_back(g.edges());
    prefix = "max_plane_";
  } else {
    const int limit = opt.limit > 0 ? opt.limit : twist::kMatchingDefaultLimit;
    for (const auto& m : twist::enumerate_plane_perfect_matchings(opt.n, limit))
      sets.push_back(m.edges());
    prefix = "matching_";
  }
  if (opt.format == "count") {
    write_output(std::to_string(sets.size()) + "\n", opt.out_file);
  } else if (opt.format == "dot") {
    write_output(twist::edge_set_listing_to_dot(sets, opt.n, prefix), opt.out_file);
  } else {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& s : sets) items.push_back(twist::edge_set_to_json(s));
    write_output(dump(items), opt.out_file);
  }
  return kExitOk;
}

struct PathOptions {
  std::string mode;
  std::string from_file;
  std::string to_file;
  std::string fixed_file;
  bool fallback = false;
  int max_plane_limit = twist::kMaxPlaneDefaultLimit;
  int matching_limit = twist::kMatchingDefaultLimit;
  std::string out_file;
};

int run_path(const PathOptions& opt) {
  const twist::MaxPlaneSubgraph from(twist::load_edge_set_file(opt.from_file));
  const twist::MaxPlaneSubgraph to(twist::load_edge_set_file(opt.to_file));
  if (from.n() != to.n()) {
    throw twist::Error(twist::ErrorCode::MismatchedAmbient,
                       "--from and --to disagree on the ambient vertex count");
  }
  const int n = from.n();
  twist::EdgeSet fixed(n);
  if (!opt.fixed_file.empty()) {
    if (opt.mode == "theorem3") {
      throw twist::Error(twist::ErrorCode::ParseError,
                         "--fixed does not apply to theorem3 paths");
    }
    fixed = twist::load_edge_set_file(opt.fixed_file);
  }

  twist::FlipPath path;
  if (opt.mode == "theorem2") {
    try {
      path = twist::fixed_edge_flip_path(from, to, fixed);
    } catch (const twist::ClaimViolation& e) {
      if (!opt.fallback) throw;
      std::cerr << "falling back to search after a claim violation: " << e.what() << "\n";
      const twist::FlipGraph fg = twist::build_flip_graph(n, fixed, opt.max_plane_limit);
      auto found = twist::bfs_path(fg, from, to);
      if (!found) {
        throw twist::Error(twist::ErrorCode::NoPath, "search fallback found no path either");
      }
      path = std::move(*found);
    }
  } else if (opt.mode == "theorem3") {
    path = twist::matching_preserving_path(from, to, opt.matching_limit);
  } else {  // bfs
    const twist::FlipGraph fg = twist::build_flip_graph(n, fixed, opt.max_plane_limit);
    auto found = twist::bfs_path(fg, from, to);
    if (!found) {
      throw twist::Error(twist::ErrorCode::NoPath,
                         "the requested subgraphs are not connected in MP(T_" + std::to_string(n) +
                             ", " + fixed.key() + ")");
    }
    path = std::move(*found);
  }
  write_output(dump(twist::flip_path_to_json(path)), opt.out_file);
  return kExitOk;
}

struct VerifyOptions {
  std::string suite = "all";
  int n_max = 6;
  int max_plane_limit = twist::kMaxPlaneDefaultLimit;
  int matching_limit = twist::kMatchingDefaultLimit;
  std::string out_file;
};

int run_verify(const VerifyOptions& opt) {
  twist::VerificationReport report;
  if (opt.suite == "crossing") {
    report = twist::verify_crossing(opt.n_max);
  } else if (opt.suite == "theorem1") {
    report = twist::verify_theorem1(opt.n_max, opt.matching_limit);
  } else if (opt.suite == "theorem2") {
    report = twist::verify_theorem2(opt.n_max, opt.max_plane_limit);
  } else if (opt.suite == "theorem3") {
    report = twist::verify_theorem3(opt.n_max, opt.max_plane_limit, opt.matching_limit);
  } else if (opt.suite == "fig3") {
    report = twist::verify_fig3(opt.n_max, opt.max_plane_limit);
  } else {
    report = twist::verify_all(opt.n_max, opt.max_plane_limit, opt.matching_limit);
  }
  write_output(dump(twist::report_to_json(report)), opt.out_file);
  std::cerr << "verify: suite=" << report.suite << " nMax=" << report.n_max
            << " checks=" << report.checks.size() << " passed=" << (report.passed() ? "yes" : "no")
            << " (" << report.wall_ms << " ms)\n";
  return report.passed() ? kExitOk : kExitCheckFailure;
}

struct ExportOptions {
  std::string what;
  int n = 0;
  std::string fixed_file;
  std::string format = "dot";
  int max_plane_limit = twist::kMaxPlaneDefaultLimit;
  int matching_limit = twist::kMatchingDefaultLimit;
  std::string out_file;
};

int run_export(const ExportOptions& opt) {
  if (opt.what == "mp") {
    twist::EdgeSet fixed(opt.n);
    if (!opt.fixed_file.empty()) fixed = twist::load_edge_set_file(opt.fixed_file);
    const twist::FlipGraph fg = twist::build_flip_graph(opt.n, fixed, opt.max_plane_limit);
    write_output(opt.format == "json" ? dump(twist::flip_graph_to_json(fg))
                                      : twist::flip_graph_to_dot(fg),
                 opt.out_file);
  } else {
    if (!opt.fixed_file.empty()) {
      throw twist::Error(twist::ErrorCode::ParseError,
                         "--fixed does not apply to the matching graph");
    }
    const twist::MatchingGraph mg = twist::build_matching_graph(opt.n, opt.matching_limit);
    write_output(opt.format == "json" ? dump(twist::matching_graph_to_json(mg))
                                      : twist::matching_graph_to_dot(mg),
                 opt.out_file);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal plane subgraphs of the twisted graph T_n: enumeration, flip paths, "
               "matching machinery, and property verification"};
  app.require_subcommand(1);

  EnumerateOptions enum_opt;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list combinatorial objects of T_n");
  enumerate->add_option("--kind", enum_opt.kind, "what to enumerate")
      ->required()
      ->check(CLI::IsMember({"max-plane", "matchings"}));
  enumerate->add_option("--n", enum_opt.n, "ambient vertex count")->required();
  enumerate->add_option("--format", enum_opt.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "dot", "count"}));
  enumerate->add_option("--limit", enum_opt.limit, "raise the enumeration guard");
  enumerate->add_option("--out", enum_opt.out_file, "write to a file instead of stdout");

  PathOptions path_opt;
  CLI::App* path = app.add_subcommand("path", "construct or search a flip path");
  path->add_option("--mode", path_opt.mode, "construction mode")
      ->required()
      ->check(CLI::IsMember({"theorem2", "theorem3", "bfs"}));
  path->add_option("--from", path_opt.from_file, "edge-set JSON file")->required();
  path->add_option("--to", path_opt.to_file, "edge-set JSON file")->required();
  path->add_option("--fixed", path_opt.fixed_file, "edge-set JSON file of pinned edges");
  path->add_flag("--fallback", path_opt.fallback,
                 "substitute a search path if the construction hits a claim violation");
  path->add_option("--limit", path_opt.max_plane_limit, "raise the max-plane enumeration guard");
  path->add_option("--matching-limit", path_opt.matching_limit,
                   "raise the matching enumeration guard");
  path->add_option("--out", path_opt.out_file, "write to a file instead of stdout");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", verify_opt.suite, "suite to run (default all)")
      ->check(CLI::IsMember({"crossing", "theorem1", "theorem2", "theorem3", "fig3", "all"}));
  verify->add_option("--n-max", verify_opt.n_max, "largest ambient vertex count (default 6)");
  verify->add_option("--limit", verify_opt.max_plane_limit,
                     "raise the max-plane enumeration guard");
  verify->add_option("--matching-limit", verify_opt.matching_limit,
                     "raise the matching enumeration guard");
  verify->add_option("--out", verify_opt.out_file, "write the report to a file");

  ExportOptions export_opt;
  CLI::App* exporter = app.add_subcommand("export", "write a whole graph as DOT or JSON");
  exporter->add_option("--what", export_opt.what, "which graph")
      ->required()
      ->check(CLI::IsMember({"mp", "matching"}));
  exporter->add_option("--n", export_opt.n, "ambient vertex count")->required();
  exporter->add_option("--fixed", export_opt.fixed_file, "edge-set JSON file of pinned edges");
  exporter->add_option("--format", export_opt.format, "output format (default dot)")
      ->check(CLI::IsMember({"json", "dot"}));
  exporter->add_option("--limit", export_opt.max_plane_limit,
                       "raise the max-plane enumeration guard");
  exporter->add_option("--matching-limit", export_opt.matching_limit,
                       "raise the matching enumeration guard");
  exporter->add_option("--out", export_opt.out_file, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(enum_opt);
    if (path->parsed()) return run_path(path_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (exporter->parsed()) return run_export(export_opt);
  } catch (const twist::Error& e) {
    print_error(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":{\"code\":\"internal\",\"message\":\"" << e.what() << "\"}}\n";
    return kExitUsage;
  }
  return kExitUsage;
}
