#include "twist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <sstream>

#include "twist/constructive.hpp"
#include "twist/error.hpp"

namespace twist {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string failure_detail(const std::string& context, const std::exception& e) {
  return context + ": " + e.what();
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return nlohmann::json{{"suite", report.suite},
                        {"nMax", report.n_max},
                        {"passed", report.passed()},
                        {"checks", std::move(checks)}};
}

VerificationReport verify_crossing(int n_max) {
  const auto start = Clock::now();
  VerificationReport report{"crossing", n_max, {}, 0};

  long pairs = 0;
  bool symmetric = true, endpoint_ok = true, characterized = true;
  std::string first_failure;
  const auto strictly_inside = [](const Edge& inner, const Edge& outer) {
    return outer.lo < inner.lo && inner.lo < outer.hi && outer.lo < inner.hi &&
           inner.hi < outer.hi;
  };
  for (int n = 2; n <= n_max; ++n) {
    const std::vector<Edge> edges = all_edges(n);
    for (const Edge& e : edges) {
      for (const Edge& f : edges) {
        ++pairs;
        const bool ef = crosses(e, f);
        if (ef != crosses(f, e)) symmetric = false;
        const bool shares = e.lo == f.lo || e.lo == f.hi || e.hi == f.lo || e.hi == f.hi;
        if (shares && ef) endpoint_ok = false;
        const bool e_in_f = strictly_inside(e, f);
        const bool f_in_e = strictly_inside(f, e);
        if ((e_in_f && f_in_e) || ef != (e_in_f || f_in_e)) characterized = false;
        if ((!symmetric || !endpoint_ok || !characterized) && first_failure.empty()) {
          first_failure = edge_label(e) + " vs " + edge_label(f) + " at n=" + std::to_string(n);
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "pairs=" << pairs;
  if (!first_failure.empty()) detail << " first_failure=" << first_failure;
  report.checks.push_back({"symmetry", symmetric, detail.str()});
  report.checks.push_back({"shared-endpoint", endpoint_ok, detail.str()});
  report.checks.push_back({"containment-characterization", characterized, detail.str()});
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_theorem1(int n_max, int matching_limit) {
  const auto start = Clock::now();
  VerificationReport report{"theorem1", n_max, {}, 0};
  for (int n = 4; n <= n_max; n += 2) {
    CheckResult check{"matching-graph-connected n=" + std::to_string(n), false, ""};
    try {
      const MatchingGraph mg = build_matching_graph(n, matching_limit);
      check.pass = is_connected(mg);
      std::ostringstream detail;
      detail << "nodes=" << mg.node_count() << " links=" << mg.link_count();
      check.detail = detail.str();
    } catch (const std::exception& e) {
      check.detail = failure_detail("build", e);
    }
    report.checks.push_back(std::move(check));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_theorem2(int n_max, int max_plane_limit) {
  const auto start = Clock::now();
  VerificationReport report{"theorem2", n_max, {}, 0};

  for (int n = 4; n <= n_max; ++n) {
    CheckResult paths_check{"constructive-paths n=" + std::to_string(n), true, ""};
    CheckResult search_check{"search-cross-check n=" + std::to_string(n), true, ""};
    CheckResult connect_check{"fixed-set-connectivity n=" + std::to_string(n), true, ""};
    const bool run_search = n <= 6;
    const bool run_connectivity = n <= 7;
    long pairs = 0;
    long path_nodes = 0;
    std::set<std::size_t> edge_sizes;
    std::set<EdgeSet> intersections;
    try {
      const std::vector<MaxPlaneSubgraph> subgraphs = enumerate_maximal_plane(n, max_plane_limit);
      for (const MaxPlaneSubgraph& g : subgraphs) edge_sizes.insert(g.edges().size());
      for (const MaxPlaneSubgraph& r : subgraphs) {
        for (const MaxPlaneSubgraph& q : subgraphs) {
          ++pairs;
          const EdgeSet fixed = edge_set_intersection(r.edges(), q.edges());
          if (run_connectivity) intersections.insert(fixed);
          bool constructive_ok = false;
          try {
            const FlipPath path = fixed_edge_flip_path(r, q, fixed);
            validate_flip_path(path);
            if (path.nodes.front() != r || path.nodes.back() != q) {
              throw Error(ErrorCode::InvalidPath, "endpoints do not match the request");
            }
            path_nodes += static_cast<long>(path.nodes.size());
            constructive_ok = true;
          } catch (const std::exception& e) {
            if (paths_check.pass) {
              paths_check.pass = false;
              paths_check.detail =
                  failure_detail(r.key() + " -> " + q.key() + " (F=" + fixed.key() + ")", e);
            }
          }
          if (run_search) {
            const FlipGraph fg = build_flip_graph(n, fixed, max_plane_limit);
            const bool search_found = bfs_path(fg, r, q).has_value();
            if ((search_found != constructive_ok || !search_found) && search_check.pass) {
              search_check.pass = false;
              search_check.detail = r.key() + " -> " + q.key() + " constructive=" +
                                    (constructive_ok ? "yes" : "no") + " search=" +
                                    (search_found ? "yes" : "no");
            }
          }
        }
      }
      // Connectivity of MP(T_n, F) for every distinct F that arises as the
      // intersection of two maximal plane subgraphs.
      if (run_connectivity) {
        for (const EdgeSet& fixed : intersections) {
          const FlipGraph fg = build_flip_graph(n, fixed, max_plane_limit);
          if (!is_connected(fg) && connect_check.pass) {
            connect_check.pass = false;
            connect_check.detail = "MP(T_" + std::to_string(n) + ", " + fixed.key() +
                                   ") is disconnected (" + std::to_string(fg.node_count()) +
                                   " nodes)";
          }
        }
        if (connect_check.pass) {
          connect_check.detail = "fixed_sets=" + std::to_string(intersections.size());
        }
      }
      std::ostringstream detail;
      detail << "subgraphs=" << subgraphs.size() << " pairs=" << pairs
             << " path_nodes=" << path_nodes << " edge_sizes=";
      bool first = true;
      for (std::size_t s : edge_sizes) {
        if (!first) detail << "/";
        detail << s;
        first = false;
      }
      if (paths_check.pass) paths_check.detail = detail.str();
      if (run_search && search_check.pass) {
        search_check.detail = "pairs=" + std::to_string(pairs);
      }
    } catch (const std::exception& e) {
      paths_check.pass = false;
      paths_check.detail = failure_detail("enumeration", e);
      search_check.pass = false;
      search_check.detail = paths_check.detail;
      connect_check.pass = false;
      connect_check.detail = paths_check.detail;
    }
    report.checks.push_back(std::move(paths_check));
    if (run_search) report.checks.push_back(std::move(search_check));
    if (run_connectivity) report.checks.push_back(std::move(connect_check));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_theorem3(int n_max, int max_plane_limit, int matching_limit) {
  const auto start = Clock::now();
  VerificationReport report{"theorem3", n_max, {}, 0};

  for (int n = 4; n <= n_max; n += 2) {
    CheckResult paths_check{"matching-preserving-paths n=" + std::to_string(n), true, ""};
    CheckResult induced_check{"induced-connectivity n=" + std::to_string(n), false, ""};
    try {
      const std::vector<MaxPlaneSubgraph> subgraphs = enumerate_maximal_plane(n, max_plane_limit);
      std::vector<MaxPlaneSubgraph> with_matching;
      for (const MaxPlaneSubgraph& g : subgraphs) {
        if (!perfect_matchings_of(g).empty()) with_matching.push_back(g);
      }

      long pairs = 0;
      long path_nodes = 0;
      for (const MaxPlaneSubgraph& s : with_matching) {
        for (const MaxPlaneSubgraph& r : with_matching) {
          ++pairs;
          try {
            const FlipPath path = matching_preserving_path(s, r, matching_limit);
            validate_flip_path(path);
            if (path.nodes.front() != s || path.nodes.back() != r) {
              throw Error(ErrorCode::InvalidPath, "endpoints do not match the request");
            }
            for (const MaxPlaneSubgraph& node : path.nodes) {
              if (perfect_matchings_of(node).empty()) {
                throw Error(ErrorCode::NoPerfectMatching,
                            "path node " + node.key() + " has no perfect matching");
              }
            }
            path_nodes += static_cast<long>(path.nodes.size());
          } catch (const std::exception& e) {
            if (paths_check.pass) {
              paths_check.pass = false;
              paths_check.detail = failure_detail(s.key() + " -> " + r.key(), e);
            }
          }
        }
      }
      if (paths_check.pass) {
        std::ostringstream detail;
        detail << "subgraphs=" << subgraphs.size() << " with_matching=" << with_matching.size()
               << " pairs=" << pairs << " path_nodes=" << path_nodes;
        paths_check.detail = detail.str();
      }

      // Independent confirmation: breadth-first search over the subgraph of
      // MP(T_n) induced by the matching-containing nodes.
      const FlipGraph fg = build_flip_graph(n, EdgeSet(n), max_plane_limit);
      std::vector<char> in_induced(static_cast<std::size_t>(fg.node_count()), 0);
      int induced_count = 0;
      for (int i = 0; i < fg.node_count(); ++i) {
        if (!perfect_matchings_of(fg.node(i)).empty()) {
          in_induced[static_cast<std::size_t>(i)] = 1;
          ++induced_count;
        }
      }
      int reached = 0;
      if (induced_count > 0) {
        int first = 0;
        while (!in_induced[static_cast<std::size_t>(first)]) ++first;
        std::vector<char> seen(static_cast<std::size_t>(fg.node_count()), 0);
        std::deque<int> queue{first};
        seen[static_cast<std::size_t>(first)] = 1;
        reached = 1;
        while (!queue.empty()) {
          const int u = queue.front();
          queue.pop_front();
          for (int v : fg.neighbors(u)) {
            if (in_induced[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
              seen[static_cast<std::size_t>(v)] = 1;
              ++reached;
              queue.push_back(v);
            }
          }
        }
      }
      induced_check.pass = induced_count > 0 && reached == induced_count;
      induced_check.detail =
          "induced_nodes=" + std::to_string(induced_count) + " reached=" + std::to_string(reached);
    } catch (const std::exception& e) {
      paths_check.pass = false;
      paths_check.detail = failure_detail("enumeration", e);
      induced_check.detail = paths_check.detail;
    }
    report.checks.push_back(std::move(paths_check));
    report.checks.push_back(std::move(induced_check));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_fig3(int n_max, int max_plane_limit) {
  if (n_max < 6) {
    throw Error(ErrorCode::OutOfRange, "the matchless-witness check lives at n = 6; need n-max >= 6");
  }
  const auto start = Clock::now();
  VerificationReport report{"fig3", n_max, {}, 0};
  CheckResult check{"matchless-witness n=6", false, ""};
  try {
    const std::vector<MaxPlaneSubgraph> subgraphs = enumerate_maximal_plane(6, max_plane_limit);
    int matchless = 0;
    std::string witness;
    for (const MaxPlaneSubgraph& g : subgraphs) {
      if (perfect_matchings_of(g).empty()) {
        if (matchless == 0) witness = g.key();
        ++matchless;
      }
    }
    check.pass = matchless >= 1;
    check.detail = "subgraphs=" + std::to_string(subgraphs.size()) +
                   " matchless=" + std::to_string(matchless) +
                   (witness.empty() ? "" : " witness=" + witness);
  } catch (const std::exception& e) {
    check.detail = failure_detail("enumeration", e);
  }
  report.checks.push_back(std::move(check));
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_all(int n_max, int max_plane_limit, int matching_limit) {
  const auto start = Clock::now();
  VerificationReport report{"all", n_max, {}, 0};
  const auto absorb = [&report](const VerificationReport& sub) {
    for (const CheckResult& c : sub.checks) {
      report.checks.push_back({sub.suite + "/" + c.name, c.pass, c.detail});
    }
  };
  absorb(verify_crossing(n_max));
  absorb(verify_theorem1(n_max, matching_limit));
  absorb(verify_theorem2(n_max, max_plane_limit));
  absorb(verify_theorem3(n_max, max_plane_limit, matching_limit));
  if (n_max >= 6) absorb(verify_fig3(n_max, max_plane_limit));
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace twist
