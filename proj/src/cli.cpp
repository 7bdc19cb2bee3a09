#include "singlink/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "singlink/cover.hpp"
#include "singlink/errors.hpp"
#include "singlink/io.hpp"
#include "singlink/lens.hpp"
#include "singlink/normalization.hpp"

namespace singlink {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
  out << text;
}

Json error_json(std::string_view code, const std::string& message) {
  Json e;
  e["code"] = code;
  e["message"] = message;
  Json out;
  out["error"] = std::move(e);
  return out;
}

// Runs fn(0..n-1) on up to `jobs` threads; results keep their index order.
template <typename T>
std::vector<T> parallel_map(std::size_t jobs, std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, n));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

struct Emit {
  std::string dot_dir;
  std::string json_path;

  void dot(const std::string& name, const PlumbingGraph& g) const {
    if (!dot_dir.empty()) write_file(fs::path(dot_dir) / (name + ".dot"), to_dot(g, name));
  }

  void json(const Json& j, std::ostream& out) const {
    const std::string text = j.dump(2) + "\n";
    if (json_path.empty()) out << text;
    else write_file(json_path, text);
  }
};

void add_emit_options(CLI::App* sub, Emit& emit) {
  sub->add_option("--emit-dot", emit.dot_dir, "Directory for Graphviz renderings");
  sub->add_option("--emit-json", emit.json_path, "Write the JSON result to this file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolution graphs, Hirzebruch-Jung bamboos and lens spaces of surface singularities", "singlink"};
  app.require_subcommand(1);
  std::size_t jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for batch runs")->check(CLI::PositiveNumber);

  std::function<void()> action;

  auto* hj = app.add_subcommand("hj", "Negative continued fraction of n/q");
  std::string fraction;
  hj->add_option("fraction", fraction, "n/q")->required();
  hj->callback([&] {
    action = [&] {
      const auto [n, q] = parse_fraction(fraction);
      out << to_string(hj_expand(n, q)) << "\n";
    };
  });

  auto* qo = app.add_subcommand("quasi-ordinary", "Bamboo and link of z^n = x y^q");
  std::int64_t qn = 0, qq = 0;
  qo->add_option("n", qn)->required();
  qo->add_option("q", qq)->required();
  qo->callback([&] {
    action = [&] {
      out << to_string(resolve_quasi_ordinary(qn, qq)) << "\n" << to_string(lens_of_quasi_ordinary(qn, qq)) << "\n";
    };
  });

  auto* le = app.add_subcommand("lens-eq", "Decide whether two lens spaces are homeomorphic");
  std::string l1, l2;
  bool unoriented = false;
  le->add_option("first", l1, "L(n,q)")->required();
  le->add_option("second", l2, "L(n,q)")->required();
  le->add_flag("--unoriented", unoriented, "Allow orientation reversal");
  le->callback([&] {
    action = [&] { out << (lens_equivalent(parse_lens(l1), parse_lens(l2), !unoriented) ? "true" : "false") << "\n"; };
  });

  auto* check = app.add_subcommand("check", "Determinant, definiteness and shape of a graph file");
  std::string graph_path;
  check->add_option("graph", graph_path, "Graph JSON file")->required();
  check->callback([&] {
    action = [&] {
      const PlumbingGraph g = graph_from_json(parse_json(read_file(graph_path)));
      Json j;
      j["determinant"] = big_to_json(determinant(g));
      j["negative_definite"] = is_negative_definite(g);
      j["bamboo"] = is_bamboo(g);
      j["tree"] = is_tree(g);
      j["cycle_rank"] = cycle_rank(g);
      j["warnings"] = g.warnings();
      out << j.dump(2) << "\n";
    };
  });

  auto* mini = app.add_subcommand("minimize", "Blow down (-1)-curves until the graph is minimal");
  std::string policy = "lowest";
  std::uint64_t seed = 0;
  Emit mini_emit;
  mini->add_option("graph", graph_path, "Graph JSON file")->required();
  mini->add_option("--policy", policy, "Order of blow-downs")->check(CLI::IsMember({"lowest", "highest", "random"}));
  mini->add_option("--seed", seed, "Seed for --policy random");
  add_emit_options(mini, mini_emit);
  mini->callback([&] {
    action = [&] {
      const PlumbingGraph g = graph_from_json(parse_json(read_file(graph_path)));
      SelectionPolicy p = policy == "highest" ? SelectionPolicy::highest()
                          : policy == "random" ? SelectionPolicy::random(seed)
                                               : SelectionPolicy::lowest();
      const MinimizeResult r = minimize(g, p);
      Json certs = Json::array();
      for (const auto& c : r.certificates) certs.push_back(to_json(c));
      Json j;
      j["graph"] = to_json(r.graph);
      j["certificates"] = std::move(certs);
      mini_emit.dot("minimal", r.graph);
      mini_emit.json(j, out);
    };
  });

  auto* rc = app.add_subcommand("resolve-curve", "Embedded resolution graph of a plane curve from Puiseux data");
  std::vector<std::string> curve_paths;
  bool merge = false;
  Emit rc_emit;
  rc->add_option("--curve,curve", curve_paths, "Branch JSON file(s)")->required();
  rc->add_flag("--merge-duplicates", merge, "Merge repeated branches by adding their weights");
  add_emit_options(rc, rc_emit);
  rc->callback([&] {
    action = [&] {
      CurveOptions opts;
      opts.merge_duplicates = merge;
      const auto results = parallel_map<Json>(jobs, curve_paths.size(), [&](std::size_t i) {
        return to_json(resolve_curve(branches_from_json(parse_json(read_file(curve_paths[i]))), opts));
      });
      for (std::size_t i = 0; i < results.size(); ++i) {
        const std::string name = curve_paths.size() > 1 ? "curve" + std::to_string(i + 1) : "curve";
        rc_emit.dot(name, graph_from_json(results[i]["graph"]));
      }
      rc_emit.json(results.size() == 1 ? results.front() : Json(results), out);
    };
  });

  auto* cc = app.add_subcommand("cyclic-cover", "Resolution graph of z^d = f(x, y)");
  std::string curve_path, covering_path;
  std::vector<std::int64_t> degrees;
  bool do_minimize = false;
  Emit cc_emit;
  auto* curve_opt = cc->add_option("--curve", curve_path, "Branch JSON file for f");
  auto* covering_opt = cc->add_option("--covering", covering_path, "Hand-made covering graph JSON");
  curve_opt->excludes(covering_opt);
  cc->add_option("-d,--degree", degrees, "Cover degree(s); several run as a batch");
  cc->add_flag("--minimize", do_minimize, "Blow down to the minimal good resolution");
  cc->add_flag("--merge-duplicates", merge, "Merge repeated branches by adding their weights");
  add_emit_options(cc, cc_emit);
  cc->callback([&] {
    action = [&] {
      PipelineOptions opts;
      opts.minimize = do_minimize;
      opts.curve.merge_duplicates = merge;
      std::vector<PipelineReport> reports;
      if (!covering_path.empty()) {
        reports.push_back(resolve_from_covering(covering_from_json(parse_json(read_file(covering_path))), opts));
      } else {
        if (curve_path.empty()) fail(ErrorCode::ParseError, "cyclic-cover needs --curve or --covering");
        if (degrees.empty()) fail(ErrorCode::ParseError, "cyclic-cover --curve needs -d");
        const auto branches = branches_from_json(parse_json(read_file(curve_path)));
        reports = parallel_map<PipelineReport>(jobs, degrees.size(),
                                               [&](std::size_t i) { return resolve_cyclic(branches, degrees[i], opts); });
      }
      Json all = Json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        const std::string prefix = reports.size() > 1 ? "d" + std::to_string(degrees[i]) + "_" : "";
        if (r.base_resolution) cc_emit.dot(prefix + "base", r.base_resolution->graph);
        cc_emit.dot(prefix + "resolved", r.resolved);
        cc_emit.dot(prefix + "minimal", r.minimal);
        all.push_back(to_json(r));
      }
      cc_emit.json(all.size() == 1 ? all.front() : all, out);
    };
  });

  auto* nz = app.add_subcommand("normalization", "Pinched solid tori along the singular locus");
  std::string branch_text;
  nz->add_option("--branches", branch_text, "Degrees per branch, e.g. \"2,1,3;1\"")->required();
  nz->callback([&] {
    action = [&] {
      const auto data = parse_branch_list(branch_text);
      Json list = Json::array();
      for (const auto& b : data) list.push_back(to_json(b));
      Json j;
      j["branches"] = std::move(list);
      j["manifold_link"] = is_manifold_link(data);
      out << j.dump(2) << "\n";
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("UsageError", e.what()).dump() << "\n";
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    err << error_json(to_string(e.code()), e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << error_json("InternalError", e.what()).dump() << "\n";
    return 3;
  }
}

}  // namespace singlink
