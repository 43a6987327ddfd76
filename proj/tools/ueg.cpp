// ueg: classify, draw and verify undirected edge geography positions on grids,
// play against the engine, or serve the HTTP API.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ueg/billiard.hpp"
#include "ueg/kernels.hpp"
#include "ueg/oracle.hpp"
#include "ueg/play.hpp"
#include "ueg/render.hpp"
#include "ueg/service.hpp"
#include "ueg/solver.hpp"
#include "ueg/wire.hpp"

namespace {

using ueg::wire::json;

struct Position {
  int m = 0;
  int n = 0;
  int a = 0;
  int b = 0;
};

void add_board(CLI::App* cmd, Position& pos, bool vertex_required) {
  cmd->add_option("--m", pos.m, "columns")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--n", pos.n, "rows")->required()->check(CLI::PositiveNumber);
  auto* a = cmd->add_option("--a", pos.a, "root column");
  auto* b = cmd->add_option("--b", pos.b, "root row");
  if (vertex_required) {
    a->required();
    b->required();
  }
}

ueg::Vertex checked_vertex(const ueg::GridDims& dims, const Position& pos) {
  const ueg::Vertex v{pos.a, pos.b};
  if (!ueg::is_valid(dims, v)) {
    throw std::invalid_argument("vertex " + ueg::to_string(v) + " is outside the " +
                                std::to_string(dims.m) + "x" + std::to_string(dims.n) +
                                " grid");
  }
  return v;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string draw(const ueg::Scene& scene, const std::string& format) {
  return format == "svg" ? ueg::render_svg(scene) : ueg::render_ascii(scene);
}

int cmd_classify(const Position& pos, const std::string& format) {
  const auto dims = ueg::make_dims(pos.m, pos.n);
  const auto v = checked_vertex(dims, pos);
  if (format == "json") {
    std::cout << ueg::wire::classify_json(dims, v).dump() << "\n";
    return 0;
  }
  const auto outcome = ueg::classify(dims, v);
  std::cout << ueg::to_string(outcome) << " (d=" << dims.d << ")";
  if (outcome == ueg::Outcome::N) {
    std::cout << ", winning move " << ueg::winning_move(dims, v);
  }
  std::cout << "\n";
  return 0;
}

int cmd_trail(const Position& pos, bool all, const std::string& format,
              const std::string& out) {
  const auto dims = ueg::make_dims(pos.m, pos.n);
  const auto v = checked_vertex(dims, pos);
  std::vector<ueg::Trail> trails;
  if (all) {
    trails = ueg::all_trails(dims, v);
  } else if (ueg::classify(dims, v) == ueg::Outcome::P) {
    trails.push_back(ueg::build_180_trail(dims, v));
  } else {
    trails.push_back(ueg::build_closed_90_trail(dims, v));
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& t : trails) arr.push_back(ueg::wire::to_json(t));
    emit((all ? arr : arr[0]).dump() + "\n", out);
    return 0;
  }
  std::string text;
  for (const auto& t : trails) {
    ueg::Scene scene{dims, v, {}, {t}, {}, {}, ueg::EdgeSet(dims)};
    if (format == "ascii") {
      text += std::string(t.angle == ueg::Angle::right ? "90" : "180") + "-degree " +
              (t.closed ? "closed" : "open") + " trail, " +
              std::to_string(t.segments.size()) + " segments\n";
    }
    text += draw(scene, format);
  }
  emit(text, out);
  return 0;
}

int cmd_kernel(const Position& pos, std::optional<int> k, const std::string& format,
               const std::string& out) {
  const auto dims = ueg::make_dims(pos.m, pos.n);
  ueg::Scene scene{dims, {}, {}, {}, {}, {}, ueg::EdgeSet(dims)};
  json payload;
  if (k) {
    scene.kernel = ueg::s_k_kernel(dims, *k);
    payload = {{"d", dims.d}, {"k", *k}, {"kernel", ueg::wire::to_json(*scene.kernel)}};
  } else {
    const auto v = checked_vertex(dims, pos);
    payload = ueg::wire::analysis_json(dims, v);
    payload.erase("labels");
    scene.root = v;
    if (ueg::classify(dims, v) == ueg::Outcome::P) {
      scene.kernel = ueg::kernel_from_180(dims, ueg::build_180_trail(dims, v));
    } else {
      auto wk = ueg::kernel_from_90(dims, v);
      scene.kernel = wk.kernel;
      scene.move = wk.move;
      scene.removed.insert(dims, ueg::Edge(v, wk.move));
    }
  }
  if (format == "json") {
    emit(payload.dump() + "\n", out);
  } else {
    emit(draw(scene, format), out);
  }
  return 0;
}

std::vector<std::string> split(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_render(const Position& pos, bool has_vertex, std::optional<int> k,
               const std::string& overlays, const std::string& format,
               const std::string& out) {
  const auto dims = ueg::make_dims(pos.m, pos.n);
  ueg::Scene scene{dims, {}, {}, {}, {}, {}, ueg::EdgeSet(dims)};
  std::optional<ueg::Vertex> v;
  if (has_vertex) v = checked_vertex(dims, pos);

  for (const std::string& overlay : split(overlays)) {
    if (overlay != "trail" && overlay != "kernel" && overlay != "labels" && overlay != "root") {
      throw std::invalid_argument("unknown overlay '" + overlay +
                                  "' (expected trail, kernel, labels, root)");
    }
    if (overlay == "kernel" && k) {
      scene.kernel = ueg::s_k_kernel(dims, *k);
      continue;
    }
    if (!v) {
      throw std::invalid_argument("overlay '" + overlay + "' needs a vertex (--a, --b)");
    }
    const bool is_p = ueg::classify(dims, *v) == ueg::Outcome::P;
    if (overlay == "root") {
      scene.root = v;
    } else if (overlay == "labels") {
      if (is_p) {
        throw std::invalid_argument("labels need a closed 90-degree trail; " +
                                    ueg::to_string(*v) + " is a P-position (d=" +
                                    std::to_string(dims.d) + " divides neither coordinate)");
      }
      scene.labels = ueg::kernel_from_90(dims, *v).labels;
    } else if (overlay == "trail") {
      scene.trails.push_back(is_p ? ueg::build_180_trail(dims, *v)
                                  : ueg::build_closed_90_trail(dims, *v));
    } else if (is_p) {
      scene.kernel = ueg::kernel_from_180(dims, ueg::build_180_trail(dims, *v));
    } else {
      auto wk = ueg::kernel_from_90(dims, *v);
      scene.kernel = wk.kernel;
      scene.move = wk.move;
      scene.removed.insert(dims, ueg::Edge(*v, wk.move));
    }
  }
  emit(draw(scene, format), out);
  return 0;
}

struct PlayoutOptions {
  std::optional<int> up_to;
  int games = 1000;
  unsigned seed = 1;
};

int cmd_verify(std::optional<int> max_edges, std::optional<int> kernels_up_to,
               std::optional<int> sk_up_to, const PlayoutOptions& playouts,
               const std::string& json_path) {
  if (!max_edges && !kernels_up_to && !sk_up_to && !playouts.up_to) {
    max_edges = 18;
    kernels_up_to = 20;
    sk_up_to = 30;
  }
  bool ok = true;
  if (max_edges) {
    auto report = ueg::oracle::verify_sweep(*max_edges);
    std::cout << "classify vs search, boards with <= " << *max_edges << " edges: "
              << report.boards.size() << " boards, " << report.positions()
              << " positions, " << report.mismatches.size() << " mismatches ("
              << report.seconds << "s)\n";
    for (const auto& mm : report.mismatches) {
      std::cout << "  mismatch " << mm.m << "x" << mm.n << " " << mm.root << "\n";
    }
    if (!json_path.empty()) emit(report.to_json() + "\n", json_path);
    ok = ok && report.mismatches.empty();
  }
  auto print_suite = [&](const ueg::oracle::SuiteReport& r) {
    std::cout << r.name << ": " << r.checked << " checks, " << r.failures.size()
              << " failures (" << r.seconds << "s)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    ok = ok && r.ok();
  };
  if (kernels_up_to) print_suite(ueg::oracle::verify_trail_kernels(*kernels_up_to));
  if (sk_up_to) print_suite(ueg::oracle::verify_s_k(*sk_up_to));
  if (playouts.up_to) {
    print_suite(ueg::oracle::verify_playouts(*playouts.up_to, playouts.games, playouts.seed));
  }
  std::cout << (ok ? "all checks passed" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Undirected edge geography on grid graphs"};
  app.require_subcommand(1);

  Position pos;
  std::string classify_format, trail_format, kernel_format, render_format;
  std::string out;
  std::optional<int> k;

  auto* classify = app.add_subcommand("classify", "P/N outcome of a root vertex");
  add_board(classify, pos, true);
  classify->add_option("--format", classify_format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  bool all_trails = false;
  auto* trail = app.add_subcommand("trail", "the trail certifying a root's outcome");
  add_board(trail, pos, true);
  trail->add_flag("--all", all_trails, "every trail with two segment-ends at the root");
  trail->add_option("--format", trail_format)->default_val("ascii")->check(
      CLI::IsMember({"ascii", "svg", "json"}));
  trail->add_option("--out", out, "output file (default stdout)");

  auto* kernel = app.add_subcommand("kernel", "even kernel at a root, or S_k");
  add_board(kernel, pos, false);
  kernel->add_option("--k", k, "closed-form kernel S_k, 0 <= k <= d");
  kernel->add_option("--format", kernel_format)->default_val("ascii")->check(
      CLI::IsMember({"ascii", "svg", "json"}));
  kernel->add_option("--out", out);

  std::string overlays;
  auto* render = app.add_subcommand("render", "draw a board with overlays");
  add_board(render, pos, false);
  render->add_option("--overlay", overlays, "comma list of trail,kernel,labels,root")
      ->default_val("trail,kernel,root");
  render->add_option("--k", k, "use S_k for the kernel overlay");
  render->add_option("--format", render_format)->default_val("svg")->check(
      CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out);

  std::optional<int> max_edges, kernels_up_to, sk_up_to;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "exhaustive checks against the oracles");
  verify->add_option("--max-edges", max_edges, "classify vs brute force up to this edge count");
  verify->add_option("--kernels-up-to", kernels_up_to, "trail kernel suite for m, n <= N");
  verify->add_option("--sk-up-to", sk_up_to, "S_k suite for m, n <= N");
  verify->add_option("--json", json_path, "write the sweep report as JSON");
  PlayoutOptions playouts;
  verify->add_option("--playouts-up-to", playouts.up_to,
                     "random-opponent playouts on every board with m, n <= N");
  verify->add_option("--games", playouts.games, "playouts per board")->default_val(1000);
  verify->add_option("--seed", playouts.seed, "playout RNG seed")->default_val(1);

  std::string human = "auto";
  auto* play = app.add_subcommand("play", "play against the engine in the terminal");
  add_board(play, pos, true);
  play->add_option("--human", human, "your role")->check(
      CLI::IsMember({"first", "second", "auto"}));

  ueg::service::Config config;
  long ttl_hours = 24;
  auto* serve = app.add_subcommand("serve", "run the HTTP API");
  serve->add_option("--port", config.port)->default_val(8080);
  serve->add_option("--host", config.host)->default_val("0.0.0.0");
  serve->add_option("--ttl-hours", ttl_hours, "session lifetime")->default_val(24);
  serve->add_option("--hint-budget", config.hint_budget, "search nodes per hint")
      ->default_val(ueg::default_hint_budget);
  serve->add_option("--static-dir", config.static_dir, "UI assets served under /");
  serve->add_option("--snapshot", config.snapshot_path, "JSON session snapshot file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cmd_classify(pos, classify_format);
    if (*trail) return cmd_trail(pos, all_trails, trail_format, out);
    if (*kernel) {
      if (!k && (kernel->count("--a") == 0 || kernel->count("--b") == 0)) {
        throw std::invalid_argument("kernel needs --a and --b, or --k");
      }
      return cmd_kernel(pos, k, kernel_format, out);
    }
    if (*render) {
      const bool has_vertex = render->count("--a") > 0 && render->count("--b") > 0;
      return cmd_render(pos, has_vertex, k, overlays, render_format, out);
    }
    if (*verify) return cmd_verify(max_edges, kernels_up_to, sk_up_to, playouts, json_path);
    if (*play) {
      const auto dims = ueg::make_dims(pos.m, pos.n);
      const auto role = human == "first"    ? ueg::HumanRole::first
                        : human == "second" ? ueg::HumanRole::second
                                            : ueg::HumanRole::automatic;
      return ueg::play_game(dims, checked_vertex(dims, pos), role, std::cin, std::cout);
    }
    if (*serve) {
      config.session_ttl = std::chrono::hours(ttl_hours);
      return ueg::service::run(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
