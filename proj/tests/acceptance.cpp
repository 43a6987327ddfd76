// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ueg/billiard.hpp"
#include "ueg/kernels.hpp"
#include "ueg/oracle.hpp"
#include "ueg/render.hpp"
#include "ueg/solver.hpp"

using namespace ueg;

namespace {

struct Result {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 20) notes.push_back(why);
  }
  void note(const std::string& text) { notes.push_back(text); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream ss;
  ss.precision(3);
  ss << s << "s";
  return ss.str();
}

std::string board(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

Result sweep() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  oracle::SweepReport report = oracle::verify_sweep(18);
  const double took = seconds_since(t0);
  for (const auto& mm : report.mismatches) {
    r.fail(board(mm.m, mm.n) + " root " + to_string(mm.root) + ": classify " +
           to_string(mm.classified) + ", search " + to_string(mm.searched));
  }
  if (took >= 60) r.fail("took " + fmt_seconds(took) + " (limit 60s)");
  r.note(std::to_string(report.boards.size()) + " boards, " +
         std::to_string(report.positions()) + " positions, " +
         std::to_string(report.mismatches.size()) + " mismatches, " + fmt_seconds(took));

  {
    const auto t1 = std::chrono::steady_clock::now();
    const GridDims dims = make_dims(4, 4);
    oracle::GameSearch search(dims, {24, true, std::nullopt});
    int bad = 0;
    for (const Vertex& v : all_vertices(dims)) {
      bad += *search.outcome(initial_state(dims, v)) != classify(dims, v);
    }
    r.note("stretch 4x4: " + std::to_string(bad) + " mismatches, " +
           std::to_string(search.memo_size()) + " states, " + fmt_seconds(seconds_since(t1)) +
           " (non-blocking)");
  }
  return r;
}

Result corner_rule() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (int m = 2; m <= 30; ++m) {
    for (int n = 2; n <= 30; ++n) {
      const GridDims dims = make_dims(m, n);
      const bool p = classify(dims, {1, 1}) == Outcome::P;
      if (p != (dims.d != 1)) r.fail(board(m, n) + ": corner classified wrongly");
      ++checked;
    }
  }
  const double took = seconds_since(t0);
  if (took >= 1) r.fail("took " + fmt_seconds(took) + " (limit 1s)");
  r.note(std::to_string(checked) + " boards, " + fmt_seconds(took));
  return r;
}

Result worked_example() {
  Result r;
  const GridDims dims = make_dims(11, 8);
  if (classify(dims, {2, 4}) != Outcome::P) r.fail("(2,4) is not P");
  if (classify(dims, {3, 4}) != Outcome::N) r.fail("(3,4) is not N");
  try {
    const Vertex w = winning_move(dims, {3, 4});
    if (w != Vertex{2, 4}) r.fail("winning move from (3,4) is " + to_string(w));
  } catch (const std::exception& e) {
    r.fail(std::string("winning_move threw: ") + e.what());
  }

  VertexSet p_kernel = kernel_from_180(dims, build_180_trail(dims, {2, 4}));
  if (!p_kernel.contains({2, 4})) r.fail("180 kernel misses (2,4)");
  if (!is_even_kernel(dims, p_kernel)) r.fail("180 kernel at (2,4) fails the checker");

  WinningKernel wk = kernel_from_90(dims, {3, 4});
  EdgeSet cut(dims);
  cut.insert(dims, Edge({3, 4}, wk.move));
  if (!wk.kernel.contains(wk.move)) r.fail("90 kernel misses the move target");
  if (!is_even_kernel(dims, cut, wk.kernel)) r.fail("90 kernel at (3,4) fails the checker on G - uv");
  r.note("kernel sizes: P " + std::to_string(p_kernel.size()) + ", N " +
         std::to_string(wk.kernel.size()));
  return r;
}

Result trail_kernels() {
  Result r;
  oracle::SuiteReport report = oracle::verify_trail_kernels(20);
  for (const std::string& f : report.failures) r.fail(f);
  if (report.seconds >= 120) r.fail("took " + fmt_seconds(report.seconds) + " (limit 120s)");
  r.note(std::to_string(report.checked) + " vertices, " +
         std::to_string(report.failures.size()) + " failures, " + fmt_seconds(report.seconds));
  return r;
}

Result s_k_suite() {
  Result r;
  oracle::SuiteReport report = oracle::verify_s_k(30);
  if (report.seconds >= 30) r.fail("took " + fmt_seconds(report.seconds) + " (limit 30s)");

  // Break failures down by (d, k) and cause.
  std::map<std::string, int> causes;
  for (const std::string& f : report.failures) {
    const auto sk = f.find(" S_");
    const auto paren = f.find(')');
    std::string key = sk == std::string::npos ? f : f.substr(sk + 1, paren - sk) +
                                                        f.substr(paren + 1);
    ++causes[key];
  }
  if (!report.failures.empty()) {
    r.pass = false;
    r.note(std::to_string(report.failures.size()) + " failures out of " +
           std::to_string(report.checked) + " checks, " + fmt_seconds(report.seconds));
    for (const auto& [key, count] : causes) r.note(key + ": " + std::to_string(count) + " boards");
    r.note("first: " + report.failures.front());
    r.note("when d = 2 every admissible vertex has both coordinates odd, so i+j and i-j are even and S_1 is empty");
  } else {
    r.note(std::to_string(report.checked) + " checks, " + fmt_seconds(report.seconds));
  }
  return r;
}

// Every line an opponent can choose, against the deterministic engine.
long exhaust(const Session& s, Result& r, const std::string& where) {
  if (s.over()) {
    if (s.status != SessionStatus::engine_won) r.fail(where + ": engine lost");
    return 1;
  }
  long lines = 0;
  for (const Vertex& w : legal_moves(s.state)) {
    Session next = s;
    engine_reply(next, w);
    lines += exhaust(next, r, where);
  }
  return lines;
}

Result strategy() {
  Result r;
  oracle::SuiteReport random = oracle::verify_playouts(8, 1000, 20231015);
  for (const std::string& f : random.failures) r.fail(f);
  r.note(std::to_string(random.checked) + " seeded random-opponent games on every board up to 8x8, " +
         std::to_string(random.failures.size()) + " failures, " + fmt_seconds(random.seconds));

  long lines = 0;
  int roots = 0;
  for (auto [m, n] : oracle::boards_up_to(17)) {
    const GridDims dims = make_dims(m, n);
    for (const Vertex& v : all_vertices(dims)) {
      lines += exhaust(new_session(dims, v), r, board(m, n) + " " + to_string(v));
      ++roots;
    }
  }
  r.note(std::to_string(lines) + " complete opponent lines from " + std::to_string(roots) +
         " roots on boards with <= 17 edges");
  return r;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Result figure_one() {
  Result r;
  const GridDims dims = make_dims(5, 3);
  const Vertex v{2, 2};
  auto trails = all_trails(dims, v);
  if (trails.size() != 2) r.fail("expected exactly two trails, got " + std::to_string(trails.size()));

  RayPath ne = trace_ray(dims, v, Direction::NE);
  RayPath nw = trace_ray(dims, v, Direction::NW);
  RayPath sw = trace_ray(dims, v, Direction::SW);
  if (!ne.returned() || ne.returned_from() == Direction::SW) r.fail("NE ray is not a closed 90-degree loop");
  if (!nw.hit_corner() || !sw.hit_corner()) r.fail("NW and SW rays do not both reach corners");

  bool closed_90 = false, open = false;
  for (const Trail& t : trails) {
    if (t.closed && t.angle == Angle::right && t.segments == ne.segments) closed_90 = true;
    if (!t.closed && t.angle == Angle::right) open = true;
  }
  if (!closed_90) r.fail("closed 90-degree trail from the NE ray missing");
  if (!open) r.fail("open trail from the NW+SW pair missing");

  Scene scene;
  scene.dims = dims;
  scene.root = v;
  scene.trails = trails;
  const std::string first = render_svg(scene);
  const std::string second = render_svg(scene);
  if (first != second) r.fail("SVG differs between renders");
  std::ostringstream hex;
  hex << std::hex << fnv1a(first);
  r.note("svg " + std::to_string(first.size()) + " bytes, fnv1a " + hex.str());
  return r;
}

Result bipartite_converse() {
  Result r;
  int positions = 0;
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; m * n <= 12; ++n) {
      const GridDims dims = make_dims(m, n);
      for (const Vertex& v : all_vertices(dims)) {
        const bool p = oracle::brute_outcome(initial_state(dims, v)) == Outcome::P;
        const bool kernel = !oracle::enumerate_even_kernels(dims, EdgeSet(dims), v, 1).empty();
        if (p != kernel) r.fail(board(m, n) + " " + to_string(v));
        ++positions;
      }
    }
  }
  r.note(std::to_string(positions) + " positions");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"1 classifier agrees with exhaustive search (<= 18 edges)", sweep},
      {"2 corner rule for 2 <= m, n <= 30", corner_rule},
      {"3 11x8 worked example", worked_example},
      {"4 trail kernel constructions up to 20x20", trail_kernels},
      {"5 closed-form S_k kernels up to 30x30", s_k_suite},
      {"6 engine never loses from the winning side", strategy},
      {"7 two trails at (2,2) of 5x3 and stable SVG", figure_one},
      {"8 P iff an even kernel exists (<= 12 vertices)", bipartite_converse},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r = run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double took = seconds_since(t0);
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << name << "] " << fmt_seconds(took) << "\n";
    for (const std::string& note : r.notes) std::cout << "     " << note << "\n";
    failed += !r.pass;
  }
  std::cout << "SKIP [9 web UI smoke] secondary component not built\n";
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
