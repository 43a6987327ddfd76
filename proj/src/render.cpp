#include "ueg/render.hpp"

#include <sstream>

namespace ueg {

namespace {

bool on_any_trail(const Scene& scene, const Vertex& v) {
  for (const Trail& t : scene.trails) {
    for (const Segment& seg : t.segments) {
      if (seg.contains(to_point(v))) return true;
    }
  }
  return false;
}

}  // namespace

std::string render_ascii(const Scene& scene) {
  const GridDims& dims = scene.dims;
  std::string out;
  out.reserve(static_cast<std::size_t>((dims.m + 1) * dims.n));
  for (int j = dims.n; j >= 1; --j) {
    for (int i = 1; i <= dims.m; ++i) {
      const Vertex v{i, j};
      char c = '.';
      if (scene.root && *scene.root == v) {
        c = '@';
      } else if (scene.move && *scene.move == v) {
        c = '*';
      } else if (scene.kernel && scene.kernel->contains(v)) {
        c = '#';
      } else if (on_any_trail(scene, v)) {
        c = '+';
      } else if (scene.labels && scene.labels->at(v) == Label::positive) {
        c = 'o';
      }
      out.push_back(c);
    }
    out.push_back('\n');
  }
  return out;
}

std::string render_svg(const Scene& scene, int cell) {
  const GridDims& dims = scene.dims;
  const int width = (dims.m + 1) * cell;
  const int height = (dims.n + 1) * cell;
  auto X = [&](int x) { return x * cell; };
  auto Y = [&](int y) { return (dims.n + 1 - y) * cell; };
  const int r = cell / 8 + 1;

  std::ostringstream ss;
  ss << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
     << "\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";

  if (scene.labels) {
    ss << "  <g id=\"labels\" fill=\"#9ecae1\" stroke=\"none\">\n";
    for (const Vertex& v : scene.labels->with_label(Label::positive)) {
      ss << "    <rect x=\"" << X(v.i) - cell / 2 << "\" y=\"" << Y(v.j) - cell / 2
         << "\" width=\"" << cell << "\" height=\"" << cell << "\"/>\n";
    }
    ss << "  </g>\n";
  }

  ss << "  <g id=\"edges\" stroke=\"#888888\" stroke-width=\"1\">\n";
  for (int idx = 0; idx < dims.edge_count(); ++idx) {
    if (scene.removed.test(idx)) continue;
    const Edge e = edge_at(dims, idx);
    ss << "    <line x1=\"" << X(e.lo().i) << "\" y1=\"" << Y(e.lo().j) << "\" x2=\""
       << X(e.hi().i) << "\" y2=\"" << Y(e.hi().j) << "\"/>\n";
  }
  ss << "  </g>\n";

  if (!scene.trails.empty()) {
    ss << "  <g id=\"trail\" stroke=\"#1f4fd8\" stroke-width=\"3\" fill=\"none\">\n";
    for (const Trail& t : scene.trails) {
      for (const Segment& seg : t.segments) {
        ss << "    <line x1=\"" << X(seg.p.x) << "\" y1=\"" << Y(seg.p.y)
           << "\" x2=\"" << X(seg.q.x) << "\" y2=\"" << Y(seg.q.y) << "\"/>\n";
      }
    }
    ss << "  </g>\n";
  }

  ss << "  <g id=\"vertices\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const Vertex& v : all_vertices(dims)) {
    const bool in_kernel = scene.kernel && scene.kernel->contains(v);
    ss << "    <circle cx=\"" << X(v.i) << "\" cy=\"" << Y(v.j) << "\" r=\"" << r
       << "\" fill=\"" << (in_kernel ? "black" : "white") << "\"/>\n";
  }
  ss << "  </g>\n";

  auto ring = [&](const Vertex& v, const char* id, const char* colour) {
    ss << "  <circle id=\"" << id << "\" cx=\"" << X(v.i) << "\" cy=\"" << Y(v.j)
       << "\" r=\"" << 2 * r << "\" fill=\"none\" stroke=\"" << colour
       << "\" stroke-width=\"3\"/>\n";
  };
  if (scene.root) ring(*scene.root, "root", "#1f4fd8");
  if (scene.move) ring(*scene.move, "move", "#d62728");

  ss << "</svg>\n";
  return ss.str();
}

}  // namespace ueg
