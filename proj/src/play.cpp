#include "ueg/play.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ueg/render.hpp"

namespace ueg {

namespace {

void show(const Session& s, std::ostream& out) {
  Scene scene;
  scene.dims = s.state.dims;
  scene.root = s.state.root;
  scene.removed = s.state.removed;
  out << render_ascii(scene);
  out << "root " << s.state.root << ", legal moves:";
  for (const Vertex& w : legal_moves(s.state)) out << ' ' << w;
  out << '\n';
}

}  // namespace

int play_game(const GridDims& dims, const Vertex& start, HumanRole human,
              std::istream& in, std::ostream& out) {
  Session session = new_session(dims, start, human);
  out << "engine plays " << to_string(session.engine_role)
      << (session.kernel_strategy ? " (winning side)" : " (losing side)") << '\n';
  if (!session.history.empty()) out << "engine moves to " << session.history.back() << '\n';

  while (!session.over()) {
    show(session, out);
    out << "your move (x y): " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\ninput ended\n";
      return 2;
    }
    std::istringstream ls(line);
    Vertex w;
    if (!(ls >> w.i >> w.j)) {
      out << "expected two integers\n";
      continue;
    }
    try {
      auto reply = engine_reply(session, w);
      if (reply) out << "engine moves to " << *reply << '\n';
    } catch (const move_error& e) {
      out << "illegal move: " << e.what() << '\n';
    }
  }
  show(session, out);
  out << (session.status == SessionStatus::engine_won ? "engine wins" : "you win") << '\n';
  return 0;
}

}  // namespace ueg
