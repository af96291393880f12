#include "mentee/agents/mentor.hpp"

#include <stdexcept>

namespace mentee {

std::vector<Action> MentorOracle::safe_moves(std::size_t position, bool trapped) const {
  std::vector<Action> moves;
  for (Action a = 0; a < kMoves; ++a) {
    if (trapped || layout_.at(layout_.destination(position, a)) != Cell::Trap) moves.push_back(a);
  }
  return moves;
}

Action MentorOracle::act(std::size_t position, bool trapped, Rng& rng) const {
  const auto moves = safe_moves(position, trapped);
  if (moves.empty()) throw std::logic_error("mentor cornered");
  return moves[rng.below(moves.size())];
}

}  // namespace mentee
