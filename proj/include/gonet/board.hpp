#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "gonet/sgf.hpp"

namespace gonet {

enum class PointState : uint8_t { Empty = 0, Black = 1, White = 2 };

inline PointState to_point(StoneColor c) {
  return c == StoneColor::Black ? PointState::Black : PointState::White;
}

class OccupiedPoint : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 19x19 board with standard capture rules. Groups and liberties use
// orthogonal adjacency. Ko is not tracked: recorded games are replayed as
// given. A suicided group is removed from the board.
class Board {
 public:
  static constexpr int kSize = 19;
  static constexpr int kPoints = kSize * kSize;

  Board() { grid_.fill(PointState::Empty); }

  static bool on_board(int x, int y) {
    return x >= 0 && x < kSize && y >= 0 && y < kSize;
  }

  PointState at(int x, int y) const { return grid_[y * kSize + x]; }
  void set(int x, int y, PointState s) { grid_[y * kSize + x] = s; }

  // Places a stone, removes adjacent opponent groups left without liberties,
  // then the played group itself if it has none (suicide). Returns the total
  // number of stones removed. Throws OccupiedPoint.
  int play(StoneColor color, Coord pos, bool* suicide = nullptr);

  int stone_count() const;

  // True when every on-board orthogonal neighbor of an empty point holds a
  // stone of `color` (off-board sides count as friendly).
  bool is_eye_like(StoneColor color, Coord pos) const;

  // Liberty count of the group containing (x, y); 0 for an empty point.
  int group_liberties(int x, int y) const;

  bool operator==(const Board&) const = default;

 private:
  int remove_group(int x, int y);
  bool group_has_liberty(int x, int y) const;

  std::array<PointState, kPoints> grid_;
};

struct ReplayEvent {
  int move_index = 0;
  StoneColor color = StoneColor::Black;
  Coord position;
  Board board_before;  // state prior to the stone placement
};

struct ReplayStats {
  int events = 0;
  int skipped = 0;  // moves onto occupied points, dropped with a diagnostic
  int suicides = 0;
  int captured = 0;  // stones removed over the whole game
};

// Replays a game, invoking f(move_index, color, pos, board_before) for every
// Play move that lands on an empty point. Setup stones are placed first and
// emit nothing; passes emit nothing; occupied-point moves are skipped.
template <typename F>
ReplayStats replay_visit(const GameRecord& game, F&& f) {
  ReplayStats stats;
  Board board;
  for (Coord c : game.setup_black) board.set(c.x, c.y, PointState::Black);
  for (Coord c : game.setup_white) board.set(c.x, c.y, PointState::White);
  int index = -1;
  for (const MoveAction& m : game.moves) {
    ++index;
    if (m.pass) continue;
    if (board.at(m.point.x, m.point.y) != PointState::Empty) {
      ++stats.skipped;
      continue;
    }
    f(index, m.color, m.point, static_cast<const Board&>(board));
    bool suicide = false;
    stats.captured += board.play(m.color, m.point, &suicide);
    if (suicide) ++stats.suicides;
    ++stats.events;
  }
  return stats;
}

std::vector<ReplayEvent> replay(const GameRecord& game);
ReplayStats replay_stats(const GameRecord& game);

}  // namespace gonet
