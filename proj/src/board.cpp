#include "gonet/board.hpp"

namespace gonet {

namespace {

constexpr int kDx[4] = {1, -1, 0, 0};
constexpr int kDy[4] = {0, 0, 1, -1};

}  // namespace

bool Board::group_has_liberty(int x, int y) const {
  const PointState color = at(x, y);
  std::array<bool, kPoints> seen{};
  std::array<int16_t, kPoints> stack;
  int top = 0;
  stack[top++] = static_cast<int16_t>(y * kSize + x);
  seen[y * kSize + x] = true;
  while (top > 0) {
    int p = stack[--top];
    int px = p % kSize, py = p / kSize;
    for (int d = 0; d < 4; ++d) {
      int nx = px + kDx[d], ny = py + kDy[d];
      if (!on_board(nx, ny)) continue;
      PointState s = at(nx, ny);
      if (s == PointState::Empty) return true;
      int np = ny * kSize + nx;
      if (s == color && !seen[np]) {
        seen[np] = true;
        stack[top++] = static_cast<int16_t>(np);
      }
    }
  }
  return false;
}

int Board::group_liberties(int x, int y) const {
  if (at(x, y) == PointState::Empty) return 0;
  const PointState color = at(x, y);
  std::array<bool, kPoints> seen{};
  std::array<bool, kPoints> liberty{};
  std::array<int16_t, kPoints> stack;
  int top = 0, libs = 0;
  stack[top++] = static_cast<int16_t>(y * kSize + x);
  seen[y * kSize + x] = true;
  while (top > 0) {
    int p = stack[--top];
    int px = p % kSize, py = p / kSize;
    for (int d = 0; d < 4; ++d) {
      int nx = px + kDx[d], ny = py + kDy[d];
      if (!on_board(nx, ny)) continue;
      int np = ny * kSize + nx;
      PointState s = at(nx, ny);
      if (s == PointState::Empty) {
        if (!liberty[np]) {
          liberty[np] = true;
          ++libs;
        }
      } else if (s == color && !seen[np]) {
        seen[np] = true;
        stack[top++] = static_cast<int16_t>(np);
      }
    }
  }
  return libs;
}

int Board::remove_group(int x, int y) {
  const PointState color = at(x, y);
  std::array<int16_t, kPoints> stack;
  int top = 0, removed = 0;
  stack[top++] = static_cast<int16_t>(y * kSize + x);
  set(x, y, PointState::Empty);
  ++removed;
  while (top > 0) {
    int p = stack[--top];
    int px = p % kSize, py = p / kSize;
    for (int d = 0; d < 4; ++d) {
      int nx = px + kDx[d], ny = py + kDy[d];
      if (!on_board(nx, ny) || at(nx, ny) != color) continue;
      set(nx, ny, PointState::Empty);
      ++removed;
      stack[top++] = static_cast<int16_t>(ny * kSize + nx);
    }
  }
  return removed;
}

int Board::play(StoneColor color, Coord pos, bool* suicide) {
  if (suicide) *suicide = false;
  if (at(pos.x, pos.y) != PointState::Empty)
    throw OccupiedPoint("point (" + std::to_string(pos.x) + "," +
                        std::to_string(pos.y) + ") is occupied");
  const PointState own = to_point(color);
  const PointState opp = to_point(opponent_of(color));
  set(pos.x, pos.y, own);
  int removed = 0;
  for (int d = 0; d < 4; ++d) {
    int nx = pos.x + kDx[d], ny = pos.y + kDy[d];
    if (on_board(nx, ny) && at(nx, ny) == opp && !group_has_liberty(nx, ny))
      removed += remove_group(nx, ny);
  }
  if (!group_has_liberty(pos.x, pos.y)) {
    removed += remove_group(pos.x, pos.y);
    if (suicide) *suicide = true;
  }
  return removed;
}

int Board::stone_count() const {
  int n = 0;
  for (PointState s : grid_)
    if (s != PointState::Empty) ++n;
  return n;
}

bool Board::is_eye_like(StoneColor color, Coord pos) const {
  if (at(pos.x, pos.y) != PointState::Empty) return false;
  const PointState own = to_point(color);
  for (int d = 0; d < 4; ++d) {
    int nx = pos.x + kDx[d], ny = pos.y + kDy[d];
    if (on_board(nx, ny) && at(nx, ny) != own) return false;
  }
  return true;
}

std::vector<ReplayEvent> replay(const GameRecord& game) {
  std::vector<ReplayEvent> events;
  replay_visit(game, [&](int index, StoneColor color, Coord pos,
                         const Board& before) {
    events.push_back({index, color, pos, before});
  });
  return events;
}

ReplayStats replay_stats(const GameRecord& game) {
  return replay_visit(game, [](int, StoneColor, Coord, const Board&) {});
}

}  // namespace gonet
