#include "gonet/playout.hpp"

#include "gonet/rng.hpp"

namespace gonet {

const char* policy_name(PolicyKind k) {
  return k == PolicyKind::UniformRandom ? "uniform" : "greedy";
}

PolicyKind policy_from_name(std::string_view name) {
  if (name == "uniform") return PolicyKind::UniformRandom;
  if (name == "greedy") return PolicyKind::GreedyCapture;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

namespace {

// Liberties of every opponent group whose liberty count is exactly 1 are
// capture moves. One board sweep, flood-filling each group once.
std::vector<Coord> capture_moves(const Board& board, StoneColor mover) {
  const PointState opp = to_point(opponent_of(mover));
  std::array<bool, Board::kPoints> seen{};
  std::vector<Coord> out;
  for (int y = 0; y < Board::kSize; ++y) {
    for (int x = 0; x < Board::kSize; ++x) {
      if (seen[y * Board::kSize + x] || board.at(x, y) != opp) continue;
      // flood fill this group, collecting liberties
      std::array<int16_t, Board::kPoints> stack;
      int top = 0;
      int libs = 0;
      Coord last_lib{};
      std::array<bool, Board::kPoints> lib_seen{};
      stack[top++] = static_cast<int16_t>(y * Board::kSize + x);
      seen[y * Board::kSize + x] = true;
      while (top > 0) {
        int p = stack[--top];
        int px = p % Board::kSize, py = p / Board::kSize;
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dy[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          int nx = px + dx[d], ny = py + dy[d];
          if (!Board::on_board(nx, ny)) continue;
          int np = ny * Board::kSize + nx;
          PointState s = board.at(nx, ny);
          if (s == PointState::Empty) {
            if (!lib_seen[np]) {
              lib_seen[np] = true;
              ++libs;
              last_lib = Coord{static_cast<int8_t>(nx), static_cast<int8_t>(ny)};
            }
          } else if (s == opp && !seen[np]) {
            seen[np] = true;
            stack[top++] = static_cast<int16_t>(np);
          }
        }
      }
      if (libs == 1) out.push_back(last_lib);
    }
  }
  return out;
}

std::vector<Coord> open_moves(const Board& board, StoneColor mover) {
  std::vector<Coord> out;
  for (int y = 0; y < Board::kSize; ++y)
    for (int x = 0; x < Board::kSize; ++x) {
      Coord c{static_cast<int8_t>(x), static_cast<int8_t>(y)};
      if (board.at(x, y) == PointState::Empty && !board.is_eye_like(mover, c))
        out.push_back(c);
    }
  return out;
}

}  // namespace

GameRecord generate_game(const PlayoutPolicy& policy, uint64_t game_seed,
                         std::string source_id) {
  SplitMix64 rng(game_seed);
  GameRecord game;
  game.source_id = std::move(source_id);
  Board board;
  StoneColor mover = StoneColor::Black;
  int consecutive_passes = 0;
  while (static_cast<int>(game.moves.size()) < policy.max_moves &&
         consecutive_passes < 2) {
    Coord chosen{};
    bool found = false;
    if (policy.kind == PolicyKind::GreedyCapture) {
      std::vector<Coord> captures = capture_moves(board, mover);
      for (Coord c : captures) {
        if (!found || c.y * Board::kSize + c.x <
                          chosen.y * Board::kSize + chosen.x) {
          chosen = c;
          found = true;
        }
      }
    }
    if (!found) {
      std::vector<Coord> candidates = open_moves(board, mover);
      if (!candidates.empty()) {
        chosen = candidates[rng.next_below(candidates.size())];
        found = true;
      }
    }
    if (found) {
      game.moves.push_back({mover, false, chosen});
      board.play(mover, chosen);
      consecutive_passes = 0;
    } else {
      game.moves.push_back({mover, true, {}});
      ++consecutive_passes;
    }
    mover = opponent_of(mover);
  }
  return game;
}

std::vector<GameRecord> generate_games(const PlayoutPolicy& policy, int n_games) {
  std::vector<GameRecord> games;
  games.reserve(std::max(n_games, 0));
  for (int g = 0; g < n_games; ++g) {
    std::string id = std::string(policy_name(policy.kind)) + "-s" +
                     std::to_string(policy.seed) + "-g" + std::to_string(g);
    games.push_back(generate_game(policy, policy.seed + static_cast<uint64_t>(g),
                                  std::move(id)));
  }
  return games;
}

}  // namespace gonet
