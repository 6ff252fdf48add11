#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gonet {

enum class StoneColor : uint8_t { Black, White };

inline StoneColor opponent_of(StoneColor c) {
  return c == StoneColor::Black ? StoneColor::White : StoneColor::Black;
}

// Board intersection. x is the column (first SGF letter), y the row
// (second letter); "aa" is (0,0), "ss" is (18,18).
struct Coord {
  int8_t x = 0;
  int8_t y = 0;
  auto operator<=>(const Coord&) const = default;
};

struct MoveAction {
  StoneColor color = StoneColor::Black;
  bool pass = false;
  Coord point;  // meaningful only when !pass
  bool operator==(const MoveAction&) const = default;
};

// One parsed game, main variation only.
struct GameRecord {
  int board_size = 19;
  std::vector<Coord> setup_black;  // sorted, disjoint from setup_white
  std::vector<Coord> setup_white;  // sorted
  std::vector<MoveAction> moves;
  std::string source_id;
};

struct SgfIssue {
  enum class Kind { MalformedSgf, UnsupportedBoardSize, IoError };
  Kind kind = Kind::MalformedSgf;
  std::string source_id;
  std::string message;
};

struct SgfLoadResult {
  std::vector<GameRecord> games;
  std::vector<SgfIssue> issues;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses an SGF collection. One GameRecord per game tree, following only the
// first (main) variation. Games with SZ != 19 or structural damage are
// reported as issues; the remaining games still parse.
SgfLoadResult parse_sgf(std::string_view text, std::string_view source_id = "sgf");

// Reads an .sgf file, or every *.sgf under a directory in lexicographic
// path order. Per-file problems become issues; an unreadable root path
// throws IoError.
SgfLoadResult load_database(const std::filesystem::path& path);

// Minimal SGF writer; parse_sgf(to_sgf(g)) reproduces g.
std::string to_sgf(const GameRecord& game);

}  // namespace gonet
