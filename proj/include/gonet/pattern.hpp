#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gonet/board.hpp"

namespace gonet {

// Cell states of a 3x3 pattern around an empty intersection, seen from the
// player about to move there. Values double as base-4 digits.
enum class PatternCell : uint8_t { Empty = 0, Own = 1, Opponent = 2, OffBoard = 3 };

inline constexpr int kPatternCells = 8;
inline constexpr int kNumPatternClasses = 1107;
inline constexpr int kNumRawPatterns = 6561 + 4 * 243 + 4 * 27;  // 7641
inline constexpr uint16_t kInvalidPatternId = 0xFFFF;

// Neighbor offsets (dx, dy) in encoding order; cells[i] belongs to
// kPatternOffsets[i] relative to the centre.
inline constexpr std::array<std::pair<int, int>, kPatternCells> kPatternOffsets = {{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

struct RawPattern {
  std::array<PatternCell, kPatternCells> cells{};

  // Base-4 value with cells[0] as the most significant digit, so numeric
  // order equals lexicographic order on the digit string.
  uint16_t encode() const {
    uint16_t e = 0;
    for (PatternCell c : cells) e = static_cast<uint16_t>(e * 4 + static_cast<uint16_t>(c));
    return e;
  }
  static RawPattern decode(uint16_t code) {
    RawPattern p;
    for (int i = kPatternCells - 1; i >= 0; --i) {
      p.cells[i] = static_cast<PatternCell>(code & 3);
      code >>= 2;
    }
    return p;
  }
  bool operator==(const RawPattern&) const = default;
};

enum class PatternGeometry : uint8_t { Interior, Edge, Corner };
const char* geometry_name(PatternGeometry g);

class CenterNotEmpty : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class InvalidOffBoardGeometry : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cell-index permutations of the 8 symmetries of the square:
// transform t maps cells[i] to cells[kDihedralPerms[t][i]].
extern const std::array<std::array<uint8_t, kPatternCells>, 8> kDihedralPerms;

RawPattern transform_pattern(const RawPattern& p, int t);

// Smallest encoding over the 8 transforms.
uint16_t canonical_encoding(const RawPattern& p);

// Reads the 8 neighbor cells of an empty intersection, recolored relative to
// `mover`. Throws CenterNotEmpty.
RawPattern extract_pattern(const Board& board, Coord pos, StoneColor mover);

// All 1107 equivalence classes of valid patterns. Ids are positions in the
// ascending sort of canonical encodings, so they are stable across runs.
class PatternCatalog {
 public:
  PatternCatalog();
  static const PatternCatalog& instance();

  int size() const { return static_cast<int>(reps_.size()); }
  int id_of(const RawPattern& p) const;  // throws InvalidOffBoardGeometry
  const RawPattern& representative(int id) const { return reps_[id]; }
  uint16_t canonical_code(int id) const { return reps_[id].encode(); }
  PatternGeometry geometry(int id) const;
  int orbit_size(int id) const { return orbit_sizes_[id]; }
  int count(PatternGeometry g) const;
  int total_orbit_size() const;

  // CSV columns: id, encoding (8 base-4 digits), geometry, orbit_size.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<RawPattern> reps_;
  std::vector<int> orbit_sizes_;
  std::vector<uint16_t> code_to_id_;  // 4^8 entries, kInvalidPatternId if invalid
};

inline int canonicalize(const RawPattern& p) {
  return PatternCatalog::instance().id_of(p);
}

// Three text rows; centre drawn as '+', Own as 'X', Opponent as 'O',
// Empty as '.', OffBoard as '#'.
std::string render_pattern(const RawPattern& p);

}  // namespace gonet
