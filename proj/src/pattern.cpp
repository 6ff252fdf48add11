#include "gonet/pattern.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace gonet {

namespace {

int offset_index(int dx, int dy) {
  for (int i = 0; i < kPatternCells; ++i)
    if (kPatternOffsets[i].first == dx && kPatternOffsets[i].second == dy)
      return i;
  return -1;
}

std::array<std::array<uint8_t, kPatternCells>, 8> make_perms() {
  // (dx, dy) images under the symmetries of the square.
  using Map = std::pair<int, int> (*)(int, int);
  static constexpr Map maps[8] = {
      [](int dx, int dy) { return std::pair{dx, dy}; },
      [](int dx, int dy) { return std::pair{-dy, dx}; },
      [](int dx, int dy) { return std::pair{-dx, -dy}; },
      [](int dx, int dy) { return std::pair{dy, -dx}; },
      [](int dx, int dy) { return std::pair{-dx, dy}; },
      [](int dx, int dy) { return std::pair{dx, -dy}; },
      [](int dx, int dy) { return std::pair{dy, dx}; },
      [](int dx, int dy) { return std::pair{-dy, -dx}; },
  };
  std::array<std::array<uint8_t, kPatternCells>, 8> perms{};
  for (int t = 0; t < 8; ++t)
    for (int i = 0; i < kPatternCells; ++i) {
      auto [dx, dy] = kPatternOffsets[i];
      auto [tx, ty] = maps[t](dx, dy);
      perms[t][i] = static_cast<uint8_t>(offset_index(tx, ty));
    }
  return perms;
}

// Bitmasks (over cell indices) of OffBoard sets that can occur on a board:
// none, one full side, or the L of two adjacent sides.
struct GeometryMasks {
  uint8_t side[4];    // x==-1, x==+1, y==-1, y==+1
  uint8_t corner[4];  // (-,-), (-,+), (+,-), (+,+)

  GeometryMasks() {
    auto mask_of = [](auto pred) {
      uint8_t m = 0;
      for (int i = 0; i < kPatternCells; ++i) {
        auto [dx, dy] = kPatternOffsets[i];
        if (pred(dx, dy)) m |= static_cast<uint8_t>(1 << i);
      }
      return m;
    };
    side[0] = mask_of([](int dx, int) { return dx == -1; });
    side[1] = mask_of([](int dx, int) { return dx == 1; });
    side[2] = mask_of([](int, int dy) { return dy == -1; });
    side[3] = mask_of([](int, int dy) { return dy == 1; });
    corner[0] = side[0] | side[2];
    corner[1] = side[0] | side[3];
    corner[2] = side[1] | side[2];
    corner[3] = side[1] | side[3];
  }

  bool valid(uint8_t m, PatternGeometry* g = nullptr) const {
    if (m == 0) {
      if (g) *g = PatternGeometry::Interior;
      return true;
    }
    for (uint8_t s : side)
      if (m == s) {
        if (g) *g = PatternGeometry::Edge;
        return true;
      }
    for (uint8_t c : corner)
      if (m == c) {
        if (g) *g = PatternGeometry::Corner;
        return true;
      }
    return false;
  }
};

const GeometryMasks& geometry_masks() {
  static const GeometryMasks masks;
  return masks;
}

uint8_t offboard_mask(const RawPattern& p) {
  uint8_t m = 0;
  for (int i = 0; i < kPatternCells; ++i)
    if (p.cells[i] == PatternCell::OffBoard) m |= static_cast<uint8_t>(1 << i);
  return m;
}

}  // namespace

const std::array<std::array<uint8_t, kPatternCells>, 8> kDihedralPerms = make_perms();

const char* geometry_name(PatternGeometry g) {
  switch (g) {
    case PatternGeometry::Interior: return "interior";
    case PatternGeometry::Edge: return "edge";
    case PatternGeometry::Corner: return "corner";
  }
  return "?";
}

RawPattern transform_pattern(const RawPattern& p, int t) {
  RawPattern q;
  for (int i = 0; i < kPatternCells; ++i)
    q.cells[kDihedralPerms[t][i]] = p.cells[i];
  return q;
}

uint16_t canonical_encoding(const RawPattern& p) {
  uint16_t best = p.encode();
  for (int t = 1; t < 8; ++t)
    best = std::min(best, transform_pattern(p, t).encode());
  return best;
}

RawPattern extract_pattern(const Board& board, Coord pos, StoneColor mover) {
  if (board.at(pos.x, pos.y) != PointState::Empty)
    throw CenterNotEmpty("pattern centre (" + std::to_string(pos.x) + "," +
                         std::to_string(pos.y) + ") is not empty");
  const PointState own = to_point(mover);
  RawPattern p;
  for (int i = 0; i < kPatternCells; ++i) {
    auto [dx, dy] = kPatternOffsets[i];
    int nx = pos.x + dx, ny = pos.y + dy;
    if (!Board::on_board(nx, ny)) {
      p.cells[i] = PatternCell::OffBoard;
    } else {
      PointState s = board.at(nx, ny);
      p.cells[i] = s == PointState::Empty ? PatternCell::Empty
                   : s == own             ? PatternCell::Own
                                          : PatternCell::Opponent;
    }
  }
  return p;
}

PatternCatalog::PatternCatalog() {
  code_to_id_.assign(1 << (2 * kPatternCells), kInvalidPatternId);
  // canonical encoding -> number of distinct raw encodings in the class
  std::map<uint16_t, int> classes;
  for (uint32_t code = 0; code < code_to_id_.size(); ++code) {
    RawPattern p = RawPattern::decode(static_cast<uint16_t>(code));
    if (!geometry_masks().valid(offboard_mask(p))) continue;
    ++classes[canonical_encoding(p)];
  }
  reps_.reserve(classes.size());
  orbit_sizes_.reserve(classes.size());
  for (auto [canon, orbit] : classes) {  // std::map iterates ascending
    reps_.push_back(RawPattern::decode(canon));
    orbit_sizes_.push_back(orbit);
  }
  for (uint32_t code = 0; code < code_to_id_.size(); ++code) {
    RawPattern p = RawPattern::decode(static_cast<uint16_t>(code));
    if (!geometry_masks().valid(offboard_mask(p))) continue;
    uint16_t canon = canonical_encoding(p);
    auto it = std::lower_bound(reps_.begin(), reps_.end(), canon,
                               [](const RawPattern& r, uint16_t c) {
                                 return r.encode() < c;
                               });
    code_to_id_[code] = static_cast<uint16_t>(it - reps_.begin());
  }
}

const PatternCatalog& PatternCatalog::instance() {
  static const PatternCatalog catalog;
  return catalog;
}

int PatternCatalog::id_of(const RawPattern& p) const {
  uint16_t id = code_to_id_[p.encode()];
  if (id == kInvalidPatternId)
    throw InvalidOffBoardGeometry("off-board cells do not form a side or corner");
  return id;
}

PatternGeometry PatternCatalog::geometry(int id) const {
  PatternGeometry g = PatternGeometry::Interior;
  geometry_masks().valid(offboard_mask(reps_[id]), &g);
  return g;
}

int PatternCatalog::count(PatternGeometry g) const {
  int n = 0;
  for (int id = 0; id < size(); ++id)
    if (geometry(id) == g) ++n;
  return n;
}

int PatternCatalog::total_orbit_size() const {
  int n = 0;
  for (int s : orbit_sizes_) n += s;
  return n;
}

void PatternCatalog::write_csv(std::ostream& out) const {
  out << "id,encoding,geometry,orbit_size\n";
  for (int id = 0; id < size(); ++id) {
    uint16_t code = reps_[id].encode();
    std::string digits(kPatternCells, '0');
    for (int i = kPatternCells - 1; i >= 0; --i) {
      digits[i] = static_cast<char>('0' + (code & 3));
      code >>= 2;
    }
    out << id << ',' << digits << ',' << geometry_name(geometry(id)) << ','
        << orbit_sizes_[id] << '\n';
  }
}

std::string render_pattern(const RawPattern& p) {
  auto glyph = [](PatternCell c) {
    switch (c) {
      case PatternCell::Empty: return '.';
      case PatternCell::Own: return 'X';
      case PatternCell::Opponent: return 'O';
      case PatternCell::OffBoard: return '#';
    }
    return '?';
  };
  std::string out;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) {
        out.push_back('+');
      } else {
        out.push_back(glyph(p.cells[offset_index(dx, dy)]));
      }
    }
    if (dy < 1) out.push_back('\n');
  }
  return out;
}

}  // namespace gonet
