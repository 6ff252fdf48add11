#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gonet/pattern.hpp"

using namespace gonet;

namespace {

RawPattern make_pattern(std::initializer_list<std::pair<int, PatternCell>> cells) {
  RawPattern p;
  for (auto [idx, state] : cells) p.cells[idx] = state;
  return p;
}

int index_of(int dx, int dy) {
  for (int i = 0; i < kPatternCells; ++i)
    if (kPatternOffsets[i].first == dx && kPatternOffsets[i].second == dy)
      return i;
  REQUIRE(false);
  return -1;
}

// ---- independent symmetry oracle -------------------------------------------
// Rebuilds the dihedral group from scratch as permutations of the 3x3 grid
// (row-major 0..8, centre 4), generated by closure of a quarter turn and a
// mirror. Shares nothing with kDihedralPerms.

using GridPerm = std::array<int, 9>;

GridPerm compose(const GridPerm& f, const GridPerm& g) {
  GridPerm h{};
  for (int i = 0; i < 9; ++i) h[i] = f[g[i]];
  return h;
}

std::vector<GridPerm> dihedral_group() {
  GridPerm identity{}, rot{}, mirror{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      identity[r * 3 + c] = r * 3 + c;
      rot[r * 3 + c] = (2 - c) * 3 + r;   // quarter turn
      mirror[r * 3 + c] = r * 3 + (2 - c);
    }
  std::set<GridPerm> group{identity};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const GridPerm& g : std::vector<GridPerm>(group.begin(), group.end()))
      for (const GridPerm& gen : {rot, mirror}) {
        if (group.insert(compose(gen, g)).second) grew = true;
      }
  }
  return {group.begin(), group.end()};
}

// Grid cell index (with centre) for pattern cell i.
int grid_index(int i) {
  auto [dx, dy] = kPatternOffsets[i];
  return (dy + 1) * 3 + (dx + 1);
}

uint16_t apply_grid_perm(uint16_t code, const GridPerm& perm) {
  RawPattern p = RawPattern::decode(code);
  RawPattern q;
  for (int i = 0; i < kPatternCells; ++i) {
    int target = perm[grid_index(i)];
    for (int j = 0; j < kPatternCells; ++j)
      if (grid_index(j) == target) q.cells[j] = p.cells[i];
  }
  return q.encode();
}

bool valid_geometry(uint16_t code) {
  RawPattern p = RawPattern::decode(code);
  std::set<std::pair<int, int>> off;
  for (int i = 0; i < kPatternCells; ++i)
    if (p.cells[i] == PatternCell::OffBoard)
      off.insert(kPatternOffsets[i]);
  if (off.empty()) return true;
  for (int axis = 0; axis < 2; ++axis)
    for (int sign : {-1, 1}) {
      std::set<std::pair<int, int>> side;
      for (auto [dx, dy] : kPatternOffsets)
        if ((axis == 0 ? dx : dy) == sign) side.insert({dx, dy});
      if (off == side) return true;
    }
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      std::set<std::pair<int, int>> corner;
      for (auto [dx, dy] : kPatternOffsets)
        if (dx == sx || dy == sy) corner.insert({dx, dy});
      if (off == corner) return true;
    }
  return false;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TEST_CASE("orbit enumeration oracle reproduces the 1107-class catalog") {
  const std::vector<GridPerm> group = dihedral_group();
  REQUIRE(group.size() == 8);

  std::vector<uint16_t> valid;
  for (uint32_t code = 0; code < 65536; ++code)
    if (valid_geometry(static_cast<uint16_t>(code)))
      valid.push_back(static_cast<uint16_t>(code));
  CHECK(valid.size() == 6561 + 4 * 243 + 4 * 27);  // 7641 raw patterns

  UnionFind uf(65536);
  for (uint16_t code : valid)
    for (const GridPerm& g : group) {
      uint16_t image = apply_grid_perm(code, g);
      REQUIRE(valid_geometry(image));  // transforms preserve geometry validity
      uf.unite(code, image);
    }

  std::map<int, std::vector<uint16_t>> orbits;
  for (uint16_t code : valid) orbits[uf.find(code)].push_back(code);

  int interior = 0, edge = 0, corner = 0;
  for (const auto& [root, members] : orbits) {
    RawPattern p = RawPattern::decode(members.front());
    int off = 0;
    for (PatternCell c : p.cells)
      if (c == PatternCell::OffBoard) ++off;
    if (off == 0) ++interior;
    else if (off == 3) ++edge;
    else if (off == 5) ++corner;
    else REQUIRE(false);
  }
  CHECK(orbits.size() == 1107);
  CHECK(interior == 954);
  CHECK(edge == 135);
  CHECK(corner == 18);

  // Burnside sanity on the same numbers.
  CHECK((6561 + 9 + 9 + 81 + 4 * 243) / 8 == 954);
  CHECK((243 + 27) / 2 == 135);
  CHECK((27 + 9) / 2 == 18);

  // The catalog partition must coincide with the oracle partition.
  const PatternCatalog& catalog = PatternCatalog::instance();
  REQUIRE(catalog.size() == 1107);
  std::map<int, int> root_to_id;
  for (uint16_t code : valid) {
    int id = catalog.id_of(RawPattern::decode(code));
    auto [it, inserted] = root_to_id.emplace(uf.find(code), id);
    CHECK(it->second == id);
  }
  CHECK(root_to_id.size() == 1107);

  // Orbit sizes agree class by class.
  for (const auto& [root, members] : orbits) {
    int id = root_to_id.at(root);
    CHECK(catalog.orbit_size(id) == static_cast<int>(members.size()));
  }
}

TEST_CASE("catalog class counts and orbit sum") {
  const PatternCatalog& catalog = PatternCatalog::instance();
  CHECK(catalog.size() == kNumPatternClasses);
  CHECK(catalog.count(PatternGeometry::Interior) == 954);
  CHECK(catalog.count(PatternGeometry::Edge) == 135);
  CHECK(catalog.count(PatternGeometry::Corner) == 18);
  CHECK(catalog.total_orbit_size() == 7641);
}

TEST_CASE("canonicalize is idempotent on representatives") {
  const PatternCatalog& catalog = PatternCatalog::instance();
  for (int id = 0; id < catalog.size(); ++id)
    CHECK(catalog.id_of(catalog.representative(id)) == id);
}

TEST_CASE("canonical id is invariant under every dihedral transform") {
  const PatternCatalog& catalog = PatternCatalog::instance();
  for (uint32_t code = 0; code < 65536; ++code) {
    RawPattern p = RawPattern::decode(static_cast<uint16_t>(code));
    int id;
    try {
      id = catalog.id_of(p);
    } catch (const InvalidOffBoardGeometry&) {
      continue;
    }
    for (int t = 0; t < 8; ++t)
      CHECK(catalog.id_of(transform_pattern(p, t)) == id);
  }
}

TEST_CASE("canonicalize examples") {
  RawPattern a = make_pattern({{index_of(-1, -1), PatternCell::Own}});
  RawPattern b = make_pattern({{index_of(1, 1), PatternCell::Own}});
  CHECK(canonicalize(a) == canonicalize(b));  // related by the half turn

  RawPattern empty;
  CHECK(PatternCatalog::instance().orbit_size(canonicalize(empty)) == 1);
  CHECK(canonical_encoding(empty) == empty.encode());

  RawPattern own = make_pattern({{index_of(-1, 0), PatternCell::Own}});
  RawPattern opp = make_pattern({{index_of(-1, 0), PatternCell::Opponent}});
  CHECK(canonicalize(own) != canonicalize(opp));
}

TEST_CASE("invalid off-board geometry is rejected") {
  RawPattern p = make_pattern({{index_of(0, 1), PatternCell::OffBoard}});
  CHECK_THROWS_AS(canonicalize(p), InvalidOffBoardGeometry);
  RawPattern two_sides = make_pattern({{index_of(-1, -1), PatternCell::OffBoard},
                                       {index_of(-1, 0), PatternCell::OffBoard},
                                       {index_of(-1, 1), PatternCell::OffBoard},
                                       {index_of(1, -1), PatternCell::OffBoard},
                                       {index_of(1, 0), PatternCell::OffBoard},
                                       {index_of(1, 1), PatternCell::OffBoard}});
  CHECK_THROWS_AS(canonicalize(two_sides), InvalidOffBoardGeometry);
}

TEST_CASE("extract_pattern geometry and recoloring") {
  Board board;
  RawPattern centre = extract_pattern(board, {9, 9}, StoneColor::Black);
  for (PatternCell c : centre.cells) CHECK(c == PatternCell::Empty);

  RawPattern corner = extract_pattern(board, {0, 0}, StoneColor::White);
  int off = 0;
  for (int i = 0; i < kPatternCells; ++i) {
    auto [dx, dy] = kPatternOffsets[i];
    if (dx == -1 || dy == -1) {
      CHECK(corner.cells[i] == PatternCell::OffBoard);
      ++off;
    } else {
      CHECK(corner.cells[i] == PatternCell::Empty);
    }
  }
  CHECK(off == 5);

  board.set(9, 8, PointState::Black);
  RawPattern seen_by_white = extract_pattern(board, {9, 9}, StoneColor::White);
  CHECK(seen_by_white.cells[index_of(0, -1)] == PatternCell::Opponent);

  // Mover swap flips Own and Opponent cell by cell.
  RawPattern seen_by_black = extract_pattern(board, {9, 9}, StoneColor::Black);
  for (int i = 0; i < kPatternCells; ++i) {
    PatternCell w = seen_by_white.cells[i], b = seen_by_black.cells[i];
    if (w == PatternCell::Own) CHECK(b == PatternCell::Opponent);
    else if (w == PatternCell::Opponent) CHECK(b == PatternCell::Own);
    else CHECK(b == w);
  }

  board.set(9, 9, PointState::White);
  CHECK_THROWS_AS(extract_pattern(board, {9, 9}, StoneColor::Black), CenterNotEmpty);
}

TEST_CASE("catalog csv is stable and complete") {
  const PatternCatalog& catalog = PatternCatalog::instance();
  std::ostringstream first, second;
  catalog.write_csv(first);
  catalog.write_csv(second);
  CHECK(first.str() == second.str());
  std::string text = first.str();
  int lines = static_cast<int>(std::count(text.begin(), text.end(), '\n'));
  CHECK(lines == kNumPatternClasses + 1);  // header + one row per class

  // A fresh enumeration assigns identical ids.
  PatternCatalog fresh;
  for (int id = 0; id < catalog.size(); ++id)
    CHECK(fresh.canonical_code(id) == catalog.canonical_code(id));
}
