#include "gonet/sgf.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gonet {

namespace {

struct RawProp {
  std::string id;
  std::vector<std::string> values;
};

using RawNode = std::vector<RawProp>;

struct Cursor {
  const char* p;
  const char* end;

  bool done() const { return p >= end; }
  char peek() const { return *p; }
  void skip_ws() {
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
  }
};

class ParseFail : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads the text between '[' and the matching unescaped ']'. "\]" and "\\"
// lose their backslash; other escaped characters are kept verbatim.
std::string read_value(Cursor& c) {
  ++c.p;  // consume '['
  std::string out;
  while (!c.done()) {
    char ch = *c.p;
    if (ch == '\\') {
      ++c.p;
      if (c.done()) break;
      out.push_back(*c.p++);
      continue;
    }
    if (ch == ']') {
      ++c.p;
      return out;
    }
    out.push_back(ch);
    ++c.p;
  }
  throw ParseFail("unterminated property value");
}

// Property identifier: letters; lowercase ones are FF[3] filler and dropped.
std::string read_ident(Cursor& c) {
  std::string id;
  while (!c.done() && std::isalpha(static_cast<unsigned char>(*c.p))) {
    if (std::isupper(static_cast<unsigned char>(*c.p))) id.push_back(*c.p);
    ++c.p;
  }
  return id;
}

RawNode read_node(Cursor& c) {
  RawNode node;
  while (true) {
    c.skip_ws();
    if (c.done() || !std::isalpha(static_cast<unsigned char>(c.peek()))) break;
    RawProp prop;
    prop.id = read_ident(c);
    c.skip_ws();
    if (c.done() || c.peek() != '[') throw ParseFail("property without value");
    while (!c.done() && c.peek() == '[') {
      prop.values.push_back(read_value(c));
      c.skip_ws();
    }
    node.push_back(std::move(prop));
  }
  return node;
}

// Skips a whole subtree, honoring brackets so parentheses inside property
// values do not unbalance the scan.
void skip_tree(Cursor& c) {
  int depth = 0;
  while (!c.done()) {
    char ch = *c.p;
    if (ch == '[') {
      read_value(c);
      continue;
    }
    ++c.p;
    if (ch == '(') ++depth;
    if (ch == ')') {
      --depth;
      if (depth == 0) return;
    }
  }
  throw ParseFail("unbalanced parentheses");
}

// Consumes one game tree, appending its main-line nodes. Only the first
// subtree at each branch point is followed.
void read_tree_main_line(Cursor& c, std::vector<RawNode>& nodes) {
  if (c.done() || c.peek() != '(') throw ParseFail("expected '('");
  ++c.p;
  c.skip_ws();
  if (c.done() || c.peek() != ';') throw ParseFail("missing root node");
  bool saw_branch = false;
  while (true) {
    c.skip_ws();
    if (c.done()) throw ParseFail("unbalanced parentheses");
    char ch = c.peek();
    if (ch == ';') {
      if (saw_branch) throw ParseFail("node after variation list");
      ++c.p;
      nodes.push_back(read_node(c));
    } else if (ch == '(') {
      if (!saw_branch) {
        read_tree_main_line(c, nodes);
        saw_branch = true;
      } else {
        skip_tree(c);
      }
    } else if (ch == ')') {
      ++c.p;
      return;
    } else {
      throw ParseFail(std::string("unexpected character '") + ch + "'");
    }
  }
}

bool decode_point(const std::string& v, int board_size, Coord* out) {
  if (v.size() != 2) return false;
  int x = v[0] - 'a';
  int y = v[1] - 'a';
  if (x < 0 || x >= board_size || y < 0 || y >= board_size) return false;
  *out = Coord{static_cast<int8_t>(x), static_cast<int8_t>(y)};
  return true;
}

void insert_coord(std::vector<Coord>& set, Coord c) {
  auto it = std::lower_bound(set.begin(), set.end(), c);
  if (it == set.end() || *it != c) set.insert(it, c);
}

void erase_coord(std::vector<Coord>& set, Coord c) {
  auto it = std::lower_bound(set.begin(), set.end(), c);
  if (it != set.end() && *it == c) set.erase(it);
}

// Expands an AB/AW value, including FF[4] compressed rectangles "aa:cc".
void add_setup_points(const std::string& v, GameRecord& game, bool black,
                      std::vector<std::string>& warnings) {
  auto add_one = [&](Coord c) {
    if (black) {
      insert_coord(game.setup_black, c);
      erase_coord(game.setup_white, c);
    } else {
      insert_coord(game.setup_white, c);
      erase_coord(game.setup_black, c);
    }
  };
  auto colon = v.find(':');
  if (colon == std::string::npos) {
    Coord c;
    if (decode_point(v, game.board_size, &c)) {
      add_one(c);
    } else {
      warnings.push_back("bad setup point '" + v + "' skipped");
    }
    return;
  }
  Coord a, b;
  if (!decode_point(v.substr(0, colon), game.board_size, &a) ||
      !decode_point(v.substr(colon + 1), game.board_size, &b)) {
    warnings.push_back("bad setup rectangle '" + v + "' skipped");
    return;
  }
  for (int x = std::min(a.x, b.x); x <= std::max(a.x, b.x); ++x)
    for (int y = std::min(a.y, b.y); y <= std::max(a.y, b.y); ++y)
      add_one(Coord{static_cast<int8_t>(x), static_cast<int8_t>(y)});
}

class UnsupportedSize : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

GameRecord interpret_nodes(const std::vector<RawNode>& nodes,
                           std::string source_id,
                           std::vector<std::string>& warnings) {
  GameRecord game;
  game.source_id = std::move(source_id);
  for (const RawNode& node : nodes) {
    for (const RawProp& prop : node) {
      if (prop.id == "SZ") {
        int sz = 0;
        try {
          sz = std::stoi(prop.values.at(0));
        } catch (const std::exception&) {
          throw ParseFail("bad SZ value");
        }
        if (sz != 19) throw UnsupportedSize("SZ[" + prop.values.at(0) + "]");
      } else if (prop.id == "AB" || prop.id == "AW") {
        for (const std::string& v : prop.values)
          add_setup_points(v, game, prop.id == "AB", warnings);
      } else if (prop.id == "B" || prop.id == "W") {
        StoneColor color = prop.id == "B" ? StoneColor::Black : StoneColor::White;
        const std::string& v = prop.values.at(0);
        if (v.empty() || v == "tt") {
          game.moves.push_back({color, true, {}});
        } else {
          Coord c;
          if (decode_point(v, game.board_size, &c)) {
            game.moves.push_back({color, false, c});
          } else {
            warnings.push_back("bad move '" + prop.id + "[" + v + "]' skipped");
          }
        }
      }
      // HA and everything else: recognized or unknown, no game-state effect.
    }
  }
  return game;
}

}  // namespace

SgfLoadResult parse_sgf(std::string_view text, std::string_view source_id) {
  SgfLoadResult result;
  Cursor c{text.data(), text.data() + text.size()};
  int index = 0;
  while (true) {
    // Tolerate junk (BOM, headers) between game trees.
    while (!c.done() && c.peek() != '(') ++c.p;
    if (c.done()) break;
    std::string game_id = std::string(source_id) + "#" + std::to_string(index);
    ++index;
    std::vector<RawNode> nodes;
    try {
      read_tree_main_line(c, nodes);
    } catch (const ParseFail& e) {
      result.issues.push_back(
          {SgfIssue::Kind::MalformedSgf, game_id, e.what()});
      break;  // structure lost; cannot trust the rest of the buffer
    }
    std::vector<std::string> warnings;
    try {
      result.games.push_back(interpret_nodes(nodes, game_id, warnings));
    } catch (const UnsupportedSize& e) {
      result.issues.push_back(
          {SgfIssue::Kind::UnsupportedBoardSize, game_id, e.what()});
    } catch (const ParseFail& e) {
      result.issues.push_back(
          {SgfIssue::Kind::MalformedSgf, game_id, e.what()});
    }
    for (std::string& w : warnings)
      result.issues.push_back(
          {SgfIssue::Kind::MalformedSgf, game_id, std::move(w)});
  }
  if (index == 0 && !text.empty()) {
    result.issues.push_back({SgfIssue::Kind::MalformedSgf,
                             std::string(source_id), "no game tree found"});
  }
  return result;
}

SgfLoadResult load_database(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::file_status st = fs::status(path, ec);
  if (ec || st.type() == fs::file_type::not_found)
    throw IoError("cannot read '" + path.string() + "'");

  std::vector<fs::path> files;
  if (fs::is_directory(st)) {
    for (const auto& entry : fs::recursive_directory_iterator(path, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".sgf")
        files.push_back(entry.path());
    }
    if (ec) throw IoError("cannot list '" + path.string() + "'");
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                return a.generic_string() < b.generic_string();
              });
  } else {
    files.push_back(path);
  }

  SgfLoadResult result;
  for (const fs::path& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      result.issues.push_back(
          {SgfIssue::Kind::IoError, file.string(), "unreadable file skipped"});
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    SgfLoadResult one = parse_sgf(text, file.generic_string());
    std::move(one.games.begin(), one.games.end(),
              std::back_inserter(result.games));
    std::move(one.issues.begin(), one.issues.end(),
              std::back_inserter(result.issues));
  }
  return result;
}

namespace {

void append_point(std::string& out, Coord c) {
  out.push_back(static_cast<char>('a' + c.x));
  out.push_back(static_cast<char>('a' + c.y));
}

}  // namespace

std::string to_sgf(const GameRecord& game) {
  std::string out = "(;GM[1]FF[4]SZ[" + std::to_string(game.board_size) + "]";
  if (!game.setup_black.empty()) {
    out += "AB";
    for (Coord c : game.setup_black) {
      out.push_back('[');
      append_point(out, c);
      out.push_back(']');
    }
  }
  if (!game.setup_white.empty()) {
    out += "AW";
    for (Coord c : game.setup_white) {
      out.push_back('[');
      append_point(out, c);
      out.push_back(']');
    }
  }
  for (const MoveAction& m : game.moves) {
    out.push_back(';');
    out.push_back(m.color == StoneColor::Black ? 'B' : 'W');
    out.push_back('[');
    if (!m.pass) append_point(out, m.point);
    out.push_back(']');
  }
  out.push_back(')');
  return out;
}

}  // namespace gonet
