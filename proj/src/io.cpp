#include "pl/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "pl/errors.hpp"

namespace pl {

namespace {

struct Line {
  int no;
  std::string text;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// non-blank, non-comment lines, trimmed
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  int no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++no;
    auto t = trim(raw);
    if (t.empty() || t[0] == '%') continue;
    out.push_back({no, t});
  }
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// "key: rest" -> rest, or nullopt when the line has another key
std::optional<std::string> field(const Line& l, std::string_view key) {
  if (l.text.size() < key.size() + 1 || l.text.compare(0, key.size(), key) != 0 || l.text[key.size()] != ':')
    return std::nullopt;
  return trim(l.text.substr(key.size() + 1));
}

std::string need_field(const std::vector<Line>& ls, std::size_t& pos, std::string_view key) {
  if (pos >= ls.size()) throw ParseError("expected '" + std::string(key) + ":' but the file ended");
  auto v = field(ls[pos], key);
  if (!v) throw ParseError("expected '" + std::string(key) + ":'", ls[pos].no);
  ++pos;
  return *v;
}

int to_int(const std::string& s, int line, std::string_view what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + std::string(what) + " '" + s + "'", line);
  }
}

AlphabetPtr make_alpha(const std::vector<std::string>& toks, int line, const std::string& name = "") {
  try {
    if (toks.empty()) throw DomainError("empty alphabet");
    return Alphabet::make(toks, name);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line);
  }
}

Sym token_id(const AlphabetPtr& a, const std::string& t, bool allow_border, int line) {
  if (t == kBorderToken) {
    if (!allow_border) throw ParseError("\"#\" is only allowed in bordered pictures and tiles", line);
    return kBorder;
  }
  auto s = a->find(t);
  if (!s) throw ParseError("symbol '" + t + "' not in the alphabet", line);
  return *s;
}

// `rows` lines of `cols` tokens starting at ls[pos]
Picture read_grid(const std::vector<Line>& ls, std::size_t& pos, int rows, int cols, const AlphabetPtr& a,
                  bool allow_border) {
  std::vector<Sym> cells;
  cells.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    if (pos >= ls.size()) throw ParseError("picture ended after " + std::to_string(r) + " of " + std::to_string(rows) + " rows");
    auto toks = split(ls[pos].text);
    if (static_cast<int>(toks.size()) != cols)
      throw ParseError("expected " + std::to_string(cols) + " tokens, found " + std::to_string(toks.size()), ls[pos].no);
    for (auto& t : toks) cells.push_back(token_id(a, t, allow_border, ls[pos].no));
    ++pos;
  }
  return Picture(a, rows, cols, std::move(cells));
}

std::vector<Sym> read_word(const std::string& v, const AlphabetPtr& a, int k, int line) {
  auto toks = split(v);
  if (static_cast<int>(toks.size()) != k) throw ParseError("frame word needs " + std::to_string(k) + " tokens", line);
  std::vector<Sym> w;
  for (auto& t : toks) w.push_back(token_id(a, t, false, line));
  return w;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out;
}

std::string word_text(const std::vector<Sym>& w, const AlphabetPtr& a) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + a->token(w[i]);
  return out;
}

std::string grid_text(const Picture& p) {
  std::string out;
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) out += (j ? " " : "") + p.alphabet()->token(p(i, j));
    out += '\n';
  }
  return out;
}

void write_frame(std::string& out, const Frame& f, const AlphabetPtr& a) {
  out += "north: " + word_text(f.north, a) + "\n";
  out += "east: " + word_text(f.east, a) + "\n";
  out += "south: " + word_text(f.south, a) + "\n";
  out += "west: " + word_text(f.west, a) + "\n";
}

Frame read_frame(const std::vector<Line>& ls, std::size_t& pos, const AlphabetPtr& a, int k) {
  Frame f;
  for (auto [key, word] : {std::pair{"north", &f.north}, {"east", &f.east}, {"south", &f.south}, {"west", &f.west}}) {
    int no = pos < ls.size() ? ls[pos].no : 0;
    *word = read_word(need_field(ls, pos, key), a, k, no);
  }
  return f;
}

}  // namespace

Picture parse_picture(const std::string& text, const AlphabetPtr& alpha, bool bordered) {
  auto ls = content_lines(text);
  if (ls.empty()) throw ParseError("empty picture file");
  auto dims = split(ls[0].text);
  if (dims.size() != 2) throw ParseError("first line must be 'rows cols'", ls[0].no);
  int rows = to_int(dims[0], ls[0].no, "row count"), cols = to_int(dims[1], ls[0].no, "column count");
  if (rows < 1 || cols < 1) throw ParseError("picture sides must be positive", ls[0].no);
  if (static_cast<int>(ls.size()) - 1 != rows)
    throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(ls.size() - 1), ls[0].no);
  AlphabetPtr a = alpha;
  if (!a) {
    std::set<std::string> seen;
    for (std::size_t i = 1; i < ls.size(); ++i)
      for (auto& t : split(ls[i].text))
        if (t != kBorderToken) seen.insert(t);
    a = make_alpha({seen.begin(), seen.end()}, ls[1].no);
  }
  std::size_t pos = 1;
  return read_grid(ls, pos, rows, cols, a, bordered);
}

std::string serialize_picture(const Picture& p) {
  return std::to_string(p.rows()) + " " + std::to_string(p.cols()) + "\n" + grid_text(p);
}

TilingSystem parse_system(const std::string& text, const std::filesystem::path& base) {
  auto ls = content_lines(text);
  std::size_t pos = 0;
  int k_line = ls.empty() ? 0 : ls[0].no;
  int k = to_int(need_field(ls, pos, "k"), k_line, "k");
  if (k < 2) throw ParseError("k must be at least 2", k_line);
  int line = ls[pos < ls.size() ? pos : 0].no;
  auto terminal = make_alpha(split(need_field(ls, pos, "terminal")), line, "terminal");
  line = pos < ls.size() ? ls[pos].no : line;
  auto local = make_alpha(split(need_field(ls, pos, "local")), line, "local");
  line = pos < ls.size() ? ls[pos].no : line;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto& item : split(need_field(ls, pos, "projection"))) {
    auto arrow = item.find("->");
    if (arrow == std::string::npos) throw ParseError("projection entry '" + item + "' lacks '->'", line);
    pairs.emplace_back(item.substr(0, arrow), item.substr(arrow + 2));
  }
  SymbolMap proj;
  try {
    proj = SymbolMap::from_pairs(local, terminal, pairs);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line);
  }
  if (!proj.total()) throw ParseError("projection must map every local symbol", line);

  ConstraintPtr tiles;
  if (pos < ls.size() && field(ls[pos], "construction")) {
    const int cline = ls[pos].no;
    auto args = split(*field(ls[pos], "construction"));
    ++pos;
    auto load_code = [&](const std::string& name) { return parse_code(read_file(base / name)); };
    auto load_tiles = [&](const std::string& name) {
      auto S = parse_system(read_file(base / name), base);
      auto* T = S.explicit_tiles();
      if (!T) throw ParseError(name + " must list its tiles explicitly", cline);
      return std::make_shared<const TileSet>(*T);
    };
    try {
      if (args.size() == 2 && args[0] == "closure") {
        tiles = closure_tileset(load_code(args[1]));
      } else if (args.size() == 3 && args[0] == "encoded") {
        tiles = encoded_local_tileset(*load_tiles(args[1]), load_code(args[2]));
      } else if (args.size() == 3 && args[0] == "padding-free") {
        auto M2 = load_tiles(args[1]);
        tiles = eliminate_padding(*M2, load_code(args[2]), pad_alphabet(terminal));
      } else {
        throw ParseError("unknown construction", cline);
      }
    } catch (const DomainError& e) {
      throw ParseError(std::string("construction: ") + e.what(), cline);
    }
    if (tiles->k() != k) throw ParseError("construction has k = " + std::to_string(tiles->k()), cline);
    if (!same_alphabet(tiles->alphabet(), local)) throw ParseError("construction alphabet differs from 'local:'", cline);
    local = tiles->alphabet();
    proj.from = local;
  } else {
    auto T = std::make_shared<TileSet>(k, local);
    while (pos < ls.size()) {
      if (!field(ls[pos], "tile")) throw ParseError("expected 'tile:'", ls[pos].no);
      ++pos;
      try {
        T->insert(read_grid(ls, pos, k, k, local, true));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), ls[pos - 1].no);
      }
    }
    T->seal();
    tiles = T;
  }
  if (pos != ls.size()) throw ParseError("unexpected trailing content", ls[pos].no);
  TilingSystem S{terminal, local, tiles, proj};
  try {
    S.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return S;
}

namespace {
std::string system_header(const TilingSystem& S) {
  std::string out = "k: " + std::to_string(S.k()) + "\n";
  out += "terminal: " + join(S.terminal->tokens()) + "\n";
  out += "local: " + join(S.local->tokens()) + "\n";
  out += "projection:";
  for (Sym s = 0; s < static_cast<Sym>(S.local->size()); ++s)
    out += " " + S.local->token(s) + "->" + S.terminal->token(S.projection(s));
  return out + "\n";
}
}  // namespace

std::string serialize_system(const TilingSystem& S) {
  auto* T = S.explicit_tiles();
  if (!T) throw DomainError("serialize_system: tiles are implicit (" + S.tiles->describe() + "); name a construction");
  std::string out = system_header(S);
  for (auto& t : T->tiles()) out += "tile:\n" + grid_text(t);
  return out;
}

std::string serialize_system(const TilingSystem& S, const std::string& construction) {
  return system_header(S) + "construction: " + construction + "\n";
}

PictureCode parse_code(const std::string& text) {
  auto ls = content_lines(text);
  std::size_t pos = 0;
  int line = ls.empty() ? 0 : ls[0].no;
  int k = to_int(need_field(ls, pos, "k"), line, "k");
  if (k < 1) throw ParseError("k must be positive", line);
  line = pos < ls.size() ? ls[pos].no : line;
  auto alpha = make_alpha(split(need_field(ls, pos, "alphabet")), line);
  std::vector<std::pair<std::string, int>> coding;
  int coding_line = 0;
  while (pos < ls.size() && field(ls[pos], "coding")) {
    coding_line = ls[pos].no;
    auto toks = split(*field(ls[pos], "coding"));
    if (toks.size() != 3 || toks[1] != "->") throw ParseError("coding lines read 'coding: SYMBOL -> id'", coding_line);
    coding.emplace_back(toks[0], to_int(toks[2], coding_line, "picture id"));
    ++pos;
  }
  std::vector<Picture> pics;
  while (pos < ls.size()) {
    auto& l = ls[pos];
    const std::string want = "picture " + std::to_string(pics.size()) + ":";
    if (l.text != want) throw ParseError("expected '" + want + "'", l.no);
    ++pos;
    pics.push_back(read_grid(ls, pos, k, k, alpha, false));
  }
  PictureCode X;
  try {
    X = PictureCode::make(k, alpha, std::move(pics));
    if (!coding.empty()) {
      std::vector<std::string> src;
      std::vector<int> idx;
      for (auto& [s, i] : coding) {
        if (i < 0 || i >= static_cast<int>(X.size())) throw DomainError("coding refers to missing picture " + std::to_string(i));
        src.push_back(s);
        idx.push_back(i);
      }
      X = X.with_coding(Alphabet::make(src), idx);
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what(), coding_line);
  }
  return X;
}

std::string serialize_code(const PictureCode& X) {
  std::string out = "k: " + std::to_string(X.k) + "\n";
  out += "alphabet: " + join(X.alphabet->tokens()) + "\n";
  if (X.has_coding())
    for (Sym s = 0; s < static_cast<Sym>(X.source->size()); ++s)
      out += "coding: " + X.source->token(s) + " -> " + std::to_string(X.coding[static_cast<std::size_t>(s)]) + "\n";
  for (std::size_t i = 0; i < X.size(); ++i) out += "picture " + std::to_string(i) + ":\n" + grid_text(X.pictures[i]);
  return out;
}

FrameAlphabet parse_frames(const std::string& text) {
  auto ls = content_lines(text);
  std::size_t pos = 0;
  int line = ls.empty() ? 0 : ls[0].no;
  int k = to_int(need_field(ls, pos, "k"), line, "k");
  if (k < 1) throw ParseError("k must be positive", line);
  line = pos < ls.size() ? ls[pos].no : line;
  auto local = make_alpha(split(need_field(ls, pos, "local")), line);
  line = pos < ls.size() ? ls[pos].no : line;
  auto faces = make_alpha(split(need_field(ls, pos, "faces")), line);
  std::vector<FrameSymbol> symbols;
  while (pos < ls.size() && ls[pos].text.rfind("symbol ", 0) == 0) {
    const std::string want = "symbol B" + std::to_string(symbols.size()) + ":";
    if (ls[pos].text != want) throw ParseError("expected '" + want + "'", ls[pos].no);
    ++pos;
    FrameSymbol b;
    b.frame = read_frame(ls, pos, local, k);
    need_field(ls, pos, "face");
    b.face = read_grid(ls, pos, k, k, faces, false);
    symbols.push_back(std::move(b));
  }
  std::vector<Frame> frames;
  while (pos < ls.size()) {
    const std::string want = "frame " + std::to_string(frames.size()) + ":";
    if (ls[pos].text != want) throw ParseError("expected '" + want + "'", ls[pos].no);
    ++pos;
    frames.push_back(read_frame(ls, pos, local, k));
  }
  FrameAlphabet B;
  try {
    B = make_frame_alphabet(k, local, faces, symbols);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  // the frame set is derived from the symbols; the listed one must agree
  if (frames != B.frames) throw ParseError("frame list does not match the frames of the symbols");
  if (B.symbols != symbols) throw ParseError("symbols must be listed in canonical order");
  return B;
}

std::string serialize_frames(const FrameAlphabet& B) {
  std::string out = "k: " + std::to_string(B.k) + "\n";
  out += "local: " + join(B.local->tokens()) + "\n";
  out += "faces: " + join(B.faces->tokens()) + "\n";
  for (std::size_t i = 0; i < B.symbols.size(); ++i) {
    out += "symbol " + B.alphabet->token(static_cast<Sym>(i)) + ":\n";
    write_frame(out, B.symbols[i].frame, B.local);
    out += "face:\n" + grid_text(B.symbols[i].face);
  }
  for (std::size_t i = 0; i < B.frames.size(); ++i) {
    out += "frame " + std::to_string(i) + ":\n";
    write_frame(out, B.frames[i], B.local);
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw DomainError("cannot write " + p.string());
  out << text;
  if (!out) throw DomainError("write failed: " + p.string());
}

}  // namespace pl
