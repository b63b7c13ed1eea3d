#include "pl/render.hpp"

#include <algorithm>
#include <sstream>

#include "pl/errors.hpp"

namespace pl {

namespace {

// columns taken by a UTF-8 token: count the non-continuation bytes
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

struct Glyphs {
  std::string h, hd, v, vd, tl, tr, bl, br, cross, tdown, tup, tright, tleft;
};

const Glyphs& glyphs(bool ascii) {
  static const Glyphs box{"─", "┄", "│", "┆", "┌", "┐", "└", "┘", "┼", "┬", "┴", "├", "┤"};
  static const Glyphs plain{"-", ".", "|", ":", "+", "+", "+", "+", "+", "+", "+", "+", "+"};
  return ascii ? plain : box;
}

std::string repeat(const std::string& s, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += s;
  return out;
}

bool is_rule_glyph(const std::string& t) {
  for (bool a : {false, true}) {
    auto& g = glyphs(a);
    if (t == g.v || t == g.vd) return true;
  }
  return false;
}

}  // namespace

std::string render(const Picture& p, const RenderOptions& opt) {
  if (p.empty()) throw DomainError("render: empty picture");
  auto& g = glyphs(opt.ascii);
  std::size_t w = 1;
  for (Sym s : p.cells()) w = std::max(w, width(p.alphabet()->token(s)));
  const int k = opt.block;
  auto cut = [&](int x) { return k > 0 && x % k == 0; };

  // a horizontal rule; `fill` for the cell runs, joints at block boundaries
  auto rule = [&](const std::string& left, const std::string& fill, const std::string& joint, const std::string& right) {
    std::string out = left;
    for (int j = 0; j < p.cols(); ++j) {
      out += repeat(fill, w + 2);
      if (j + 1 < p.cols() && cut(j + 1)) out += joint;
    }
    return out + right + "\n";
  };
  std::string out = rule(g.tl, g.h, g.tdown, g.tr);
  for (int i = 0; i < p.rows(); ++i) {
    if (i > 0 && cut(i)) out += rule(g.tright, g.hd, g.cross, g.tleft);
    out += g.v;
    for (int j = 0; j < p.cols(); ++j) {
      auto& t = p.alphabet()->token(p(i, j));
      out += " " + t + std::string(w - width(t), ' ') + " ";
      if (j + 1 < p.cols() && cut(j + 1)) out += g.vd;
    }
    out += g.v + "\n";
  }
  return out + rule(g.bl, g.h, g.tup, g.br);
}

std::string render(const TileSet& T, const RenderOptions& opt) {
  std::string out;
  auto tiles = T.tiles();
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (i) out += "\n";
    out += "tile " + std::to_string(i) + "\n" + render(tiles[i], opt);
  }
  return out;
}

Picture parse_rendered(const std::string& text, const AlphabetPtr& alpha) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  int no = 0;
  for (std::string line; std::getline(in, line);) {
    ++no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string first;
    if (!(ls >> first) || !is_rule_glyph(first)) continue;  // rules and captions
    for (std::string t; ls >> t;)
      if (!is_rule_glyph(t)) toks.push_back(t);
    if (!rows.empty() && toks.size() != rows[0].size()) throw ParseError("ragged rendered picture", no);
    rows.push_back(std::move(toks));
  }
  if (rows.empty() || rows[0].empty()) throw ParseError("no picture rows found");
  std::vector<Sym> cells;
  for (auto& r : rows)
    for (auto& t : r) {
      if (t == kBorderToken) {
        cells.push_back(kBorder);
        continue;
      }
      auto s = alpha->find(t);
      if (!s) throw ParseError("symbol '" + t + "' not in the alphabet");
      cells.push_back(*s);
    }
  return Picture(alpha, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), std::move(cells));
}

}  // namespace pl
