#include "pl/lang.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pl/errors.hpp"

namespace pl {

TileSet tileset_from_pictures(const std::set<Picture>& samples, int k) {
  if (samples.empty()) throw DomainError("tileset_from_pictures: no sample pictures");
  const auto& alpha = samples.begin()->alphabet();
  TileSet T(k, alpha);
  for (auto& p : samples) {
    if (!same_alphabet(p.alphabet(), alpha)) throw DomainError("tileset_from_pictures: samples over different alphabets");
    for (auto& t : k_tiles(thick_bordered(p, k), k)) T.insert(t);
  }
  T.seal();
  return T;
}

SymbolMap constant_map(const AlphabetPtr& from, const AlphabetPtr& to, const std::string& target) {
  SymbolMap m{from, to, std::vector<Sym>(from->size(), to->id(target))};
  return m;
}

Ratio alphabetic_ratio(const TilingSystem& S) {
  long long a = static_cast<long long>(S.local->size()), b = static_cast<long long>(S.terminal->size());
  if (b == 0) throw DomainError("empty terminal alphabet");
  long long g = std::gcd(a, b);
  return {a / g, b / g};
}

namespace {

struct Carrier {
  int tile, rho, kappa;
};

}  // namespace

TilingSystem slt_to_local(const TilingSystem& S) {
  S.validate();
  const TileSet* Tk = S.explicit_tiles();
  if (!Tk) throw DomainError("slt_to_local needs an explicit tile set");
  const int k = Tk->k();
  if (k < 2) throw DomainError("slt_to_local: k must be at least 2");
  const auto tiles = Tk->raw_tiles();
  const int span = std::max(1, k - 2);
  auto at = [&](int t, int r, int c) { return tiles[t][static_cast<std::size_t>(r) * k + c]; };
  auto row_border = [&](int t, int r) {
    for (int c = 0; c < k; ++c)
      if (at(t, r, c) != kBorder) return false;
    return true;
  };
  auto col_border = [&](int t, int c) {
    for (int r = 0; r < k; ++r)
      if (at(t, r, c) != kBorder) return false;
    return true;
  };

  std::vector<Carrier> sym;
  for (int t = 0; t < static_cast<int>(tiles.size()); ++t)
    for (int r = 1; r <= span; ++r)
      for (int c = 1; c <= span; ++c)
        if (at(t, r, c) != kBorder) sym.push_back({t, r, c});
  auto pix = [&](int x) { return at(sym[x].tile, sym[x].rho, sym[x].kappa); };

  auto top = [&](int x) { return sym[x].rho == 1 && row_border(sym[x].tile, 0); };
  auto left = [&](int x) { return sym[x].kappa == 1 && col_border(sym[x].tile, 0); };
  auto bottom = [&](int x) {
    if (k == 2) return true;
    const auto& s = sym[x];
    for (int r = s.rho + 1; r < k; ++r)
      if (!row_border(s.tile, r)) return false;
    return s.rho == k - 2 || row_border(s.tile, 0);
  };
  auto right = [&](int x) {
    if (k == 2) return true;
    const auto& s = sym[x];
    for (int c = s.kappa + 1; c < k; ++c)
      if (!col_border(s.tile, c)) return false;
    return s.kappa == k - 2 || col_border(s.tile, 0);
  };
  // with k = 2 the windows touching the bottom or right border belong to no cell
  auto window2 = [&](Sym a, Sym b, Sym c, Sym d) {
    std::vector<Sym> w{a, b, c, d};
    return Tk->contains(w.data());
  };

  // shift compatibility between tiles
  std::map<std::vector<Sym>, std::vector<int>> by_left, by_top;
  for (int t = 0; t < static_cast<int>(tiles.size()); ++t) {
    std::vector<Sym> l, tp;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k - 1; ++c) l.push_back(at(t, r, c));
    for (int r = 0; r < k - 1; ++r)
      for (int c = 0; c < k; ++c) tp.push_back(at(t, r, c));
    by_left[l].push_back(t);
    by_top[tp].push_back(t);
  }
  std::map<std::tuple<int, int, int>, int> sym_index;
  for (int x = 0; x < static_cast<int>(sym.size()); ++x) sym_index[{sym[x].tile, sym[x].rho, sym[x].kappa}] = x;
  auto find_sym = [&](int t, int r, int c) {
    auto it = sym_index.find({t, r, c});
    return it == sym_index.end() ? -1 : it->second;
  };

  std::vector<std::vector<int>> hnext(sym.size()), vnext(sym.size());
  for (int x = 0; x < static_cast<int>(sym.size()); ++x) {
    const auto& s = sym[x];
    if (s.kappa == 1) {
      std::vector<Sym> key;
      for (int r = 0; r < k; ++r)
        for (int c = 1; c < k; ++c) key.push_back(at(s.tile, r, c));
      if (auto it = by_left.find(key); it != by_left.end())
        for (int t2 : it->second)
          if (int y = find_sym(t2, s.rho, 1); y >= 0) hnext[x].push_back(y);
    }
    if (int y = find_sym(s.tile, s.rho, s.kappa + 1); y >= 0) hnext[x].push_back(y);
    if (s.rho == 1) {
      std::vector<Sym> key;
      for (int r = 1; r < k; ++r)
        for (int c = 0; c < k; ++c) key.push_back(at(s.tile, r, c));
      if (auto it = by_top.find(key); it != by_top.end())
        for (int t2 : it->second)
          if (int y = find_sym(t2, 1, s.kappa); y >= 0) vnext[x].push_back(y);
    }
    if (int y = find_sym(s.tile, s.rho + 1, s.kappa); y >= 0) vnext[x].push_back(y);
  }

  const Sym B = kBorder;
  std::set<std::vector<Sym>> out;
  for (int w = 0; w < static_cast<int>(sym.size()); ++w) {
    if (top(w) && left(w)) out.insert({B, B, B, w});
    if (top(w) && right(w) && (k > 2 || window2(B, B, pix(w), B))) out.insert({B, B, w, B});
    if (bottom(w) && left(w) && (k > 2 || window2(B, pix(w), B, B))) out.insert({B, w, B, B});
    if (bottom(w) && right(w) && (k > 2 || window2(pix(w), B, B, B))) out.insert({w, B, B, B});
    for (int x : hnext[w]) {
      if (top(w) && top(x)) out.insert({B, B, w, x});
      if (bottom(w) && bottom(x) && (k > 2 || window2(pix(w), pix(x), B, B))) out.insert({w, x, B, B});
      for (int y : vnext[w])
        for (int z : hnext[y])
          if (std::find(vnext[x].begin(), vnext[x].end(), z) != vnext[x].end()) out.insert({w, x, y, z});
    }
    for (int y : vnext[w]) {
      if (left(w) && left(y)) out.insert({B, w, B, y});
      if (right(w) && right(y) && (k > 2 || window2(pix(w), B, pix(y), B))) out.insert({w, B, y, B});
    }
  }

  // keep only symbols that occur in some tile
  std::vector<int> used(sym.size(), 0);
  for (auto& t : out)
    for (Sym s : t)
      if (s != B) used[s] = 1;
  std::vector<int> renum(sym.size(), -1);
  std::vector<std::string> toks;
  std::vector<Sym> proj;
  for (int x = 0; x < static_cast<int>(sym.size()); ++x) {
    if (!used[x]) continue;
    renum[x] = static_cast<int>(toks.size());
    toks.push_back("t" + std::to_string(sym[x].tile + 1) + "." + std::to_string(sym[x].rho) + "." +
                   std::to_string(sym[x].kappa));
    proj.push_back(S.projection(pix(x)));
  }
  auto local = Alphabet::make(toks, "carriers");
  auto T2 = std::make_shared<TileSet>(2, local);
  for (auto t : out) {
    for (auto& s : t)
      if (s != B) s = renum[s];
    T2->insert(t);
  }
  T2->seal();
  TilingSystem R{S.terminal, local, T2, SymbolMap{local, S.terminal, proj}};
  return R;
}

}  // namespace pl
