#include "pl/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "pl/errors.hpp"
#include "pl/lang.hpp"

namespace pl {

namespace {

constexpr Sym kPlaceholder = -3;  // a cell of the original picture in the padding schematic

std::string digit(int d) { return std::to_string(d); }

// ♭ = 0, digits 1..k, in the padded picture's 1-based coordinates
int pad_label(int i, int j, int k) {
  if (j % k == 0) return (i - 1) % k + 1;
  if (i % k == 0) return (j - 1) % k + 1;
  return 0;
}

}  // namespace

AlphabetPtr pad_alphabet(const AlphabetPtr& sigma) {
  if (sigma->contains(kPadToken)) throw DomainError("padding: \"$\" is reserved and already in the alphabet");
  auto toks = sigma->tokens();
  toks.emplace_back(kPadToken);
  return Alphabet::make(std::move(toks), sigma->name() + "$");
}

std::pair<int, int> padded_size(int rows, int cols, int k) {
  if (k < 2) throw DomainError("padding: k must be at least 2");
  if (rows < 1 || cols < 1) throw DomainError("padding: picture sides must be positive");
  return {rows + k - rows % k, cols + k - cols % k};
}

Picture pad_picture(const Picture& p, int k) {
  auto a = pad_alphabet(p.alphabet());
  auto [M, N] = padded_size(p.rows(), p.cols(), k);
  const Sym pad = static_cast<Sym>(p.alphabet()->size());
  std::vector<Sym> cells(static_cast<std::size_t>(M) * N, pad);
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) cells[static_cast<std::size_t>(i) * N + j] = p(i, j);
  return Picture(a, M, N, std::move(cells));
}

Picture strip_padding(const Picture& p) {
  auto pad = p.alphabet()->find(kPadToken);
  if (!pad) throw DomainError("strip_padding: the alphabet has no \"$\"");
  int m = p.rows(), n = p.cols();
  auto row_pad = [&](int i) {
    for (int j = 0; j < n; ++j)
      if (p(i, j) != *pad) return false;
    return true;
  };
  auto col_pad = [&](int j) {
    for (int i = 0; i < m; ++i)
      if (p(i, j) != *pad) return false;
    return true;
  };
  while (m > 0 && row_pad(m - 1)) --m;
  while (n > 0 && col_pad(n - 1)) --n;
  if (m == 0 || n == 0) throw DomainError("strip_padding: nothing left but padding");
  std::vector<std::string> toks;
  std::vector<Sym> remap(p.alphabet()->size(), kUnknown);
  for (Sym s = 0; s < static_cast<Sym>(p.alphabet()->size()); ++s)
    if (s != *pad) {
      remap[static_cast<std::size_t>(s)] = static_cast<Sym>(toks.size());
      toks.push_back(p.alphabet()->token(s));
    }
  auto a = Alphabet::make(std::move(toks), p.alphabet()->name());
  std::vector<Sym> cells;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Sym s = remap[static_cast<std::size_t>(p(i, j))];
      if (s == kUnknown) throw DomainError("strip_padding: \"$\" inside the picture");
      cells.push_back(s);
    }
  return Picture(a, m, n, std::move(cells));
}

TilingSystem padded_system(const TilingSystem& S, int k) {
  S.validate();
  if (k < 2) throw DomainError("padded_system: k must be at least 2");
  const TileSet* T = S.explicit_tiles();
  if (!T || T->k() != 2) throw DomainError("padded_system: needs a 2-tiling system with an explicit tile set");
  auto toks = S.local->tokens();
  const Sym flat = static_cast<Sym>(toks.size());
  std::vector<std::string> extra{std::string(kFlatToken)};
  for (int d = 1; d <= k; ++d) extra.push_back(digit(d));
  for (auto& t : extra) {
    if (S.local->contains(t)) throw DomainError("padded_system: local symbol '" + t + "' clashes with the padding symbols");
    toks.push_back(t);
  }
  auto local = Alphabet::make(std::move(toks), S.local->name() + "+pad");
  auto terminal = pad_alphabet(S.terminal);
  const Sym ng = flat;  // |Gamma'|

  std::set<std::vector<Sym>> tiles;
  // old tiles, except those on the east or south border
  for (auto& t : T->raw_tiles()) {
    bool east = t[1] == kBorder && t[3] == kBorder;
    bool south = t[2] == kBorder && t[3] == kBorder;
    if (!east && !south) tiles.insert(t);
  }
  // Tiles touching the padding, read off bordered schematic pictures: the
  // original picture is a placeholder, the padding carries its counting
  // pattern. A tile that shows part of the picture is kept for every filling
  // of the placeholder cells that is an old border tile once the padding is
  // read as #.
  for (int m = 1; m <= 2 * k; ++m)
    for (int n = 1; n <= 2 * k; ++n) {
      auto [M, N] = padded_size(m, n, k);
      const int W = N + 2;
      std::vector<Sym> g(static_cast<std::size_t>(M + 2) * W, kBorder);
      for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= N; ++j)
          g[static_cast<std::size_t>(i) * W + j] = (i <= m && j <= n) ? kPlaceholder : flat + pad_label(i, j, k);
      for (int i = 0; i + 1 < M + 2; ++i)
        for (int j = 0; j + 1 < W; ++j) {
          std::vector<Sym> w{g[static_cast<std::size_t>(i) * W + j], g[static_cast<std::size_t>(i) * W + j + 1],
                             g[static_cast<std::size_t>(i + 1) * W + j], g[static_cast<std::size_t>(i + 1) * W + j + 1]};
          int holes = 0, pads = 0;
          for (Sym s : w) {
            holes += s == kPlaceholder;
            pads += s >= flat;
          }
          if (pads == 0) continue;  // pure picture or border: old tiles cover it
          if (holes == 0) {
            tiles.insert(w);
            continue;
          }
          std::vector<int> at;
          for (int c = 0; c < 4; ++c)
            if (w[static_cast<std::size_t>(c)] == kPlaceholder) at.push_back(c);
          std::vector<Sym> fill(at.size(), 0);
          while (true) {
            std::vector<Sym> cand = w, old = w;
            for (std::size_t x = 0; x < at.size(); ++x) cand[static_cast<std::size_t>(at[x])] = fill[x];
            for (int c = 0; c < 4; ++c) {
              Sym s = cand[static_cast<std::size_t>(c)];
              old[static_cast<std::size_t>(c)] = s >= flat ? kBorder : s;
            }
            if (T->contains(old.data())) tiles.insert(cand);
            std::size_t x = 0;
            while (x < fill.size() && ++fill[x] == ng) fill[x++] = 0;
            if (x == fill.size()) break;
          }
        }
    }
  auto out = std::make_shared<TileSet>(2, local);
  for (auto& t : tiles) out->insert(t);
  out->seal();

  SymbolMap proj{local, terminal, {}};
  const Sym dollar = static_cast<Sym>(S.terminal->size());
  for (Sym s = 0; s < static_cast<Sym>(local->size()); ++s) proj.image.push_back(s < ng ? S.projection(s) : dollar);
  return TilingSystem{terminal, local, out, proj};
}

Picture padded_preimage(const Picture& pre, const TilingSystem& P, int k) {
  const auto ng = static_cast<Sym>(P.local->size()) - static_cast<Sym>(k) - 1;
  if (ng < 1 || static_cast<Sym>(pre.alphabet()->size()) != ng) throw DomainError("padded_preimage: alphabet mismatch");
  for (Sym s = 0; s < ng; ++s)
    if (pre.alphabet()->token(s) != P.local->token(s)) throw DomainError("padded_preimage: alphabet mismatch");
  auto [M, N] = padded_size(pre.rows(), pre.cols(), k);
  std::vector<Sym> cells(static_cast<std::size_t>(M) * N);
  for (int i = 1; i <= M; ++i)
    for (int j = 1; j <= N; ++j)
      cells[static_cast<std::size_t>(i - 1) * N + (j - 1)] =
          (i <= pre.rows() && j <= pre.cols()) ? pre(i - 1, j - 1) : ng + pad_label(i, j, k);
  return Picture(P.local, M, N, std::move(cells));
}

std::optional<Sym> FrameAlphabet::find(const FrameSymbol& b) const {
  auto it = std::lower_bound(symbols.begin(), symbols.end(), b);
  if (it == symbols.end() || !(*it == b)) return std::nullopt;
  return static_cast<Sym>(it - symbols.begin());
}

int FrameAlphabet::frame_index(const Frame& f) const {
  auto it = std::lower_bound(frames.begin(), frames.end(), f);
  if (it == frames.end() || !(*it == f)) return -1;
  return static_cast<int>(it - frames.begin());
}

FrameAlphabet make_frame_alphabet(int k, AlphabetPtr local, AlphabetPtr faces, std::vector<FrameSymbol> symbols) {
  FrameAlphabet B;
  B.k = k;
  B.local = std::move(local);
  B.faces = std::move(faces);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  B.symbols = std::move(symbols);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < B.symbols.size(); ++i) {
    auto& b = B.symbols[i];
    if (b.frame.k() != k || b.face.rows() != k || b.face.cols() != k) throw DomainError("frame symbol of the wrong size");
    B.frames.push_back(b.frame);
    names.push_back("B" + std::to_string(i));
  }
  std::sort(B.frames.begin(), B.frames.end());
  B.frames.erase(std::unique(B.frames.begin(), B.frames.end()), B.frames.end());
  for (auto& b : B.symbols) B.frame_of.push_back(B.frame_index(b.frame));
  B.alphabet = Alphabet::make(std::move(names), "B" + std::to_string(k));
  return B;
}

FrameAlphabet frame_alphabet(const TilingSystem& P, int k, long long budget_nodes) {
  P.validate();
  const TileSet* T = P.explicit_tiles();
  if (!T || T->k() != 2) throw DomainError("frame_alphabet: needs a 2-tiling system with an explicit tile set");
  if (k < 2) throw DomainError("frame_alphabet: k must be at least 2");
  const auto na = static_cast<Sym>(P.local->size());
  Budget budget{budget_nodes, 0};
  std::vector<Sym> g(static_cast<std::size_t>(k) * k, 0);
  std::set<FrameSymbol> out;
  std::function<void(int)> go = [&](int c) {
    if (c == k * k) {
      Picture r(P.local, k, k, g);
      out.insert({frame_of(r), project(r, P.projection)});
      return;
    }
    int i = c / k, j = c % k;
    for (Sym s = 0; s < na; ++s) {
      if (!budget.spend())
        throw BudgetExhausted("frame_alphabet: budget of " + std::to_string(budget.limit) + " nodes exhausted", budget.used);
      g[static_cast<std::size_t>(c)] = s;
      if (i > 0 && j > 0) {
        Sym w[4] = {g[static_cast<std::size_t>(c - k - 1)], g[static_cast<std::size_t>(c - k)],
                    g[static_cast<std::size_t>(c - 1)], s};
        if (!T->contains(w)) continue;
      }
      go(c + 1);
    }
  };
  go(0);
  return make_frame_alphabet(k, P.local, P.terminal, {out.begin(), out.end()});
}

FrameAlphabet harvested_frame_alphabet(const TilingSystem& S, const TilingSystem& P, int k, int max_rows, int max_cols,
                                       long long budget_nodes) {
  S.validate();
  if (max_rows < 1 || max_cols < 1) throw DomainError("harvested_frame_alphabet: bounds must be positive");
  Budget budget{budget_nodes, 0};
  std::set<FrameSymbol> out;
  for (int m = 1; m <= max_rows; ++m)
    for (int n = 1; n <= max_cols; ++n)
      for (auto& pre : enumerate_local(*S.tiles, m, n, budget)) {
        auto t = tessellate(padded_preimage(pre, P, k), k);
        for (auto& r : t.blocks) out.insert({frame_of(r), project(r, P.projection)});
      }
  if (out.empty()) throw DomainError("harvested_frame_alphabet: no picture within the bounds");
  return make_frame_alphabet(k, P.local, P.terminal, {out.begin(), out.end()});
}

TileSet frame_tileset(const FrameAlphabet& B, const TileSet& T) {
  if (T.k() != 2) throw DomainError("frame_tileset: the tile set must have k = 2");
  if (!same_alphabet(T.alphabet(), B.local)) throw DomainError("frame_tileset: tile set and frames use different alphabets");
  const int k = B.k;
  const int nq = static_cast<int>(B.frames.size());
  const int hash = nq;  // the all-# pseudo-frame
  Frame border{std::vector<Sym>(static_cast<std::size_t>(k), kBorder), std::vector<Sym>(static_cast<std::size_t>(k), kBorder),
               std::vector<Sym>(static_cast<std::size_t>(k), kBorder), std::vector<Sym>(static_cast<std::size_t>(k), kBorder)};
  auto fr = [&](int x) -> const Frame& { return x == hash ? border : B.frames[static_cast<std::size_t>(x)]; };
  auto win = [&](Sym a, Sym b, Sym c, Sym d) {
    if (a == kBorder && b == kBorder && c == kBorder && d == kBorder) return true;
    Sym w[4] = {a, b, c, d};
    return T.contains(w);
  };
  // x left of y
  auto hcompat = [&](int x, int y) {
    auto &e = fr(x).east, &w = fr(y).west;
    for (int a = 0; a + 1 < k; ++a)
      if (!win(e[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(a + 1)],
               w[static_cast<std::size_t>(a + 1)]))
        return false;
    return true;
  };
  // x above z
  auto vcompat = [&](int x, int z) {
    auto &s = fr(x).south, &n = fr(z).north;
    for (int b = 0; b + 1 < k; ++b)
      if (!win(s[static_cast<std::size_t>(b)], s[static_cast<std::size_t>(b + 1)], n[static_cast<std::size_t>(b)],
               n[static_cast<std::size_t>(b + 1)]))
        return false;
    return true;
  };
  const std::size_t K1 = static_cast<std::size_t>(k - 1);
  auto center = [&](int x, int y, int z, int t) {
    return win(fr(x).south[K1], fr(y).south[0], fr(z).north[K1], fr(t).north[0]);
  };
  std::vector<std::vector<int>> H(static_cast<std::size_t>(nq + 1)), V(static_cast<std::size_t>(nq + 1));
  std::set<std::pair<int, int>> vset;
  for (int x = 0; x <= nq; ++x)
    for (int y = 0; y <= nq; ++y) {
      if (hcompat(x, y)) H[static_cast<std::size_t>(x)].push_back(y);
      if (vcompat(x, y)) {
        V[static_cast<std::size_t>(x)].push_back(y);
        vset.insert({x, y});
      }
    }
  // # may only fill whole rows or columns of the 2x2, never all of it
  auto shape_ok = [&](int x, int y, int z, int t) {
    int m = (x == hash) | (y == hash) << 1 | (z == hash) << 2 | (t == hash) << 3;
    switch (m) {
      case 0: case 3: case 12: case 5: case 10: case 7: case 11: case 13: case 14: return true;
      default: return false;
    }
  };
  // B symbols per frame
  std::vector<std::vector<Sym>> members(static_cast<std::size_t>(nq + 1));
  for (std::size_t i = 0; i < B.symbols.size(); ++i)
    members[static_cast<std::size_t>(B.frame_of[i])].push_back(static_cast<Sym>(i));
  members[static_cast<std::size_t>(hash)].push_back(kBorder);

  TileSet out(2, B.alphabet);
  for (int x = 0; x <= nq; ++x)
    for (int y : H[static_cast<std::size_t>(x)])
      for (int z : V[static_cast<std::size_t>(x)])
        for (int t : H[static_cast<std::size_t>(z)]) {
          if (!shape_ok(x, y, z, t) || !vset.count({y, t}) || !center(x, y, z, t)) continue;
          for (Sym a : members[static_cast<std::size_t>(x)])
            for (Sym b : members[static_cast<std::size_t>(y)])
              for (Sym c : members[static_cast<std::size_t>(z)])
                for (Sym d : members[static_cast<std::size_t>(t)]) out.insert(std::vector<Sym>{a, b, c, d});
        }
  out.seal();
  return out;
}

Picture expand_faces(const Picture& q, const FrameAlphabet& B) {
  if (!same_alphabet(q.alphabet(), B.alphabet)) throw DomainError("expand_faces: picture is not over B_k");
  std::vector<Picture> blocks;
  for (Sym s : q.cells()) blocks.push_back(B.symbols[static_cast<std::size_t>(s)].face);
  return assemble(blocks, q.rows(), q.cols());
}

Picture blockify(const Picture& local_picture, const FrameAlphabet& B, const SymbolMap& projection) {
  auto t = tessellate(local_picture, B.k);
  std::vector<Sym> cells;
  for (auto& r : t.blocks) {
    auto s = B.find({frame_of(r), project(r, projection)});
    if (!s) throw DomainError("blockify: a " + std::to_string(B.k) + "-block is not in B_k");
    cells.push_back(*s);
  }
  return Picture(B.alphabet, t.block_rows, t.block_cols, std::move(cells));
}

PictureCode build_code_Z(const FrameAlphabet& B, const PictureCode& X) {
  if (X.k != B.k) throw DomainError("build_code_Z: code size " + std::to_string(X.k) + " differs from k = " + std::to_string(B.k));
  if (X.size() < B.frames.size())
    throw DomainError("build_code_Z: need a code with at least |Q_k| = " + std::to_string(B.frames.size()) +
                      " pictures, have " + std::to_string(X.size()));
  auto lambda = product_alphabet(X.alphabet, B.faces);
  std::vector<Picture> pics;
  for (std::size_t i = 0; i < B.symbols.size(); ++i)
    pics.push_back(merge(X.pictures[static_cast<std::size_t>(B.frame_of[i])], B.symbols[i].face, lambda));
  return PictureCode::make(B.k, lambda, std::move(pics)).with_coding(B.alphabet);
}

std::vector<Sym> theta_ids(const AlphabetPtr& lambda, const AlphabetPtr& faces) {
  const auto nb = faces->size();
  if (nb == 0 || lambda->size() % nb) throw DomainError("theta: Lambda is not a product with the face alphabet");
  auto dollar = faces->find(kPadToken);
  if (!dollar) throw DomainError("theta: the face alphabet has no \"$\"");
  std::vector<Sym> out;
  Sym next = 0;
  for (Sym s = 0; s < static_cast<Sym>(lambda->size()); ++s) {
    Sym face = s % static_cast<Sym>(nb);
    auto& tok = lambda->token(s);
    auto suffix = "," + faces->token(face) + ")";
    if (tok.size() < suffix.size() || tok.compare(tok.size() - suffix.size(), suffix.size(), suffix) != 0)
      throw DomainError("theta: Lambda is not a product with the face alphabet");
    out.push_back(face == *dollar ? kBorder : next++);
  }
  return out;
}

AlphabetPtr theta_alphabet(const AlphabetPtr& lambda, const AlphabetPtr& faces) {
  auto ids = theta_ids(lambda, faces);
  std::vector<std::string> toks;
  for (Sym s = 0; s < static_cast<Sym>(ids.size()); ++s)
    if (ids[static_cast<std::size_t>(s)] != kBorder) toks.push_back(lambda->token(s));
  return Alphabet::make(std::move(toks), "Theta");
}

bool padding_tile_deleted(const std::vector<Sym>& tile, int size, const std::vector<bool>& is_pad) {
  // 'p' all padding, 'h' all #, 'o' anything else
  auto kind = [&](auto cell) {
    bool pad = true, hash = true;
    for (int x = 0; x < size; ++x) {
      Sym s = cell(x);
      hash = hash && s == kBorder;
      pad = pad && s != kBorder && is_pad[static_cast<std::size_t>(s)];
    }
    return pad ? 'p' : hash ? 'h' : 'o';
  };
  auto bad = [&](const std::string& kinds) {
    if (std::count(kinds.begin(), kinds.end(), 'p') >= 2) return true;
    for (std::size_t x = 0; x + 1 < kinds.size(); ++x)
      if ((kinds[x] == 'p' && kinds[x + 1] == 'h') || (kinds[x] == 'h' && kinds[x + 1] == 'p')) return true;
    return false;
  };
  std::string rows, cols;
  for (int a = 0; a < size; ++a) {
    rows += kind([&](int x) { return tile[static_cast<std::size_t>(a * size + x)]; });
    cols += kind([&](int x) { return tile[static_cast<std::size_t>(x * size + a)]; });
  }
  return bad(rows) || bad(cols);
}

namespace {

class PaddingFree : public BlockWindows {
 public:
  PaddingFree(const TileSet& M2, const PictureCode& Z, AlphabetPtr theta, std::vector<Sym> to_theta)
      : BlockWindows(Z.k, std::move(theta), blocks_of(Z), "padding-free encoded tile set (" + std::to_string(2 * Z.k) + ")"),
        T2_(M2),
        to_theta_(std::move(to_theta)) {
    for (Sym t : to_theta_) is_pad_.push_back(t == kBorder);
  }

 protected:
  Sym shown(Sym c) const override { return to_theta_[static_cast<std::size_t>(c)]; }
  bool border_is_plain() const override { return false; }
  bool has_slot_rules() const override { return true; }
  bool tile_ok(int a, int b, int c, int d) const override {
    Sym t[4] = {a < 0 ? kBorder : a, b < 0 ? kBorder : b, c < 0 ? kBorder : c, d < 0 ? kBorder : d};
    return T2_.contains(t);
  }
  bool placement_ok(const Placement& p) const override {
    const int K = 2 * block();
    thread_local std::vector<Sym> tile;
    tile.assign(static_cast<std::size_t>(K) * K, kBorder);
    for (int a = 0; a < K; ++a) {
      int ve = p.row_entry[static_cast<std::size_t>(a)];
      if (ve < 0) continue;
      for (int c = 0; c < K; ++c) {
        int he = p.col_entry[static_cast<std::size_t>(c)];
        if (he < 0) continue;
        int slot = p.slots[static_cast<std::size_t>(p.first_row + ve / block()) * p.frag_cols + p.first_col + he / block()];
        tile[static_cast<std::size_t>(a * K + c)] =
            blocks()[static_cast<std::size_t>(slot)][static_cast<std::size_t>((ve % block()) * block() + he % block())];
      }
    }
    return !padding_tile_deleted(tile, K, is_pad_);
  }

 private:
  static std::vector<std::vector<Sym>> blocks_of(const PictureCode& Z) {
    std::vector<std::vector<Sym>> out;
    for (Sym s = 0; s < static_cast<Sym>(Z.source->size()); ++s) out.push_back(Z.code_of(s).cells());
    return out;
  }
  TileSet T2_;
  std::vector<Sym> to_theta_;
  std::vector<bool> is_pad_;
};

}  // namespace

ConstraintPtr eliminate_padding(const TileSet& M2, const PictureCode& Z, const AlphabetPtr& faces) {
  if (M2.k() != 2) throw DomainError("eliminate_padding: the frame tile set must have k = 2");
  if (!Z.has_coding() || Z.source->size() != Z.size()) throw DomainError("eliminate_padding: the code needs a bijective coding");
  if (!same_alphabet(Z.source, M2.alphabet())) throw DomainError("eliminate_padding: coding is not over the tile alphabet");
  return std::make_shared<PaddingFree>(M2, Z, theta_alphabet(Z.alphabet, faces), theta_ids(Z.alphabet, faces));
}

PictureCode code_for(int k, std::size_t need, long long budget) {
  if (k < 3) throw DomainError("code_for: k must be at least 3");
  // largest comma-free word code the search can reach
  std::optional<WordCode> best;
  for (int target = 1;; ++target) {
    auto r = find_comma_free_word_code(k, target, budget);
    if (r.status != CodeSearch::found) break;
    best = r.code;
  }
  if (!best) throw DomainError("code_for: no comma-free word code of length " + std::to_string(k));
  std::uint64_t most = 0;
  for (std::size_t s = 1; s <= best->size(); ++s) {
    WordCode Y{k, best->alphabet, {best->words.begin(), best->words.begin() + static_cast<long>(s)}};
    for (int q = static_cast<int>(std::sqrt(static_cast<double>(k))); q >= 1; --q) {
      if (2 * q >= k) continue;
      CodeFamilySpec spec{k, Y, Y, make_obligation_word(k, q)};
      try {
        spec.validate();
      } catch (const DomainError&) {
        continue;
      }
      auto size = family_code_size(spec);
      most = std::max(most, size);
      if (size >= need) return generate_picture_code(spec);
    }
  }
  throw DomainError("code_for: the largest family code at k = " + std::to_string(k) + " has " + std::to_string(most) +
                    " pictures, " + std::to_string(need) + " needed");
}

namespace {

template <class F>
auto stage(ReductionArtifacts& A, const std::string& name, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto done = [&] {
    A.timings.push_back({name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()});
  };
  try {
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      done();
    } else {
      auto r = f();
      done();
      return r;
    }
  } catch (const BudgetExhausted& e) {
    throw BudgetExhausted("stage " + name + ": " + e.what(), e.nodes);
  } catch (const DomainError& e) {
    throw DomainError("stage " + name + ": " + e.what());
  }
}

}  // namespace

ReductionArtifacts reduce_alphabet(const TilingSystem& S, const ReduceOptions& opt) {
  ReductionArtifacts A;
  A.original = S;
  A.k = opt.k ? *opt.k : opt.X ? opt.X->k : choose_k(static_cast<int>(std::pow(static_cast<double>(S.local->size()), 4)));
  if (opt.X && opt.X->k != A.k) throw DomainError("stage code: the given code has k = " + std::to_string(opt.X->k));
  const int k = A.k;
  A.padded = stage(A, "padding", [&] { return padded_system(S, k); });
  A.frames = stage(A, "frames", [&] {
    if (opt.harvest) return harvested_frame_alphabet(S, A.padded, k, opt.harvest->first, opt.harvest->second, opt.budget);
    return frame_alphabet(A.padded, k, opt.budget);
  });
  A.code_X = stage(A, "code", [&] {
    if (!opt.X) return code_for(k, A.frames.frames.size(), opt.budget);
    if (!is_comma_free_picture_code(*opt.X)) throw DomainError("the given code is not comma-free");
    return *opt.X;
  });
  A.frame_tiles = stage(A, "frame tiles",
                        [&] { return std::make_shared<const TileSet>(frame_tileset(A.frames, *A.padded.explicit_tiles())); });
  A.code_Z = stage(A, "code Z", [&] { return build_code_Z(A.frames, A.code_X); });
  A.encoded_tiles = stage(A, "encoded tiles", [&] { return encoded_local_tileset(*A.frame_tiles, A.code_Z); });
  A.final_system = stage(A, "padding elimination", [&] {
    auto Mp = eliminate_padding(*A.frame_tiles, A.code_Z, A.frames.faces);
    auto theta = Mp->alphabet();
    auto ids = theta_ids(A.code_Z.alphabet, A.frames.faces);
    const auto nb = static_cast<Sym>(A.frames.faces->size());
    SymbolMap rho{theta, S.terminal, std::vector<Sym>(theta->size(), kUnknown)};
    for (Sym s = 0; s < static_cast<Sym>(ids.size()); ++s)
      if (ids[static_cast<std::size_t>(s)] != kBorder)
        rho.image[static_cast<std::size_t>(ids[static_cast<std::size_t>(s)])] = s % nb;  // faces = terminal + "$"
    TilingSystem F{S.terminal, theta, Mp, rho};
    F.validate();
    auto r = alphabetic_ratio(F);
    if (!(r == Ratio{2, 1})) throw DomainError("final alphabetic ratio is " + r.str() + ", not 2/1");
    return F;
  });
  return A;
}

std::optional<Picture> explicit_preimage(const ReductionArtifacts& A, const Picture& pre) {
  const int k = A.k;
  Picture q = padded_preimage(pre, A.padded, k);
  Picture b;
  try {
    b = blockify(q, A.frames, A.padded.projection);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  std::vector<Picture> blocks;
  for (Sym s : b.cells()) blocks.push_back(A.code_Z.code_of(s));
  Picture enc = assemble(blocks, b.rows(), b.cols());
  auto ids = theta_ids(A.code_Z.alphabet, A.frames.faces);
  std::vector<Sym> cells;
  for (int i = 0; i < pre.rows(); ++i)
    for (int j = 0; j < pre.cols(); ++j) {
      Sym t = ids[static_cast<std::size_t>(enc(i, j))];
      if (t == kBorder) throw DomainError("explicit_preimage: padding inside the picture");
      cells.push_back(t);
    }
  return Picture(A.final_system.local, pre.rows(), pre.cols(), std::move(cells));
}

std::optional<Picture> explicit_preimage_of(const ReductionArtifacts& A, const Picture& p, long long budget) {
  auto r = preimage_search(p, A.original, budget);
  if (r.status == SearchOutcome::exhausted) throw BudgetExhausted("explicit pre-image: search budget exhausted", r.nodes);
  if (r.status != SearchOutcome::found) return std::nullopt;
  return explicit_preimage(A, *r.witness);
}

}  // namespace pl
