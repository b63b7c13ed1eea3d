#include "pl/tileset.hpp"

#include <algorithm>

#include "pl/errors.hpp"

namespace pl {

TileSet::TileSet(int k, AlphabetPtr alpha) : k_(k), alpha_(std::move(alpha)) {
  if (k < 1) throw DomainError("tile size must be positive");
  if (!alpha_) throw DomainError("tile set without alphabet");
}

TileSet::TileSet(int k, AlphabetPtr alpha, const std::set<Picture>& tiles) : TileSet(k, std::move(alpha)) {
  for (auto& t : tiles) insert(t);
  seal();
}

std::string TileSet::mask_of(const Sym* w) const {
  std::string m(static_cast<std::size_t>(k_) * k_, '0');
  for (int i = 0; i < k_ * k_; ++i)
    if (w[i] == kBorder) m[i] = '1';
  return m;
}

void TileSet::insert(const Picture& tile) {
  if (tile.rows() != k_ || tile.cols() != k_) throw DomainError("tile is not " + std::to_string(k_) + "x" + std::to_string(k_));
  if (!same_alphabet(tile.alphabet(), alpha_)) throw DomainError("tile over a foreign alphabet");
  insert(tile.cells());
}

void TileSet::insert(const std::vector<Sym>& cells) {
  if (cells.size() != static_cast<std::size_t>(k_) * k_) throw DomainError("tile has the wrong cell count");
  const auto n = static_cast<Sym>(alpha_->size());
  bool all_border = true;
  std::vector<Sym> free;
  for (Sym s : cells) {
    if (s != kBorder && (s < 0 || s >= n)) throw DomainError("tile symbol outside alphabet");
    if (s != kBorder) {
      all_border = false;
      free.push_back(s);
    }
  }
  if (all_border) throw DomainError("a tile may not consist only of #");
  if (sealed_ && !groups_.empty()) {
    // reopen: move sealed content back to pending
    for (auto& [m, g] : groups_)
      for (std::size_t i = 0; i < g.n(); ++i)
        pending_[m].insert(std::vector<Sym>(g.flat.begin() + i * g.width, g.flat.begin() + (i + 1) * g.width));
    groups_.clear();
  }
  sealed_ = false;
  pending_[mask_of(cells.data())].insert(std::move(free));
}

void TileSet::seal() {
  if (sealed_) return;
  count_ = 0;
  for (auto& [m, seqs] : pending_) {
    Group g;
    for (int i = 0; i < k_ * k_; ++i)
      if (m[i] == '0') g.free_pos.push_back(i);
    g.width = g.free_pos.size();
    for (auto& s : seqs) g.flat.insert(g.flat.end(), s.begin(), s.end());
    count_ += seqs.size();
    groups_.emplace(m, std::move(g));
  }
  pending_.clear();
  sealed_ = true;
}

bool TileSet::contains(const Sym* w) const {
  if (!sealed_) throw DomainError("tile set queried before seal()");
  auto it = groups_.find(mask_of(w));
  if (it == groups_.end()) return false;
  const Group& g = it->second;
  std::vector<Sym> key;
  key.reserve(g.width);
  for (int p : g.free_pos) key.push_back(w[p]);
  std::size_t lo = 0, hi = g.n();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    const Sym* row = g.flat.data() + mid * g.width;
    if (std::lexicographical_compare(row, row + g.width, key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < g.n() && std::equal(key.begin(), key.end(), g.flat.data() + lo * g.width);
}

bool TileSet::consistent(const Sym* w) const {
  if (!sealed_) throw DomainError("tile set queried before seal()");
  auto it = groups_.find(mask_of(w));
  if (it == groups_.end()) return false;
  const Group& g = it->second;
  std::vector<Sym> key;
  key.reserve(g.width);
  for (int p : g.free_pos) key.push_back(w[p]);
  std::size_t known = 0;
  while (known < key.size() && key[known] != kUnknown) ++known;
  bool prefix_shape = std::all_of(key.begin() + static_cast<long>(known), key.end(), [](Sym s) { return s == kUnknown; });
  if (prefix_shape) {
    // first sequence >= known prefix
    std::size_t lo = 0, hi = g.n();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      const Sym* row = g.flat.data() + mid * g.width;
      if (std::lexicographical_compare(row, row + known, key.begin(), key.begin() + static_cast<long>(known)))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < g.n() && std::equal(key.begin(), key.begin() + static_cast<long>(known), g.flat.data() + lo * g.width);
  }
  for (std::size_t i = 0; i < g.n(); ++i) {
    const Sym* row = g.flat.data() + i * g.width;
    bool ok = true;
    for (std::size_t j = 0; j < g.width && ok; ++j) ok = key[j] == kUnknown || key[j] == row[j];
    if (ok) return true;
  }
  return false;
}

std::vector<std::vector<Sym>> TileSet::raw_tiles() const {
  if (!sealed_) throw DomainError("tile set queried before seal()");
  std::vector<std::vector<Sym>> out;
  out.reserve(count_);
  for (auto& [m, g] : groups_) {
    for (std::size_t i = 0; i < g.n(); ++i) {
      std::vector<Sym> cells(static_cast<std::size_t>(k_) * k_, kBorder);
      for (std::size_t j = 0; j < g.width; ++j) cells[g.free_pos[j]] = g.flat[i * g.width + j];
      out.push_back(std::move(cells));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Picture> TileSet::tiles() const {
  std::vector<Picture> out;
  for (auto& c : raw_tiles()) out.emplace_back(alpha_, k_, k_, c);
  return out;
}

bool TileSet::contains(const Picture& tile) const {
  if (tile.rows() != k_ || tile.cols() != k_) return false;
  if (!same_alphabet(tile.alphabet(), alpha_)) throw DomainError("tile over a foreign alphabet");
  return contains(tile.cells().data());
}

std::string TileSet::describe() const {
  return "explicit " + std::to_string(k_) + "-tile set (" + std::to_string(count_) + " tiles)";
}

bool operator==(const TileSet& a, const TileSet& b) {
  return a.k_ == b.k_ && same_alphabet(a.alpha_, b.alpha_) && a.raw_tiles() == b.raw_tiles();
}

void TilingSystem::validate() const {
  if (!terminal || !local || !tiles) throw DomainError("incomplete tiling system");
  if (!same_alphabet(tiles->alphabet(), local)) throw DomainError("tile set is not over the local alphabet");
  if (!same_alphabet(projection.from, local) || !same_alphabet(projection.to, terminal))
    throw DomainError("projection must map the local alphabet onto the terminal one");
  if (!projection.total()) throw DomainError("projection is not total on the local alphabet");
}

TilingSystem as_system(ConstraintPtr T) {
  TilingSystem s{T->alphabet(), T->alphabet(), T, SymbolMap::identity(T->alphabet())};
  return s;
}

}  // namespace pl
