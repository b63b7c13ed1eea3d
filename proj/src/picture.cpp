#include "pl/picture.hpp"

#include <algorithm>
#include <sstream>

#include "pl/errors.hpp"

namespace pl {

namespace {
const std::string kHashTok{kBorderToken};
const std::string kUnknownTok{"?"};

void need_same(const Picture& p, const Picture& q, const char* op) {
  if (!same_alphabet(p.alphabet(), q.alphabet()))
    throw DomainError(std::string(op) + ": pictures are over different alphabets");
}
}  // namespace

void check_token(std::string_view tok) {
  if (tok.empty()) throw DomainError("empty symbol token");
  if (tok == kBorderToken) throw DomainError("\"#\" is reserved for the border");
  for (char c : tok)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw DomainError("symbol token contains whitespace: '" + std::string(tok) + "'");
}

AlphabetPtr Alphabet::make(std::vector<std::string> tokens, std::string name) {
  auto* a = new Alphabet();
  a->name_ = std::move(name);
  for (auto& t : tokens) {
    check_token(t);
    if (a->index_.count(t)) {
      delete a;
      throw DomainError("duplicate symbol '" + t + "' in alphabet");
    }
    a->index_.emplace(t, static_cast<Sym>(a->tokens_.size()));
    a->tokens_.push_back(t);
  }
  return AlphabetPtr(a);
}

const std::string& Alphabet::token(Sym s) const {
  if (s == kBorder) return kHashTok;
  if (s == kUnknown) return kUnknownTok;
  return tokens_.at(static_cast<std::size_t>(s));
}

std::optional<Sym> Alphabet::find(std::string_view tok) const {
  if (tok == kBorderToken) return kBorder;
  auto it = index_.find(std::string(tok));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Sym Alphabet::id(std::string_view tok) const {
  auto s = find(tok);
  if (!s) throw DomainError("symbol '" + std::string(tok) + "' not in alphabet" + (name_.empty() ? "" : " " + name_));
  return *s;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_symbols(*b);
}

Picture::Picture(AlphabetPtr alpha, int rows, int cols, std::vector<Sym> cells)
    : alpha_(std::move(alpha)), rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (!alpha_) throw DomainError("picture without alphabet");
  if (rows < 1 || cols < 1) throw DomainError("picture sides must be positive");
  if (cells_.size() != static_cast<std::size_t>(rows) * cols)
    throw DomainError("cell count does not match picture size");
  const auto n = static_cast<Sym>(alpha_->size());
  for (Sym s : cells_)
    if (s != kBorder && (s < 0 || s >= n)) throw DomainError("cell symbol outside alphabet");
}

Picture Picture::filled(AlphabetPtr alpha, int rows, int cols, Sym s) {
  return Picture(std::move(alpha), rows, cols, std::vector<Sym>(static_cast<std::size_t>(rows) * cols, s));
}

Picture Picture::from_rows(AlphabetPtr alpha, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows[0].empty()) throw DomainError("empty picture");
  std::vector<Sym> cells;
  for (auto& r : rows) {
    if (r.size() != rows[0].size()) throw DomainError("ragged picture rows");
    for (auto& t : r) cells.push_back(alpha->id(t));
  }
  return Picture(alpha, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), std::move(cells));
}

Picture Picture::from_text_rows(AlphabetPtr alpha, const std::vector<std::string>& rows) {
  std::vector<std::vector<std::string>> toks;
  for (auto& line : rows) {
    std::istringstream in(line);
    std::vector<std::string> r;
    for (std::string t; in >> t;) r.push_back(t);
    toks.push_back(std::move(r));
  }
  return from_rows(std::move(alpha), toks);
}

Sym Picture::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw DomainError("picture index out of range");
  return (*this)(i - 1, j - 1);
}

bool Picture::has_border() const {
  return std::find(cells_.begin(), cells_.end(), kBorder) != cells_.end();
}

bool operator==(const Picture& a, const Picture& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_ && same_alphabet(a.alpha_, b.alpha_);
}

std::strong_ordering operator<=>(const Picture& a, const Picture& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.cells_ <=> b.cells_;
}

std::string Picture::debug_string() const {
  std::string s;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) s += ' ';
      s += alpha_->token((*this)(r, c));
    }
    s += '\n';
  }
  return s;
}

std::size_t PictureHash::operator()(const Picture& p) const {
  std::size_t h = static_cast<std::size_t>(p.rows()) * 1000003u + static_cast<std::size_t>(p.cols());
  for (Sym s : p.cells()) h = (h ^ static_cast<std::size_t>(s + 3)) * 0x100000001b3ull;
  return h;
}

SymbolMap SymbolMap::identity(const AlphabetPtr& a) {
  SymbolMap m{a, a, {}};
  for (std::size_t i = 0; i < a->size(); ++i) m.image.push_back(static_cast<Sym>(i));
  return m;
}

SymbolMap SymbolMap::from_pairs(const AlphabetPtr& from, const AlphabetPtr& to,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
  SymbolMap m{from, to, std::vector<Sym>(from->size(), kUnknown)};
  for (auto& [a, b] : pairs) {
    Sym s = from->id(a);
    if (s == kBorder) {
      if (b != kBorderToken) throw DomainError("# must map to #");
      continue;
    }
    Sym t = to->id(b);
    if (t == kBorder) throw DomainError("only # may map to #");
    if (m.image[s] != kUnknown && m.image[s] != t) throw DomainError("symbol '" + a + "' mapped twice");
    m.image[s] = t;
  }
  return m;
}

Sym SymbolMap::operator()(Sym s) const {
  if (s == kBorder) return kBorder;
  Sym t = image.at(static_cast<std::size_t>(s));
  if (t == kUnknown) throw DomainError("projection undefined on symbol '" + from->token(s) + "'");
  return t;
}

bool SymbolMap::total() const {
  return std::none_of(image.begin(), image.end(), [](Sym s) { return s == kUnknown; });
}

SymbolMap SymbolMap::then(const SymbolMap& g) const {
  if (!same_alphabet(to, g.from)) throw DomainError("cannot compose maps: alphabets differ");
  SymbolMap m{from, g.to, {}};
  for (Sym s : image) m.image.push_back(s == kUnknown ? kUnknown : g.image.at(static_cast<std::size_t>(s)));
  return m;
}

Picture concat_h(const Picture& p, const Picture& q) {
  need_same(p, q, "concat_h");
  if (p.rows() != q.rows()) throw DomainError("concat_h: row counts differ");
  std::vector<Sym> cells;
  cells.reserve(p.cells().size() + q.cells().size());
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) cells.push_back(p(r, c));
    for (int c = 0; c < q.cols(); ++c) cells.push_back(q(r, c));
  }
  return Picture(p.alphabet(), p.rows(), p.cols() + q.cols(), std::move(cells));
}

Picture concat_v(const Picture& p, const Picture& q) {
  need_same(p, q, "concat_v");
  if (p.cols() != q.cols()) throw DomainError("concat_v: column counts differ");
  std::vector<Sym> cells = p.cells();
  cells.insert(cells.end(), q.cells().begin(), q.cells().end());
  return Picture(p.alphabet(), p.rows() + q.rows(), p.cols(), std::move(cells));
}

Picture transpose(const Picture& p) {
  std::vector<Sym> cells;
  cells.reserve(p.cells().size());
  for (int c = 0; c < p.cols(); ++c)
    for (int r = 0; r < p.rows(); ++r) cells.push_back(p(r, c));
  return Picture(p.alphabet(), p.cols(), p.rows(), std::move(cells));
}

Picture power_h(const Picture& p, int times) {
  if (times < 1) throw DomainError("power must be at least 1");
  Picture r = p;
  for (int i = 1; i < times; ++i) r = concat_h(r, p);
  return r;
}

Picture power_v(const Picture& p, int times) {
  if (times < 1) throw DomainError("power must be at least 1");
  Picture r = p;
  for (int i = 1; i < times; ++i) r = concat_v(r, p);
  return r;
}

std::pair<int, int> thick_bordered_size(int rows, int cols, int k) {
  return {std::max(rows + 2, k), std::max(cols + 2, k)};
}

Picture thick_bordered(const Picture& p, int k) {
  if (k < 1) throw DomainError("thick_bordered: k must be positive");
  if (p.has_border()) throw DomainError("picture already contains the reserved symbol #");
  auto [h, w] = thick_bordered_size(p.rows(), p.cols(), k);
  std::vector<Sym> cells(static_cast<std::size_t>(h) * w, kBorder);
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) cells[static_cast<std::size_t>(r + 1) * w + c + 1] = p(r, c);
  return Picture(p.alphabet(), h, w, std::move(cells));
}

Picture bordered(const Picture& p) { return thick_bordered(p, 1); }

Picture subpicture(const Picture& p, int i, int j, int i2, int j2) {
  if (i < 1 || j < 1 || i > i2 || j > j2 || i2 > p.rows() || j2 > p.cols())
    throw DomainError("subpicture: index out of range");
  std::vector<Sym> cells;
  cells.reserve(static_cast<std::size_t>(i2 - i + 1) * (j2 - j + 1));
  for (int r = i - 1; r < i2; ++r)
    for (int c = j - 1; c < j2; ++c) cells.push_back(p(r, c));
  return Picture(p.alphabet(), i2 - i + 1, j2 - j + 1, std::move(cells));
}

std::set<Picture> k_tiles(const Picture& p, int k) {
  if (k < 1) throw DomainError("k_tiles: k must be positive");
  std::set<Picture> out;
  for (int i = 1; i + k - 1 <= p.rows(); ++i)
    for (int j = 1; j + k - 1 <= p.cols(); ++j) out.insert(subpicture(p, i, j, i + k - 1, j + k - 1));
  return out;
}

Tessellation tessellate(const Picture& p, int k) {
  if (k < 1 || p.rows() % k != 0 || p.cols() % k != 0)
    throw DomainError("tessellate: picture size (" + std::to_string(p.rows()) + "," + std::to_string(p.cols()) +
                      ") is not a multiple of " + std::to_string(k));
  Tessellation t{k, p.rows() / k, p.cols() / k, {}};
  for (int bi = 0; bi < t.block_rows; ++bi)
    for (int bj = 0; bj < t.block_cols; ++bj)
      t.blocks.push_back(subpicture(p, bi * k + 1, bj * k + 1, bi * k + k, bj * k + k));
  return t;
}

Picture assemble(const std::vector<Picture>& blocks, int block_rows, int block_cols) {
  if (blocks.size() != static_cast<std::size_t>(block_rows) * block_cols || blocks.empty())
    throw DomainError("assemble: wrong number of blocks");
  Picture out;
  for (int bi = 0; bi < block_rows; ++bi) {
    Picture row = blocks[static_cast<std::size_t>(bi) * block_cols];
    for (int bj = 1; bj < block_cols; ++bj) row = concat_h(row, blocks[static_cast<std::size_t>(bi) * block_cols + bj]);
    out = bi == 0 ? row : concat_v(out, row);
  }
  return out;
}

Picture reassemble(const Tessellation& t) { return assemble(t.blocks, t.block_rows, t.block_cols); }

Frame frame_of(const Picture& p) {
  if (p.rows() != p.cols() || p.rows() < 2) throw DomainError("frame_of: picture must be k x k with k >= 2");
  const int k = p.rows();
  Frame f;
  for (int i = 0; i < k; ++i) {
    f.north.push_back(p(0, i));
    f.south.push_back(p(k - 1, i));
    f.west.push_back(p(i, 0));
    f.east.push_back(p(i, k - 1));
  }
  return f;
}

std::string pair_token(std::string_view a, std::string_view b) {
  std::string s = "(";
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

AlphabetPtr product_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  std::vector<std::string> toks;
  for (auto& x : a->tokens())
    for (auto& y : b->tokens()) toks.push_back(pair_token(x, y));
  return Alphabet::make(std::move(toks), a->name() + "x" + b->name());
}

Picture merge(const Picture& p, const Picture& q, const AlphabetPtr& product) {
  if (p.size() != q.size()) throw DomainError("merge: pictures must be isometric");
  const auto nb = static_cast<Sym>(q.alphabet()->size());
  if (product->size() != p.alphabet()->size() * q.alphabet()->size())
    throw DomainError("merge: product alphabet does not match");
  std::vector<Sym> cells;
  cells.reserve(p.cells().size());
  for (std::size_t i = 0; i < p.cells().size(); ++i) {
    Sym a = p.cells()[i], b = q.cells()[i];
    if (a == kBorder || b == kBorder) {
      if (a != b) throw DomainError("merge: # must coincide in both pictures");
      cells.push_back(kBorder);
    } else {
      cells.push_back(a * nb + b);
    }
  }
  return Picture(product, p.rows(), p.cols(), std::move(cells));
}

Picture merge(const Picture& p, const Picture& q) {
  return merge(p, q, product_alphabet(p.alphabet(), q.alphabet()));
}

Picture project(const Picture& p, const SymbolMap& m) {
  if (!same_alphabet(p.alphabet(), m.from)) throw DomainError("project: map is over a different alphabet");
  std::vector<Sym> cells;
  cells.reserve(p.cells().size());
  for (Sym s : p.cells()) cells.push_back(m(s));
  return Picture(m.to, p.rows(), p.cols(), std::move(cells));
}

}  // namespace pl

namespace pl {

SymbolMap component_map(const AlphabetPtr& product, const AlphabetPtr& a, const AlphabetPtr& b, int which) {
  if (product->size() != a->size() * b->size()) throw DomainError("component_map: not a product of the given alphabets");
  if (which != 0 && which != 1) throw DomainError("component_map: component must be 0 or 1");
  const auto nb = static_cast<Sym>(b->size());
  SymbolMap m{product, which == 0 ? a : b, {}};
  for (Sym s = 0; s < static_cast<Sym>(product->size()); ++s) m.image.push_back(which == 0 ? s / nb : s % nb);
  return m;
}

}  // namespace pl
