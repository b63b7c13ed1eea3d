#include "pl/codes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <set>
#include <unordered_set>

#include "pl/errors.hpp"

namespace pl {

AlphabetPtr binary_alphabet() {
  static auto a = Alphabet::make({"0", "1"}, "bits");
  return a;
}

WordCode WordCode::from_strings(const AlphabetPtr& a, const std::vector<std::string>& ws) {
  WordCode Y;
  Y.alphabet = a;
  std::set<Word> uniq;
  for (auto& s : ws) {
    if (s.empty()) throw DomainError("word code: empty word");
    if (Y.k == 0) Y.k = static_cast<int>(s.size());
    if (static_cast<int>(s.size()) != Y.k) throw DomainError("word code: words of different lengths");
    Word w;
    for (char c : s) w.push_back(a->id(std::string(1, c)));
    uniq.insert(w);
  }
  Y.words.assign(uniq.begin(), uniq.end());
  return Y;
}

std::vector<std::string> WordCode::strings() const {
  std::vector<std::string> out;
  for (auto& w : words) {
    std::string s;
    for (Sym c : w) s += alphabet->token(c);
    out.push_back(s);
  }
  return out;
}

bool is_comma_free_word_code(const WordCode& Y) {
  std::set<Word> in(Y.words.begin(), Y.words.end());
  const auto k = static_cast<std::size_t>(Y.k);
  Word uv(2 * k);
  for (auto& u : Y.words)
    for (auto& v : Y.words) {
      std::copy(u.begin(), u.end(), uv.begin());
      std::copy(v.begin(), v.end(), uv.begin() + static_cast<long>(k));
      for (std::size_t i = 1; i < k; ++i)
        if (in.count(Word(uv.begin() + static_cast<long>(i), uv.begin() + static_cast<long>(i + k)))) return false;
    }
  return true;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t eastman_count(int k) {
  if (!is_prime(k)) throw DomainError("eastman_count: k = " + std::to_string(k) + " is not prime");
  if (k > 62) throw DomainError("eastman_count: k too large");
  return ((std::uint64_t{1} << k) - 2) / static_cast<std::uint64_t>(k);
}

namespace {

// words of length k as bit masks, most significant bit first
std::uint64_t rotl(std::uint64_t w, int k) {
  std::uint64_t top = (w >> (k - 1)) & 1u;
  return ((w << 1) | top) & ((std::uint64_t{1} << k) - 1);
}

}  // namespace

CodeSearch find_comma_free_word_code(int k, int target, long long budget) {
  if (k < 1 || k > 24) throw DomainError("find_comma_free_word_code: k must be in 1..24");
  if (target < 0) throw DomainError("find_comma_free_word_code: negative target");
  CodeSearch out;
  // primitive conjugacy classes, each listed by its rotations
  std::vector<std::vector<std::uint64_t>> classes;
  std::vector<char> seen(std::size_t{1} << k, 0);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << k); ++w) {
    if (seen[w]) continue;
    std::vector<std::uint64_t> rots{w};
    seen[w] = 1;
    for (std::uint64_t r = rotl(w, k); r != w; r = rotl(r, k)) {
      rots.push_back(r);
      seen[r] = 1;
    }
    if (static_cast<int>(rots.size()) == k) classes.push_back(rots);
  }
  if (is_prime(k) && static_cast<std::uint64_t>(target) > eastman_count(k)) {
    out.reason = "target exceeds (2^k-2)/k = " + std::to_string(eastman_count(k));
  }
  if (target > static_cast<int>(classes.size())) {
    out.status = CodeSearch::infeasible;
    out.reason = "only " + std::to_string(classes.size()) + " primitive conjugacy classes exist at length " +
                 std::to_string(k) + (out.reason.empty() ? "" : "; " + out.reason);
    return out;
  }
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> chosen;
  std::unordered_set<std::uint64_t> inset;
  // factors of u.v at offsets 1..k-1
  auto clash = [&](std::uint64_t u, std::uint64_t v, std::uint64_t w, bool any) {
    std::uint64_t uv = (u << k) | v;
    for (int i = 1; i < k; ++i) {
      std::uint64_t f = (uv >> (k - i)) & mask;
      if (any ? (inset.count(f) || f == w) : f == w) return true;
    }
    return false;
  };
  auto fits = [&](std::uint64_t w) {
    if (clash(w, w, w, true)) return false;
    for (auto u : chosen) {
      if (clash(u, w, w, true) || clash(w, u, w, true)) return false;
      for (auto v : chosen)
        if (clash(u, v, w, false)) return false;
    }
    return true;
  };
  long long nodes = 0;
  bool out_of_budget = false;
  std::function<bool(std::size_t)> go = [&](std::size_t ci) -> bool {
    if (static_cast<int>(chosen.size()) == target) return true;
    if (chosen.size() + (classes.size() - ci) < static_cast<std::size_t>(target)) return false;
    for (auto w : classes[ci]) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      if (!fits(w)) continue;
      chosen.push_back(w);
      inset.insert(w);
      if (go(ci + 1)) return true;
      inset.erase(w);
      chosen.pop_back();
      if (out_of_budget) return false;
    }
    return go(ci + 1);  // skip this class
  };
  bool ok = go(0);
  out.nodes = nodes;
  if (ok) {
    WordCode Y;
    Y.k = k;
    Y.alphabet = binary_alphabet();
    for (auto w : chosen) {
      Word word;
      for (int i = k - 1; i >= 0; --i) word.push_back(static_cast<Sym>((w >> i) & 1u));
      Y.words.push_back(word);
    }
    std::sort(Y.words.begin(), Y.words.end());
    out.status = CodeSearch::found;
    out.code = Y;
    out.reason.clear();
  } else if (out_of_budget) {
    out.status = CodeSearch::exhausted;
    out.reason = "budget of " + std::to_string(budget) + " nodes exhausted";
  } else {
    out.status = CodeSearch::infeasible;
    if (out.reason.empty()) out.reason = "exhaustive class search found no code";
  }
  return out;
}

bool is_obligation_word(const std::string& w) {
  if (w.empty()) return false;
  for (char c : w)
    if (c != 't' && c != 'f') throw DomainError("obligation word: letters must be t or f");
  const std::size_t n = w.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool meet = false;
    for (std::size_t i = 0; i < n && !meet; ++i) meet = w[i] == 't' && w[(i + r) % n] == 't';
    if (!meet) return false;
  }
  return true;
}

std::string make_obligation_word(int k, int q) {
  if (q < 1 || 2 * q >= k) throw DomainError("make_obligation_word: need 1 <= q < k/2");
  std::string w(static_cast<std::size_t>(k), 'f');
  for (int i = 1; i <= k; ++i)
    if (i <= q || i % q == 0) w[static_cast<std::size_t>(i - 1)] = 't';
  return w;
}

std::string make_obligation_word(int k) {
  return make_obligation_word(k, static_cast<int>(std::floor(std::sqrt(static_cast<double>(k)))));
}

void CodeFamilySpec::validate() const {
  if (k < 3) throw DomainError("code family: k must be at least 3");
  if (y_hor.k != k || y_vert.k != k) throw DomainError("code family: word codes must have length k");
  if (!same_alphabet(y_hor.alphabet, y_vert.alphabet)) throw DomainError("code family: word codes over different alphabets");
  if (y_hor.words.empty() || y_vert.words.empty()) throw DomainError("code family: empty word code");
  if (!is_comma_free_word_code(y_hor)) throw DomainError("code family: horizontal code is not comma-free");
  if (!is_comma_free_word_code(y_vert)) throw DomainError("code family: vertical code is not comma-free");
  if (static_cast<int>(obligation.size()) != k) throw DomainError("code family: obligation word must have length k");
  if (!is_obligation_word(obligation)) throw DomainError("code family: '" + obligation + "' is not an obligation word");
}

PictureCode PictureCode::make(int k, AlphabetPtr alpha, std::vector<Picture> pictures) {
  PictureCode X;
  X.k = k;
  X.alphabet = std::move(alpha);
  auto lookup = std::make_shared<std::unordered_map<Picture, int, PictureHash>>();
  for (auto& p : pictures) {
    if (p.rows() != k || p.cols() != k) throw DomainError("picture code: every picture must be k x k");
    if (!same_alphabet(p.alphabet(), X.alphabet)) throw DomainError("picture code: picture over another alphabet");
    if (p.has_border()) throw DomainError("picture code: pictures may not contain #");
    if (!lookup->emplace(p, static_cast<int>(lookup->size())).second) throw DomainError("picture code: duplicate picture");
  }
  X.pictures = std::move(pictures);
  X.lookup_ = std::move(lookup);
  return X;
}

std::optional<int> PictureCode::index_of(const Picture& p) const {
  if (!lookup_) return std::nullopt;
  auto it = lookup_->find(p);
  if (it == lookup_->end()) return std::nullopt;
  return it->second;
}

PictureCode PictureCode::with_coding(const AlphabetPtr& src) const {
  std::vector<int> c(src->size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>(i);
  return with_coding(src, std::move(c));
}

PictureCode PictureCode::with_coding(const AlphabetPtr& src, std::vector<int> c) const {
  if (c.size() != src->size()) throw DomainError("coding must cover the whole source alphabet");
  std::set<int> used;
  for (int i : c) {
    if (i < 0 || i >= static_cast<int>(pictures.size())) throw DomainError("coding refers to a missing code picture");
    if (!used.insert(i).second) throw DomainError("coding is not injective");
  }
  PictureCode X = *this;
  X.source = src;
  X.coding = std::move(c);
  return X;
}

std::uint64_t family_code_size(const CodeFamilySpec& spec) {
  spec.validate();
  const int k = spec.k;
  const std::uint64_t sigma = spec.y_hor.alphabet->size();
  std::uint64_t free_rows = 0;
  for (char c : spec.obligation) free_rows += c == 'f';
  std::uint64_t free_part = 1;
  for (std::uint64_t i = 0; i < free_rows * static_cast<std::uint64_t>(k - 1); ++i) free_part *= sigma;
  std::uint64_t total = 0;
  for (auto& v : spec.y_vert.words) {
    std::uint64_t prod = 1;
    for (int i = 0; i < k; ++i) {
      if (spec.obligation[static_cast<std::size_t>(i)] != 't') continue;
      std::uint64_t n = 0;
      for (auto& y : spec.y_hor.words) n += y[0] == v[static_cast<std::size_t>(i)];
      prod *= n;
    }
    total += prod * free_part;
  }
  return total;
}

PictureCode generate_picture_code(const CodeFamilySpec& spec) {
  spec.validate();
  const int k = spec.k;
  const auto& A = spec.y_hor.alphabet;
  const auto sigma = static_cast<Sym>(A->size());
  std::vector<Picture> out;
  std::vector<std::string> starved;
  for (auto& v : spec.y_vert.words) {
    // per row: the choices for columns 2..k
    std::vector<std::vector<Word>> choice(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      auto& ch = choice[static_cast<std::size_t>(i)];
      if (spec.obligation[static_cast<std::size_t>(i)] == 't') {
        for (auto& y : spec.y_hor.words)
          if (y[0] == v[static_cast<std::size_t>(i)]) ch.emplace_back(y.begin() + 1, y.end());
        if (ch.empty())
          starved.push_back("row " + std::to_string(i + 1) + " needs a horizontal word starting with " +
                            A->token(v[static_cast<std::size_t>(i)]));
      } else {
        Word t(static_cast<std::size_t>(k - 1), 0);
        while (true) {
          ch.push_back(t);
          std::size_t j = t.size();
          while (j > 0 && ++t[j - 1] == sigma) t[--j] = 0;
          if (j == 0) break;
        }
      }
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    bool any = std::all_of(choice.begin(), choice.end(), [](auto& c) { return !c.empty(); });
    while (any) {
      std::vector<Sym> cells;
      for (int i = 0; i < k; ++i) {
        cells.push_back(v[static_cast<std::size_t>(i)]);
        auto& row = choice[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        cells.insert(cells.end(), row.begin(), row.end());
      }
      out.emplace_back(A, k, k, std::move(cells));
      int i = k - 1;
      while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == choice[static_cast<std::size_t>(i)].size())
        pick[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
    }
  }
  auto X = PictureCode::make(k, A, std::move(out));
  if (X.pictures.empty()) {
    X.diagnostic = "empty code:";
    for (auto& s : starved) X.diagnostic += " " + s + ";";
  }
  return X;
}

namespace {

std::string pack(const Picture& p, int r0, int c0, int r1, int c1) {
  std::string s;
  for (int r = r0; r < r1; ++r)
    for (int c = c0; c < c1; ++c) {
      Sym v = p(r, c);
      s.append(reinterpret_cast<const char*>(&v), sizeof v);
    }
  return s;
}

}  // namespace

bool is_comma_free_picture_code(const PictureCode& X) {
  const int k = X.k;
  if (X.pictures.empty()) return true;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) {
      if ((a == 0 || a == k) && (b == 0 || b == k)) continue;
      // pieces of the four blocks that a window at (a,b) sees
      std::unordered_set<std::string> nw, ne, sw, se;
      for (auto& y : X.pictures) {
        nw.insert(pack(y, a, b, k, k));
        ne.insert(pack(y, a, 0, k, b));
        sw.insert(pack(y, 0, b, a, k));
        se.insert(pack(y, 0, 0, a, b));
      }
      for (auto& x : X.pictures)
        if (nw.count(pack(x, 0, 0, k - a, k - b)) && ne.count(pack(x, 0, k - b, k - a, k)) &&
            sw.count(pack(x, k - a, 0, k, k - b)) && se.count(pack(x, k - a, k - b, k, k)))
          return false;
    }
  return true;
}

bool is_comma_free_picture_code_brute(const PictureCode& X, std::uint64_t max_assemblies) {
  const std::uint64_t n = X.pictures.size();
  const double need = std::pow(static_cast<double>(n), 4);
  if (need > static_cast<double>(max_assemblies))
    throw BudgetExhausted("comma-free check needs " + std::to_string(static_cast<unsigned long long>(need)) +
                              " assemblies, over the limit of " + std::to_string(max_assemblies),
                          static_cast<long long>(need));
  const int k = X.k, K = 2 * k;
  std::unordered_set<std::string> in;
  for (auto& x : X.pictures) in.insert(pack(x, 0, 0, k, k));
  std::vector<Sym> big(static_cast<std::size_t>(K) * K);
  auto put = [&](const Picture& x, int r0, int c0) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) big[static_cast<std::size_t>(r0 + r) * K + c0 + c] = x(r, c);
  };
  std::string win(static_cast<std::size_t>(k) * k * sizeof(Sym), '\0');
  for (auto& a : X.pictures) {
    put(a, 0, 0);
    for (auto& b : X.pictures) {
      put(b, 0, k);
      for (auto& c : X.pictures) {
        put(c, k, 0);
        for (auto& d : X.pictures) {
          put(d, k, k);
          for (int r = 0; r <= k; ++r)
            for (int s = 0; s <= k; ++s) {
              if ((r == 0 || r == k) && (s == 0 || s == k)) continue;
              for (int i = 0; i < k; ++i)
                std::memcpy(win.data() + static_cast<std::size_t>(i) * k * sizeof(Sym),
                            big.data() + static_cast<std::size_t>(r + i) * K + s, static_cast<std::size_t>(k) * sizeof(Sym));
              if (in.count(win)) return false;
            }
        }
      }
    }
  }
  return true;
}

double LowerBound::value() const { return std::exp2(log2_value); }

LowerBound numerosity_lower_bound(int k) {
  if (!is_prime(k)) throw DomainError("numerosity_lower_bound: k = " + std::to_string(k) + " is not prime");
  LowerBound b;
  b.k = k;
  b.q = static_cast<int>(std::floor(std::sqrt(static_cast<double>(k))));
  const double kk = k;
  b.log2_value = kk * kk - kk - 2 * std::sqrt(kk) * std::log2(kk + 1);
  b.log2_coded_rows = 2 * b.q * std::log2((std::exp2(kk - 1) - 1) / kk);
  b.log2_free_rows = (kk - 1) * (kk - 2 * b.q);
  return b;
}

int choose_k(int m) {
  if (m < 2) throw DomainError("choose_k: m must be at least 2");
  const double lg = std::log2(static_cast<double>(m));
  int lo = static_cast<int>(std::ceil(4 * lg - 1e-9)), hi = static_cast<int>(std::floor(8 * lg + 1e-9));
  for (int k = lo; k <= hi; ++k)
    if (is_prime(k)) return k;
  throw DomainError("choose_k: no prime in [4 lg m, 8 lg m]");
}

Picture encode_picture(const Picture& p, const PictureCode& X) {
  if (!X.has_coding()) throw DomainError("encode_picture: the code has no coding");
  if (!same_alphabet(p.alphabet(), X.source)) throw DomainError("encode_picture: picture is not over the coded alphabet");
  if (p.has_border()) throw DomainError("encode_picture: picture contains #");
  std::vector<Picture> blocks;
  for (Sym s : p.cells()) blocks.push_back(X.code_of(s));
  return assemble(blocks, p.rows(), p.cols());
}

std::optional<Picture> decode_picture(const Picture& p, const PictureCode& X) {
  if (!X.has_coding()) throw DomainError("decode_picture: the code has no coding");
  if (p.rows() % X.k || p.cols() % X.k) return std::nullopt;
  std::vector<int> back(X.size(), -1);
  for (std::size_t s = 0; s < X.coding.size(); ++s) back[static_cast<std::size_t>(X.coding[s])] = static_cast<int>(s);
  auto t = tessellate(p, X.k);
  std::vector<Sym> cells;
  for (auto& b : t.blocks) {
    auto i = X.index_of(b);
    if (!i || back[static_cast<std::size_t>(*i)] < 0) return std::nullopt;
    cells.push_back(back[static_cast<std::size_t>(*i)]);
  }
  return Picture(X.source, t.block_rows, t.block_cols, std::move(cells));
}

// ---- block windows ----

BlockWindows::BlockWindows(int block, AlphabetPtr window_alpha, std::vector<std::vector<Sym>> blocks, std::string name)
    : block_(block), alpha_(std::move(window_alpha)), blocks_(std::move(blocks)), name_(std::move(name)) {
  if (block_ < 1) throw DomainError("block windows: block size must be positive");
  const int K = 2 * block_;
  std::set<std::vector<int>> seen;
  // four block rows already show every way a window can meet the grid
  for (int R = 1; R <= 4; ++R) {
    const int H = std::max(R * block_ + 2, K);
    for (int s = 0; s + K <= H; ++s) {
      Profile p;
      int lo = 1 << 30;
      for (int t = s; t < s + K; ++t)
        if (t >= 1 && t <= R * block_) lo = std::min(lo, (t - 1) / block_);
      for (int t = s; t < s + K; ++t) {
        if (t == 0) {
          p.entry.push_back(-1);
          p.before = true;
        } else if (t > R * block_) {
          p.entry.push_back(-2);
          p.after = true;
        } else {
          int b = (t - 1) / block_ - lo;
          p.entry.push_back(b * block_ + (t - 1) % block_);
          p.nblocks = std::max(p.nblocks, b + 1);
        }
      }
      if (seen.insert(p.entry).second) profiles_.push_back(p);
    }
  }
  for (int i = 0; i < static_cast<int>(profiles_.size()); ++i) {
    std::uint64_t m = 0;
    const auto& e = profiles_[static_cast<std::size_t>(i)].entry;
    for (std::size_t t = 0; t < e.size(); ++t)
      if (e[t] < 0) m |= std::uint64_t{1} << t;
    by_mask_[m].push_back(i);
  }
}

struct BlockWindows::Scratch {
  std::string key;
  std::vector<std::uint64_t> dom;  // slot-major bitsets
  std::vector<int> grid, var_at;
  std::vector<std::pair<int, int>> var_pos;
  std::vector<std::vector<std::pair<int, int>>> checks;
  int fc = 0;
  int fr = 0;
  const std::vector<int>* rows = nullptr;
  const std::vector<int>* cols = nullptr;
  int r0 = 0, c0 = 0;
};

void BlockWindows::build_index() const {
  std::call_once(index_once_, [&] {
    const std::size_t cells = static_cast<std::size_t>(block_) * block_;
    const std::size_t nsym = alpha_->size() + 1;
    words_ = (blocks_.size() + 63) / 64;
    shows_.assign(cells * nsym * words_, 0);
    visible_.assign(cells * words_, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (std::size_t o = 0; o < cells; ++o) {
        Sym s = shown(blocks_[b][o]);
        std::uint64_t bit = std::uint64_t{1} << (b % 64);
        shows_[(o * nsym + static_cast<std::size_t>(s + 1)) * words_ + b / 64] |= bit;
        if (s != kBorder) visible_[o * words_ + b / 64] |= bit;
      }
  });
}

bool BlockWindows::contains(const Sym* w) const { return judge(w, false); }
bool BlockWindows::consistent(const Sym* w) const { return judge(w, true); }

bool BlockWindows::judge(const Sym* w, bool partial) const {
  build_index();
  const int K = 2 * block_;
  const std::size_t n = static_cast<std::size_t>(K) * K;
  thread_local Scratch sc;
  // one byte per cell while the alphabet allows it
  if (alpha_->size() < 250) {
    sc.key.resize(n + 1);
    for (std::size_t i = 0; i < n; ++i) sc.key[i] = static_cast<char>(w[i] + 2);
    sc.key[n] = partial ? 'p' : 'c';
  } else {
    sc.key.assign(reinterpret_cast<const char*>(w), n * sizeof(Sym));
    sc.key.push_back(partial ? 'p' : 'c');
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(sc.key); it != memo_.end()) return it->second;
  }
  bool ok = false;
  if (border_is_plain()) {
    std::uint64_t rm = 0, cm = 0;
    for (int a = 0; a < K; ++a) {
      bool rb = true, cb = true;
      for (int c = 0; c < K && (rb || cb); ++c) {
        rb = rb && w[a * K + c] == kBorder;
        cb = cb && w[c * K + a] == kBorder;
      }
      if (rb) rm |= std::uint64_t{1} << a;
      if (cb) cm |= std::uint64_t{1} << a;
    }
    auto vi = by_mask_.find(rm), hi = by_mask_.find(cm);
    if (vi != by_mask_.end() && hi != by_mask_.end())
      for (int v : vi->second) {
        for (int h : hi->second)
          if (try_placement(w, partial, profiles_[static_cast<std::size_t>(v)], profiles_[static_cast<std::size_t>(h)], sc)) {
            ok = true;
            break;
          }
        if (ok) break;
      }
  } else {
    for (auto& vp : profiles_) {
      for (auto& hp : profiles_)
        if (try_placement(w, partial, vp, hp, sc)) {
          ok = true;
          break;
        }
      if (ok) break;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (memo_.size() > 4'000'000) memo_.clear();
  memo_.emplace(sc.key, ok);
  return ok;
}

bool BlockWindows::try_placement(const Sym* w, bool /*partial*/, const Profile& vp, const Profile& hp, Scratch& sc) const {
  const int K = 2 * block_;
  const std::size_t W = words_;
  const std::size_t nsym = alpha_->size() + 1;
  const std::size_t slots = static_cast<std::size_t>(vp.nblocks * hp.nblocks);
  // border rows and columns first: they are cheap and usually decide
  for (int a = 0; a < K; ++a) {
    bool rb = vp.entry[static_cast<std::size_t>(a)] < 0;
    for (int c = 0; c < K; ++c)
      if ((rb || hp.entry[static_cast<std::size_t>(c)] < 0) && w[a * K + c] != kBorder) return false;
  }
  sc.dom.assign(slots * W, ~std::uint64_t{0});
  for (int a = 0; a < K; ++a) {
    int ve = vp.entry[static_cast<std::size_t>(a)];
    if (ve < 0) continue;
    for (int c = 0; c < K; ++c) {
      int he = hp.entry[static_cast<std::size_t>(c)];
      if (he < 0) continue;
      Sym s = w[a * K + c];
      const std::uint64_t* mask;
      std::size_t off = static_cast<std::size_t>((ve % block_) * block_ + he % block_);
      if (s == kUnknown) {
        if (border_is_plain()) continue;  // any symbol fits a block cell
        mask = &visible_[off * W];
      } else {
        mask = &shows_[(off * nsym + static_cast<std::size_t>(s + 1)) * W];
      }
      std::uint64_t* d = &sc.dom[static_cast<std::size_t>((ve / block_) * hp.nblocks + he / block_) * W];
      std::uint64_t any = 0;
      for (std::size_t x = 0; x < W; ++x) any |= (d[x] &= mask[x]);
      if (!any) return false;
    }
  }
  // trim bits past the last block
  if (blocks_.size() % 64)
    for (std::size_t sl = 0; sl < slots; ++sl) sc.dom[sl * W + W - 1] &= (std::uint64_t{1} << (blocks_.size() % 64)) - 1;
  for (std::size_t sl = 0; sl < slots; ++sl) {
    std::uint64_t any = 0;
    for (std::size_t x = 0; x < W; ++x) any |= sc.dom[sl * W + x];
    if (!any) return false;
  }
  if (!has_slot_rules()) return true;

  // fragment grid: -1 border, otherwise a block slot
  const int fr = (vp.before ? 1 : 0) + vp.nblocks + (vp.after ? 1 : 0);
  const int fc = (hp.before ? 1 : 0) + hp.nblocks + (hp.after ? 1 : 0);
  const int r0 = vp.before ? 1 : 0, c0 = hp.before ? 1 : 0;
  sc.fr = fr;
  sc.fc = fc;
  sc.rows = &vp.entry;
  sc.cols = &hp.entry;
  sc.r0 = r0;
  sc.c0 = c0;
  sc.grid.assign(static_cast<std::size_t>(fr) * fc, -1);
  sc.var_at.assign(static_cast<std::size_t>(fr) * fc, -1);
  sc.var_pos.clear();
  for (int i = 0; i < vp.nblocks; ++i)
    for (int j = 0; j < hp.nblocks; ++j) {
      sc.var_at[static_cast<std::size_t>(r0 + i) * fc + c0 + j] = i * hp.nblocks + j;
      sc.var_pos.push_back({r0 + i, c0 + j});
    }
  // a 2x2 of the fragment grid is checked once its last slot is set
  if (sc.checks.size() < slots) sc.checks.resize(slots);
  for (std::size_t v = 0; v < slots; ++v) sc.checks[v].clear();
  for (int i = 0; i + 1 < fr; ++i)
    for (int j = 0; j + 1 < fc; ++j) {
      int last = -1;
      for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj) last = std::max(last, sc.var_at[static_cast<std::size_t>(i + di) * fc + j + dj]);
      if (last >= 0) sc.checks[static_cast<std::size_t>(last)].push_back({i, j});
    }
  return solve(0, sc);
}

bool BlockWindows::solve(std::size_t v, Scratch& sc) const {
  if (v == sc.var_pos.size()) return placement_ok(Placement{sc.grid, sc.fr, sc.fc, *sc.rows, *sc.cols, sc.r0, sc.c0});
  const int fc = sc.fc;
  auto [pi, pj] = sc.var_pos[v];
  int& cell = sc.grid[static_cast<std::size_t>(pi) * fc + pj];
  for (std::size_t x = 0; x < words_; ++x)
    for (std::uint64_t bits = sc.dom[v * words_ + x]; bits; bits &= bits - 1) {
      cell = static_cast<int>(x * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bool ok = true;
      for (auto [i, j] : sc.checks[v]) {
        auto g = [&](int di, int dj) { return sc.grid[static_cast<std::size_t>(i + di) * fc + j + dj]; };
        if (!tile_ok(g(0, 0), g(0, 1), g(1, 0), g(1, 1))) {
          ok = false;
          break;
        }
      }
      if (ok && solve(v + 1, sc)) return true;
    }
  cell = -1;
  return false;
}

namespace {

std::vector<std::vector<Sym>> raw_blocks(const std::vector<Picture>& ps) {
  std::vector<std::vector<Sym>> out;
  for (auto& p : ps) out.push_back(p.cells());
  return out;
}

class EncodedLocal : public BlockWindows {
 public:
  EncodedLocal(const TileSet& T2, const PictureCode& X, std::vector<std::vector<Sym>> blocks)
      : BlockWindows(X.k, X.alphabet, std::move(blocks), "encoded local tile set (" + std::to_string(2 * X.k) + ")"),
        T2_(T2) {}

 protected:
  bool has_slot_rules() const override { return true; }
  bool tile_ok(int a, int b, int c, int d) const override {
    Sym t[4] = {a < 0 ? kBorder : a, b < 0 ? kBorder : b, c < 0 ? kBorder : c, d < 0 ? kBorder : d};
    return T2_.contains(t);
  }

 private:
  TileSet T2_;
};

}  // namespace

ConstraintPtr closure_tileset(const PictureCode& X) {
  if (X.pictures.empty()) throw DomainError("closure_tileset: empty code");
  return std::make_shared<BlockWindows>(X.k, X.alphabet, raw_blocks(X.pictures),
                                        "closure of a " + std::to_string(X.size()) + "-picture code");
}

ConstraintPtr encoded_local_tileset(const TileSet& T2, const PictureCode& X) {
  if (T2.k() != 2) throw DomainError("encoded_local_tileset: the tile set must have k = 2");
  if (!X.has_coding() || X.source->size() != X.size())
    throw DomainError("encoded_local_tileset: the code needs a bijective coding");
  if (!same_alphabet(X.source, T2.alphabet())) throw DomainError("encoded_local_tileset: coding is not over the tile alphabet");
  // block b is the code of local symbol b
  std::vector<std::vector<Sym>> blocks;
  for (Sym s = 0; s < static_cast<Sym>(X.source->size()); ++s) blocks.push_back(X.code_of(s).cells());
  return std::make_shared<EncodedLocal>(T2, X, std::move(blocks));
}

}  // namespace pl
