#include <random>

#include "doctest.h"
#include "pl/errors.hpp"
#include "pl/picture.hpp"
#include "support.hpp"

using namespace pl;

namespace {
AlphabetPtr ab() {
  static auto a = Alphabet::make({"a", "b", "c"}, "abc");
  return a;
}
Picture random_picture(std::mt19937& rng, int r, int c, const AlphabetPtr& a = ab()) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(a->size()) - 1);
  std::vector<Sym> cells(static_cast<std::size_t>(r) * c);
  for (auto& s : cells) s = d(rng);
  return Picture(a, r, c, cells);
}
Picture fig2_padded() {
  auto sd = Alphabet::make({"a", "$"}, "Sigma$");
  auto p = Picture::filled(sd, 7, 14, 0);
  p = concat_v(p, Picture::filled(sd, 2, 14, 1));
  return concat_h(p, Picture::filled(sd, 9, 1, 1));
}
}  // namespace

TEST_CASE("alphabet rejects the border token and duplicates") {
  CHECK_THROWS_AS(Alphabet::make({"a", "#"}), DomainError);
  CHECK_THROWS_AS(Alphabet::make({"a", "a"}), DomainError);
  CHECK_THROWS_AS(Alphabet::make({"a b"}), DomainError);
  auto a = Alphabet::make({"x", "y"});
  CHECK(a->id("y") == 1);
  CHECK(a->id("#") == kBorder);
}

TEST_CASE("concatenation basics") {
  auto p = Picture::filled(ab(), 1, 1, 0), q = Picture::filled(ab(), 1, 1, 1);
  auto h = concat_h(p, q);
  CHECK(h.size() == std::pair{1, 2});
  CHECK(h.token_at(1, 1) == "a");
  CHECK(h.token_at(1, 2) == "b");
  auto v = concat_v(p, q);
  CHECK(v.size() == std::pair{2, 1});
  CHECK(v.token_at(2, 1) == "b");
  CHECK_THROWS_AS(concat_h(p, Picture::filled(ab(), 2, 1, 0)), DomainError);
  CHECK_THROWS_AS(concat_h(p, Picture::filled(fx::sigma(), 1, 1, 0)), DomainError);

  auto sd = Alphabet::make({"a", "$"});
  auto ad = concat_h(Picture::filled(sd, 4, 8, 0), Picture::filled(sd, 4, 2, 1));
  CHECK(ad.size() == std::pair{4, 10});
  CHECK(subpicture(ad, 1, 1, 4, 8) == Picture::filled(sd, 4, 8, 0));
  CHECK(subpicture(ad, 1, 9, 4, 10) == Picture::filled(sd, 4, 2, 1));

  CHECK(power_v(p, 5).rows() == 5);
}

TEST_CASE("concatenations are associative and transpose-symmetric (property, 100 cases)") {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    int n1 = 1 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 4), n3 = 1 + static_cast<int>(rng() % 4);
    auto p = random_picture(rng, 2, n1), q = random_picture(rng, 2, n2), r = random_picture(rng, 2, n3);
    CHECK(concat_h(p, concat_h(q, r)) == concat_h(concat_h(p, q), r));
    auto pv = transpose(p), qv = transpose(q), rv = transpose(r);
    CHECK(concat_v(pv, concat_v(qv, rv)) == concat_v(concat_v(pv, qv), rv));
    CHECK(transpose(concat_v(pv, qv)) == concat_h(p, q));
  }
}

TEST_CASE("bordered and thick_bordered") {
  auto p = Picture::filled(ab(), 1, 1, 0);
  auto b = bordered(p);
  CHECK(b.size() == std::pair{3, 3});
  CHECK(b.at(2, 2) == 0);
  CHECK(b.at(1, 1) == kBorder);
  CHECK_THROWS_AS(bordered(b), DomainError);

  // a one-row word x' becomes #^{n+2} over (# x' #) over #^{n+2}
  auto w = Picture::from_text_rows(ab(), {"a b c a"});
  auto row_border = Picture::filled(ab(), 1, 6, kBorder);
  auto hash = Picture::filled(ab(), 1, 1, kBorder);
  CHECK(bordered(w) == concat_v(concat_v(row_border, concat_h(concat_h(hash, w), hash)), row_border));

  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto q = random_picture(rng, 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5));
    CHECK(bordered(q).rows() == q.rows() + 2);
    CHECK(thick_bordered(q, 2) == bordered(q));
  }
  auto t4 = thick_bordered(p, 4);
  CHECK(t4.size() == std::pair{4, 4});
  CHECK(k_tiles(t4, 4).size() == 1);
  CHECK(subpicture(t4, 1, 1, 3, 3) == b);
  auto p3 = Picture::filled(ab(), 3, 3, 1);
  CHECK(thick_bordered(p3, 4) == bordered(p3));
}

TEST_CASE("bordered is injective on distinct pictures") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto p = random_picture(rng, 2, 2), q = random_picture(rng, 2, 2);
    CHECK((p == q) == (bordered(p) == bordered(q)));
  }
}

TEST_CASE("subpicture") {
  std::mt19937 rng(5);
  auto p = random_picture(rng, 4, 6);
  CHECK(subpicture(p, 1, 1, 4, 6) == p);
  CHECK(subpicture(p, 3, 2, 3, 2) == Picture(ab(), 1, 1, {p.at(3, 2)}));
  CHECK_THROWS_AS(subpicture(p, 0, 1, 2, 2), DomainError);
  CHECK_THROWS_AS(subpicture(p, 2, 2, 5, 2), DomainError);

  // the (7,14) picture padded to (9,15): the top-right 3x3 corner is "a a $" in every row
  auto f = fig2_padded();
  CHECK(f.size() == std::pair{9, 15});
  auto corner = subpicture(f, 1, 13, 3, 15);
  for (int i = 1; i <= 3; ++i) {
    CHECK(corner.token_at(i, 1) == "a");
    CHECK(corner.token_at(i, 2) == "a");
    CHECK(corner.token_at(i, 3) == "$");
  }
}

TEST_CASE("k_tiles") {
  auto u = Picture::filled(ab(), 3, 3, 0);
  auto t = k_tiles(u, 2);
  CHECK(t.size() == 1);
  CHECK(*t.begin() == Picture::filled(ab(), 2, 2, 0));
  CHECK(k_tiles(u, 4).empty());
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5), k = 1 + static_cast<int>(rng() % 3);
    auto p = random_picture(rng, r, c);
    auto n = k_tiles(p, k).size();
    CHECK(n <= static_cast<std::size_t>(std::max(0, r - k + 1) * std::max(0, c - k + 1)));
  }
}

TEST_CASE("tessellation of the (9,15) padded picture") {
  auto f = fig2_padded();
  auto t = tessellate(f, 3);
  CHECK(t.block_rows == 3);
  CHECK(t.block_cols == 5);
  auto d = t.distinct();
  CHECK(d.size() == 4);
  auto sd = f.alphabet();
  auto all_a = Picture::filled(sd, 3, 3, 0);
  auto a_over = Picture::from_text_rows(sd, {"a a a", "$ $ $", "$ $ $"});
  auto a_then = Picture::from_text_rows(sd, {"a a $", "a a $", "a a $"});
  auto mixed = Picture::from_text_rows(sd, {"a a $", "$ $ $", "$ $ $"});
  CHECK(d == std::set<Picture>{all_a, a_over, a_then, mixed});
  CHECK(reassemble(t) == f);
  CHECK_THROWS_AS(tessellate(f, 4), DomainError);
  auto one = Picture::filled(ab(), 3, 3, 2);
  CHECK(tessellate(one, 3).blocks.size() == 1);
}

TEST_CASE("tessellate then reassemble is the identity (property, 100 cases)") {
  std::mt19937 rng(21);
  for (int i = 0; i < 100; ++i) {
    int k = 1 + static_cast<int>(rng() % 3);
    auto p = random_picture(rng, k * (1 + static_cast<int>(rng() % 3)), k * (1 + static_cast<int>(rng() % 3)));
    CHECK(reassemble(tessellate(p, k)) == p);
  }
}

TEST_CASE("frames") {
  auto p = Picture::from_text_rows(ab(), {"a b", "c a"});
  auto f = frame_of(p);
  CHECK(f.north == std::vector<Sym>{0, 1});
  CHECK(f.south == std::vector<Sym>{2, 0});
  CHECK(f.west == std::vector<Sym>{0, 2});
  CHECK(f.east == std::vector<Sym>{1, 0});
  CHECK_THROWS_AS(frame_of(Picture::filled(ab(), 2, 3, 0)), DomainError);

  // first 3-tile of the padded pre-image: diagonal of se over n
  auto d = Picture::from_text_rows(fx::gamma3(), {"se n n", "n se n", "n n se"});
  auto fd = frame_of(d);
  CHECK(fd.north == std::vector<Sym>{1, 0, 0});
  CHECK(fd.west == std::vector<Sym>{1, 0, 0});

  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto q = random_picture(rng, 4, 4);
    auto cells = q.cells();
    cells[5] = (cells[5] + 1) % 3;  // interior cell (1,1)
    auto q2 = Picture(ab(), 4, 4, cells);
    CHECK(frame_of(q) == frame_of(q2));
    auto f4 = frame_of(q);
    CHECK(f4.north.front() == f4.west.front());
    CHECK(f4.north.back() == f4.east.front());
    CHECK(f4.south.front() == f4.west.back());
    CHECK(f4.south.back() == f4.east.back());
  }
}

TEST_CASE("merge and projections") {
  auto bits = Alphabet::make({"0", "1"});
  auto ab2 = Alphabet::make({"a", "b"});
  auto u = Picture::from_text_rows(bits, {"1 0", "0 0"});
  auto y = Picture::from_text_rows(ab2, {"a b", "b a"});
  auto m = merge(u, y);
  CHECK(m.token_at(1, 1) == "(1,a)");
  CHECK(m.token_at(1, 2) == "(0,b)");
  CHECK(m.token_at(2, 1) == "(0,b)");
  CHECK(m.token_at(2, 2) == "(0,a)");
  CHECK_THROWS_AS(merge(u, Picture::filled(ab2, 1, 2, 0)), DomainError);

  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    auto p = random_picture(rng, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), bits);
    auto q = random_picture(rng, p.rows(), p.cols(), ab2);
    auto mq = merge(p, q);
    CHECK(project(mq, component_map(mq.alphabet(), bits, ab2, 0)) == p);
    CHECK(project(mq, component_map(mq.alphabet(), bits, ab2, 1)) == q);
  }
}

TEST_CASE("project") {
  std::mt19937 rng(2);
  auto to2 = Alphabet::make({"x", "y"});
  auto to1 = Alphabet::make({"z"});
  auto f = SymbolMap::from_pairs(ab(), to2, {{"a", "x"}, {"b", "y"}, {"c", "x"}});
  auto g = SymbolMap::from_pairs(to2, to1, {{"x", "z"}, {"y", "z"}});
  for (int i = 0; i < 100; ++i) {
    auto p = random_picture(rng, 2, 3);
    CHECK(project(p, SymbolMap::identity(ab())) == p);
    CHECK(project(project(p, f), g) == project(p, f.then(g)));
  }
  auto partial = SymbolMap::from_pairs(ab(), to2, {{"a", "x"}});
  CHECK_THROWS_AS(project(Picture::filled(ab(), 1, 1, 1), partial), DomainError);
}
