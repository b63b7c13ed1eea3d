#include <random>
#include <sstream>

#include "doctest.h"
#include "pl/errors.hpp"
#include "pl/reduce.hpp"
#include "pl/search.hpp"
#include "support.hpp"

using namespace pl;

namespace {

// padding patterns p0 and p1, typed by hand. "b" stands for the flat.
const std::vector<std::string> kP0 = {
    "se n n n n n n n n n n ne b b 1", "n se n n n n n n n n ne n b b 2", "n n se n n n n n n ne n n 1 2 3",
    "n n n se n n n n ne n n n b b 1", "n n n n se n n ne n n n n b b 2", "n n n n n se ne n n n n n 1 2 3",
    "b b 1 b b 1 b b 1 b b 1 b b 1",    "b b 2 b b 2 b b 2 b b 2 b b 2",  "1 2 3 1 2 3 1 2 3 1 2 3 1 2 3"};
const std::vector<std::string> kP1 = {
    "se n n n n n n n n n n n n ne 1", "n se n n n n n n n n n n ne n 2", "n n se n n n n n n n n ne n n 3",
    "n n n se n n n n n n ne n n n 1", "n n n n se n n n n ne n n n n 2", "n n n n n se n n ne n n n n n 3",
    "n n n n n n se ne n n n n n n 1", "b b 2 b b 2 b b 2 b b 2 b b 2",  "1 2 3 1 2 3 1 2 3 1 2 3 1 2 3"};

Picture typed(const TilingSystem& P, std::vector<std::string> rows) {
  for (auto& r : rows) {
    std::string out;
    std::istringstream in(r);
    for (std::string t; in >> t;) out += (out.empty() ? "" : " ") + (t == "b" ? std::string(kFlatToken) : t);
    r = out;
  }
  return Picture::from_text_rows(P.local, rows);
}

Picture random_picture(std::mt19937& rng, const AlphabetPtr& a, int r, int c) {
  std::vector<Sym> cells(static_cast<std::size_t>(r) * c);
  for (auto& s : cells) s = static_cast<Sym>(rng() % a->size());
  return Picture(a, r, c, cells);
}

}  // namespace

TEST_CASE("padded sizes") {
  CHECK(padded_size(6, 12, 3) == std::pair{9, 15});
  CHECK(padded_size(7, 14, 3) == std::pair{9, 15});  // thickness 2 and 1
  CHECK(padded_size(2, 2, 3) == std::pair{3, 3});
  CHECK(padded_size(3, 1, 3) == std::pair{6, 3});
  CHECK_THROWS_AS(padded_size(3, 3, 1), DomainError);
  CHECK_THROWS_AS(padded_size(0, 3, 3), DomainError);
}

TEST_CASE("padded sizes against the definition (property, 100 cases)") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    int r = 1 + static_cast<int>(rng() % 40), c = 1 + static_cast<int>(rng() % 40), k = 2 + static_cast<int>(rng() % 7);
    auto [M, N] = padded_size(r, c, k);
    // smallest multiple of k strictly above the side
    int m2 = k;
    while (m2 <= r) m2 += k;
    int n2 = k;
    while (n2 <= c) n2 += k;
    CHECK(M == m2);
    CHECK(N == n2);
  }
}

TEST_CASE("pad_picture on a^{6,12} and a^{7,14}") {
  auto p = pad_picture(fx::a_block(6, 12), 3);
  REQUIRE(p.size() == std::pair{9, 15});
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 15; ++j) CHECK(p.token_at(i, j) == ((i <= 6 && j <= 12) ? "a" : "$"));
  auto q = pad_picture(fx::a_block(7, 14), 3);
  CHECK(q.size() == std::pair{9, 15});
  CHECK(q.token_at(7, 14) == "a");
  CHECK(q.token_at(8, 1) == "$");
  CHECK(q.token_at(1, 15) == "$");
  CHECK_THROWS_AS(pad_alphabet(Alphabet::make({"a", "$"})), DomainError);
}

TEST_CASE("strip_padding inverts pad_picture (property, 100 cases)") {
  std::mt19937 rng(12);
  auto ab = Alphabet::make({"a", "b"});
  for (int t = 0; t < 100; ++t) {
    int k = 2 + static_cast<int>(rng() % 4);
    auto p = random_picture(rng, ab, 1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 9));
    auto q = pad_picture(p, k);
    CHECK(q.rows() % k == 0);
    CHECK(q.cols() % k == 0);
    CHECK(strip_padding(q) == p);
  }
}

TEST_CASE("padded system for the diagonal language at k = 3") {
  auto S = fx::ts2_gamma3();
  auto P = padded_system(S, 3);
  CHECK(P.local->size() == 7);
  CHECK(P.terminal->size() == 2);
  CHECK(P.k() == 2);

  auto p0 = typed(P, kP0), p1 = typed(P, kP1);
  CHECK(slt_member(p0, *P.tiles));
  CHECK(slt_member(p1, *P.tiles));
  CHECK(padded_preimage(fx::diagonal_preimage(6), P, 3) == p0);
  CHECK(padded_preimage(fx::diagonal_preimage(7), P, 3) == p1);
  CHECK(project(p0, P.projection) == pad_picture(fx::a_block(6, 12), 3));
  CHECK(project(p1, P.projection) == pad_picture(fx::a_block(7, 14), 3));

  // a digit out of step with the counting pattern
  std::vector<std::string> bad = kP0;
  bad[8] = "1 2 3 1 2 3 1 2 3 1 2 3 1 3 2";
  CHECK_FALSE(slt_member(typed(P, bad), *P.tiles));
  // the padding may not start inside the picture's last line
  std::vector<std::string> cut = kP0;
  cut[5] = "n n n n n se ne n n n n b 1 2 3";
  CHECK_FALSE(slt_member(typed(P, cut), *P.tiles));
}

TEST_CASE("padded language within (6,9)") {
  auto P = padded_system(fx::ts2_gamma3(), 3);
  // a^{m,2m} for m >= 2 padded: (3,6), (6,9), (6,9) for m = 2, 3, 4; m = 5 needs 12 columns
  std::set<Picture> want{pad_picture(fx::a_block(2, 4), 3), pad_picture(fx::a_block(3, 6), 3),
                         pad_picture(fx::a_block(4, 8), 3)};
  CHECK(enumerate_language(P, 6, 9) == want);
}

TEST_CASE("padding rejects systems it cannot handle") {
  CHECK_THROWS_AS(padded_system(fx::ts3_gamma2(), 3), DomainError);
  auto S = fx::ts2_gamma3();
  CHECK_THROWS_AS(padded_system(S, 1), DomainError);
}

TEST_CASE("3-blocks of p0 and the frame alphabet") {
  auto S = fx::ts2_gamma3();
  auto P = padded_system(S, 3);
  auto p0 = typed(P, kP0);
  auto blocks = tessellate(p0, 3).distinct();
  std::set<Picture> want{typed(P, {"se n n", "n se n", "n n se"}), typed(P, {"n n n", "n n n", "n n n"}),
                         typed(P, {"n n ne", "n ne n", "ne n n"}), typed(P, {"b b 1", "b b 2", "1 2 3"})};
  CHECK(blocks == want);

  auto B = harvested_frame_alphabet(S, P, 3, 8, 16);
  for (auto& r : blocks) CHECK(B.find({frame_of(r), project(r, P.projection)}).has_value());
  CHECK(B.frames.size() <= B.symbols.size());
  for (std::size_t i = 0; i < B.symbols.size(); ++i) CHECK(B.frames[static_cast<std::size_t>(B.frame_of[i])] == B.symbols[i].frame);

  // the over-approximation holds everything harvested
  auto full = frame_alphabet(P, 3);
  for (auto& b : B.symbols) CHECK(full.find(b).has_value());
}

TEST_CASE("frame tiles accept the block picture of p0") {
  auto S = fx::ts2_gamma3();
  auto P = padded_system(S, 3);
  auto B = harvested_frame_alphabet(S, P, 3, 8, 16);
  auto M2 = frame_tileset(B, *P.explicit_tiles());
  auto p0 = typed(P, kP0);
  auto q0 = blockify(p0, B, P.projection);
  CHECK(q0.size() == std::pair{3, 5});
  CHECK(slt_member(q0, M2));
  CHECK(expand_faces(q0, B) == project(p0, P.projection));
  // swapping two blocks of different frames breaks the gluing
  std::vector<Sym> cells = q0.cells();
  std::swap(cells[0], cells[1]);
  CHECK_FALSE(slt_member(Picture(q0.alphabet(), 3, 5, cells), M2));
}

TEST_CASE("frame tiles reproduce the padded language at small bounds") {
  auto S = fx::ts2_gamma3();
  auto P = padded_system(S, 3);
  auto B = harvested_frame_alphabet(S, P, 3, 8, 16);
  auto M2 = std::make_shared<const TileSet>(frame_tileset(B, *P.explicit_tiles()));
  std::set<Picture> got;
  for (auto& q : enumerate_language(M2, 2, 3)) got.insert(expand_faces(q, B));
  CHECK(got == enumerate_language(P, 6, 9));
}

TEST_CASE("deletion of padding tiles") {
  // symbols 0, 1 plain, 2 padding; size 2
  std::vector<bool> pad{false, false, true};
  const Sym H = kBorder;
  CHECK_FALSE(padding_tile_deleted({0, 1, 1, 0}, 2, pad));
  CHECK_FALSE(padding_tile_deleted({0, 2, 1, 2}, 2, pad));  // one padding column after plain cells
  CHECK(padding_tile_deleted({2, 2, 2, 2}, 2, pad));        // two padding rows
  CHECK(padding_tile_deleted({2, H, 2, H}, 2, pad));        // padding column next to the border
  CHECK(padding_tile_deleted({H, H, 2, 2}, 2, pad));        // padding row under the border
  CHECK_FALSE(padding_tile_deleted({0, H, 2, H}, 2, pad));  // padding shares its column with a plain cell
  // size 3: two trailing padding columns
  CHECK(padding_tile_deleted({0, 2, 2, 1, 2, 2, 0, 2, 2}, 3, pad));
  CHECK_FALSE(padding_tile_deleted({0, 1, 2, 1, 0, 2, 0, 1, 2}, 3, pad));
}

TEST_CASE("code_for finds a large enough comma-free code") {
  auto X = code_for(5, 37);
  CHECK(X.k == 5);
  CHECK(X.size() >= 37);
  CHECK(is_comma_free_picture_code(X));
  CHECK_THROWS_AS(code_for(3, 100), DomainError);
}

TEST_CASE("alphabet reduction of the diagonal language at k = 5") {
  ReduceOptions opt;
  opt.k = 5;
  opt.harvest = std::pair{16, 32};
  auto A = reduce_alphabet(fx::ts2_gamma3(), opt);
  CHECK(A.k == 5);
  CHECK(alphabetic_ratio(A.final_system) == Ratio{2, 1});
  CHECK(A.final_system.local->size() == 2);
  CHECK(A.code_X.size() >= A.frames.frames.size());
  CHECK(is_comma_free_picture_code(A.code_Z));
  CHECK(A.timings.size() == 7);

  for (int m : {9, 10}) {
    auto pre = explicit_preimage_of(A, fx::a_block(m, 2 * m));
    REQUIRE(pre.has_value());
    CHECK(slt_member(*pre, *A.final_system.tiles));
    CHECK(project(*pre, A.final_system.projection) == fx::a_block(m, 2 * m));
  }
  CHECK_FALSE(explicit_preimage_of(A, fx::a_block(9, 17)).has_value());
  CHECK(ts_member(fx::a_block(5, 11), A.final_system, 100'000'000).verdict == Verdict::no);
  CHECK(ts_member(fx::a_block(9, 17), A.final_system, 100'000'000).verdict == Verdict::no);
}

TEST_CASE("explicit pre-images are checked, not assumed (property, 100 cases)") {
  ReduceOptions opt;
  opt.k = 5;
  opt.harvest = std::pair{16, 32};
  auto A = reduce_alphabet(fx::ts2_gamma3(), opt);
  auto pre = *explicit_preimage_of(A, fx::a_block(9, 18));
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    // flip one pixel; the mutant still projects to a^{9,18}
    std::vector<Sym> cells = pre.cells();
    auto at = rng() % cells.size();
    cells[at] = 1 - cells[at];
    Picture mutant(pre.alphabet(), pre.rows(), pre.cols(), cells);
    CHECK(project(mutant, A.final_system.projection) == fx::a_block(9, 18));
    CHECK_FALSE(slt_member(mutant, *A.final_system.tiles));
  }
}

TEST_CASE("reduce_alphabet reports the failing stage") {
  ReduceOptions opt;
  opt.k = 5;
  opt.harvest = std::pair{16, 32};
  opt.X = fx::x3();
  try {
    reduce_alphabet(fx::ts2_gamma3(), opt);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("stage code") != std::string::npos);
  }
}
