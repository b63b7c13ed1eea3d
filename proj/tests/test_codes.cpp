#include <cmath>
#include <random>

#include "doctest.h"
#include "pl/codes.hpp"
#include "pl/errors.hpp"
#include "pl/search.hpp"
#include "support.hpp"

using namespace pl;

namespace {
WordCode words(const std::vector<std::string>& ws) { return WordCode::from_strings(binary_alphabet(), ws); }

// every position of p where some code picture occurs
std::vector<std::pair<int, int>> occurrences(const Picture& p, const PictureCode& X) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i + X.k - 1 <= p.rows(); ++i)
    for (int j = 1; j + X.k - 1 <= p.cols(); ++j)
      if (X.index_of(subpicture(p, i, j, i + X.k - 1, j + X.k - 1))) out.push_back({i, j});
  return out;
}

Picture random_assembly(std::mt19937& rng, const PictureCode& X, int r, int c) {
  std::vector<Picture> blocks;
  for (int i = 0; i < r * c; ++i) blocks.push_back(X.pictures[rng() % X.size()]);
  return assemble(blocks, r, c);
}
}  // namespace

TEST_CASE("comma-free word codes") {
  CHECK(is_comma_free_word_code(words({"00111", "00001", "10001"})));
  CHECK(is_comma_free_word_code(words({"110", "100"})));
  CHECK(is_comma_free_word_code(words({"011"})));
  CHECK_FALSE(is_comma_free_word_code(words({"00"})));
  CHECK(is_comma_free_word_code(words({"010"})));
  CHECK_FALSE(is_comma_free_word_code(words({"011", "110"})));  // 011.011 holds 110
  CHECK_THROWS_AS(words({"01", "011"}), DomainError);
}

TEST_CASE("comma-freeness of words agrees with a direct scan (property, 100 cases)") {
  std::mt19937 rng(61);
  for (int t = 0; t < 100; ++t) {
    int k = 2 + static_cast<int>(rng() % 4);
    std::vector<std::string> ws;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      std::string s;
      for (int j = 0; j < k; ++j) s += static_cast<char>('0' + rng() % 2);
      ws.push_back(s);
    }
    auto Y = words(ws);
    auto S = Y.strings();
    bool expect = true;
    for (auto& u : S)
      for (auto& v : S)
        for (int i = 1; i < k; ++i)
          if (std::find(S.begin(), S.end(), (u + v).substr(static_cast<std::size_t>(i), static_cast<std::size_t>(k))) != S.end())
            expect = false;
    CHECK(is_comma_free_word_code(Y) == expect);
  }
}

TEST_CASE("Eastman counts") {
  CHECK(eastman_count(5) == 6);
  CHECK(eastman_count(7) == 18);
  CHECK(eastman_count(3) == 2);
  CHECK_THROWS_AS(eastman_count(4), DomainError);
}

TEST_CASE("searching for comma-free word codes") {
  auto five = find_comma_free_word_code(5, 6);
  REQUIRE(five.status == CodeSearch::found);
  CHECK(five.code->size() == 6);
  CHECK(is_comma_free_word_code(*five.code));
  auto seven = find_comma_free_word_code(5, 7);
  CHECK(seven.status == CodeSearch::infeasible);
  auto three = find_comma_free_word_code(3, 2);
  REQUIRE(three.status == CodeSearch::found);
  CHECK(is_comma_free_word_code(*three.code));
  CHECK(find_comma_free_word_code(5, 6, 2).status == CodeSearch::exhausted);
}

TEST_CASE("obligation words") {
  CHECK(is_obligation_word("ftftt"));
  CHECK_FALSE(is_obligation_word("tffff"));
  CHECK(is_obligation_word("t"));
  CHECK(is_obligation_word("tt"));
  CHECK(is_obligation_word("ftt"));
  CHECK_THROWS_AS(is_obligation_word("ftx"), DomainError);
  CHECK(make_obligation_word(5, 2) == "ttftf");
  CHECK(make_obligation_word(9, 3) == "tttfftfft");
  CHECK(make_obligation_word(5) == "ttftf");
  CHECK_THROWS_AS(make_obligation_word(4, 2), DomainError);
  CHECK_THROWS_AS(make_obligation_word(5, 0), DomainError);
  for (int k = 3; k <= 17; ++k)
    for (int q = 1; q * q <= k && 2 * q < k; ++q) CHECK_MESSAGE(is_obligation_word(make_obligation_word(k, q)), k << "," << q);
}

TEST_CASE("obligation check against the definition (property, 100 cases)") {
  std::mt19937 rng(71);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::string w;
    for (int i = 0; i < n; ++i) w += rng() % 2 ? 't' : 'f';
    bool expect = w.find('t') != std::string::npos;
    for (int r = 1; r < n && expect; ++r) {
      std::string rot = w.substr(static_cast<std::size_t>(r)) + w.substr(0, static_cast<std::size_t>(r));
      bool meet = false;
      for (int i = 0; i < n; ++i) meet = meet || (w[static_cast<std::size_t>(i)] == 't' && rot[static_cast<std::size_t>(i)] == 't');
      expect = meet;
    }
    CHECK(is_obligation_word(w) == expect);
  }
}

TEST_CASE("the two sample family codes") {
  auto X3 = fx::x3();
  CHECK(X3.size() == 16);
  CHECK(family_code_size(fx::spec_x3()) == 16);
  std::set<std::string> rows = {"1 1 0", "1 0 0"};
  for (auto& p : X3.pictures) {
    CHECK(p.token_at(1, 1) == "0");
    CHECK(p.token_at(2, 1) == "1");
    CHECK(p.token_at(3, 1) == "1");
    for (int i = 2; i <= 3; ++i)
      CHECK(rows.count(p.token_at(i, 1) + " " + p.token_at(i, 2) + " " + p.token_at(i, 3)) == 1);
  }
  auto X5 = generate_picture_code(fx::spec_x5());
  CHECK(X5.size() == 2560);
  CHECK(family_code_size(fx::spec_x5()) == 2560);
  // (|Y0| |Y1|^2 + 2 |Y0|^2 |Y1|) 2^8 with |Y0| = 2, |Y1| = 1
  CHECK((2 * 1 * 1 + 2 * 2 * 2 * 1) * 256 == 2560);

  // no horizontal word starts with 0, and the vertical word needs one
  CodeFamilySpec starved{3, words({"110", "100"}), words({"001"}), "ttt"};
  auto E = generate_picture_code(starved);
  CHECK(E.size() == 0);
  CHECK(E.diagnostic.find("starting with 0") != std::string::npos);
  CHECK_THROWS_AS(generate_picture_code({3, words({"000"}), words({"011"}), "ftt"}), DomainError);
  CHECK_THROWS_AS(generate_picture_code({3, words({"110"}), words({"011"}), "tff"}), DomainError);
}

TEST_CASE("closed-form family size matches generation (property, 100 cases)") {
  std::mt19937 rng(83);
  auto Y3 = std::vector<std::string>{"001", "011", "110", "100"};
  int done = 0;
  while (done < 100) {
    std::vector<std::string> h, v;
    for (auto& y : Y3) {
      if (rng() % 2) h.push_back(y);
      if (rng() % 2) v.push_back(y);
    }
    if (h.empty() || v.empty()) continue;
    auto H = words(h), V = words(v);
    if (!is_comma_free_word_code(H) || !is_comma_free_word_code(V)) continue;
    std::string w = rng() % 2 ? "ftt" : "ttt";
    CodeFamilySpec s{3, H, V, w};
    CHECK(generate_picture_code(s).size() == family_code_size(s));
    ++done;
  }
}

TEST_CASE("comma-free picture codes") {
  auto X3 = fx::x3();
  CHECK(is_comma_free_picture_code_brute(X3));
  CHECK(is_comma_free_picture_code(X3));
  CHECK(is_comma_free_picture_code_brute(fx::corner_code()));
  CHECK(is_comma_free_picture_code(fx::corner_code()));
  auto zeros = PictureCode::make(2, binary_alphabet(), {Picture::filled(binary_alphabet(), 2, 2, 0)});
  CHECK_FALSE(is_comma_free_picture_code_brute(zeros));
  CHECK_FALSE(is_comma_free_picture_code(zeros));
  CHECK_THROWS_AS(is_comma_free_picture_code_brute(generate_picture_code(fx::spec_x5())), BudgetExhausted);
  CHECK_THROWS_AS(PictureCode::make(2, binary_alphabet(), {Picture::filled(binary_alphabet(), 2, 3, 0)}), DomainError);
}

TEST_CASE("factored and brute-force comma-free checks agree (property, 100 cases)") {
  std::mt19937 rng(89);
  auto b = binary_alphabet();
  for (int t = 0; t < 100; ++t) {
    int k = 2 + static_cast<int>(rng() % 2);
    std::set<Picture> ps;
    int n = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(ps.size()) < n) {
      std::vector<Sym> cells(static_cast<std::size_t>(k * k));
      for (auto& c : cells) c = static_cast<Sym>(rng() % 2);
      ps.insert(Picture(b, k, k, cells));
    }
    auto X = PictureCode::make(k, b, {ps.begin(), ps.end()});
    CHECK(is_comma_free_picture_code(X) == is_comma_free_picture_code_brute(X));
  }
  // a comma-free subset of X3 stays comma-free
  auto X3 = fx::x3();
  for (int t = 0; t < 20; ++t) {
    std::vector<Picture> sub;
    for (auto& p : X3.pictures)
      if (rng() % 2) sub.push_back(p);
    if (sub.empty()) continue;
    CHECK(is_comma_free_picture_code(PictureCode::make(3, binary_alphabet(), sub)));
  }
}

TEST_CASE("unique tessellation for a comma-free code (property, 100 cases)") {
  std::mt19937 rng(97);
  auto X3 = fx::x3();
  for (int t = 0; t < 100; ++t) {
    int r = 1 + static_cast<int>(rng() % 3), c = 1 + static_cast<int>(rng() % 3);
    auto p = random_assembly(rng, X3, r, c);
    for (auto [i, j] : occurrences(p, X3)) {
      CHECK((i - 1) % 3 == 0);
      CHECK((j - 1) % 3 == 0);
    }
    CHECK(occurrences(p, X3).size() == static_cast<std::size_t>(r * c));
  }
}

TEST_CASE("numerosity lower bound") {
  auto b5 = numerosity_lower_bound(5);
  CHECK(b5.q == 2);
  CHECK(b5.log2_value == doctest::Approx(20 - 2 * std::sqrt(5.0) * std::log2(6.0)).epsilon(1e-12));
  CHECK(b5.log2_value == doctest::Approx(8.44).epsilon(0.005));
  CHECK(b5.value() == doctest::Approx(std::pow(2.0, 20) / std::pow(6.0, 2 * std::sqrt(5.0))).epsilon(1e-9));
  CHECK(b5.log2_free_rows == doctest::Approx(4.0));
  CHECK(b5.log2_coded_rows == doctest::Approx(4 * std::log2(3.0)).epsilon(1e-12));
  auto b3 = numerosity_lower_bound(3);
  CHECK(b3.log2_value == doctest::Approx(6 - 4 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(numerosity_lower_bound(9), DomainError);
  double prev = numerosity_lower_bound(5).log2_value;
  for (int k : {7, 11, 13, 17, 19, 23, 29, 31}) {
    double v = numerosity_lower_bound(k).log2_value;
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("choose_k") {
  CHECK(choose_k(2) == 5);
  CHECK(choose_k(4) == 11);
  CHECK_THROWS_AS(choose_k(1), DomainError);
  for (int m = 2; m <= 64; ++m) {
    int k = choose_k(m);
    CHECK(is_prime(k));
    CHECK(k >= 4 * std::log2(m) - 1e-9);
    CHECK(k <= 8 * std::log2(m) + 1e-9);
    CHECK(k >= 2 + std::log2(m));
  }
}

TEST_CASE("encoding is a morphism (property, 100 cases)") {
  std::mt19937 rng(101);
  auto X = fx::x3().with_coding(Alphabet::make({"p0", "p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "pa", "pb",
                                                "pc", "pd", "pe", "pf"}));
  auto src = X.source;
  auto rnd = [&](int r, int c) {
    std::vector<Sym> cells(static_cast<std::size_t>(r * c));
    for (auto& s : cells) s = static_cast<Sym>(rng() % 16);
    return Picture(src, r, c, cells);
  };
  for (int t = 0; t < 100; ++t) {
    auto p = rnd(2, 1 + static_cast<int>(rng() % 3)), q = rnd(2, 1 + static_cast<int>(rng() % 3));
    CHECK(encode_picture(concat_h(p, q), X) == concat_h(encode_picture(p, X), encode_picture(q, X)));
    auto u = transpose(p), v = transpose(q);
    CHECK(encode_picture(concat_v(u, v), X) == concat_v(encode_picture(u, X), encode_picture(v, X)));
    auto d = decode_picture(encode_picture(p, X), X);
    REQUIRE(d);
    CHECK(*d == p);
    CHECK((p == q) == (encode_picture(p, X) == encode_picture(q, X)));
  }
  CHECK(encode_picture(rnd(1, 1), X).size() == std::pair{3, 3});
  CHECK_THROWS_AS(encode_picture(fx::a_block(1, 1), X), DomainError);
}

TEST_CASE("closure of the corner code") {
  auto X = fx::corner_code();
  auto L = enumerate_language(closure_tileset(X), 8, 8);
  auto x = X.pictures[0];
  CHECK(L == std::set<Picture>{x, concat_h(x, x), concat_v(x, x), concat_v(concat_h(x, x), concat_h(x, x))});
}

TEST_CASE("closure of X3: members pass, mutants fail unless still tessellated (property, 100 cases)") {
  std::mt19937 rng(103);
  auto X3 = fx::x3();
  auto C = closure_tileset(X3);
  for (int t = 0; t < 100; ++t) {
    int r = 1 + static_cast<int>(rng() % 3), c = 1 + static_cast<int>(rng() % 3);
    auto p = random_assembly(rng, X3, r, c);
    CHECK(slt_member(p, *C));
    auto cells = p.cells();
    auto at = rng() % cells.size();
    cells[at] = 1 - cells[at];
    Picture m(p.alphabet(), p.rows(), p.cols(), cells);
    bool tessellated = true;
    for (auto& blk : tessellate(m, 3).blocks) tessellated = tessellated && X3.index_of(blk).has_value();
    CHECK(slt_member(m, *C) == tessellated);
  }
  CHECK_FALSE(slt_member(Picture::filled(binary_alphabet(), 3, 4, 0), *C));
}

TEST_CASE("encoded local languages") {
  // two code pictures of X3 for the two symbols of Gamma2
  auto X3 = fx::x3();
  auto sub = PictureCode::make(3, binary_alphabet(), {X3.pictures[0], X3.pictures[5]}).with_coding(fx::gamma2());
  auto T2 = tileset_from_pictures({fx::r2()}, 2);
  auto M = encoded_local_tileset(T2, sub);
  CHECK(M->k() == 6);
  auto L2 = enumerate_language(std::make_shared<TileSet>(T2), 3, 3);
  std::set<Picture> enc;
  for (auto& q : L2) enc.insert(encode_picture(q, sub));
  CHECK(enumerate_language(M, 9, 9) == enc);

  TileSet none(2, fx::gamma2());
  none.seal();
  CHECK(enumerate_language(encoded_local_tileset(none, sub), 6, 6).empty());
  CHECK_THROWS_AS(encoded_local_tileset(T2, X3), DomainError);
}
