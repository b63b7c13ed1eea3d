#pragma once
// Hand-typed pictures from the running example and a few independent oracles.
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pl/codes.hpp"
#include "pl/lang.hpp"
#include "pl/picture.hpp"

namespace fx {

using namespace pl;

// se = south-east arrow, ne = north-east arrow, e = east arrow
inline AlphabetPtr gamma3() {
  static auto a = Alphabet::make({"n", "se", "ne"}, "Gamma3");
  return a;
}
inline AlphabetPtr gamma2() {
  static auto a = Alphabet::make({"n", "e"}, "Gamma2");
  return a;
}
inline AlphabetPtr sigma() {
  static auto a = Alphabet::make({"a"}, "Sigma");
  return a;
}

inline Picture r3() {
  return Picture::from_text_rows(gamma3(), {"se n n n n n n ne", "n se n n n n ne n", "n n se n n ne n n",
                                            "n n n se ne n n n"});
}
inline Picture r2() {
  return Picture::from_text_rows(gamma2(), {"e n n n n n n e", "n e n n n n e n", "n n e n n e n n", "n n n e e n n n"});
}
// pre-image of the illegal a^{4,10}
inline Picture x_illegal() {
  return Picture::from_text_rows(gamma2(), {"e n n n n n n n n e", "n e n n n n n n e n", "n n e n n n n e n n",
                                            "n n n e e e e n n n"});
}

inline Picture a_block(int r, int c) { return Picture::filled(sigma(), r, c, 0); }

inline TilingSystem make_ts(const Picture& sample, int k) {
  auto T = std::make_shared<TileSet>(tileset_from_pictures({sample}, k));
  return TilingSystem{sigma(), sample.alphabet(), T, constant_map(sample.alphabet(), sigma(), "a")};
}
inline TilingSystem ts2_gamma3() { return make_ts(r3(), 2); }
inline TilingSystem ts2_gamma2() { return make_ts(r2(), 2); }
// The literal 3-TS of the example: 3-tiles of the bordered r2 alone. Those
// contain no all-n 3x3 block, so only a^{4,8} survives.
inline TilingSystem ts3_r2_only() { return make_ts(r2(), 3); }

// r2's pattern for a^{m,2m}: two diagonals of e meeting in the bottom row
inline Picture r2_pattern(int m) {
  std::vector<Sym> cells(static_cast<std::size_t>(m) * 2 * m, 0);
  for (int i = 0; i < m; ++i) {
    cells[static_cast<std::size_t>(i) * 2 * m + i] = 1;
    cells[static_cast<std::size_t>(i) * 2 * m + (2 * m - 1 - i)] = 1;
  }
  return Picture(gamma2(), m, 2 * m, cells);
}
// The working 3-TS: 3-tiles of the r2 pattern for m = 2..5. m = 5 is the first
// size whose pre-image holds every 3-tile that larger pictures need.
inline TilingSystem ts3_gamma2() {
  std::set<Picture> s;
  for (int m = 2; m <= 5; ++m) s.insert(r2_pattern(m));
  auto T = std::make_shared<TileSet>(tileset_from_pictures(s, 3));
  return TilingSystem{sigma(), gamma2(), T, constant_map(gamma2(), sigma(), "a")};
}

// the diagonal pre-image of a^{m,2m} over Gamma3
inline Picture diagonal_preimage(int m) {
  std::vector<Sym> cells(static_cast<std::size_t>(m) * 2 * m, 0);
  for (int i = 0; i < m; ++i) {
    cells[static_cast<std::size_t>(i) * 2 * m + i] = 1;
    cells[static_cast<std::size_t>(i) * 2 * m + (2 * m - 1 - i)] = 2;
  }
  return Picture(gamma3(), m, 2 * m, cells);
}

// the two sample family codes, k = 3 and k = 5
inline CodeFamilySpec spec_x3() {
  auto b = binary_alphabet();
  return {3, WordCode::from_strings(b, {"110", "100"}), WordCode::from_strings(b, {"011"}), "ftt"};
}
inline CodeFamilySpec spec_x5() {
  auto Y = WordCode::from_strings(binary_alphabet(), {"00111", "00001", "10001"});
  return {5, Y, Y, "ftftt"};
}
inline PictureCode x3() { return generate_picture_code(spec_x3()); }
// the lone 4x4 picture with a single 1 in its corner
inline PictureCode corner_code() {
  return PictureCode::make(4, binary_alphabet(),
                           {Picture::from_text_rows(binary_alphabet(), {"1 0 0 0", "0 0 0 0", "0 0 0 0", "0 0 0 0"})});
}

}  // namespace fx
