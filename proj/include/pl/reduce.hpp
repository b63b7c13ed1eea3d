#pragma once
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pl/codes.hpp"
#include "pl/picture.hpp"
#include "pl/search.hpp"
#include "pl/tileset.hpp"

namespace pl {

inline constexpr std::string_view kPadToken = "$";
inline constexpr std::string_view kFlatToken = "♭";

// Sigma plus "$"; throws if "$" is already taken
AlphabetPtr pad_alphabet(const AlphabetPtr& sigma);
// (rows, cols) after padding: at least one and at most k extra lines each way
std::pair<int, int> padded_size(int rows, int cols, int k);
// p on the north-west corner of a $-picture with both sides multiples of k
Picture pad_picture(const Picture& p, int k);
// Drops trailing all-$ rows and columns.
Picture strip_padding(const Picture& p);

// 2-TS for the padded language, over the old local alphabet plus {♭, 1..k}.
TilingSystem padded_system(const TilingSystem& S, int k);
// The pre-image that padded_system assigns to pad_picture(project(pre)):
// pre on the north-west, the counting pattern of ♭ and 1..k around it.
// pre is over S's local alphabet, P is padded_system(S, k).
Picture padded_preimage(const Picture& pre, const TilingSystem& P, int k);

struct FrameSymbol {
  Frame frame;
  Picture face;
  friend auto operator<=>(const FrameSymbol&, const FrameSymbol&) = default;
  friend bool operator==(const FrameSymbol&, const FrameSymbol&) = default;
};

// B_k with its frame set Q_k. Symbol i is named "B<i>" in `alphabet`.
struct FrameAlphabet {
  int k = 0;
  AlphabetPtr local;  // the padded system's local alphabet (frame words)
  AlphabetPtr faces;  // terminal alphabet of the faces
  std::vector<FrameSymbol> symbols;  // sorted
  std::vector<Frame> frames;         // sorted, distinct
  AlphabetPtr alphabet;
  // index into frames of symbol i
  std::vector<int> frame_of;

  std::optional<Sym> find(const FrameSymbol& b) const;
  int frame_index(const Frame& f) const;  // -1 if absent
};

// Frames and faces of every k x k picture over P's local alphabet whose 2x2
// subpictures are all interior tiles of P.
FrameAlphabet frame_alphabet(const TilingSystem& P, int k, long long budget = kDefaultBudget);
// Frames and faces of the k-blocks that actually occur in padded pre-images
// of L(S) up to the given bounds (of S's pictures). Smaller than the
// over-approximation; exact for every picture within the bounds.
FrameAlphabet harvested_frame_alphabet(const TilingSystem& S, const TilingSystem& P, int k, int max_rows, int max_cols,
                                       long long budget = kDefaultBudget);
FrameAlphabet make_frame_alphabet(int k, AlphabetPtr local, AlphabetPtr faces, std::vector<FrameSymbol> symbols);

// M_2: 2-tiles over B_k that glue into pictures of L(T).
TileSet frame_tileset(const FrameAlphabet& B, const TileSet& T);
// pi_k: each B symbol becomes its k x k face
Picture expand_faces(const Picture& q, const FrameAlphabet& B);
// tessellate a picture of the padded local language into B symbols
Picture blockify(const Picture& local_picture, const FrameAlphabet& B, const SymbolMap& projection);

// Z = X (x) faces: frame i gets X picture i; symbol <f, p> codes to merge(X(f), p).
PictureCode build_code_Z(const FrameAlphabet& B, const PictureCode& X);

// M': the encoded tiles minus the two padding forms, with padding cells shown
// as #. Window alphabet is Theta = Lambda minus the "$" pairs.
// Lambda must be product_alphabet(bits, faces), as build_code_Z makes it.
ConstraintPtr eliminate_padding(const TileSet& M2, const PictureCode& Z, const AlphabetPtr& faces);
AlphabetPtr theta_alphabet(const AlphabetPtr& lambda, const AlphabetPtr& faces);
// Lambda id -> its Theta id, or kBorder for the "$" pairs
std::vector<Sym> theta_ids(const AlphabetPtr& lambda, const AlphabetPtr& faces);
// The deletion test on one 2k-tile over Lambda (row-major, # as kBorder):
// two all-padding columns, or an all-padding column next to an all-# one;
// the same for rows.
bool padding_tile_deleted(const std::vector<Sym>& tile, int size, const std::vector<bool>& is_pad);

struct ReduceOptions {
  std::optional<int> k;
  std::optional<PictureCode> X;
  // take B_k from pre-images up to these bounds instead of the over-approximation
  std::optional<std::pair<int, int>> harvest;
  long long budget = kDefaultBudget;
};

struct ReductionArtifacts {
  int k = 0;
  TilingSystem original;
  TilingSystem padded;
  FrameAlphabet frames;
  std::shared_ptr<const TileSet> frame_tiles;  // M_2
  PictureCode code_X, code_Z;
  ConstraintPtr encoded_tiles;  // M_2k
  TilingSystem final_system;    // over Theta, tiles M'
  std::vector<std::pair<std::string, double>> timings;  // stage, seconds
};

// Smallest binary family code at size k with at least `need` pictures.
PictureCode code_for(int k, std::size_t need, long long budget = kDefaultBudget);

ReductionArtifacts reduce_alphabet(const TilingSystem& S, const ReduceOptions& opt = {});

// The explicit M' pre-image of p, from a pre-image of p in L(S); nullopt when
// some k-block of the padded pre-image is missing from B_k.
std::optional<Picture> explicit_preimage(const ReductionArtifacts& A, const Picture& pre);
// Same, searching S for the pre-image first.
std::optional<Picture> explicit_preimage_of(const ReductionArtifacts& A, const Picture& p,
                                            long long budget = kDefaultBudget);

}  // namespace pl
