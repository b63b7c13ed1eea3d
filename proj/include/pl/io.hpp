#pragma once
#include <filesystem>
#include <string>

#include "pl/codes.hpp"
#include "pl/picture.hpp"
#include "pl/reduce.hpp"
#include "pl/tileset.hpp"

namespace pl {

// Picture: "rows cols", then one line of tokens per row. Blank lines and
// lines starting with "%" are skipped. Without an alphabet the distinct
// tokens are sorted into one. "#" only when `bordered`.
Picture parse_picture(const std::string& text, const AlphabetPtr& alpha = nullptr, bool bordered = false);
std::string serialize_picture(const Picture& p);

// Tiling system:
//   k: 2
//   terminal: a
//   local: n se ne
//   projection: n->a se->a ne->a
//   tile:
//   # #
//   # se
// Tile sets known only implicitly are written as one line naming how to
// rebuild them from sibling files instead of tile blocks:
//   construction: closure x.code
//   construction: encoded m2.ts z.code
//   construction: padding-free m2.ts z.code
// Relative names resolve against `base`.
TilingSystem parse_system(const std::string& text, const std::filesystem::path& base = {});
std::string serialize_system(const TilingSystem& S);
std::string serialize_system(const TilingSystem& S, const std::string& construction);

// Code:
//   k: 3
//   alphabet: 0 1
//   coding: B0 -> 0          (optional, one line per source symbol, in order)
//   picture 0:
//   k lines of k tokens
PictureCode parse_code(const std::string& text);
std::string serialize_code(const PictureCode& X);

// Frame alphabet:
//   k: 3
//   local: ...
//   faces: a $
//   symbol B0:
//   north: ...
//   east: ...
//   south: ...
//   west: ...
//   face:
//   k lines
// followed by the frame set as "frame <i>:" blocks of the same four lines.
FrameAlphabet parse_frames(const std::string& text);
std::string serialize_frames(const FrameAlphabet& B);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

}  // namespace pl
