#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pl/codes.hpp"
#include "pl/errors.hpp"
#include "pl/io.hpp"
#include "pl/lang.hpp"
#include "pl/reduce.hpp"
#include "pl/render.hpp"
#include "pl/search.hpp"

namespace pl::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Globals {
  std::optional<int> max_rows, max_cols, k;
  long long budget = kDefaultBudget;
  std::optional<std::string> out;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

// the file a parse error came from travels with it
[[noreturn]] void rethrow_in(const fs::path& file, const ParseError& e) { throw ParseError(file.string() + ": " + e.what()); }

TilingSystem load_system(const fs::path& file) {
  try {
    return parse_system(read_file(file), file.parent_path());
  } catch (const ParseError& e) {
    rethrow_in(file, e);
  }
}

Picture load_picture(const fs::path& file, const AlphabetPtr& alpha, bool bordered = false) {
  try {
    return parse_picture(read_file(file), alpha, bordered);
  } catch (const ParseError& e) {
    rethrow_in(file, e);
  }
}

PictureCode load_code(const fs::path& file) {
  try {
    return parse_code(read_file(file));
  } catch (const ParseError& e) {
    rethrow_in(file, e);
  }
}

json rows_json(const Picture& p) {
  json rows = json::array();
  for (int i = 0; i < p.rows(); ++i) {
    std::string r;
    for (int j = 0; j < p.cols(); ++j) r += (j ? " " : "") + p.alphabet()->token(p(i, j));
    rows.push_back(r);
  }
  return rows;
}

json picture_json(const Picture& p) { return {{"rows", p.rows()}, {"cols", p.cols()}, {"cells", rows_json(p)}}; }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

fs::path out_dir(const Globals& g) {
  fs::path d(*g.out);
  fs::create_directories(d);
  return d;
}

int need_bound(const std::optional<int>& v, const char* flag) {
  if (!v) throw DomainError(std::string(flag) + " is required for this command");
  if (*v < 1) throw DomainError(std::string(flag) + " must be positive");
  return *v;
}

void emit(std::ostream& out, const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    out << j.dump(2) << "\n";
  else
    out << text;
}

json header(const std::string& verb) { return {{"schema", kJsonSchema}, {"verb", verb}}; }

// ---- verbs ----

int do_member(const Globals& g, const std::string& sys_file, const std::string& pic_file, std::ostream& out) {
  auto S = load_system(sys_file);
  auto p = load_picture(pic_file, S.terminal);
  auto r = ts_member(p, S, g.budget);
  json j = header("member");
  j["verdict"] = to_string(r.verdict);
  j["nodes"] = r.nodes;
  std::string text = std::string(to_string(r.verdict)) + "\nnodes: " + std::to_string(r.nodes) + "\n";
  if (r.witness) {
    j["witness"] = picture_json(*r.witness);
    text += "witness:\n" + serialize_picture(*r.witness);
    if (g.out) {
      auto f = out_dir(g) / "witness.pic";
      write_file(f, serialize_picture(*r.witness));
      j["witness_file"] = f.string();
      text += "witness written to " + f.string() + "\n";
    }
  }
  emit(out, g, j, text);
  return r.verdict == Verdict::unknown ? kBudgetExhausted : kOk;
}

int do_enumerate(const Globals& g, const std::string& sys_file, std::ostream& out) {
  int mr = need_bound(g.max_rows, "--max-rows"), mc = need_bound(g.max_cols, "--max-cols");
  auto S = load_system(sys_file);
  auto L = enumerate_language(S, mr, mc, g.budget);
  json j = header("enumerate");
  j["max_rows"] = mr;
  j["max_cols"] = mc;
  j["count"] = L.size();
  j["pictures"] = json::array();
  std::string text = "count: " + std::to_string(L.size()) + "\n";
  for (auto& p : L) {
    j["pictures"].push_back(picture_json(p));
    text += "\n" + serialize_picture(p);
  }
  emit(out, g, j, text);
  return kOk;
}

int do_compare(const Globals& g, const std::string& a_file, const std::string& b_file, std::ostream& out) {
  int mr = need_bound(g.max_rows, "--max-rows"), mc = need_bound(g.max_cols, "--max-cols");
  auto A = load_system(a_file), B = load_system(b_file);
  auto rep = compare_languages(A, B, mr, mc, g.budget);
  json j = header("compare");
  j["equal"] = rep.equal();
  j["size_a"] = rep.size_a;
  j["size_b"] = rep.size_b;
  j["only_in_a"] = json::array();
  j["only_in_b"] = json::array();
  std::string text = std::string("equal: ") + (rep.equal() ? "true" : "false") + "\nsize a: " + std::to_string(rep.size_a) +
                     "\nsize b: " + std::to_string(rep.size_b) + "\n";
  for (auto& p : rep.only_in_a) {
    j["only_in_a"].push_back(picture_json(p));
    text += "\nonly in a:\n" + serialize_picture(p);
  }
  for (auto& p : rep.only_in_b) {
    j["only_in_b"].push_back(picture_json(p));
    text += "\nonly in b:\n" + serialize_picture(p);
  }
  emit(out, g, j, text);
  return kOk;
}

int do_pad(const Globals& g, const std::string& sys_file, const std::string& pic_file, std::ostream& out) {
  if (!g.k) throw DomainError("--k is required for pad");
  json j = header("pad");
  j["k"] = *g.k;
  std::string text;
  if (!sys_file.empty()) {
    auto P = padded_system(load_system(sys_file), *g.k);
    auto body = serialize_system(P);
    j["local_size"] = P.local->size();
    j["tiles"] = P.explicit_tiles()->size();
    text = "local size: " + std::to_string(P.local->size()) + "\ntiles: " + std::to_string(P.explicit_tiles()->size()) + "\n";
    if (g.out) {
      auto f = out_dir(g) / "padded.ts";
      write_file(f, body);
      j["file"] = f.string();
      text += "written to " + f.string() + "\n";
    } else {
      j["system"] = body;
      text += body;
    }
  } else {
    auto p = load_picture(pic_file, nullptr);
    auto q = pad_picture(p, *g.k);
    j["picture"] = picture_json(q);
    text = serialize_picture(q);
    if (g.out) {
      auto f = out_dir(g) / "padded.pic";
      write_file(f, text);
      j["file"] = f.string();
      text += "written to " + f.string() + "\n";
    }
  }
  emit(out, g, j, text);
  return kOk;
}

int do_reduce(const Globals& g, const std::string& sys_file, const std::string& code_file, const std::vector<int>& harvest,
              std::ostream& out) {
  if (!g.out) throw DomainError("--out is required for reduce");
  auto S = load_system(sys_file);
  ReduceOptions opt;
  opt.k = g.k;
  opt.budget = g.budget;
  if (!code_file.empty()) opt.X = load_code(code_file);
  if (!harvest.empty()) opt.harvest = std::pair{harvest.at(0), harvest.at(1)};
  auto A = reduce_alphabet(S, opt);

  auto dir = out_dir(g);
  write_file(dir / "padded.ts", serialize_system(A.padded));
  write_file(dir / "frames.txt", serialize_frames(A.frames));
  write_file(dir / "m2.ts", serialize_system(as_system(A.frame_tiles)));
  write_file(dir / "codeX.code", serialize_code(A.code_X));
  write_file(dir / "codeZ.code", serialize_code(A.code_Z));
  auto faces = A.frames.faces;
  TilingSystem enc{faces, A.code_Z.alphabet, A.encoded_tiles, component_map(A.code_Z.alphabet, A.code_X.alphabet, faces, 1)};
  write_file(dir / "m2k.ts", serialize_system(enc, "encoded m2.ts codeZ.code"));
  write_file(dir / "final.ts", serialize_system(A.final_system, "padding-free m2.ts codeZ.code"));

  auto ratio = alphabetic_ratio(A.final_system);
  json j = header("reduce");
  j["k"] = A.k;
  j["terminal"] = S.terminal->size();
  j["original_local"] = S.local->size();
  j["padded_local"] = A.padded.local->size();
  j["B_k"] = A.frames.symbols.size();
  j["Q_k"] = A.frames.frames.size();
  j["X"] = A.code_X.size();
  j["Z"] = A.code_Z.size();
  j["M2"] = A.frame_tiles->size();
  j["Theta"] = A.final_system.local->size();
  j["ratio"] = ratio.str();
  j["frames"] = harvest.empty() ? "over-approximation" : "harvested up to " + std::to_string(harvest[0]) + "x" + std::to_string(harvest[1]);
  j["timings"] = json::object();
  for (auto& [stage, t] : A.timings) j["timings"][stage] = t;
  j["out"] = dir.string();

  std::ostringstream rep;
  rep << "k: " << A.k << "\n"
      << "terminal alphabet: " << S.terminal->size() << "\n"
      << "original local alphabet: " << S.local->size() << "\n"
      << "padded local alphabet: " << A.padded.local->size() << "\n"
      << "frames: " << j["frames"].get<std::string>() << "\n"
      << "B_k: " << A.frames.symbols.size() << "\n"
      << "Q_k: " << A.frames.frames.size() << "\n"
      << "X: " << A.code_X.size() << "\n"
      << "Z: " << A.code_Z.size() << "\n"
      << "M2 tiles: " << A.frame_tiles->size() << "\n"
      << "Theta: " << A.final_system.local->size() << "\n"
      << "ratio: " << ratio.str() << "\n";
  for (auto& [stage, t] : A.timings) rep << "time " << stage << ": " << std::fixed << std::setprecision(3) << t << " s\n";
  write_file(dir / "report.txt", rep.str());
  emit(out, g, j, rep.str() + "written to " + dir.string() + "\n");
  return kOk;
}

int do_code_gen(const Globals& g, const std::string& y_hor, const std::string& y_vert, const std::string& obligation,
                std::optional<long long> need, std::ostream& out) {
  if (!g.k) throw DomainError("--k is required for code-gen");
  PictureCode X;
  if (need) {
    X = code_for(*g.k, static_cast<std::size_t>(*need), g.budget);
  } else {
    if (y_hor.empty() || obligation.empty()) throw DomainError("code-gen needs --y-hor and --obligation, or --need");
    auto b = binary_alphabet();
    CodeFamilySpec spec{*g.k, WordCode::from_strings(b, split_list(y_hor)),
                        WordCode::from_strings(b, split_list(y_vert.empty() ? y_hor : y_vert)), obligation};
    spec.validate();
    X = generate_picture_code(spec);
  }
  auto body = serialize_code(X);
  json j = header("code-gen");
  j["k"] = X.k;
  j["pictures"] = X.size();
  std::string text = "pictures: " + std::to_string(X.size()) + "\n";
  if (g.out) {
    auto f = out_dir(g) / "code.code";
    write_file(f, body);
    j["file"] = f.string();
    text += "written to " + f.string() + "\n";
  } else {
    j["code"] = body;
    text += body;
  }
  emit(out, g, j, text);
  return kOk;
}

int do_code_verify(const Globals& g, const std::string& code_file, bool brute, std::ostream& out) {
  auto X = load_code(code_file);
  bool ok = brute ? is_comma_free_picture_code_brute(X, static_cast<std::uint64_t>(g.budget)) : is_comma_free_picture_code(X);
  json j = header("code-verify");
  j["comma_free"] = ok;
  j["pictures"] = X.size();
  j["k"] = X.k;
  j["method"] = brute ? "assemblies" : "offsets";
  emit(out, g, j,
       std::string("comma-free: ") + (ok ? "true" : "false") + " (" + std::to_string(X.size()) + " pictures, k=" +
           std::to_string(X.k) + ")\n");
  return kOk;
}

int do_code_count(const Globals& g, const std::string& y_hor, const std::string& y_vert, const std::string& obligation,
                  std::ostream& out) {
  if (!g.k) throw DomainError("--k is required for code-count");
  json j = header("code-count");
  j["k"] = *g.k;
  std::string text;
  if (!y_hor.empty()) {
    if (obligation.empty()) throw DomainError("--obligation is required with --y-hor");
    auto b = binary_alphabet();
    CodeFamilySpec spec{*g.k, WordCode::from_strings(b, split_list(y_hor)),
                        WordCode::from_strings(b, split_list(y_vert.empty() ? y_hor : y_vert)), obligation};
    spec.validate();
    auto n = family_code_size(spec);
    j["pictures"] = n;
    text += "pictures: " + std::to_string(n) + "\n";
  }
  if (is_prime(*g.k)) {
    j["eastman"] = eastman_count(*g.k);
    text += "comma-free words (Eastman): " + std::to_string(eastman_count(*g.k)) + "\n";
  }
  if (*g.k >= 3) {
    auto lb = numerosity_lower_bound(*g.k);
    j["log2_lower_bound"] = lb.log2_value;
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << lb.log2_value;
    text += "lower bound: 2^" + s.str() + "\n";
  }
  emit(out, g, j, text);
  return kOk;
}

int do_slt_to_local(const Globals& g, const std::string& sys_file, std::ostream& out) {
  auto S = load_system(sys_file);
  auto L = slt_to_local(S);
  auto body = serialize_system(L);
  json j = header("slt-to-local");
  j["local_size"] = L.local->size();
  j["tiles"] = L.explicit_tiles()->size();
  std::string text = "local size: " + std::to_string(L.local->size()) + "\ntiles: " + std::to_string(L.explicit_tiles()->size()) + "\n";
  if (g.out) {
    auto f = out_dir(g) / "local.ts";
    write_file(f, body);
    j["file"] = f.string();
    text += "written to " + f.string() + "\n";
  } else {
    j["system"] = body;
    text += body;
  }
  emit(out, g, j, text);
  return kOk;
}

int do_render(const Globals& g, const std::string& sys_file, const std::string& pic_file, bool ascii, bool bordered,
              std::ostream& out) {
  if (sys_file.empty() && pic_file.empty()) throw ParseError("render needs --system or --picture");
  RenderOptions opt{g.k.value_or(0), ascii};
  std::string text;
  if (!sys_file.empty()) {
    auto S = load_system(sys_file);
    auto* T = S.explicit_tiles();
    if (!T) throw DomainError("render: the tile set is implicit (" + S.tiles->describe() + ")");
    text = render(*T, opt);
  } else {
    text = render(load_picture(pic_file, nullptr, bordered), opt);
  }
  json j = header("render");
  j["diagram"] = text;
  emit(out, g, j, text);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picture languages: tiling systems, comma-free picture codes, alphabet reduction", "picturelang"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-rows", g.max_rows, "largest picture height for enumeration");
  app.add_option("--max-cols", g.max_cols, "largest picture width for enumeration");
  app.add_option("--budget", g.budget, "search node budget")->capture_default_str();
  app.add_option("--k", g.k, "block size (padding, reduction, codes, render separators)");
  app.add_option("--out", g.out, "output directory");
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string system, other, picture, code, y_hor, y_vert, obligation;
  std::vector<int> harvest;
  std::optional<long long> need;
  bool ascii = false, bordered = false, brute = false;

  auto* member = app.add_subcommand("member", "decide whether a picture is in the language of a tiling system");
  member->add_option("--system", system, "tiling system file")->required();
  member->add_option("--picture", picture, "picture file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list the language up to --max-rows x --max-cols");
  enumerate->add_option("--system", system, "tiling system file")->required();

  auto* compare = app.add_subcommand("compare", "compare two languages up to the bounds");
  compare->add_option("--system", system, "first tiling system")->required();
  compare->add_option("--other", other, "second tiling system")->required();

  auto* pad = app.add_subcommand("pad", "pad a picture, or build the padded tiling system");
  auto* pad_sys = pad->add_option("--system", system, "2-tiling system file");
  auto* pad_pic = pad->add_option("--picture", picture, "picture file");
  pad_sys->excludes(pad_pic);
  pad->require_option(1);

  auto* reduce = app.add_subcommand("reduce", "alphabet reduction to ratio 2; writes a bundle to --out");
  reduce->add_option("--system", system, "2-tiling system file")->required();
  reduce->add_option("--code", code, "comma-free code to use instead of a generated one");
  reduce->add_option("--harvest", harvest, "take B_k from pre-images up to ROWS COLS")->expected(2);

  auto* code_gen = app.add_subcommand("code-gen", "generate a comma-free picture code of the new family");
  code_gen->add_option("--y-hor", y_hor, "horizontal comma-free words, comma separated");
  code_gen->add_option("--y-vert", y_vert, "vertical words (default: --y-hor)");
  code_gen->add_option("--obligation", obligation, "obligation word over t/f");
  code_gen->add_option("--need", need, "pick the family automatically with at least this many pictures");

  auto* code_verify = app.add_subcommand("code-verify", "check that a picture code is comma-free");
  code_verify->add_option("--code", code, "code file")->required();
  code_verify->add_flag("--brute", brute, "list every 2x2 assembly (bounded by --budget)");

  auto* code_count = app.add_subcommand("code-count", "family code size and reference counts for --k");
  code_count->add_option("--y-hor", y_hor, "horizontal comma-free words, comma separated");
  code_count->add_option("--y-vert", y_vert, "vertical words (default: --y-hor)");
  code_count->add_option("--obligation", obligation, "obligation word over t/f");

  auto* to_local = app.add_subcommand("slt-to-local", "turn a k-tiling system into a 2-tiling system");
  to_local->add_option("--system", system, "tiling system file")->required();

  auto* rend = app.add_subcommand("render", "draw a picture or the tiles of a system as a grid");
  auto* r_sys = rend->add_option("--system", system, "tiling system file (draws its tiles)");
  auto* r_pic = rend->add_option("--picture", picture, "picture file");
  r_sys->excludes(r_pic);
  rend->add_flag("--ascii", ascii, "ASCII instead of box drawing");
  rend->add_flag("--bordered", bordered, "allow # in the picture");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  std::string stage;
  auto dispatch = [&]() -> int {
    for (auto* sub : app.get_subcommands()) stage = sub->get_name();
    if (member->parsed()) return do_member(g, system, picture, out);
    if (enumerate->parsed()) return do_enumerate(g, system, out);
    if (compare->parsed()) return do_compare(g, system, other, out);
    if (pad->parsed()) return do_pad(g, system, picture, out);
    if (reduce->parsed()) return do_reduce(g, system, code, harvest, out);
    if (code_gen->parsed()) return do_code_gen(g, y_hor, y_vert, obligation, need, out);
    if (code_verify->parsed()) return do_code_verify(g, code, brute, out);
    if (code_count->parsed()) return do_code_count(g, y_hor, y_vert, obligation, out);
    if (to_local->parsed()) return do_slt_to_local(g, system, out);
    return do_render(g, system, picture, ascii, bordered, out);
  };
  try {
    return dispatch();
  } catch (const ParseError& e) {
    err << stage << ": parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetExhausted& e) {
    err << stage << ": budget exhausted after " << e.nodes << " nodes: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const DomainError& e) {
    err << stage << ": " << e.what() << "\n";
    return kDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << stage << ": " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace pl::cli
