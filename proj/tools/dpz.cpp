// dpz: command-line front end for the del Pezzo lattice library.
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include "delpezzo.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;

int exit_code(dpz_status st) {
  switch (st) {
    case DPZ_OK: return 0;
    case DPZ_ERR_VERIFY: return 1;
    case DPZ_ERR_DOMAIN:
    case DPZ_ERR_STRUCTURAL: return 2;
    case DPZ_ERR_INTERNAL: return 3;
  }
  return 3;
}

[[noreturn]] void fail(dpz_status st) {
  std::cerr << "error: " << dpz_last_error() << "\n";
  std::exit(exit_code(st));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    std::exit(2);
  }
  out << text << "\n";
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { dpz_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct LatticeGuard {
  dpz_lattice* l = nullptr;
  ~LatticeGuard() { dpz_lattice_free(l); }
};

struct ModelGuard {
  dpz_model* m = nullptr;
  ~ModelGuard() { dpz_model_free(m); }
};

// Load a marked lattice from --preset or --lattice (exactly one).
dpz_lattice* load_lattice(const std::string& preset, const std::string& lattice_path) {
  if (preset.empty() == lattice_path.empty()) {
    std::cerr << "error: give exactly one of --preset and --lattice\n";
    std::exit(2);
  }
  dpz_lattice* l = nullptr;
  if (!preset.empty()) {
    ModelGuard m;
    if (auto st = dpz_model_from_preset(preset.c_str(), &m.m); st != DPZ_OK) fail(st);
    if (auto st = dpz_model_lattice(m.m, &l); st != DPZ_OK) fail(st);
  } else {
    std::string text = read_file(lattice_path);
    if (auto st = dpz_lattice_from_json(text.c_str(), &l); st != DPZ_OK) fail(st);
  }
  return l;
}

dpz_model* load_model(const std::string& preset, const std::string& input_path) {
  if (preset.empty() == input_path.empty()) {
    std::cerr << "error: give exactly one of --preset and --input\n";
    std::exit(2);
  }
  dpz_model* m = nullptr;
  if (!preset.empty()) {
    if (auto st = dpz_model_from_preset(preset.c_str(), &m); st != DPZ_OK) fail(st);
  } else {
    std::string text = read_file(input_path);
    if (auto st = dpz_model_from_json(text.c_str(), &m); st != DPZ_OK) fail(st);
  }
  return m;
}

std::string census_table_text(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof(line), "%-8s %-3s %-3s %-8s %-7s %-11s %-10s %-8s %s\n",
                "family", "d", "r", "xi", "n_max", "uniqueness", "primitive", "maximal",
                "preset");
  os << line;
  for (const auto& e : j["entries"]) {
    std::string nmax = e["n_max"].is_string() ? e["n_max"].get<std::string>()
                                              : std::to_string(e["n_max"].get<int>());
    std::string uniq = e["uniqueness"].get<std::string>();
    if (e.contains("moduli_dim"))
      uniq += "(" + std::to_string(e["moduli_dim"].get<int>()) + ")";
    std::snprintf(line, sizeof(line), "%-8s %-3d %-3d %-8s %-7s %-11s %-10s %-8s %s\n",
                  e["family"].get<std::string>().c_str(), e["d"].get<int>(),
                  e["r"].get<int>(), e["xi_type"].get<std::string>().c_str(), nmax.c_str(),
                  uniq.c_str(), e["primitive"].get<bool>() ? "yes" : "no",
                  e["maximal"].get<bool>() ? "yes" : "no",
                  e["preset"].get<std::string>().c_str());
    os << line;
  }
  os << "entries: " << j["entries"].size();
  return os.str();
}

std::string summary_table_text(const std::string& json_text, bool verified) {
  ordered_json j = ordered_json::parse(json_text);
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %-4s %-3s %-9s %6s %6s %6s %-9s%s\n", "block",
                "d", "r", "delta", "t1", "t2", "t3", "primitive", verified ? " status" : "");
  os << line;
  for (const auto& row : j["rows"]) {
    const auto& src = verified ? row["expected"] : row;
    std::string dstr = std::to_string(row["d"].get<int>());
    if (row["starred"].get<bool>()) dstr += "*";
    std::snprintf(line, sizeof(line), "%-6s %-4s %-3d %-9s %6lld %6lld %6lld %-9s%s\n",
                  row["block"].get<std::string>().c_str(), dstr.c_str(),
                  row["r"].get<int>(), src["delta"].get<std::string>().c_str(),
                  src["t1"].get<long long>(), src["t2"].get<long long>(),
                  src["t3"].get<long long>(), src["primitive"].get<bool>() ? "yes" : "no",
                  !verified ? "" : (row["pass"].get<bool>() ? " ok" : " FAIL"));
    os << line;
  }
  if (verified)
    os << (j["all_pass"].get<bool>() ? "all rows verified" : "VERIFICATION FAILED");
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"del Pezzo lattice toolkit"};
  app.require_subcommand(1);

  std::string preset, lattice_path, input_path, out_path, name;
  int s_value = 1;
  long long box = 0;
  bool use_table = false, use_json = false, verify = false, oracle = false,
       closed_form = false;

  auto* build = app.add_subcommand("build", "build a model and emit its marked lattice");
  build->add_option("--preset", preset, "preset name, e.g. X_5_3_4 or X_6_3_3_star");
  build->add_option("--input", input_path, "construction tree json file");
  build->add_option("--emit,--out", out_path, "output path (stdout by default)");

  auto* inv = app.add_subcommand("invariants", "d, r, n, Xi type and primitivity");
  inv->add_option("--preset", preset);
  inv->add_option("--input", input_path, "construction tree json file");

  auto* theta_cmd = app.add_subcommand("theta", "enumerate Theta_s");
  theta_cmd->add_option("--s", s_value, "s in {0,1,2,3}")->required();
  theta_cmd->add_option("--preset", preset);
  theta_cmd->add_option("--lattice", lattice_path, "marked lattice json file");
  theta_cmd->add_flag("--oracle", oracle, "run the exhaustive box oracle instead");
  theta_cmd->add_option("--box", box, "box bound for --oracle");
  theta_cmd->add_flag("--closed-form", closed_form, "use the degree-1 closed form");

  auto* roots_cmd = app.add_subcommand("roots", "roots of a negative definite lattice");
  roots_cmd->add_option("--lattice", lattice_path, "lattice json file")->required();

  auto* dynkin_cmd = app.add_subcommand("dynkin", "ADE type of a negative definite lattice");
  dynkin_cmd->add_option("--lattice", lattice_path, "lattice json file")->required();

  auto* xi_cmd = app.add_subcommand("xi", "orthogonal complement in the surface section");
  xi_cmd->add_option("--preset", preset);
  xi_cmd->add_option("--input", input_path);

  auto* eff = app.add_subcommand("eff-cone", "effective cone generators and extremal rays");
  eff->add_option("--preset", preset);
  eff->add_option("--input", input_path);

  auto* r2 = app.add_subcommand("r2-table", "rank-2 contraction table row");
  r2->add_option("--preset", preset);
  r2->add_option("--input", input_path);

  auto* census_cmd = app.add_subcommand("census", "the (d, r, family) census");
  census_cmd->add_flag("--table", use_table, "fixed-width text table");
  census_cmd->add_flag("--json", use_json, "json (default)");
  census_cmd->add_flag("--verify", verify, "verify the global bounds");

  auto* appb = app.add_subcommand("appendix-b", "summary table of root data and counts");
  appb->add_flag("--verify", verify, "recompute every row and compare");
  appb->add_flag("--table", use_table, "fixed-width text table");
  appb->add_flag("--json", use_json, "json (default)");

  auto* dec = app.add_subcommand("decompose", "maximal orthogonal exceptional set and core");
  dec->add_option("--preset", preset);
  dec->add_option("--lattice", lattice_path, "marked lattice json file");

  auto* bundle = app.add_subcommand("bundle", "del Pezzo bundle calculus");
  bundle->require_subcommand(1);
  int kz2 = 0, rank = 0, c2 = 0, bd = 0, bn = 0;
  std::string base;
  auto* bv = bundle->add_subcommand("validate", "derived invariants of a bundle spec");
  bv->add_option("--kz2", kz2)->required();
  bv->add_option("--rank", rank)->required();
  bv->add_option("--c2", c2)->required();
  auto* bdual = bundle->add_subcommand("dual", "c2 of the orthogonal dual");
  bdual->add_option("--kz2", kz2)->required();
  bdual->add_option("--c2", c2)->required();
  auto* bmax = bundle->add_subcommand("maximalize", "saturate the rank");
  bmax->add_option("--kz2", kz2)->required();
  bmax->add_option("--rank", rank)->required();
  bmax->add_option("--c2", c2)->required();
  auto* bsplit = bundle->add_subcommand("splitting", "quadric-bundle splitting type");
  bsplit->add_option("--d", bd)->required();
  bsplit->add_option("--n", bn)->required();
  auto* bcat = bundle->add_subcommand("catalog", "maximal bundle description");
  bcat->add_option("--base", base, "P2, P1xP1, F1, Z7, Z6, Z5, Z4")->required();
  bcat->add_option("--c2", c2)->required();

  auto* cat = app.add_subcommand("catalog", "explicit equations of the bounded classes");
  cat->add_option("--name", name, "record name, e.g. X_3_6_3");

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) {
    ModelGuard m{load_model(preset, input_path)};
    StringGuard out;
    if (auto st = dpz_model_to_json(m.m, &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), out_path);
    return 0;
  }
  if (inv->parsed()) {
    ModelGuard m{load_model(preset, input_path)};
    StringGuard out;
    if (auto st = dpz_invariants(m.m, &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (theta_cmd->parsed()) {
    if (s_value < 0 || s_value > 3) {
      std::cerr << "error: s must be in {0,1,2,3}\n";
      return 2;
    }
    LatticeGuard l{load_lattice(preset, lattice_path)};
    StringGuard out;
    dpz_status st;
    if (oracle) {
      if (box <= 0) {
        std::cerr << "error: --oracle requires a positive --box\n";
        return 2;
      }
      st = dpz_theta_bruteforce(l.l, s_value, box, &out.s);
    } else if (closed_form) {
      st = dpz_theta_closed_form_d1(l.l, s_value, &out.s);
    } else {
      st = dpz_theta(l.l, s_value, &out.s);
    }
    if (st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (roots_cmd->parsed()) {
    std::string text = read_file(lattice_path);
    StringGuard out;
    if (auto st = dpz_roots_of_json(text.c_str(), &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (dynkin_cmd->parsed()) {
    std::string text = read_file(lattice_path);
    StringGuard out;
    if (auto st = dpz_dynkin_of_json(text.c_str(), &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (xi_cmd->parsed()) {
    ModelGuard m{load_model(preset, input_path)};
    StringGuard out;
    if (auto st = dpz_xi(m.m, &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (eff->parsed()) {
    ModelGuard m{load_model(preset, input_path)};
    StringGuard out;
    if (auto st = dpz_eff_cone(m.m, &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (r2->parsed()) {
    ModelGuard m{load_model(preset, input_path)};
    StringGuard out;
    if (auto st = dpz_r2_table(m.m, &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (census_cmd->parsed()) {
    if (verify) {
      StringGuard out;
      dpz_status st = dpz_verify_bounds(&out.s);
      write_output(out.str(), "");
      if (st != DPZ_OK && st != DPZ_ERR_VERIFY) fail(st);
      return exit_code(st);
    }
    StringGuard out;
    if (auto st = dpz_census(&out.s); st != DPZ_OK) fail(st);
    write_output(use_table ? census_table_text(out.str()) : out.str(), "");
    return 0;
  }
  if (appb->parsed()) {
    StringGuard out;
    if (verify) {
      dpz_status st = dpz_summary_verify(&out.s);
      if (st != DPZ_OK && st != DPZ_ERR_VERIFY) fail(st);
      write_output(use_table || !use_json ? summary_table_text(out.str(), true) : out.str(),
                   "");
      return exit_code(st);
    }
    if (auto st = dpz_summary_table(&out.s); st != DPZ_OK) fail(st);
    write_output(use_table ? summary_table_text(out.str(), false) : out.str(), "");
    return 0;
  }
  if (dec->parsed()) {
    LatticeGuard l{load_lattice(preset, lattice_path)};
    StringGuard out;
    if (auto st = dpz_decompose_lattice(l.l, &out.s); st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (bundle->parsed()) {
    StringGuard out;
    dpz_status st = DPZ_OK;
    if (bv->parsed()) st = dpz_bundle_validate(kz2, rank, c2, &out.s);
    else if (bdual->parsed()) {
      int dual = 0;
      st = dpz_bundle_dual_c2(kz2, c2, &dual);
      if (st == DPZ_OK) {
        write_output(ordered_json{{"kz2", kz2}, {"c2", c2}, {"dual_c2", dual}}.dump(), "");
        return 0;
      }
    } else if (bmax->parsed()) st = dpz_bundle_maximalize(kz2, rank, c2, &out.s);
    else if (bsplit->parsed()) st = dpz_quadric_splitting(bd, bn, &out.s);
    else if (bcat->parsed()) st = dpz_bundle_catalog(base.c_str(), c2, &out.s);
    if (st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  if (cat->parsed()) {
    StringGuard out;
    dpz_status st = name.empty() ? dpz_catalog_list(&out.s)
                                 : dpz_catalog_lookup(name.c_str(), &out.s);
    if (st != DPZ_OK) fail(st);
    write_output(out.str(), "");
    return 0;
  }
  return 2;
}
