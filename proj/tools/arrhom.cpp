// arrhom: exact homology of hyperplane-arrangement intersection lattices.
//
// Commands: lattice | charpoly | homology | verify. All arithmetic is over
// Q; every printed number is exact. Exit codes: 0 ok, 1 verification
// mismatch, 2 input error, 3 resource guard exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "arrhom/io.hpp"

using namespace arrhom;

namespace {

struct Cfg {
  std::string input;
  std::string preset;  // "boolean:3", "braid:4"
  std::string sheaf = "exterior:all";
  std::string mode = "both";
  std::string format = "table";
  bool with_minimum = true;  // cellular route; the sheaf route is L minus 0
  long max_chains = 0;       // 0: default guard
  std::string dump_complex, dump_sheaf;
};

void add_common(CLI::App* cmd, Cfg& cfg) {
  auto* in = cmd->add_option("--input", cfg.input, "arrangement JSON file");
  cmd->add_option("--preset", cfg.preset,
                  "built-in arrangement NAME:N (boolean:3, braid:4)")
      ->excludes(in);
  cmd->add_option("--sheaf", cfg.sheaf,
                  "natural | constant:D | exterior:J | exterior:all");
  cmd->add_option("--mode", cfg.mode, "sheaf | cellular | both");
  cmd->add_flag("--with-minimum,!--no-with-minimum", cfg.with_minimum,
                "include the minimal element in the cellular complex "
                "(default on; the order-complex route always works on L "
                "minus the minimum)");
  cmd->add_option("--format", cfg.format, "table | json");
  cmd->add_option("--max-chains", cfg.max_chains,
                  "chain-enumeration guard override");
  cmd->add_option("--dump-complex", cfg.dump_complex,
                  "write the computed chain complexes as JSON");
  cmd->add_option("--dump-sheaf", cfg.dump_sheaf,
                  "write the computed sheaves as JSON");
}

Arrangement load(const Cfg& cfg) {
  if (!cfg.input.empty()) return load_arrangement_file(cfg.input);
  if (!cfg.preset.empty()) {
    auto colon = cfg.preset.find(':');
    if (colon == std::string::npos)
      throw ValidationError("input: --preset expects NAME:N");
    int n = 0;
    try {
      n = std::stoi(cfg.preset.substr(colon + 1));
    } catch (const std::exception&) {
      throw ValidationError("input: bad preset size in '" + cfg.preset + "'");
    }
    return preset_by_name(cfg.preset.substr(0, colon), n);
  }
  throw ValidationError("input: one of --input or --preset is required");
}

Guards guards_of(const Cfg& cfg) {
  Guards g;
  if (cfg.max_chains > 0) g.max_chains = cfg.max_chains;
  return g;
}

VerifyMode mode_of(const Cfg& cfg) {
  if (cfg.mode == "sheaf") return VerifyMode::sheaf;
  if (cfg.mode == "cellular") return VerifyMode::cellular;
  if (cfg.mode == "both") return VerifyMode::both;
  throw ValidationError("input: unknown --mode '" + cfg.mode + "'");
}

// Selected (label, sheaf) pairs on the lattice. Exterior powers are
// labelled by j; other selectors get a single unlabelled entry.
std::vector<std::pair<int, Sheaf>> select_sheaves(const Cfg& cfg,
                                                  const ArrangementLattice& l) {
  std::vector<std::pair<int, Sheaf>> out;
  if (cfg.sheaf == "natural") {
    out.push_back({-1, natural_sheaf(l)});
  } else if (cfg.sheaf.rfind("constant:", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(cfg.sheaf.substr(9));
    } catch (const std::exception&) {
      throw ValidationError("input: bad --sheaf '" + cfg.sheaf + "'");
    }
    if (d < 0) throw ValidationError("input: constant sheaf dim must be >= 0");
    out.push_back({-1, constant_sheaf(l.lat, d)});
  } else if (cfg.sheaf.rfind("exterior:", 0) == 0) {
    Sheaf nat = natural_sheaf(l);
    std::string arg = cfg.sheaf.substr(9);
    if (arg == "all") {
      for (int j = 0; j <= l.arr.ambient_dim; ++j)
        out.push_back({j, exterior_power_sheaf(nat, j)});
    } else {
      int j = 0;
      try {
        j = std::stoi(arg);
      } catch (const std::exception&) {
        throw ValidationError("input: bad --sheaf '" + cfg.sheaf + "'");
      }
      if (j < 0) throw ValidationError("input: exterior power must be >= 0");
      out.push_back({j, exterior_power_sheaf(nat, j)});
    }
  } else {
    throw ValidationError("input: unknown --sheaf '" + cfg.sheaf + "'");
  }
  return out;
}

int cmd_lattice(const Cfg& cfg) {
  ArrangementLattice l = build_lattice(load(cfg));
  std::map<int, int> per_rank;
  for (int x = 0; x < l.lat.size(); ++x) ++per_rank[l.lat.rank(x)];
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < l.lat.size(); ++x)
    for (int y : l.lat.upper_covers(x)) edges.push_back({x, y});
  if (cfg.format == "json") {
    Json j = arrangement_to_json(l.arr);
    j["elements"] = l.lat.size();
    Json pr = Json::array();
    for (auto [rk, n] : per_rank) pr.push_back(Json::array({rk, n}));
    j["elements_per_rank"] = pr;
    j["atoms"] = l.lat.atoms();
    Json he = Json::array();
    for (auto [x, y] : edges) he.push_back(Json::array({x, y}));
    j["hasse_edges"] = he;
    j["geometric"] = is_geometric(l);
    j["essential"] = l.essential();
    j["rank"] = l.rank();
    j["dim_center"] = l.center().dim();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "elements: " << l.lat.size() << " in Q^" << l.arr.ambient_dim
            << "\n";
  std::cout << "per rank:";
  for (auto [rk, n] : per_rank) std::cout << " " << rk << ":" << n;
  std::cout << "\natoms:";
  for (int a : l.lat.atoms()) std::cout << " " << a;
  std::cout << "\nhasse edges:";
  for (auto [x, y] : edges) std::cout << " " << x << "<" << y;
  std::cout << "\ngeometric: " << (is_geometric(l) ? "yes" : "no")
            << "\nessential: " << (l.essential() ? "yes" : "no")
            << "\nrank: " << l.rank() << ", dim U = " << l.center().dim()
            << "\n";
  return 0;
}

int cmd_charpoly(const Cfg& cfg) {
  ArrangementLattice l = build_lattice(load(cfg));
  CharPoly chi = char_poly(l);
  CharPoly chip = char_poly_perp(l);
  const int top = std::max(chi.degree(), 0);
  if (cfg.format == "json") {
    Json j;
    j["chi"] = chi.to_string();
    j["chi_perp"] = chip.to_string();
    j["dim_center"] = l.center().dim();
    Json d = Json::array(), dp = Json::array();
    for (int k = 0; k <= top; ++k) {
      d.push_back(rational_to_string(derivative_at_one(chi, k)));
      dp.push_back(rational_to_string(derivative_at_one(chip, k)));
    }
    j["derivatives_at_one"] = d;
    j["perp_derivatives_at_one"] = dp;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "chi_L(t) = " << chi.to_string() << "\n";
  std::cout << "chi_perp(t) = " << chip.to_string() << "  (dim U = "
            << l.center().dim() << ")\n";
  for (int k = 0; k <= top; ++k)
    std::cout << "chi^(" << k << ")(1) = "
              << rational_to_string(derivative_at_one(chi, k))
              << ", perp: " << rational_to_string(derivative_at_one(chip, k))
              << "\n";
  return 0;
}

// One bigraded table (j -> betti in i) rendered per the support figures:
// i horizontal, j vertical (descending), zeros as dots.
std::string render_table(const std::map<int, BettiTable>& rows, int max_i) {
  std::ostringstream os;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    os << "  j=" << std::setw(2) << std::left << it->first << "|";
    for (int i = 0; i <= max_i; ++i) {
      long b = it->second(i);
      os << std::setw(4) << std::right << (b == 0 ? "." : std::to_string(b));
    }
    os << "\n";
  }
  os << "       ";
  for (int i = 0; i <= max_i; ++i)
    os << std::setw(4) << std::right << ("i=" + std::to_string(i));
  os << "\n";
  return os.str();
}

int cmd_homology(const Cfg& cfg) {
  ArrangementLattice l = build_lattice(load(cfg));
  Guards g = guards_of(cfg);
  VerifyMode m = mode_of(cfg);
  auto sheaves = select_sheaves(cfg, l);
  const bool do_cell = m != VerifyMode::sheaf;
  const bool do_sheaf = m != VerifyMode::cellular;

  std::optional<BooleanCover> cover;
  if (do_cell) cover = boolean_cover(l.lat, g);

  std::map<int, BettiTable> cell_rows, sheaf_rows;
  Json dump_cx = Json::array(), dump_sh = Json::array();
  int max_i = 0;
  int pseudo_j = 0;
  for (auto& [j, f] : sheaves) {
    const int key = j >= 0 ? j : pseudo_j++;
    if (!cfg.dump_sheaf.empty())
      dump_sh.push_back(Json{{"j", j}, {"sheaf", sheaf_to_json(f)}});
    if (do_cell) {
      Sheaf ft = induced_sheaf(f, l.lat, *cover);
      ChainComplex c = cellular_complex(cover->b, ft, cfg.with_minimum);
      cell_rows[key] = betti(c);
      if (!cfg.dump_complex.empty())
        dump_cx.push_back(
            Json{{"route", "cellular"}, {"j", j}, {"complex", complex_to_json(c)}});
      max_i = std::max(max_i, cell_rows[key].degree_bound());
    }
    if (do_sheaf) {
      ChainComplex c = order_complex(restrict_sheaf(f, remove_minimum(l.lat)), g);
      sheaf_rows[key] = betti(c);
      if (!cfg.dump_complex.empty())
        dump_cx.push_back(
            Json{{"route", "sheaf"}, {"j", j}, {"complex", complex_to_json(c)}});
      max_i = std::max(max_i, sheaf_rows[key].degree_bound());
    }
  }
  CharPoly cell_euler, sheaf_euler;
  for (auto& [j, t] : cell_rows) cell_euler.add_term(j, t.euler());
  for (auto& [j, t] : sheaf_rows) sheaf_euler.add_term(j, t.euler());

  if (!cfg.dump_complex.empty())
    std::ofstream(cfg.dump_complex) << Json{{"complexes", dump_cx}}.dump(2)
                                    << "\n";
  if (!cfg.dump_sheaf.empty())
    std::ofstream(cfg.dump_sheaf) << Json{{"sheaves", dump_sh}}.dump(2)
                                  << "\n";

  if (cfg.format == "json") {
    Json out;
    out["arrangement"] = arrangement_to_json(l.arr);
    out["sheaf"] = cfg.sheaf;
    if (do_cell) {
      Json rows = Json::object();
      for (auto& [j, t] : cell_rows)
        rows[std::to_string(j)] = betti_to_json(t);
      out["cellular"] = rows;
      out["cellular_with_minimum"] = cfg.with_minimum;
      out["cellular_graded_euler"] = cell_euler.to_string("q");
    }
    if (do_sheaf) {
      Json rows = Json::object();
      for (auto& [j, t] : sheaf_rows)
        rows[std::to_string(j)] = betti_to_json(t);
      out["sheaf_homology"] = rows;
      out["sheaf_graded_euler"] = sheaf_euler.to_string("q");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (do_cell) {
    std::cout << "cellular homology of the Boolean cover"
              << (cfg.with_minimum ? "" : " minus minimum") << ":\n"
              << render_table(cell_rows, max_i)
              << "graded euler: " << cell_euler.to_string("q") << "\n";
  }
  if (do_sheaf) {
    std::cout << "sheaf homology of L minus minimum:\n"
              << render_table(sheaf_rows, max_i)
              << "graded euler: " << sheaf_euler.to_string("q") << "\n";
  }
  return 0;
}

int cmd_verify(const Cfg& cfg) {
  Arrangement arr = load(cfg);
  int max_j = -1;
  if (cfg.sheaf.rfind("exterior:", 0) == 0 && cfg.sheaf != "exterior:all") {
    try {
      max_j = std::stoi(cfg.sheaf.substr(9));
    } catch (const std::exception&) {
      throw ValidationError("input: bad --sheaf '" + cfg.sheaf + "'");
    }
  }
  VerificationReport rep = verify(arr, mode_of(cfg), max_j, guards_of(cfg));
  if (cfg.format == "json")
    std::cout << report_to_json(rep).dump(2) << "\n";
  else
    std::cout << rep.to_table();
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sheaf and cellular homology of hyperplane "
               "arrangement intersection lattices"};
  app.require_subcommand(1);
  Cfg cfg;
  auto* c_lattice = app.add_subcommand("lattice", "intersection lattice summary");
  auto* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomials");
  auto* c_homology = app.add_subcommand("homology", "bigraded Betti tables");
  auto* c_verify = app.add_subcommand("verify", "predicted vs computed suite");
  for (auto* c : {c_lattice, c_charpoly, c_homology, c_verify})
    add_common(c, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (c_lattice->parsed()) return cmd_lattice(cfg);
    if (c_charpoly->parsed()) return cmd_charpoly(cfg);
    if (c_homology->parsed()) return cmd_homology(cfg);
    return cmd_verify(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
