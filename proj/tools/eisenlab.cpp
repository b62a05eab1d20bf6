// eisenlab: exact scanner for weight-two Eisenstein series, cusp data and
// cuspidal subgroup orders. Exit code 0 on a fully passing run, 1 when any
// in-report check fails, 2 on usage or I/O errors.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "eisen/report_io.hpp"

using namespace eisen;

namespace {

int cmd_scan(const ScanConfig& cfg) {
  std::vector<CuspidalReport> reports = scan(cfg);
  emit(cfg, reports);
  for (const CuspidalReport& r : reports)
    if (!r.all_checks_pass()) return 1;
  return 0;
}

int cmd_cusps(long N) {
  Json out = Json::array();
  for (const Cusp& c : enumerate_cusps(N)) {
    Json row;
    row["d"] = c.d;
    row["x"] = c.x;
    row["width"] = c.width;
    row["field_conductor"] = c.field_conductor;
    row["sigma"] = Json::array({Json::array({c.sigma[0][0].str(), c.sigma[0][1].str()}),
                                Json::array({c.sigma[1][0].str(), c.sigma[1][1].str()})});
    out.push_back(std::move(row));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

DirichletCharacter select_character(long conductor, long index) {
  std::vector<DirichletCharacter> prims = primitive_characters(conductor);
  if (index < 0 || index >= static_cast<long>(prims.size()))
    throw std::domain_error("character index out of range: conductor " + std::to_string(conductor) +
                            " has " + std::to_string(prims.size()) + " primitive characters");
  return prims[index];
}

int cmd_expand(long N, long f, long index, long mbar, long lbar, long precision) {
  DirichletCharacter chi = select_character(f, index);
  EisensteinSeries E = build_series(chi, mbar, lbar, precision);
  if (N % E.level != 0)
    throw std::domain_error("series level " + std::to_string(E.level) +
                            " does not divide the requested level");
  std::cout << qexpansion_to_json_string(E.qexp);
  return 0;
}

int cmd_congruence(const std::string& table_path, long N, long q, long f, long index) {
  EigenTable table = parse_eigen_table(table_path);
  DirichletCharacter chi = select_character(f, index);
  CongruenceReport rep = congruence_check(table, chi, q, N);
  std::cout << congruence_to_json(rep).dump(2) << "\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Eisenstein series and cuspidal subgroup scanner"};
  app.require_subcommand(1);

  ScanConfig cfg;
  long chi_conductor = 0, chi_index = 0;
  auto* scan_cmd = app.add_subcommand("scan", "run all admissible configurations for a level");
  scan_cmd->add_option("--level", cfg.level, "odd level N")->required();
  scan_cmd->add_option("--precision", cfg.precision, "q-expansion precision");
  scan_cmd->add_option("--prime-bound", cfg.prime_bound, "largest Hecke prime checked");
  scan_cmd->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--out", cfg.out_path, "output path, - for stdout");
  scan_cmd->add_option("--jobs", cfg.jobs, "parallel configuration jobs");
  auto* fopt = scan_cmd->add_option("--chi-conductor", chi_conductor, "restrict to one conductor");
  scan_cmd->add_option("--chi-index", chi_index, "restrict to one character")->needs(fopt);

  long cusps_level = 0;
  auto* cusps_cmd = app.add_subcommand("cusps", "list the cusps of the level");
  cusps_cmd->add_option("--level", cusps_level, "level N")->required();

  long ex_level = 0, ex_f = 1, ex_i = 0, ex_m = 1, ex_l = 1, ex_prec = 50;
  auto* expand_cmd = app.add_subcommand("expand", "print one series as a q-expansion");
  expand_cmd->add_option("--level", ex_level, "ambient level N")->required();
  expand_cmd->add_option("--chi-conductor", ex_f, "character conductor");
  expand_cmd->add_option("--chi-index", ex_i, "character index");
  expand_cmd->add_option("--mbar", ex_m, "squarefree raising part");
  expand_cmd->add_option("--lbar", ex_l, "squarefree lowering part");
  expand_cmd->add_option("--precision", ex_prec, "q-expansion precision");

  std::string table_path;
  long cg_level = 0, cg_q = 0, cg_f = 1, cg_i = 0;
  auto* cong_cmd = app.add_subcommand("congruence", "check an external eigenvalue table");
  cong_cmd->add_option("--table", table_path, "eigenvalue csv")->required();
  cong_cmd->add_option("--level", cg_level, "level N")->required();
  cong_cmd->add_option("--q", cg_q, "residue characteristic")->required();
  cong_cmd->add_option("--chi-conductor", cg_f, "character conductor");
  cong_cmd->add_option("--chi-index", cg_i, "character index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan_cmd->parsed()) {
      if (*fopt) cfg.chi_conductor = chi_conductor;
      if (scan_cmd->count("--chi-index")) cfg.chi_index = chi_index;
      return cmd_scan(cfg);
    }
    if (cusps_cmd->parsed()) return cmd_cusps(cusps_level);
    if (expand_cmd->parsed()) return cmd_expand(ex_level, ex_f, ex_i, ex_m, ex_l, ex_prec);
    if (cong_cmd->parsed()) return cmd_congruence(table_path, cg_level, cg_q, cg_f, cg_i);
  } catch (const std::exception& e) {
    std::cerr << "eisenlab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
