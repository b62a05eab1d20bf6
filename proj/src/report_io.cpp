#include "eisen/report_io.hpp"

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace eisen {

Json cycnum_to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const Rat& r : x.coeffs())
    coeffs.push_back(Json::array({numerator(r).str(), denominator(r).str()}));
  return Json{{"ring", x.ring()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  long m = j.at("ring").get<long>();
  std::vector<Rat> cs;
  for (const auto& pair : j.at("coeffs")) {
    Int num(pair.at(0).get<std::string>().c_str());
    Int den(pair.at(1).get<std::string>().c_str());
    Rat r(num);
    r /= Rat(den);
    cs.push_back(r);
  }
  return CycNum(m, std::move(cs));
}

Json report_to_json(const CuspidalReport& r) {
  Json j;
  j["level"] = r.level;
  j["chi"] = {{"modulus", r.chi_conductor},
              {"generators", UnitGroup::get(r.chi_conductor).gens},
              {"exponents", r.chi_exponents},
              {"order", r.chi_order},
              {"index", r.chi_index}};
  j["mbar"] = r.mbar;
  j["lbar"] = r.lbar;
  j["series_level"] = r.series_level;
  Json divisor = Json::array();
  for (size_t i = 0; i < r.divisor.cusps.size(); ++i) {
    const Cusp& c = r.divisor.cusps[i];
    Json row;
    row["d"] = c.d;
    row["x"] = c.x;
    row["width"] = c.width;
    row["field_conductor"] = c.field_conductor;
    row["sigma"] = Json::array({Json::array({c.sigma[0][0].str(), c.sigma[0][1].str()}),
                                Json::array({c.sigma[1][0].str(), c.sigma[1][1].str()})});
    row["coeff"] = cycnum_to_json(r.divisor.coeff[i]);
    divisor.push_back(std::move(row));
  }
  j["divisor"] = std::move(divisor);
  Json gens = Json::array();
  for (const CycNum& g : r.ideal_gens) gens.push_back(cycnum_to_json(g));
  j["ideal_generators"] = std::move(gens);
  j["cuspidal_order"] = r.cusp_order.str();
  j["period_order"] = r.lattice_order.str();
  Json primes = Json::array();
  for (const Int& p : r.eisenstein_primes) primes.push_back(p.str());
  j["eisenstein_primes"] = std::move(primes);
  Json eigen = Json::array();
  for (const EigenStatus& s : r.eigen)
    eigen.push_back({{"ell", s.ell}, {"branch", s.branch}, {"checked", s.checked}, {"pass", s.pass}});
  j["eigen"] = std::move(eigen);
  j["residue_zero"] = r.residue_zero;
  j["constant_two_path"] = r.constant_two_path;
  j["orders_match"] = r.orders_match;
  j["error"] = r.error;
  return j;
}

CuspidalReport report_from_json(const Json& j) {
  CuspidalReport r;
  r.level = j.at("level").get<long>();
  r.chi_conductor = j.at("chi").at("modulus").get<long>();
  r.chi_index = j.at("chi").at("index").get<long>();
  r.chi_order = j.at("chi").at("order").get<long>();
  r.chi_exponents = j.at("chi").at("exponents").get<std::vector<long>>();
  r.mbar = j.at("mbar").get<long>();
  r.lbar = j.at("lbar").get<long>();
  r.series_level = j.at("series_level").get<long>();
  r.divisor.level = r.level;
  for (const auto& row : j.at("divisor")) {
    Cusp c;
    c.level = r.level;
    c.d = row.at("d").get<long>();
    c.x = row.at("x").get<long>();
    c.width = row.at("width").get<long>();
    c.field_conductor = row.at("field_conductor").get<long>();
    c.sigma = {{{Int(row.at("sigma").at(0).at(0).get<std::string>().c_str()),
                 Int(row.at("sigma").at(0).at(1).get<std::string>().c_str())},
                {Int(row.at("sigma").at(1).at(0).get<std::string>().c_str()),
                 Int(row.at("sigma").at(1).at(1).get<std::string>().c_str())}}};
    r.divisor.cusps.push_back(std::move(c));
    r.divisor.coeff.push_back(cycnum_from_json(row.at("coeff")));
  }
  for (const auto& g : j.at("ideal_generators")) r.ideal_gens.push_back(cycnum_from_json(g));
  r.cusp_order = Int(j.at("cuspidal_order").get<std::string>().c_str());
  r.lattice_order = Int(j.at("period_order").get<std::string>().c_str());
  for (const auto& p : j.at("eisenstein_primes"))
    r.eisenstein_primes.emplace_back(p.get<std::string>().c_str());
  for (const auto& e : j.at("eigen")) {
    EigenStatus s;
    s.ell = e.at("ell").get<long>();
    s.branch = e.at("branch").get<std::string>();
    s.checked = e.at("checked").get<bool>();
    s.pass = e.at("pass").get<bool>();
    r.eigen.push_back(std::move(s));
  }
  r.residue_zero = j.at("residue_zero").get<bool>();
  r.constant_two_path = j.at("constant_two_path").get<bool>();
  r.orders_match = j.at("orders_match").get<bool>();
  r.error = j.at("error").get<std::string>();
  return r;
}

std::string render_scan_json(const ScanConfig& cfg, const std::vector<CuspidalReport>& reports) {
  Json j;
  j["version"] = 1;
  j["config"] = {{"level", cfg.level},
                 {"precision", cfg.precision},
                 {"prime_bound", cfg.prime_bound},
                 {"format", cfg.format}};
  Json rs = Json::array();
  for (const CuspidalReport& r : reports) rs.push_back(report_to_json(r));
  j["reports"] = std::move(rs);
  return j.dump(2) + "\n";
}

namespace {

std::string cyc_csv(const CycNum& x) {
  std::ostringstream os;
  os << x.ring() << ":";
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (i) os << ";";
    os << numerator(x.coeffs()[i]).str() << "/" << denominator(x.coeffs()[i]).str();
  }
  return os.str();
}

}  // namespace

std::string render_scan_csv(const ScanConfig& cfg, const std::vector<CuspidalReport>& reports) {
  std::ostringstream os;
  os << "kind,level,chi_conductor,chi_index,mbar,lbar,d,x,width,coeff,"
        "cuspidal_order,period_order,eisenstein_primes,checks,error\n";
  (void)cfg;
  for (const CuspidalReport& r : reports) {
    for (size_t i = 0; i < r.divisor.cusps.size(); ++i) {
      const Cusp& c = r.divisor.cusps[i];
      os << "cusp," << r.level << "," << r.chi_conductor << "," << r.chi_index << ","
         << r.mbar << "," << r.lbar << "," << c.d << "," << c.x << "," << c.width << ","
         << cyc_csv(r.divisor.coeff[i]) << ",,,,,\n";
    }
    os << "summary," << r.level << "," << r.chi_conductor << "," << r.chi_index << ","
       << r.mbar << "," << r.lbar << ",,,,," << r.cusp_order.str() << ","
       << r.lattice_order.str() << ",";
    for (size_t i = 0; i < r.eisenstein_primes.size(); ++i)
      os << (i ? " " : "") << r.eisenstein_primes[i].str();
    os << "," << (r.all_checks_pass() ? "pass" : "fail") << "," << r.error << "\n";
  }
  return os.str();
}

Json congruence_to_json(const CongruenceReport& r) {
  Json j;
  j["q"] = r.q;
  j["root"] = r.root;
  j["vacuous"] = r.vacuous;
  Json rows = Json::array();
  for (const CongruenceRow& row : r.rows)
    rows.push_back({{"ell", row.ell}, {"pass", row.pass}, {"branch", row.branch}, {"detail", row.detail}});
  j["rows"] = std::move(rows);
  j["all_pass"] = r.all_pass();
  return j;
}

void emit(const ScanConfig& cfg, const std::vector<CuspidalReport>& reports) {
  std::string body = cfg.format == "csv" ? render_scan_csv(cfg, reports)
                                         : render_scan_json(cfg, reports);
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::runtime_error(cfg.out_path + ": cannot open for writing");
  out << body;
  if (!out) throw std::runtime_error(cfg.out_path + ": write failed");
}

std::string qexpansion_to_json_string(const QExpansion& g) {
  Json j;
  j["level"] = g.level();
  j["denominator"] = g.den();
  j["precision"] = g.nmax();
  j["ring"] = g.ring();
  j["rider"] = cycnum_to_json(g.rider());
  Json coeffs = Json::array();
  for (long i = 0; i <= g.nmax(); ++i) {
    if (g.coeff_index(i).is_zero()) continue;
    Json row;
    row["exponent_num"] = i;
    row["exponent_den"] = g.den();
    row["coeff"] = cycnum_to_json(g.coeff_index(i));
    coeffs.push_back(std::move(row));
  }
  j["coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

}  // namespace eisen
