#include "eisen/congruence.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eisen {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<Int> parse_int_list(const std::string& cell) {
  std::vector<Int> out;
  std::stringstream ss(cell);
  std::string tok;
  while (ss >> tok) out.emplace_back(tok.c_str());
  return out;
}

long eval_poly_mod(const std::vector<Int>& poly, long x, long q) {
  long acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = static_cast<long>((static_cast<__int128>(acc) * x) % q);
    long c = static_cast<long>(mod_positive(*it, Int(q)));
    acc = (acc + c) % q;
  }
  return acc;
}

}  // namespace

EigenTable parse_eigen_table_text(const std::string& text, const std::string& label) {
  EigenTable table;
  table.source = label;
  std::stringstream ss(text);
  std::string line;
  bool header = true;
  long ncoeff = -1;
  long lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells = split(line, ',');
    if (header) {
      if (cells.size() < 3 || trim(cells.front()) != "ell" || trim(cells.back()) != "minpoly")
        throw std::runtime_error(label + ": malformed header (want ell,coeff0,...,minpoly)");
      ncoeff = static_cast<long>(cells.size()) - 2;
      header = false;
      continue;
    }
    if (static_cast<long>(cells.size()) != ncoeff + 2)
      throw std::runtime_error(label + ":" + std::to_string(lineno) + ": wrong field count");
    EigenRow row;
    try {
      row.ell = std::stol(trim(cells[0]));
    } catch (...) {
      throw std::runtime_error(label + ":" + std::to_string(lineno) + ": bad prime field");
    }
    for (long i = 0; i < ncoeff; ++i) {
      std::string t = trim(cells[1 + i]);
      if (t.empty()) t = "0";
      try {
        row.poly.emplace_back(t.c_str());
      } catch (...) {
        throw std::runtime_error(label + ":" + std::to_string(lineno) + ": bad coefficient");
      }
    }
    row.minpoly = parse_int_list(trim(cells.back()));
    if (row.minpoly.size() < 2 || row.minpoly.back() == 0)
      throw std::runtime_error(label + ":" + std::to_string(lineno) +
                               ": minimal polynomial must have positive degree and nonzero lead");
    long deg = -1;
    for (size_t i = 0; i < row.poly.size(); ++i)
      if (row.poly[i] != 0) deg = static_cast<long>(i);
    if (deg >= static_cast<long>(row.minpoly.size()) - 1)
      throw std::runtime_error(label + ":" + std::to_string(lineno) +
                               ": eigenvalue degree not below the minimal polynomial degree");
    if (!table.rows.empty() && table.rows.front().minpoly != row.minpoly)
      throw std::runtime_error(label + ":" + std::to_string(lineno) +
                               ": minimal polynomial differs between rows");
    for (const EigenRow& prev : table.rows)
      if (prev.ell == row.ell)
        throw std::runtime_error(label + ":" + std::to_string(lineno) + ": duplicate prime");
    table.rows.push_back(std::move(row));
  }
  return table;
}

EigenTable parse_eigen_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open eigenvalue table");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_eigen_table_text(buf.str(), path);
}

bool CongruenceReport::all_pass() const {
  for (const CongruenceRow& r : rows)
    if (!r.pass) return false;
  return true;
}

CongruenceReport congruence_check(const EigenTable& table, const DirichletCharacter& chi,
                                  long q, long N) {
  if (q < 3 || !is_prime(q)) throw std::domain_error("congruence_check: q must be an odd prime");
  if ((6 * N) % q == 0) throw std::domain_error("congruence_check: q must not divide 6N");
  long fchi = chi.conductor();
  CongruenceReport rep;
  rep.q = q;
  if (table.rows.empty()) {
    rep.vacuous = true;
    return rep;
  }

  // residue-degree-one prime above q: a root of the table's generator
  const std::vector<Int>& minpoly = table.rows.front().minpoly;
  for (long r = 0; r < q && rep.root < 0; ++r)
    if (eval_poly_mod(minpoly, r, q) == 0) rep.root = r;
  if (rep.root < 0)
    throw std::domain_error("congruence_check: minimal polynomial has no root mod q");

  // realize chibar: the character order must divide q-1 so its values
  // reduce into F_q through a root of unity of the right order
  long n = chi.order();
  if ((q - 1) % n != 0)
    throw std::domain_error("congruence_check: character order does not divide q-1");
  long omega = 0;
  for (long r = 2; r < q && omega == 0; ++r) {
    // r of exact order n
    bool ok = power_mod(r, n, q) == 1;
    for (long p : prime_factors(n))
      ok = ok && power_mod(r, n / p, q) != 1;
    if (ok) omega = r;
  }
  if (n == 1) omega = 1;

  auto chibar = [&](long x) -> long {
    auto k = chi.value_index(Int(x));
    if (!k) return 0;
    return power_mod(omega, *k, q);
  };

  for (const EigenRow& row : table.rows) {
    CongruenceRow out;
    out.ell = row.ell;
    long a = eval_poly_mod(row.poly, rep.root, q);
    long ell = row.ell;
    std::ostringstream det;
    det << "a=" << a;
    if (ell == q) {
      long want = inverse_mod(chibar(ell), q);
      out.pass = (a == want);
      out.branch = "at-q";
      det << " want " << want;
    } else if (N % ell != 0) {
      long c = chibar(ell);
      long want = (inverse_mod(c, q) + static_cast<long>((static_cast<__int128>(ell) * c) % q)) % q;
      out.pass = (a == want);
      out.branch = "coprime";
      det << " want " << want;
    } else {
      bool square = (N / ell) % ell == 0;
      std::vector<std::pair<long, std::string>> allowed;
      if (square) allowed.emplace_back(0, "zero");
      if (fchi % ell == 0) {
        // ramified in the character: only zero remains
        allowed.clear();
        allowed.emplace_back(0, "zero");
      } else {
        long c = chibar(ell);
        allowed.emplace_back(inverse_mod(c, q), "unit-root");
        allowed.emplace_back(static_cast<long>((static_cast<__int128>(ell) * c) % q), "ell-root");
      }
      out.pass = false;
      det << " allowed {";
      for (size_t i = 0; i < allowed.size(); ++i) {
        det << (i ? "," : "") << allowed[i].first;
        if (allowed[i].first == a && !out.pass) {
          out.pass = true;
          out.branch = allowed[i].second;
        }
      }
      det << "}";
      if (!out.pass) out.branch = square ? "level-square" : "level-exact";
    }
    out.detail = det.str();
    rep.rows.push_back(std::move(out));
  }
  return rep;
}

}  // namespace eisen
