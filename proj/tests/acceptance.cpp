// Runs every acceptance criterion and prints one [PASS]/[FAIL] line each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "gibbs/error.hpp"
#include "gibbs/format.hpp"
#include "gibbs/gibbs_run.hpp"
#include "gibbs/special.hpp"
#include "support/exact_properties.hpp"
#include "support/oracles.hpp"

namespace {

using namespace gibbs;

// Published 300-digit critical points for alpha = -1/2, n = 200.
const char* const kReferenceXPlus =
    "1.23468886080318246205175640076637647798323949845707164146855"
    "181967104846688402531629527949568958184725501099221878799937"
    "065607066281702792065904979826237243575329891028544691448117"
    "4201139582708536428948881791368482448438408329248865333917731"
    "41854062545324039789475636307588151666472440252073636724439";
const char* const kReferenceXMinus =
    "0.7900542198210110735737933107310435096052638050001253395683377"
    "0261682371463909575893541126569621731715791818914620650296428"
    "3864217580809768632697488288862041562201358460410751672195826"
    "5866620088384634191041289583048943312518954134983229273045299"
    "31039866409623037748110975121280531459368332355928748953";

struct Verdict {
  bool pass;
  std::string detail;
};

using CsvRows = std::vector<std::map<std::string, std::string>>;

// Runs the CLI in-process and returns the CSV rows keyed by column.
CsvRows run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"gibbs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) throw std::runtime_error("gibbs exited with " + std::to_string(code) + ": " + err.str());
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  const std::vector<std::string> columns = parse_csv_line(line);
  CsvRows rows;
  while (std::getline(in, line)) {
    const std::vector<std::string> cells = parse_csv_line(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < columns.size() && i < cells.size(); ++i) row[columns[i]] = cells[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string significant_digits(const std::string& decimal) {
  std::string s;
  for (char c : decimal)
    if (c >= '0' && c <= '9') s += c;
  const auto first = s.find_first_not_of('0');
  return first == std::string::npos ? "" : s.substr(first);
}

int leading_agreement(const std::string& a, const std::string& b) {
  const std::string da = significant_digits(a), db = significant_digits(b);
  std::size_t k = 0;
  while (k < da.size() && k < db.size() && da[k] == db[k]) ++k;
  return static_cast<int>(k);
}

std::string fmt(const RealMP& x, int sig = 8) { return x.to_string(sig); }

// Criteria 1-3 share one 300-digit run.
const std::map<std::string, std::string>& reference_run() {
  static const CsvRows rows =
      run_cli({"overshoot", "--family", "laguerre", "--alpha=-1/2", "--n", "200", "--digits", "300"});
  return rows.at(0);
}

Verdict check_roots_reproduced() {
  const auto& row = reference_run();
  const int plus = leading_agreement(row.at("x_plus"), kReferenceXPlus);
  const int minus = leading_agreement(row.at("x_minus"), kReferenceXMinus);
  return {plus >= 250 && minus >= 250,
          "x_plus agrees to " + std::to_string(plus) + " digits, x_minus to " + std::to_string(minus)};
}

Verdict check_overshoot_in_range() {
  const RealMP v = RealMP::parse(reference_run().at("overshoot"), 300);
  const bool ok = RealMP::parse("1.1788", 30) <= v && v <= RealMP::parse("1.1828", 30);
  return {ok, "overshoot = " + fmt(v, 12)};
}

Verdict check_u_near_pi() {
  const RealMP up = RealMP::parse(reference_run().at("u_plus"), 300);
  const RealMP um = RealMP::parse(reference_run().at("u_minus"), 300);
  const RealMP p = pi(300), tol = RealMP::parse("0.003", 30);
  const bool ok = abs(up - p) < tol && abs(um + p) < tol;
  return {ok, "u_plus = " + fmt(up) + ", u_minus = " + fmt(um)};
}

Verdict check_conjecture_table() {
  // alpha, n, printed value (truncated to 10 digits)
  const std::vector<std::tuple<std::string, unsigned, std::string>> printed = {
      {"0", 100, "0.4973032559"}, {"0", 1000, "0.4994002364"}, {"1", 100, "0.5039460855"},
      {"1", 1000, "0.5004991579"}, {"2", 100, "0.5256199161"}, {"2", 1000, "0.5096998025"}};
  std::map<std::string, CsvRows> by_alpha;
  for (const char* a : {"0", "1", "2"})
    by_alpha[a] = run_cli({"conjecture", "--alpha", a, "--n", "100,1000", "--digits", "30"});
  bool ok = true;
  std::string detail;
  for (const auto& [alpha, n, want] : printed) {
    const CsvRows& rows = by_alpha.at(alpha);
    const std::string got = rows.at(n == 100 ? 0 : 1).at("value_at_1");
    // Compare in units of the last printed place.
    const BigInt scale("10000000000");
    const Rational g = RealMP::parse(got, 30).to_rational() * Rational(scale);
    const Rational w = parse_rational(want) * Rational(scale);
    BigInt g_trunc;
    mpz_fdiv_q(g_trunc.get_mpz_t(), g.get_num_mpz_t(), g.get_den_mpz_t());
    const BigInt diff = abs(BigInt(g_trunc - w.get_num()));
    if (w.get_den() != 1 || diff > 1) ok = false;
    detail += "(" + alpha + "," + std::to_string(n) + ")=" + got.substr(0, 14) + " ";
  }
  return {ok, detail};
}

Verdict check_gamma_reference() {
  const RealMP g = gibbs_constant(30);
  const int w = 45;
  const RealMP quad = RealMP(2L, w) * oracle::sine_integral_at_pi(w) / pi(w);
  const double agree = agreeing_digits(g, quad);
  const std::string leading = gibbs_constant(10).to_string(4);
  return {agree >= 25 && leading == "1.179",
          "gibbs_constant(30) = " + g.to_string(30) + ", quadrature agrees to " +
              std::to_string(static_cast<int>(agree)) + " digits, leading " + leading};
}

Verdict check_property_suite() {
  using props::Failures;
  std::vector<std::pair<std::string, Failures>> parts;
  parts.emplace_back("orthogonality", props::laguerre_orthogonality({0, 1, 2}, 10));
  parts.emplace_back("hermite norms", props::hermite_orthogonality(12));
  parts.emplace_back("derivative", props::laguerre_derivative({Rational(-1, 2), 0, Rational(1, 2), 1, 2}, 30));
  parts.emplace_back("cd divisibility", props::cd_divisibility({Rational(-1, 2), 0, 1, 2}, 50));
  parts.emplace_back("carlitz", props::carlitz({0, 1, 2}, 8));
  parts.emplace_back("hermite recurrence", props::hermite_recurrence(40));
  parts.emplace_back("hermite at 0", props::hermite_even_at_zero(20));
  parts.emplace_back("sturm-liouville", props::laguerre_sturm_liouville({Rational(-1, 2), 0, 1, 2}, 30));
  parts.emplace_back("gegenbauer derivative", props::gegenbauer_derivative({Rational(1, 2), 1, Rational(3, 2)}, 10));
  bool ok = true;
  std::string detail;
  for (const auto& [name, failures] : parts) {
    if (!failures.empty()) {
      ok = false;
      detail += name + ": " + failures.front() + "; ";
    }
  }
  if (ok) detail = std::to_string(parts.size()) + " exact identity groups hold";
  return {ok, detail};
}

Verdict check_universality() {
  const int p = 80;
  const RealMP tol = RealMP::parse("0.01", 30);
  struct Family {
    std::string name;
    std::function<GibbsRow(unsigned)> run;
    unsigned small, large;
  };
  const std::vector<Family> families = {
      {"laguerre(-1/2)", [&](unsigned n) { return laguerre_overshoot(Rational(-1, 2), n, p); }, 25, 400},
      {"laguerre(0)", [&](unsigned n) { return laguerre_overshoot(0, n, p); }, 25, 400},
      {"hermite", [&](unsigned N) { return hermite_overshoot(N, p); }, 12, 200},
      {"gegenbauer(1/2)", [&](unsigned N) { return gegenbauer_overshoot(Rational(1, 2), N, p); }, 12, 200}};
  bool ok = true;
  std::string detail;
  for (const auto& f : families) {
    const RealMP e_small = *f.run(f.small).gamma_error;
    const RealMP e_large = *f.run(f.large).gamma_error;
    const bool this_ok = e_large < tol && e_large < e_small;
    ok = ok && this_ok;
    detail += f.name + " " + fmt(e_small, 3) + "->" + fmt(e_large, 3) + (this_ok ? "" : " (!)") + "; ";
  }
  return {ok, detail};
}

Verdict check_triple_sum() {
  const int p = 30;
  const RealMP target = RealMP(1L, p) - euler_e(p) / RealMP(2L, p);
  const RealMP e100 = abs(triple_sum_partial(100, p) - target);
  const RealMP e1000 = abs(triple_sum_partial(1000, p) - target);
  return {e1000 < e100, "error " + fmt(e100, 4) + " at J=100, " + fmt(e1000, 4) + " at J=1000"};
}

Verdict check_two_paths() {
  const int p = 300;
  bool ok = true;
  double worst = p;
  for (const Rational& alpha : {Rational(-1, 2), Rational(0)}) {
    for (unsigned n : {10u, 50u, 200u}) {
      const GibbsRow row = laguerre_overshoot(alpha, n, p);
      const ExpansionSeries s = laguerre_coefficients(alpha, n);
      const double plus = agreeing_digits(row.value_plus, partial_sum_eval(s, row.x_plus.refined, p));
      const double minus = agreeing_digits(*row.value_minus, partial_sum_eval(s, row.x_minus->refined, p));
      worst = std::min({worst, plus, minus});
      if (plus < p - 10 || minus < p - 10) ok = false;
    }
  }
  return {ok, "worst agreement " + std::to_string(static_cast<int>(worst)) + " of " + std::to_string(p) +
                  " digits"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 root reproduction (alpha=-1/2, n=200, 300 digits)", check_roots_reproduced},
      {"2 overshoot in [1.1788, 1.1828]", check_overshoot_in_range},
      {"3 u-coordinates within 0.003 of +-pi", check_u_near_pi},
      {"4 conjecture table values", check_conjecture_table},
      {"5 Gibbs constant against quadrature", check_gamma_reference},
      {"6 exact property suite", check_property_suite},
      {"7 universality at desk scale", check_universality},
      {"8 triple-sum convergence", check_triple_sum},
      {"9 two-path agreement", check_two_paths},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << " (" << timing << ")"
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
