#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gibbs/error.hpp"
#include "gibbs/format.hpp"
#include "gibbs/special.hpp"

namespace gibbs::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::overshoot: return "overshoot";
    case Command::conjecture: return "conjecture";
    case Command::triple_sum: return "triple-sum";
    case Command::asymptotics: return "asymptotics";
    case Command::roots: return "roots";
  }
  return "?";
}

FamilySpec family_of(const RunConfig& c) {
  if (c.family == "laguerre") return FamilySpec::laguerre(c.alpha);
  if (c.family == "hermite") return FamilySpec::hermite();
  return FamilySpec::gegenbauer(*c.lambda);
}

std::vector<ConjecturePath> paths_of(const std::string& via) {
  if (via == "direct") return {ConjecturePath::direct_sum};
  if (via == "carlitz") return {ConjecturePath::carlitz};
  return {ConjecturePath::direct_sum, ConjecturePath::carlitz};
}

Table overshoot_rows(const RunConfig& c) {
  const FamilySpec spec = family_of(c);
  std::vector<GibbsRow> rows;
  for (unsigned n : c.n) {
    switch (spec.family()) {
      case Family::laguerre: rows.push_back(laguerre_overshoot(c.alpha, n, c.digits)); break;
      case Family::hermite: rows.push_back(hermite_overshoot(n, c.digits)); break;
      default: rows.push_back(gegenbauer_overshoot(*c.lambda, n, c.digits)); break;
    }
  }
  return overshoot_table(rows);
}

Table conjecture_rows(const RunConfig& c) {
  std::vector<ConjectureRow> rows;
  for (unsigned n : c.n)
    for (ConjecturePath path : paths_of(c.via))
      rows.push_back(conjecture_at_1(c.alpha, n, c.digits, path));
  return conjecture_table(rows);
}

Table triple_sum_rows(const RunConfig& c) {
  Table t{{"J", "digits", "partial", "target", "error"}, {}};
  const int w = c.digits + 10;
  const RealMP target = RealMP(1L, w) - euler_e(w) / RealMP(2L, w);
  for (unsigned J : c.n) {
    const RealMP partial = triple_sum_partial(J, w);
    t.rows.push_back({std::to_string(J), std::to_string(c.digits), format_real(partial, c.digits),
                      format_real(target, c.digits),
                      format_real(abs(partial - target), c.digits)});
  }
  return t;
}

Table asymptotic_rows(const RunConfig& c) {
  const AsymptoticKind kind = parse_asymptotic_kind(c.what);
  std::vector<AsymptoticReport> rows;
  for (unsigned n : c.n) rows.push_back(asymptotic_compare(kind, {c.alpha, n, c.x}, c.digits));
  return asymptotic_table(rows);
}

Table root_rows(const RunConfig& c) {
  const FamilySpec spec = family_of(c);
  Table t{{"family", "param", "n", "digits", "side", "root", "width"}, {}};
  for (unsigned n : c.n) {
    for (const RootEnclosure& r : critical_points(spec, n, c.digits)) {
      t.rows.push_back({spec.name(), spec.param_string(), std::to_string(n),
                        std::to_string(c.digits), to_string(r.side),
                        format_real(r.refined, c.digits),
                        format_real(RealMP(r.high - r.low, 20), 6)});
    }
  }
  return t;
}

void write_json(const RunConfig& c, const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = command_name(c.command);
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (r[i].empty())
        obj[table.columns[i]] = nullptr;
      else
        obj[table.columns[i]] = r[i];
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::pole:
    case ErrorKind::degenerate:
    case ErrorKind::ill_conditioned: return kDomain;
    default: return kNumerical;
  }
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.digits < 15)
    throw UsageError("--digits must be at least 15, got " + std::to_string(c.digits));
  if (c.n.empty()) throw UsageError("--n needs at least one value");
  if (!std::is_sorted(c.n.begin(), c.n.end()) ||
      std::adjacent_find(c.n.begin(), c.n.end()) != c.n.end())
    throw UsageError("--n values must be strictly ascending");
  if (c.family != "laguerre" && c.family != "hermite" && c.family != "gegenbauer")
    throw UsageError("--family must be laguerre, hermite or gegenbauer, got '" + c.family + "'");
  if (c.family == "gegenbauer" && !c.lambda &&
      (c.command == Command::overshoot || c.command == Command::roots))
    throw UsageError("--family gegenbauer needs --lambda");
  if (c.via != "direct" && c.via != "carlitz" && c.via != "both")
    throw UsageError("--via must be direct, carlitz or both, got '" + c.via + "'");
  if (c.command == Command::asymptotics) {
    try {
      parse_asymptotic_kind(c.what);
    } catch (const Error& e) {
      throw UsageError(std::string("--what: ") + e.what());
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Table table;
    switch (config.command) {
      case Command::overshoot: table = overshoot_rows(config); break;
      case Command::conjecture: table = conjecture_rows(config); break;
      case Command::triple_sum: table = triple_sum_rows(config); break;
      case Command::asymptotics: table = asymptotic_rows(config); break;
      case Command::roots: table = root_rows(config); break;
    }
    std::ostringstream buffer;
    if (config.format == Format::json)
      write_json(config, table, buffer);
    else
      write_csv(table, buffer);

    if (config.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw UsageError("cannot open --output file '" + config.output + "'");
      file << buffer.str();
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "gibbs: usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "gibbs: error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision Gibbs overshoot experiments for orthogonal polynomial expansions",
               "gibbs"};
  app.require_subcommand(1);

  RunConfig config;
  std::string alpha = "0", lambda, x = "1", format = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Comma separated degrees (half-degree N for hermite and gegenbauer)")
        ->delimiter(',')
        ->required();
    sub->add_option("--digits", config.digits, "Working precision in decimal digits (>= 15)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", config.output, "Write the table to this file instead of stdout");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "laguerre, hermite or gegenbauer");
    sub->add_option("--alpha", alpha, "Laguerre parameter, rational (e.g. -1/2)");
    sub->add_option("--lambda", lambda, "Gegenbauer parameter, rational");
  };

  CLI::App* overshoot = app.add_subcommand("overshoot", "Overshoot at the critical points next to the jump");
  add_family(overshoot);
  add_common(overshoot);

  CLI::App* roots = app.add_subcommand("roots", "Certified critical points only");
  add_family(roots);
  add_common(roots);

  CLI::App* conjecture = app.add_subcommand("conjecture", "Laguerre partial sums of the step at x = 1");
  conjecture->add_option("--alpha", alpha, "Laguerre parameter, rational");
  conjecture->add_option("--via", config.via, "direct, carlitz or both");
  add_common(conjecture);

  CLI::App* triple = app.add_subcommand("triple-sum", "Partial sums of the alpha = 0 triple sum; --n lists J");
  add_common(triple);

  CLI::App* asym = app.add_subcommand("asymptotics", "Relative error of the classical asymptotic forms");
  asym->add_option("--what", config.what, "glp_sine, hermite_sine, dn_alpha or final_derivative")
      ->required();
  asym->add_option("--alpha", alpha, "Laguerre parameter, rational");
  asym->add_option("--x", x, "Evaluation point, rational");
  add_common(asym);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (overshoot->parsed()) config.command = Command::overshoot;
  if (roots->parsed()) config.command = Command::roots;
  if (conjecture->parsed()) config.command = Command::conjecture;
  if (triple->parsed()) config.command = Command::triple_sum;
  if (asym->parsed()) config.command = Command::asymptotics;
  config.format = format == "json" ? Format::json : Format::csv;

  try {
    config.alpha = parse_rational(alpha);
    if (!lambda.empty()) config.lambda = parse_rational(lambda);
    config.x = parse_rational(x);
  } catch (const Error& e) {
    err << "gibbs: usage error: " << e.what() << '\n';
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace gibbs::cli
