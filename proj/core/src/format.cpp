#include "gibbs/format.hpp"

#include "gibbs/error.hpp"

namespace gibbs {

std::string format_real(const RealMP& x, int significant) { return x.to_string(significant); }

std::string format_real(const std::optional<RealMP>& x, int significant) {
  return x ? format_real(*x, significant) : std::string();
}

Table overshoot_table(const std::vector<GibbsRow>& rows) {
  Table t{{"family", "param", "n", "digits", "x_minus", "x_plus", "u_minus", "u_plus",
           "value_minus", "value_plus", "overshoot", "gamma_error"},
          {}};
  for (const auto& r : rows) {
    const int p = r.digits;
    std::optional<RealMP> x_minus;
    if (r.x_minus) x_minus = r.x_minus->refined;
    t.rows.push_back({r.family.name(), r.family.param_string(), std::to_string(r.n),
                      std::to_string(p), format_real(x_minus, p),
                      format_real(r.x_plus.refined, p), format_real(r.u_minus, p),
                      format_real(r.u_plus, p), format_real(r.value_minus, p),
                      format_real(r.value_plus, p), format_real(r.overshoot, p),
                      format_real(r.gamma_error, p)});
  }
  return t;
}

Table conjecture_table(const std::vector<ConjectureRow>& rows) {
  Table t{{"alpha", "n", "digits", "via", "value_at_1"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({to_string(r.alpha), std::to_string(r.n), std::to_string(r.digits),
                      to_string(r.via), format_real(r.value_at_1, r.digits)});
  return t;
}

Table asymptotic_table(const std::vector<AsymptoticReport>& rows) {
  Table t{{"what", "alpha", "n", "x", "digits", "exact", "asymptotic", "relative_error"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({to_string(r.what), to_string(r.params.alpha), std::to_string(r.params.n),
                      to_string(r.params.x), std::to_string(r.digits),
                      format_real(r.exact, r.digits), format_real(r.asymptotic, r.digits),
                      format_real(r.relative_error, r.digits)});
  return t;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(const Table& table, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cells[i]);
    }
    out << '\n';
  };
  line(table.columns);
  for (const auto& r : table.rows) line(r);
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        cells.back() += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  if (quoted) throw Error(ErrorKind::domain, "unterminated quote in CSV line");
  return cells;
}

}  // namespace gibbs
