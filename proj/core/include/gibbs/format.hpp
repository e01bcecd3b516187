#ifndef GIBBS_FORMAT_HPP_
#define GIBBS_FORMAT_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gibbs/gibbs_run.hpp"

namespace gibbs {

/// A rectangular table of already-formatted cells. Empty cells stand for
/// absent values.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Plain decimal for 1e-6 <= |x| < 1e6, scientific otherwise.
std::string format_real(const RealMP& x, int significant);
std::string format_real(const std::optional<RealMP>& x, int significant);

Table overshoot_table(const std::vector<GibbsRow>& rows);
Table conjecture_table(const std::vector<ConjectureRow>& rows);
Table asymptotic_table(const std::vector<AsymptoticReport>& rows);

/// RFC 4180 quoting: cells containing ',', '"' or a newline are quoted.
std::string csv_escape(const std::string& cell);
void write_csv(const Table& table, std::ostream& out);
/// Splits one CSV record (no embedded newlines) back into cells.
std::vector<std::string> parse_csv_line(const std::string& line);

}  // namespace gibbs

#endif  // GIBBS_FORMAT_HPP_
