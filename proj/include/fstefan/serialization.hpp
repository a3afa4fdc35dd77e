#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fstefan/residual.hpp"
#include "fstefan/stefan_solver.hpp"

namespace fstefan::io {

/// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

nlohmann::json to_json(const stefan::SimilaritySolution& sol);
stefan::SimilaritySolution solution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const fractional::ResidualReport& report);
nlohmann::json to_json(const stefan::EquivalenceReport& report);
nlohmann::json to_json(const stefan::SweepTable& table);

/// Header `alpha,xi,xi_classical,abs_gap`.
std::string sweep_csv(const stefan::SweepTable& table);

/// Minimal RFC 4180 writer: mandatory header, fields quoted only when needed.
class CsvWriter {
 public:
  using Field = std::variant<double, long long, std::string>;

  explicit CsvWriter(std::vector<std::string> header);

  void row(const std::vector<Field>& fields);
  [[nodiscard]] std::string str() const { return out_.str(); }

 private:
  void write_line(const std::vector<std::string>& cells);

  std::size_t width_;
  std::ostringstream out_;
};

}  // namespace fstefan::io
