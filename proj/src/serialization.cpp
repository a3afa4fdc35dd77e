#include "fstefan/serialization.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fstefan::io {
namespace {

std::string quote_if_needed(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) {
    return cell;
  }
  std::string quoted = "\"";
  for (const char c : cell) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), result.ptr};
}

nlohmann::json to_json(const stefan::SimilaritySolution& sol) {
  return {
      {"alpha", sol.alpha.value()},
      {"lambda", sol.lambda},
      {"a", sol.a},
      {"b", sol.b},
      {"xi", sol.xi},
      {"k", sol.k},
      {"kind", std::string(stefan::to_string(sol.kind))},
      {"boundary_value", sol.boundary_value},
      {"rhs", sol.rhs},
      {"solver_residual", sol.solver_residual},
  };
}

stefan::SimilaritySolution solution_from_json(const nlohmann::json& j) {
  try {
    stefan::SimilaritySolution sol;
    sol.alpha = FractionalOrder(j.at("alpha").get<double>());
    sol.lambda = j.at("lambda").get<double>();
    sol.a = j.at("a").get<double>();
    sol.b = j.at("b").get<double>();
    sol.xi = j.at("xi").get<double>();
    sol.k = j.value("k", 1.0);
    sol.kind = stefan::problem_kind_from_string(j.value("kind", std::string("temperature")));
    sol.boundary_value = j.value("boundary_value", sol.a);
    sol.rhs = j.value("rhs", 0.0);
    sol.solver_residual = j.value("solver_residual", 0.0);
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed solution JSON: ") + e.what());
  }
}

nlohmann::json to_json(const fractional::ResidualReport& r) {
  return {
      {"nx", r.nx},
      {"nt", r.nt},
      {"dx", r.dx},
      {"dt", r.dt},
      {"max_abs_residual", r.max_abs_residual},
      {"l2_residual", r.l2_residual},
      {"boundary_residual", r.boundary_residual},
      {"stefan_residual", r.stefan_residual},
  };
}

nlohmann::json to_json(const stefan::EquivalenceReport& r) {
  return {
      {"alpha", r.flux.alpha.value()},
      {"lambda", r.flux.lambda},
      {"q", r.flux.q},
      {"C", r.flux.C},
      {"k", r.flux.k},
      {"B", r.B},
      {"xi", r.xi},
      {"mu", r.mu},
      {"xi_gap", r.xi_gap},
      {"u_gap_max", r.u_gap_max},
      {"nx", r.nx},
      {"nt", r.nt},
      {"equivalent", r.equivalent},
  };
}

nlohmann::json to_json(const stefan::SweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"alpha", row.alpha}, {"xi", row.xi}, {"xi_classical", row.xi_classical}, {"abs_gap", row.abs_gap}});
  }
  return {{"kind", std::string(stefan::to_string(table.kind))}, {"xi_classical", table.xi_classical}, {"rows", rows}};
}

std::string sweep_csv(const stefan::SweepTable& table) {
  CsvWriter csv({"alpha", "xi", "xi_classical", "abs_gap"});
  for (const auto& row : table.rows) {
    csv.row({row.alpha, row.xi, row.xi_classical, row.abs_gap});
  }
  return csv.str();
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  if (header.empty()) {
    throw ValidationError("CSV header must not be empty");
  }
  write_line(header);
}

void CsvWriter::row(const std::vector<Field>& fields) {
  if (fields.size() != width_) {
    throw ValidationError("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                          std::to_string(width_));
  }
  std::vector<std::string> cells;
  cells.reserve(width_);
  for (const auto& f : fields) {
    if (const auto* d = std::get_if<double>(&f)) {
      cells.push_back(format_double(*d));
    } else if (const auto* i = std::get_if<long long>(&f)) {
      cells.push_back(std::to_string(*i));
    } else {
      cells.push_back(std::get<std::string>(f));
    }
  }
  write_line(cells);
}

void CsvWriter::write_line(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out_ << ',';
    }
    out_ << quote_if_needed(cells[i]);
  }
  out_ << '\n';
}

}  // namespace fstefan::io
