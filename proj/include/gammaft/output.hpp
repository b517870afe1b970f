#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace gammaft {

// One machine-readable result row. `inputs` echoes every parameter in the
// order it was given; floating values serialize with round-trip precision.
struct OutputRecord {
  std::vector<std::pair<std::string, nlohmann::ordered_json>> inputs;
  double value_re = 0.0;
  double value_im = 0.0;
  std::string method = "closed_form";  // closed_form | quadrature | exact_rational
  std::optional<double> achieved_tol;
  // Optional exact columns (numbers subcommands); floats never appear here.
  std::optional<std::string> numerator;
  std::optional<std::string> denominator;
  // Optional oracle columns (transform --oracle).
  std::optional<double> oracle_re;
  std::optional<double> oracle_im;

  void add_input(const std::string& key, nlohmann::ordered_json v) {
    inputs.emplace_back(key, std::move(v));
  }
};

nlohmann::ordered_json record_to_json(const OutputRecord& rec);

// CSV layout: one fixed header per record shape; inputs first, then
// value_re,value_im,method,achieved_tol[,oracle_re,oracle_im] or
// numerator,denominator,method for exact rows.
std::string csv_header(const OutputRecord& rec);
std::string csv_row(const OutputRecord& rec);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace gammaft
