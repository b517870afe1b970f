#include "gammaft/output.hpp"

#include <charconv>

namespace gammaft {

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

nlohmann::ordered_json record_to_json(const OutputRecord& rec) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rec.inputs) in[k] = v;
  j["inputs"] = std::move(in);
  if (rec.numerator) {
    j["numerator"] = *rec.numerator;
    j["denominator"] = *rec.denominator;
  } else {
    j["value_re"] = rec.value_re;
    j["value_im"] = rec.value_im;
  }
  j["method"] = rec.method;
  if (rec.achieved_tol)
    j["achieved_tol"] = *rec.achieved_tol;
  else
    j["achieved_tol"] = nullptr;
  if (rec.oracle_re) {
    j["oracle_re"] = *rec.oracle_re;
    j["oracle_im"] = *rec.oracle_im;
  }
  return j;
}

namespace {

std::string json_scalar_to_csv(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

}  // namespace

std::string csv_header(const OutputRecord& rec) {
  std::string h;
  for (const auto& [k, v] : rec.inputs) {
    h += k;
    h += ',';
  }
  if (rec.numerator) {
    h += "numerator,denominator,method";
  } else {
    h += "value_re,value_im,method,achieved_tol";
    if (rec.oracle_re) h += ",oracle_re,oracle_im";
  }
  return h;
}

std::string csv_row(const OutputRecord& rec) {
  std::string r;
  for (const auto& [k, v] : rec.inputs) {
    r += json_scalar_to_csv(v);
    r += ',';
  }
  if (rec.numerator) {
    r += *rec.numerator;
    r += ',';
    r += *rec.denominator;
    r += ',';
    r += rec.method;
  } else {
    r += format_double(rec.value_re);
    r += ',';
    r += format_double(rec.value_im);
    r += ',';
    r += rec.method;
    r += ',';
    r += rec.achieved_tol ? format_double(*rec.achieved_tol) : std::string();
    if (rec.oracle_re) {
      r += ',';
      r += format_double(*rec.oracle_re);
      r += ',';
      r += format_double(*rec.oracle_im);
    }
  }
  return r;
}

}  // namespace gammaft
