#include "nazeta/report.hpp"

#include "nazeta/errors.hpp"
#include "nazeta/json_io.hpp"

#include <cmath>

namespace nazeta {

void CheckReport::add(CheckRow row) {
  for (const CheckRow& r : rows_)
    if (r.name == row.name)
      throw input_error("duplicate check name: " + row.name);
  rows_.push_back(std::move(row));
}

bool CheckReport::all_pass() const {
  for (const CheckRow& r : rows_)
    if (r.status == "fail")
      return false;
  return true;
}

std::string CheckReport::to_csv() const {
  std::string out = "check_name,status,lhs,rhs,abs_delta,tolerance\n";
  for (const CheckRow& r : rows_) {
    out += csv_field(r.name);
    out += ',';
    out += csv_field(r.status);
    out += ',';
    out += csv_field(r.lhs);
    out += ',';
    out += csv_field(r.rhs);
    out += ',';
    out += fmt_double(r.abs_delta);
    out += ',';
    out += fmt_double(r.tolerance);
    out += '\n';
  }
  return out;
}

std::string CheckReport::to_json() const {
  JsonWriter w;
  w.begin_object().key("checks").begin_array();
  for (const CheckRow& r : rows_) {
    w.begin_object();
    w.key("check_name").value(std::string_view(r.name));
    w.key("status").value(std::string_view(r.status));
    w.key("lhs").value(std::string_view(r.lhs));
    w.key("rhs").value(std::string_view(r.rhs));
    w.key("abs_delta").value(r.abs_delta);
    w.key("tolerance").value(r.tolerance);
    w.end_object();
  }
  w.end_array().key("all_pass").value(all_pass()).end_object();
  return w.str() + "\n";
}

CheckRow exact_row(std::string name, const Rational& lhs, const Rational& rhs) {
  const bool ok = lhs == rhs;
  return CheckRow{std::move(name), ok ? "pass" : "fail", lhs.str(), rhs.str(),
                  ok ? 0.0 : std::abs((lhs - rhs).to_double()), 0.0};
}

CheckRow close_row(std::string name, double lhs, double rhs, double tol) {
  const double delta = std::abs(lhs - rhs);
  return CheckRow{std::move(name), delta <= tol ? "pass" : "fail",
                  fmt_double(lhs), fmt_double(rhs), delta, tol};
}

CheckRow predicate_row(std::string name, bool ok, std::string lhs,
                       std::string rhs) {
  return CheckRow{std::move(name), ok ? "pass" : "fail", std::move(lhs),
                  std::move(rhs), ok ? 0.0 : 1.0, 0.0};
}

CheckRow info_row(std::string name, std::string lhs, std::string rhs) {
  return CheckRow{std::move(name), "info", std::move(lhs), std::move(rhs), 0.0,
                  0.0};
}

CheckRow warn_row(std::string name, bool ok, std::string lhs, std::string rhs) {
  return CheckRow{std::move(name), ok ? "pass" : "warn", std::move(lhs),
                  std::move(rhs), 0.0, 0.0};
}

} // namespace nazeta
