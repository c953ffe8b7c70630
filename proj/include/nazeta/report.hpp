#pragma once

// Check reports: every pipeline consistency check lands in one named row
// with its two sides rendered exactly, the absolute gap, and the tolerance
// it was held to. Reports serialize to CSV (for plotting/diffing) and JSON
// (for machines); both carry identical values.

#include "nazeta/rational.hpp"

#include <string>
#include <vector>

namespace nazeta {

struct CheckRow {
  std::string name;
  std::string status;  // "pass", "fail", "warn", or "info"
  std::string lhs;
  std::string rhs;
  double abs_delta = 0.0;
  double tolerance = 0.0;
};

class CheckReport {
public:
  // Rows keep insertion order; a duplicate name is a caller bug.
  void add(CheckRow row);

  // True when no row failed (warn and info do not fail a report).
  bool all_pass() const;

  const std::vector<CheckRow>& rows() const { return rows_; }

  // Header check_name,status,lhs,rhs,abs_delta,tolerance then one row per
  // check; numbers formatted exactly as in the JSON form.
  std::string to_csv() const;
  std::string to_json() const;

private:
  std::vector<CheckRow> rows_;
};

// Exact equality of rationals: tolerance 0, delta 0 or 1.
CheckRow exact_row(std::string name, const Rational& lhs, const Rational& rhs);

// |lhs - rhs| <= tol on doubles.
CheckRow close_row(std::string name, double lhs, double rhs, double tol);

// An exact predicate evaluated elsewhere; lhs/rhs are display strings.
CheckRow predicate_row(std::string name, bool ok, std::string lhs,
                       std::string rhs);

// Informational value: never affects all_pass.
CheckRow info_row(std::string name, std::string lhs, std::string rhs);

// Passes when ok; downgrades to "warn" (not "fail") otherwise.
CheckRow warn_row(std::string name, bool ok, std::string lhs, std::string rhs);

} // namespace nazeta
