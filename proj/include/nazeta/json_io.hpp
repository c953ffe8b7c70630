#pragma once

// Serialization plumbing: deterministic JSON/CSV text generation (doubles
// always printed through the same 17-significant-digit format, rationals as
// exact "num/den" strings), atomic file writes, and the JSON codecs for the
// domain objects the CLI reads and writes.

#include "nazeta/artin_zeta.hpp"
#include "nazeta/curve_count.hpp"
#include "nazeta/invariants.hpp"
#include "nazeta/nonabelian.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nazeta {

// Fixed %.17g rendering: enough digits to round-trip any double, same bytes
// for the same value on every run.
std::string fmt_double(double v);

std::string json_escape(std::string_view s);

// CSV field, quoted only when it contains a comma, quote, or newline.
std::string csv_field(std::string_view s);

std::string read_file(const std::string& path);

// Write via a sibling temp file and rename so readers never observe a
// partial file and reruns replace outputs atomically.
void atomic_write(const std::string& path, std::string_view content);

// Deterministic JSON builder: objects keep insertion order, no whitespace
// variation, every double through fmt_double. The writer does not validate
// nesting beyond comma placement; callers keep begin/end balanced.
class JsonWriter {
public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(double v);
  JsonWriter& value(long v);
  JsonWriter& value(unsigned long v);
  JsonWriter& value(int v) { return value(static_cast<long>(v)); }
  JsonWriter& value(unsigned v) { return value(static_cast<unsigned long>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const Rational& v);
  const std::string& str() const { return out_; }

private:
  void element();
  std::string out_;
  std::vector<bool> first_;  // per open scope: no element emitted yet
  bool pending_key_ = false;
};

// Curve JSON: {"p":3,"k":1,"f":[1,0,0,0,0,1]} with f ascending and entries
// either integers (reduced mod p) or, for k > 1, element indices.
struct CurveSpec {
  Field field;
  HyperellipticCurve curve;
};
CurveSpec parse_curve_json(const std::string& text);

// Polynomial as an array of exact coefficient strings, ascending degree.
std::vector<Rational> parse_rational_array(const std::string& text,
                                           const char* what);

void write_poly(JsonWriter& w, const Poly& p);

} // namespace nazeta
