#include "nazeta/json_io.hpp"

#include "nazeta/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace nazeta {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos)
    return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += "\"\"";
    else
      out += c;
  }
  out += '"';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad())
    throw input_error("cannot read file: " + path);
  return text;
}

void atomic_write(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw input_error("cannot open file for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
      throw input_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec)
    throw input_error("cannot replace " + path + ": " + ec.message());
}

void JsonWriter::element() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back())
      out_ += ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  element();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  element();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  if (!first_.back())
    out_ += ',';
  first_.back() = false;
  out_ += '"';
  out_ += json_escape(k);
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  element();
  out_ += '"';
  out_ += json_escape(v);
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  element();
  out_ += fmt_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(long v) {
  element();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(unsigned long v) {
  element();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  element();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const Rational& v) {
  return value(std::string_view(v.str()));
}

CurveSpec parse_curve_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("curve JSON malformed: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("f"))
    throw input_error("curve JSON must be an object with \"p\" and \"f\"");
  if (!j["p"].is_number_unsigned())
    throw input_error("curve JSON: \"p\" must be a positive integer");
  uint64_t p = j["p"].get<uint64_t>();
  unsigned k = 1;
  if (j.contains("k")) {
    if (!j["k"].is_number_unsigned() || j["k"].get<uint64_t>() < 1)
      throw input_error("curve JSON: \"k\" must be a positive integer");
    k = j["k"].get<unsigned>();
  }
  Field F = Field::make(p, k);
  if (!j["f"].is_array() || j["f"].empty())
    throw input_error("curve JSON: \"f\" must be a nonempty coefficient array");

  if (k == 1) {
    std::vector<long long> coeffs;
    for (const auto& c : j["f"]) {
      if (!c.is_number_integer())
        throw input_error("curve JSON: coefficients must be integers");
      coeffs.push_back(c.get<long long>());
    }
    return CurveSpec{F, make_curve(F, coeffs)};
  }
  // Over an extension field the entries are element indices 0 <= i < q.
  std::vector<FieldElt> coeffs;
  for (const auto& c : j["f"]) {
    if (!c.is_number_unsigned() || c.get<uint64_t>() >= F.q())
      throw input_error(
          "curve JSON: extension-field coefficients are element indices in "
          "[0, q)");
    coeffs.push_back(F.elt_at(c.get<uint64_t>()));
  }
  return CurveSpec{F, make_curve(F, coeffs)};
}

std::vector<Rational> parse_rational_array(const std::string& text,
                                           const char* what) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string(what) + " malformed: " + e.what());
  }
  if (j.is_object() && j.contains("coeffs"))
    j = j["coeffs"];
  if (!j.is_array() || j.empty())
    throw input_error(std::string(what) + " must be a nonempty array");
  std::vector<Rational> out;
  for (const auto& c : j) {
    if (c.is_number_integer())
      out.push_back(Rational(c.get<long>()));
    else if (c.is_string())
      out.push_back(Rational::from_string(c.get<std::string>()));
    else
      throw input_error(std::string(what) +
                        ": entries must be integers or \"num/den\" strings");
  }
  return out;
}

void write_poly(JsonWriter& w, const Poly& p) {
  w.begin_array();
  for (long i = 0; i <= std::max(p.degree(), 0L); ++i)
    w.value(p.coeff(i));
  w.end_array();
}

} // namespace nazeta
