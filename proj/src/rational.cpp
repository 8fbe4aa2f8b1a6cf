#include "opencospan/rational.hpp"

#include <sstream>

#include "opencospan/error.hpp"

namespace ocs {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  require(valid_integer(num) && valid_integer(den), ErrorKind::schema_violation,
          "not a rational number: '" + text + "'");
  mpz_class denominator(den);
  require(denominator != 0, ErrorKind::schema_violation,
          "rational with zero denominator: '" + text + "'");
  Rational value(mpz_class(num), denominator);
  value.canonicalize();
  return value;
}

std::string rational_string(const Rational& value) {
  return value.get_str();
}

std::string rational_vector_string(const std::vector<Rational>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << rational_string(values[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace ocs
