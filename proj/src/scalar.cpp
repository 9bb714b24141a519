#include "bvforms/scalar.hpp"

#include <cctype>

#include "bvforms/errors.hpp"

namespace bvf {

Scalar ratio(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

std::string to_fraction_string(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace bvf
