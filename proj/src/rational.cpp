#include "fpbm/rational.hpp"

#include <cctype>

#include "fpbm/error.hpp"

namespace fpbm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ValidationError("malformed rational '" + std::string(text) + "'");

  mpz_class numerator(std::string(num), 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0)
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') numerator = -numerator;
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace fpbm
