#include "locsys/rational.hpp"

#include <cctype>

#include "locsys/error.hpp"

namespace locsys {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(ErrorKind::parse, "malformed rational '" + std::string(token) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::parse, "zero denominator in '" + std::string(token) + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty()))
      fail(ErrorKind::parse, "malformed rational '" + std::string(token) + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = Rational(num, scale);
  } else {
    if (!all_digits(body)) fail(ErrorKind::parse, "malformed rational '" + std::string(token) + "'");
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace locsys
