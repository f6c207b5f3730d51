#include "curvinv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace curvinv {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool digits_only(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  const std::size_t num_start = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!digits_only(num, num_start, num.size()) || !digits_only(den, 0, den.size())) {
    throw std::invalid_argument("rational: malformed value '" + text + "'");
  }
  const mpz_class denominator(den);
  if (denominator == 0) {
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  }
  Rational q(mpz_class(num), denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace curvinv
