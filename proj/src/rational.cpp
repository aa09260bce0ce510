#include "skeleta/rational.hpp"

#include <cctype>

namespace skeleta {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return DomainError("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  if (s[pos] == '-' || s[pos] == '+') ++pos;
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit && i + 1 < s.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

const Rational& ExtendedValue::value() const {
  if (!value_) throw DomainError("value requested from +inf");
  return *value_;
}

std::string ExtendedValue::str() const {
  return value_ ? to_string(*value_) : std::string("inf");
}

ExtendedValue ExtendedValue::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtendedValue(parse_rational(text));
}

ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedValue::infinity();
  return ExtendedValue(Rational(*a.value_ + *b.value_));
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite() || b.is_infinite())
    return a.is_infinite() && b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite())
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

}  // namespace skeleta
