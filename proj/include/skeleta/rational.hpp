#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skeleta {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for inputs outside an operation's mathematical domain
/// (inverting zero, broken normalization, arity mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lowest-terms text form: "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional sign. No decimals.
Rational parse_rational(std::string_view text);

/// An element of Q ∪ {+inf}. +inf absorbs addition and dominates every
/// finite value.
class ExtendedValue {
 public:
  ExtendedValue(Rational v) : value_(std::move(v)) {}  // NOLINT(implicit)
  ExtendedValue(long v) : value_(Rational(v)) {}        // NOLINT(implicit)

  static ExtendedValue infinity() { return ExtendedValue(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws DomainError on +inf.
  const Rational& value() const;

  /// "inf" or the rational text form.
  std::string str() const;
  static ExtendedValue parse(std::string_view text);

  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);
  friend std::strong_ordering operator<=>(const ExtendedValue& a,
                                          const ExtendedValue& b);

 private:
  ExtendedValue() = default;
  std::optional<Rational> value_;
};

inline ExtendedValue min(const ExtendedValue& a, const ExtendedValue& b) {
  return b < a ? b : a;
}

}  // namespace skeleta
