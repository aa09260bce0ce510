#pragma once

// The base field K = Q(t) with its t-adic valuation.

#include <string>
#include <vector>

#include "skeleta/rational.hpp"

namespace skeleta {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; the top coefficient is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  explicit UPoly(const Rational& c);

  static UPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^k, zero past the degree.
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Multiplicity of t as a factor; 0 for the zero polynomial.
  std::size_t low_order() const;

  UPoly shifted_down(std::size_t k) const;  // divide by t^k (exact)
  UPoly shifted_up(std::size_t k) const;    // multiply by t^k
  UPoly scaled(const Rational& c) const;
  UPoly inflated(std::size_t e) const;      // t -> t^e
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);

  /// Text form in the variable `var`, parseable by parse_element.
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of K = Q(t). Canonical form t^order * num / den with num and den
/// coprime, num(0) != 0 and den(0) = 1. Zero has an empty numerator.
class BaseElement {
 public:
  BaseElement() = default;
  BaseElement(const Rational& c);  // NOLINT(implicit)
  BaseElement(long c) : BaseElement(Rational(c)) {}  // NOLINT(implicit)

  static BaseElement uniformizer();
  /// num / den; throws DomainError when den is zero.
  static BaseElement fraction(const UPoly& num, const UPoly& den);

  bool is_zero() const { return num_.is_zero(); }
  /// t-adic order; only meaningful when nonzero.
  long order() const { return order_; }
  /// A constant of K (degree-zero rational function).
  bool is_rational_constant() const;

  BaseElement inverse() const;
  BaseElement pow(long k) const;
  /// t -> t^e; embeds K into K(t^{1/e}) written in the variable t^{1/e}.
  BaseElement inflated(long e) const;

  /// Numerator and denominator with the power of t folded in.
  UPoly numerator() const;
  UPoly denominator() const;
  /// The parts of the canonical form: t^order * unit_numerator / unit_denominator.
  const UPoly& unit_numerator() const { return num_; }
  const UPoly& unit_denominator() const { return den_; }

  BaseElement& operator+=(const BaseElement& b) { return *this = *this + b; }
  BaseElement& operator-=(const BaseElement& b) { return *this = *this - b; }
  BaseElement& operator*=(const BaseElement& b) { return *this = *this * b; }

  friend BaseElement operator+(const BaseElement& a, const BaseElement& b);
  friend BaseElement operator-(const BaseElement& a, const BaseElement& b);
  friend BaseElement operator*(const BaseElement& a, const BaseElement& b);
  friend BaseElement operator/(const BaseElement& a, const BaseElement& b);
  friend BaseElement operator-(const BaseElement& a);
  friend bool operator==(const BaseElement& a, const BaseElement& b) = default;

  std::string str(const std::string& var = "t") const;

 private:
  /// Canonical form; `coprime` skips the gcd when num and den are known to
  /// share no factor.
  static BaseElement normalized(long order, UPoly num, UPoly den, bool coprime = false);

  long order_ = 0;
  UPoly num_;
  UPoly den_{Rational(1)};
};

/// t-adic valuation; +inf at zero.
ExtendedValue valuation(const BaseElement& x);

/// Valuation of an element of K(t^{1/e}) written in the variable t^{1/e}.
ExtendedValue valuation(const BaseElement& x, long ramification);

}  // namespace skeleta
