#include "skeleta/field.hpp"

#include <algorithm>
#include <sstream>

namespace skeleta {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return UPoly();
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

std::size_t UPoly::low_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k == coeffs_.size() ? 0 : k;
}

UPoly UPoly::shifted_down(std::size_t k) const {
  if (k >= coeffs_.size()) return UPoly();
  return UPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k),
                                     coeffs_.end()));
}

UPoly UPoly::shifted_up(std::size_t k) const {
  if (is_zero()) return UPoly();
  std::vector<Rational> v(k, Rational(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& c) const {
  if (c == 0) return UPoly();
  UPoly r = *this;
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

UPoly UPoly::inflated(std::size_t e) const {
  if (is_zero() || e == 1) return *this;
  std::vector<Rational> v((coeffs_.size() - 1) * e + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k * e] = coeffs_[k];
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / coeffs_.back());
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a) {
  UPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  if (rem.size() <= db) {
    q = UPoly();
    r = a;
    return;
  }
  std::vector<Rational> quo(rem.size() - db, Rational(0));
  const Rational& lead = b.coeffs_.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / lead;
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    Rational c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (k == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------- BaseElement

BaseElement::BaseElement(const Rational& c) : num_(c) {}

BaseElement BaseElement::uniformizer() {
  BaseElement x(Rational(1));
  x.order_ = 1;
  return x;
}

BaseElement BaseElement::normalized(long order, UPoly num, UPoly den, bool coprime) {
  if (den.is_zero()) throw DomainError("zero denominator in K");
  BaseElement x;
  if (num.is_zero()) return x;
  const std::size_t ln = num.low_order();
  const std::size_t ld = den.low_order();
  num = num.shifted_down(ln);
  den = den.shifted_down(ld);
  order += static_cast<long>(ln) - static_cast<long>(ld);
  if (!coprime && den.degree() > 0 && num.degree() > 0) {
    UPoly g = UPoly::gcd(num, den);
    if (g.degree() > 0) {
      UPoly q, r;
      UPoly::divmod(num, g, q, r);
      num = q;
      UPoly::divmod(den, g, q, r);
      den = q;
    }
  }
  Rational d0 = den.coeff(0);
  x.order_ = order;
  x.num_ = num.scaled(Rational(1) / d0);
  x.den_ = den.scaled(Rational(1) / d0);
  return x;
}

BaseElement BaseElement::fraction(const UPoly& num, const UPoly& den) {
  return normalized(0, num, den);
}

bool BaseElement::is_rational_constant() const {
  return is_zero() || (order_ == 0 && num_.degree() == 0 && den_.degree() == 0);
}

BaseElement BaseElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in K");
  return normalized(-order_, den_, num_, true);
}

BaseElement BaseElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  BaseElement result(Rational(1));
  BaseElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

BaseElement BaseElement::inflated(long e) const {
  if (e < 1) throw DomainError("ramification index must be positive");
  if (is_zero() || e == 1) return *this;
  BaseElement x;
  x.order_ = order_ * e;
  x.num_ = num_.inflated(static_cast<std::size_t>(e));
  x.den_ = den_.inflated(static_cast<std::size_t>(e));
  return x;
}

UPoly BaseElement::numerator() const {
  return order_ > 0 ? num_.shifted_up(static_cast<std::size_t>(order_)) : num_;
}

UPoly BaseElement::denominator() const {
  return order_ < 0 ? den_.shifted_up(static_cast<std::size_t>(-order_)) : den_;
}

BaseElement operator+(const BaseElement& a, const BaseElement& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Bring both to the common order lo = min(order_a, order_b).
  const long lo = std::min(a.order_, b.order_);
  UPoly na = a.num_.shifted_up(static_cast<std::size_t>(a.order_ - lo));
  UPoly nb = b.num_.shifted_up(static_cast<std::size_t>(b.order_ - lo));
  if (a.den_ == b.den_) return BaseElement::normalized(lo, na + nb, a.den_);
  // Henrici: only the common part of the denominators can cancel.
  const UPoly g = UPoly::gcd(a.den_, b.den_);
  if (g.degree() == 0)
    return BaseElement::normalized(lo, na * b.den_ + nb * a.den_, a.den_ * b.den_, true);
  UPoly ra, rb, rest;
  UPoly::divmod(a.den_, g, ra, rest);
  UPoly::divmod(b.den_, g, rb, rest);
  return BaseElement::normalized(lo, na * rb + nb * ra, a.den_ * rb);
}

BaseElement operator-(const BaseElement& a) {
  BaseElement r = a;
  r.num_ = -r.num_;
  return r;
}

BaseElement operator-(const BaseElement& a, const BaseElement& b) { return a + (-b); }

BaseElement operator*(const BaseElement& a, const BaseElement& b) {
  if (a.is_zero() || b.is_zero()) return BaseElement();
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    BaseElement r;
    r.order_ = a.order_ + b.order_;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // Cross-cancel: a and b are already reduced.
  auto cancel = [](UPoly& num, UPoly& den) {
    if (num.degree() == 0 || den.degree() == 0) return;
    const UPoly g = UPoly::gcd(num, den);
    if (g.degree() == 0) return;
    UPoly q, r;
    UPoly::divmod(num, g, q, r);
    num = std::move(q);
    UPoly::divmod(den, g, q, r);
    den = std::move(q);
  };
  UPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  cancel(an, bd);
  cancel(bn, ad);
  return BaseElement::normalized(a.order_ + b.order_, an * bn, ad * bd, true);
}

BaseElement operator/(const BaseElement& a, const BaseElement& b) {
  return a * b.inverse();
}

std::string BaseElement::str(const std::string& var) const {
  if (is_zero()) return "0";
  const UPoly den = denominator();
  const std::string num = numerator().str(var);
  if (den == UPoly(Rational(1))) return num;
  return "(" + num + ")/(" + den.str(var) + ")";
}

ExtendedValue valuation(const BaseElement& x) {
  if (x.is_zero()) return ExtendedValue::infinity();
  return ExtendedValue(x.order());
}

ExtendedValue valuation(const BaseElement& x, long ramification) {
  if (ramification < 1) throw DomainError("ramification index must be positive");
  if (x.is_zero()) return ExtendedValue::infinity();
  Rational v(x.order(), ramification);
  v.canonicalize();
  return ExtendedValue(v);
}

}  // namespace skeleta
