#pragma once

// Monomial (generalized Gauss) valuations on K[T1, ..., Tr].

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeleta/field.hpp"

namespace skeleta {

using Exponent = std::vector<long>;

/// Polynomial in T1..Tr with coefficients in K. Zero coefficients are never
/// stored; every exponent has exactly `arity` nonnegative entries.
class MultivariatePoly {
 public:
  explicit MultivariatePoly(std::size_t arity = 0) : arity_(arity) {}

  static MultivariatePoly constant(std::size_t arity, const BaseElement& c);
  /// T_{index+1}, zero-based index.
  static MultivariatePoly variable(std::size_t arity, std::size_t index);
  static MultivariatePoly monomial(const Exponent& exponent, const BaseElement& c);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of T^0.
  BaseElement constant_term() const;
  const std::map<Exponent, BaseElement>& terms() const { return terms_; }
  /// Whether some term has a positive exponent in variable `index`.
  bool uses_variable(std::size_t index) const;

  /// Adds c*T^exponent in place.
  void add_term(const Exponent& exponent, const BaseElement& c);

  /// Same polynomial seen in more variables (new ones appended, unused).
  MultivariatePoly widened(std::size_t arity) const;
  /// Keeps only the listed variables, in the given order. Throws DomainError
  /// if a dropped variable occurs.
  MultivariatePoly restricted(const std::vector<std::size_t>& keep) const;

  MultivariatePoly pow(unsigned long k) const;

  friend MultivariatePoly operator+(const MultivariatePoly& a, const MultivariatePoly& b);
  friend MultivariatePoly operator-(const MultivariatePoly& a, const MultivariatePoly& b);
  friend MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b);
  friend MultivariatePoly operator-(const MultivariatePoly& a);
  friend bool operator==(const MultivariatePoly& a, const MultivariatePoly& b) = default;

  std::string str() const;

 private:
  std::size_t arity_;
  std::map<Exponent, BaseElement> terms_;
};

/// Weights alpha_i >= 0 on the local equations T_i, optionally tied to the
/// multiplicities N_i of the corresponding components, in which case
/// sum alpha_i N_i = 1 is enforced.
class MonomialWeights {
 public:
  explicit MonomialWeights(std::vector<Rational> alpha);
  MonomialWeights(std::vector<Rational> alpha, std::vector<long> multiplicities);

  std::size_t arity() const { return alpha_.size(); }
  const std::vector<Rational>& alpha() const { return alpha_; }
  const std::optional<std::vector<long>>& multiplicities() const {
    return multiplicities_;
  }

  friend bool operator==(const MonomialWeights&, const MonomialWeights&) = default;

 private:
  std::vector<Rational> alpha_;
  std::optional<std::vector<long>> multiplicities_;
};

/// min over terms of v_K(d_beta) + alpha . beta; +inf on the zero polynomial.
ExtendedValue eval(const MonomialWeights& w, const MultivariatePoly& f);

/// Always true for representable weights: every alpha_i is rational.
bool is_divisorial(const MonomialWeights& w);

/// Indices i with alpha_i > 0.
std::vector<std::size_t> support(const MonomialWeights& w);

/// Drops the coordinates with alpha_i = 0.
MonomialWeights restrict_to_support(const MonomialWeights& w);

}  // namespace skeleta
