#pragma once

// The explicit deformation retraction of the model
//   Spec R[T1, T2] / (T1^N1 T2^N2 - t)
// onto its skeleton, the standard 1-simplex. A point x is moved along
// H(x, s) where s = -ln of the disc radius: s = inf is x itself, s = 0 is its
// retraction. Values are reported additively as valuations
//   v(f(H(x, s))) = min_i ( v(c_i) + i s ),
// where c_i are the Taylor coefficients at V = 1 of
//   V^j f(x1 V^M2, x2 V^-M1).

#include <map>
#include <utility>
#include <vector>

#include "skeleta/complex.hpp"
#include "skeleta/monoval.hpp"

namespace skeleta {

class BasicModel {
 public:
  BasicModel(long n1, long n2);

  long n1() const { return n1_; }
  long n2() const { return n2_; }
  long gcd() const { return c_; }
  long m1() const { return m1_; }
  long m2() const { return m2_; }
  /// Bezout pair with a1 M1 + a2 M2 = 1.
  long a1() const { return a1_; }
  long a2() const { return a2_; }

  /// Dual complex: vertices "E1", "E2" and the edge "O".
  const DualComplex& complex() const { return complex_; }

 private:
  long n1_, n2_, c_, m1_, m2_, a1_, a2_;
  DualComplex complex_;
};

/// A rigid point with coordinates in K(t^{1/e}), written as rational functions
/// in u = t^{1/e} (e = `ramification`, 1 for K-rational points). Must satisfy
/// x1^N1 x2^N2 = u^e and v(x1), v(x2) >= 0.
struct RigidPoint {
  BaseElement x1;
  BaseElement x2;
  long ramification = 1;
};

std::vector<Issue> validate_point(const BasicModel& bm, const RigidPoint& x);
void require_valid(const BasicModel& bm, const RigidPoint& x);

/// Nonnegative rational or +inf.
class FlowTime {
 public:
  explicit FlowTime(Rational s);
  static FlowTime infinity() { return FlowTime(); }
  static FlowTime parse(std::string_view text);

  bool is_infinite() const { return s_.is_infinite(); }
  const ExtendedValue& value() const { return s_; }
  std::string str() const { return s_.str(); }

 private:
  FlowTime() : s_(ExtendedValue::infinity()) {}
  ExtendedValue s_;
};

/// Valuation of the i-th Taylor coefficient, for audit.
struct FlowTerm {
  long i;
  ExtendedValue v;
};

struct FlowExpansion {
  ExtendedValue value;
  std::vector<FlowTerm> terms;  // nonzero coefficients only
};

FlowExpansion flow_expansion(const BasicModel& bm, const RigidPoint& x, const FlowTime& s,
                             const MultivariatePoly& f);

/// v(f(H(x, s))).
ExtendedValue flow_value(const BasicModel& bm, const RigidPoint& x, const FlowTime& s,
                         const MultivariatePoly& f);

/// (v(x1), v(x2)) on the edge stratum "O"; the image of x under the retraction.
MonomialPointData retract_point(const BasicModel& bm, const RigidPoint& x);

/// Rewrites f modulo T1^N1 T2^N2 = t so that no monomial is divisible by
/// T1^N1 T2^N2. Monomial valuations of the model are evaluated on this form.
MultivariatePoly reduce_modulo_relation(const BasicModel& bm, const MultivariatePoly& f);

/// Element sum d_pq x1^p x2^q of the residue field of a monomial point of the
/// edge, with (p, q) in Z^2 normalized to 0 <= p < N1 through
/// x1^N1 x2^N2 = t. Its valuation is the minimum over terms of
/// v(d) + p alpha1 + q alpha2.
class TwistedElement {
 public:
  using Key = std::pair<long, long>;

  explicit TwistedElement(long n1, long n2) : n1_(n1), n2_(n2) {}
  static TwistedElement monomial(long n1, long n2, long p, long q, const BaseElement& d);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, BaseElement>& terms() const { return terms_; }

  void add_term(long p, long q, const BaseElement& d);
  TwistedElement scaled(const BaseElement& c) const;

  friend TwistedElement operator+(const TwistedElement& a, const TwistedElement& b);
  friend TwistedElement operator*(const TwistedElement& a, const TwistedElement& b);

  ExtendedValue valuation(const Rational& alpha1, const Rational& alpha2) const;

 private:
  long n1_, n2_;
  std::map<Key, BaseElement> terms_;
};

FlowExpansion flow_expansion_monomial(const BasicModel& bm, const MonomialPointData& alpha,
                                      const FlowTime& s, const MultivariatePoly& f);

/// v(f(H(x, s))) for the monomial point x of the edge with weights alpha.
ExtendedValue flow_value_monomial(const BasicModel& bm, const MonomialPointData& alpha,
                                  const FlowTime& s, const MultivariatePoly& f);

}  // namespace skeleta
