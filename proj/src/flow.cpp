#include "skeleta/flow.hpp"

#include <numeric>

namespace skeleta {
namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

ModelDescription edge_model(long n1, long n2) {
  if (n1 < 1 || n2 < 1) throw DomainError("multiplicities of the basic model must be positive");
  ModelDescription m;
  m.components = {{"E1", n1}, {"E2", n2}};
  m.strata = {{"E1", {"E1"}, {}},
              {"E2", {"E2"}, {}},
              {"O", {"E1", "E2"}, {{"E1", "E2"}, {"E2", "E1"}}}};
  return m;
}

// Extended Euclid: returns (x, y) with a x + b y = gcd(a, b).
std::pair<long, long> bezout(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  return {old_s, old_t};
}

Rational binomial(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

// Valuations of the Taylor coefficients at V = 1 of sum_k p_k V^k. Everything
// is put over one denominator first, so no coefficient needs reducing.
std::vector<ExtendedValue> taylor_valuations(const std::map<long, BaseElement>& poly,
                                             long ramification) {
  long lo = poly.begin()->second.order();
  UPoly common(Rational(1));
  for (const auto& [k, p] : poly) {
    lo = std::min(lo, p.order());
    const UPoly& d = p.unit_denominator();
    UPoly q, r;
    UPoly::divmod(common, d, q, r);
    if (r.is_zero()) continue;
    UPoly::divmod(d, UPoly::gcd(common, d), q, r);
    common = common * q;
  }
  std::vector<std::pair<long, UPoly>> lifted;
  for (const auto& [k, p] : poly) {
    UPoly q, r;
    UPoly::divmod(common, p.unit_denominator(), q, r);
    lifted.emplace_back(k, p.unit_numerator().shifted_up(static_cast<std::size_t>(p.order() - lo)) * q);
  }
  const long degree = lifted.back().first;
  std::vector<ExtendedValue> vals;
  for (long i = 0; i <= degree; ++i) {
    UPoly c;
    for (const auto& [k, n] : lifted)
      if (k >= i) c = c + n.scaled(binomial(k, i));
    if (c.is_zero()) {
      vals.push_back(ExtendedValue::infinity());
      continue;
    }
    Rational v(lo + static_cast<long>(c.low_order()), ramification);
    v.canonicalize();
    vals.push_back(ExtendedValue(v));
  }
  return vals;
}

Rational edge_weight(const MonomialPointData& d, const char* component) {
  auto it = d.alpha.find(component);
  return it == d.alpha.end() ? Rational(0) : it->second;
}

// Minimizes v_i + i s over the nonzero coefficients.
FlowExpansion assemble(std::vector<ExtendedValue> vals, const FlowTime& s) {
  FlowExpansion out{ExtendedValue::infinity(), {}};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i].is_infinite()) continue;
    out.terms.push_back({static_cast<long>(i), vals[i]});
    ExtendedValue candidate = vals[i];
    if (i > 0) {
      candidate = s.is_infinite() ? ExtendedValue::infinity()
                                  : vals[i] + ExtendedValue(s.value().value() * Rational(static_cast<long>(i)));
    }
    out.value = min(out.value, candidate);
  }
  return out;
}

}  // namespace

BasicModel::BasicModel(long n1, long n2)
    : n1_(n1), n2_(n2), c_(std::gcd(n1, n2)), m1_(0), m2_(0), a1_(0), a2_(0),
      complex_(edge_model(n1, n2)) {
  m1_ = n1_ / c_;
  m2_ = n2_ / c_;
  std::tie(a1_, a2_) = bezout(m1_, m2_);
  if (a1_ * m1_ + a2_ * m2_ != 1) throw std::logic_error("Bezout identity failed");
}

// ------------------------------------------------------------ RigidPoint

std::vector<Issue> validate_point(const BasicModel& bm, const RigidPoint& x) {
  std::vector<Issue> issues;
  if (x.ramification < 1) {
    issues.push_back({IssueKind::PointNotOnModel, "ramification",
                      "ramification index must be positive"});
    return issues;
  }
  const BaseElement lhs = x.x1.pow(bm.n1()) * x.x2.pow(bm.n2());
  const BaseElement rhs = BaseElement::uniformizer().pow(x.ramification);
  if (!(lhs == rhs))
    issues.push_back({IssueKind::PointNotOnModel, "x1^N1*x2^N2",
                      "x1^" + std::to_string(bm.n1()) + " * x2^" + std::to_string(bm.n2()) +
                          " = " + lhs.str(x.ramification == 1 ? "t" : "u") +
                          ", not the uniformizer"});
  if (valuation(x.x1) < ExtendedValue(0))
    issues.push_back({IssueKind::PointOutsideTube, "x1", "v(x1) < 0"});
  if (valuation(x.x2) < ExtendedValue(0))
    issues.push_back({IssueKind::PointOutsideTube, "x2", "v(x2) < 0"});
  return issues;
}

void require_valid(const BasicModel& bm, const RigidPoint& x) {
  auto issues = validate_point(bm, x);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

FlowTime::FlowTime(Rational s) : s_(s) {
  if (s < 0) throw DomainError("flow time must be nonnegative");
}

FlowTime FlowTime::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return FlowTime(parse_rational(text));
}

// ------------------------------------------------------------------ flow

FlowExpansion flow_expansion(const BasicModel& bm, const RigidPoint& x, const FlowTime& s,
                             const MultivariatePoly& f) {
  require_valid(bm, x);
  if (f.arity() != 2) throw DomainError("flow polynomials are in T1, T2");
  const long e = x.ramification;

  // Laurent coefficients of f(x1 V^M2, x2 V^-M1), keyed by the power of V.
  std::map<long, BaseElement> laurent;
  std::map<long, BaseElement> pow1, pow2;
  auto cached = [](std::map<long, BaseElement>& cache, const BaseElement& b, long k) {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, b.pow(k)).first;
    return it->second;
  };
  for (const auto& [beta, d] : f.terms()) {
    const long k = bm.m2() * beta[0] - bm.m1() * beta[1];
    laurent[k] += d.inflated(e) * cached(pow1, x.x1, beta[0]) * cached(pow2, x.x2, beta[1]);
  }
  std::erase_if(laurent, [](const auto& kv) { return kv.second.is_zero(); });
  if (laurent.empty()) return {ExtendedValue::infinity(), {}};

  // Multiply through by V^-shift to get a polynomial in V.
  const long shift = laurent.begin()->first;
  std::map<long, BaseElement> poly;
  for (auto& [k, p] : laurent) poly.emplace(k - shift, std::move(p));
  return assemble(taylor_valuations(poly, e), s);
}

ExtendedValue flow_value(const BasicModel& bm, const RigidPoint& x, const FlowTime& s,
                         const MultivariatePoly& f) {
  return flow_expansion(bm, x, s, f).value;
}

MonomialPointData retract_point(const BasicModel& bm, const RigidPoint& x) {
  require_valid(bm, x);
  MonomialPointData d{"O",
                      {{"E1", valuation(x.x1, x.ramification).value()},
                       {"E2", valuation(x.x2, x.ramification).value()}}};
  phi_inverse(bm.complex(), d);  // normalization check
  return d;
}

MultivariatePoly reduce_modulo_relation(const BasicModel& bm, const MultivariatePoly& f) {
  if (f.arity() != 2) throw DomainError("basic-model polynomials are in T1, T2");
  MultivariatePoly out(2);
  for (const auto& [beta, d] : f.terms()) {
    const long k = std::min(beta[0] / bm.n1(), beta[1] / bm.n2());
    out.add_term({beta[0] - k * bm.n1(), beta[1] - k * bm.n2()},
                 d * BaseElement::uniformizer().pow(k));
  }
  return out;
}

// -------------------------------------------------------- TwistedElement

TwistedElement TwistedElement::monomial(long n1, long n2, long p, long q,
                                        const BaseElement& d) {
  TwistedElement x(n1, n2);
  x.add_term(p, q, d);
  return x;
}

void TwistedElement::add_term(long p, long q, const BaseElement& d) {
  if (d.is_zero()) return;
  const long r = floor_div(p, n1_);
  const Key key{p - r * n1_, q - r * n2_};
  BaseElement c = d * BaseElement::uniformizer().pow(r);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TwistedElement TwistedElement::scaled(const BaseElement& c) const {
  TwistedElement out(n1_, n2_);
  for (const auto& [k, d] : terms_) out.add_term(k.first, k.second, d * c);
  return out;
}

TwistedElement operator+(const TwistedElement& a, const TwistedElement& b) {
  TwistedElement out = a;
  for (const auto& [k, d] : b.terms_) out.add_term(k.first, k.second, d);
  return out;
}

TwistedElement operator*(const TwistedElement& a, const TwistedElement& b) {
  TwistedElement out(a.n1_, a.n2_);
  for (const auto& [ka, da] : a.terms_)
    for (const auto& [kb, db] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, da * db);
  return out;
}

ExtendedValue TwistedElement::valuation(const Rational& alpha1, const Rational& alpha2) const {
  ExtendedValue best = ExtendedValue::infinity();
  for (const auto& [k, d] : terms_)
    best = min(best, ExtendedValue(Rational(d.order() + alpha1 * k.first + alpha2 * k.second)));
  return best;
}

FlowExpansion flow_expansion_monomial(const BasicModel& bm, const MonomialPointData& alpha,
                                      const FlowTime& s, const MultivariatePoly& f) {
  // Normalization and nonnegativity.
  phi_inverse(bm.complex(), alpha);
  if (f.arity() != 2) throw DomainError("flow polynomials are in T1, T2");
  const Rational a1 = edge_weight(alpha, "E1");
  const Rational a2 = edge_weight(alpha, "E2");

  std::map<long, TwistedElement> laurent;
  for (const auto& [beta, d] : f.terms()) {
    const long k = bm.m2() * beta[0] - bm.m1() * beta[1];
    auto it = laurent.try_emplace(k, bm.n1(), bm.n2()).first;
    it->second.add_term(beta[0], beta[1], d);
  }
  std::erase_if(laurent, [](const auto& kv) { return kv.second.is_zero(); });
  if (laurent.empty()) return {ExtendedValue::infinity(), {}};

  const long shift = laurent.begin()->first;
  const long degree = laurent.rbegin()->first - shift;
  std::vector<ExtendedValue> vals;
  for (long i = 0; i <= degree; ++i) {
    TwistedElement c(bm.n1(), bm.n2());
    for (const auto& [k, p] : laurent)
      if (k - shift >= i) c = c + p.scaled(BaseElement(binomial(k - shift, i)));
    vals.push_back(c.valuation(a1, a2));
  }
  return assemble(std::move(vals), s);
}

ExtendedValue flow_value_monomial(const BasicModel& bm, const MonomialPointData& alpha,
                                  const FlowTime& s, const MultivariatePoly& f) {
  return flow_expansion_monomial(bm, alpha, s, f).value;
}

}  // namespace skeleta
