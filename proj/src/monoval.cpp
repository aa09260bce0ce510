#include "skeleta/monoval.hpp"

#include <sstream>

namespace skeleta {

MultivariatePoly MultivariatePoly::constant(std::size_t arity, const BaseElement& c) {
  MultivariatePoly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

MultivariatePoly MultivariatePoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw DomainError("variable index out of range");
  Exponent e(arity, 0);
  e[index] = 1;
  return monomial(e, BaseElement(1));
}

MultivariatePoly MultivariatePoly::monomial(const Exponent& exponent,
                                            const BaseElement& c) {
  MultivariatePoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

bool MultivariatePoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponent(arity_, 0));
}

BaseElement MultivariatePoly::constant_term() const {
  auto it = terms_.find(Exponent(arity_, 0));
  return it == terms_.end() ? BaseElement() : it->second;
}

bool MultivariatePoly::uses_variable(std::size_t index) const {
  for (const auto& [e, c] : terms_)
    if (e[index] > 0) return true;
  return false;
}

void MultivariatePoly::add_term(const Exponent& exponent, const BaseElement& c) {
  if (exponent.size() != arity_) throw DomainError("exponent arity mismatch");
  for (long k : exponent)
    if (k < 0) throw DomainError("negative exponent in polynomial");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultivariatePoly MultivariatePoly::widened(std::size_t arity) const {
  if (arity < arity_) throw DomainError("cannot widen to a smaller arity");
  MultivariatePoly p(arity);
  for (const auto& [e, c] : terms_) {
    Exponent w = e;
    w.resize(arity, 0);
    p.terms_.emplace(std::move(w), c);
  }
  return p;
}

MultivariatePoly MultivariatePoly::restricted(const std::vector<std::size_t>& keep) const {
  std::vector<bool> kept(arity_, false);
  for (std::size_t i : keep) {
    if (i >= arity_) throw DomainError("variable index out of range");
    kept[i] = true;
  }
  for (std::size_t i = 0; i < arity_; ++i)
    if (!kept[i] && uses_variable(i))
      throw DomainError("polynomial uses dropped variable T" + std::to_string(i + 1));
  MultivariatePoly p(keep.size());
  for (const auto& [e, c] : terms_) {
    Exponent r;
    r.reserve(keep.size());
    for (std::size_t i : keep) r.push_back(e[i]);
    p.add_term(r, c);
  }
  return p;
}

MultivariatePoly MultivariatePoly::pow(unsigned long k) const {
  MultivariatePoly result = constant(arity_, BaseElement(1));
  MultivariatePoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MultivariatePoly operator+(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (a.arity_ != b.arity_) throw DomainError("polynomial arity mismatch");
  MultivariatePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultivariatePoly operator-(const MultivariatePoly& a) {
  MultivariatePoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultivariatePoly operator-(const MultivariatePoly& a, const MultivariatePoly& b) {
  return a + (-b);
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (a.arity_ != b.arity_) throw DomainError("polynomial arity mismatch");
  MultivariatePoly r(a.arity_);
  Exponent e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

std::string MultivariatePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "T" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool unit = c == BaseElement(1);
    if (mono.empty())
      os << "(" << c.str() << ")";
    else if (unit)
      os << mono;
    else
      os << "(" << c.str() << ")*" << mono;
  }
  return os.str();
}

// ------------------------------------------------------ MonomialWeights

MonomialWeights::MonomialWeights(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  for (const auto& a : alpha_)
    if (a < 0) throw DomainError("monomial weights must be nonnegative");
}

MonomialWeights::MonomialWeights(std::vector<Rational> alpha,
                                 std::vector<long> multiplicities)
    : MonomialWeights(std::move(alpha)) {
  if (multiplicities.size() != alpha_.size())
    throw DomainError("weights and multiplicities differ in length");
  Rational total = 0;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (multiplicities[i] < 1) throw DomainError("multiplicities must be positive");
    total += alpha_[i] * multiplicities[i];
  }
  if (total != 1)
    throw DomainError("weights violate sum alpha_i N_i = 1 (sum is " +
                      to_string(total) + ")");
  multiplicities_ = std::move(multiplicities);
}

ExtendedValue eval(const MonomialWeights& w, const MultivariatePoly& f) {
  if (f.arity() != w.arity())
    throw DomainError("arity mismatch: polynomial in " + std::to_string(f.arity()) +
                      " variables, weights of length " + std::to_string(w.arity()));
  ExtendedValue best = ExtendedValue::infinity();
  for (const auto& [beta, d] : f.terms()) {
    Rational v = d.order();
    for (std::size_t i = 0; i < beta.size(); ++i) v += w.alpha()[i] * beta[i];
    best = min(best, ExtendedValue(v));
  }
  return best;
}

bool is_divisorial(const MonomialWeights&) { return true; }

std::vector<std::size_t> support(const MonomialWeights& w) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < w.arity(); ++i)
    if (w.alpha()[i] > 0) idx.push_back(i);
  return idx;
}

MonomialWeights restrict_to_support(const MonomialWeights& w) {
  std::vector<Rational> alpha;
  std::vector<long> mult;
  for (std::size_t i : support(w)) {
    alpha.push_back(w.alpha()[i]);
    if (w.multiplicities()) mult.push_back((*w.multiplicities())[i]);
  }
  if (w.multiplicities()) return MonomialWeights(std::move(alpha), std::move(mult));
  return MonomialWeights(std::move(alpha));
}

}  // namespace skeleta
