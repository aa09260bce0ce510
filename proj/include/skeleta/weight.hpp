#pragma once

// Weight functions of pluricanonical forms on the skeleton of an sncd model,
// the Kontsevich-Soibelman skeleton Sk(X, omega), the essential skeleton, and
// topological checks on subcomplexes.

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skeleta/complex.hpp"

namespace skeleta {

/// An m-pluricanonical form seen through one model: the multiplicities nu_i
/// of the components in div(omega), and the strata lying in the closure of
/// the horizontal part of div(omega).
struct PluricanonicalForm {
  long m = 1;
  std::map<std::string, long> vertical;
  std::set<std::string> horizontal;

  friend bool operator==(const PluricanonicalForm&, const PluricanonicalForm&) = default;
};

std::vector<Issue> validate_form(const DualComplex& dc, const PluricanonicalForm& form);
/// Throws ValidationError if validate_form reports anything.
void require_valid(const DualComplex& dc, const PluricanonicalForm& form);

/// omega multiplied by a scalar of valuation c: nu_i -> nu_i + c N_i.
PluricanonicalForm scaled(const DualComplex& dc, const PluricanonicalForm& form, long c);
/// k-th tensor power: (m, nu) -> (k m, k nu), same horizontal strata.
PluricanonicalForm tensor_power(const PluricanonicalForm& form, long k);

/// (nu + m) / N.
Rational divisorial_weight(long multiplicity, long nu, long m);

/// min over components of (nu_i + m) / N_i.
Rational global_weight(const DualComplex& dc, const PluricanonicalForm& form);

struct WeightValue {
  Rational value;
  /// Set on horizontal strata, where the true weight exceeds `value`.
  bool strict_lower_bound = false;

  friend bool operator==(const WeightValue&, const WeightValue&) = default;
};

/// Weight at a skeleton point: sum_j beta_j (nu_j + m) / N_j on the support
/// face of p.
WeightValue weight_at(const DualComplex& dc, const PluricanonicalForm& form,
                      const SkeletonPoint& p);

/// Union of the omega-essential faces.
Subcomplex ks_skeleton(const DualComplex& dc, const PluricanonicalForm& form);

/// Union of ks_skeleton over the supplied forms. Only a lower bound for the
/// essential skeleton, which ranges over all nonzero forms.
Subcomplex essential_skeleton(const DualComplex& dc,
                              std::span<const PluricanonicalForm> forms);

/// Connectivity of the subcomplex. The empty subcomplex counts as connected.
bool is_connected(const DualComplex& dc, const Subcomplex& s);

/// Pure of top dimension d, every (d-1)-face in exactly two d-faces, d-faces
/// connected through (d-1)-faces. A lone vertex passes. Throws on empty input.
bool is_closed_pseudomanifold(const DualComplex& dc, const Subcomplex& s);

}  // namespace skeleta
