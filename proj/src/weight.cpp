#include "skeleta/weight.hpp"

#include <algorithm>
#include <stdexcept>
#include <functional>

namespace skeleta {

std::vector<Issue> validate_form(const DualComplex& dc, const PluricanonicalForm& form) {
  std::vector<Issue> issues;
  if (form.m < 1)
    issues.push_back({IssueKind::BadLevel, "m",
                      "pluricanonical level m = " + std::to_string(form.m) + " < 1"});
  for (const auto& c : dc.model().components)
    if (!form.vertical.count(c.id))
      issues.push_back({IssueKind::MissingVertical, c.id,
                        "no multiplicity nu given for component '" + c.id + "'"});
  for (const auto& [id, nu] : form.vertical) {
    bool known = std::any_of(dc.model().components.begin(), dc.model().components.end(),
                             [&](const Component& c) { return c.id == id; });
    if (!known)
      issues.push_back({IssueKind::UnknownVertical, id,
                        "multiplicity given for unknown component '" + id + "'"});
  }
  for (const auto& id : form.horizontal) {
    if (!dc.contains(id)) {
      issues.push_back({IssueKind::UnknownHorizontal, id,
                        "horizontal flag on unknown stratum '" + id + "'"});
      continue;
    }
    if (dc.simplex(id).dimension == 0) {
      issues.push_back({IssueKind::HorizontalVertex, id,
                        "vertex stratum '" + id + "' is flagged horizontal"});
    }
    for (const auto& deeper : dc.cofaces(id))
      if (!form.horizontal.count(deeper))
        issues.push_back({IssueKind::HorizontalNotClosed, deeper,
                          "stratum '" + deeper + "' lies in horizontal stratum '" + id +
                              "' but is not flagged"});
  }
  return issues;
}

void require_valid(const DualComplex& dc, const PluricanonicalForm& form) {
  auto issues = validate_form(dc, form);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

PluricanonicalForm scaled(const DualComplex& dc, const PluricanonicalForm& form, long c) {
  PluricanonicalForm out = form;
  for (auto& [id, nu] : out.vertical) nu += c * dc.multiplicity(id);
  return out;
}

PluricanonicalForm tensor_power(const PluricanonicalForm& form, long k) {
  if (k < 1) throw DomainError("tensor power must be positive");
  PluricanonicalForm out = form;
  out.m *= k;
  for (auto& [id, nu] : out.vertical) nu *= k;
  return out;
}

Rational divisorial_weight(long multiplicity, long nu, long m) {
  if (multiplicity < 1) throw DomainError("multiplicity must be positive");
  if (m < 1) throw DomainError("pluricanonical level must be positive");
  Rational w(nu + m, multiplicity);
  w.canonicalize();
  return w;
}

namespace {

Rational component_weight(const DualComplex& dc, const PluricanonicalForm& form,
                          const std::string& component) {
  return divisorial_weight(dc.multiplicity(component), form.vertical.at(component), form.m);
}

}  // namespace

Rational global_weight(const DualComplex& dc, const PluricanonicalForm& form) {
  require_valid(dc, form);
  const auto& comps = dc.model().components;
  Rational best = component_weight(dc, form, comps.front().id);
  for (const auto& c : comps) best = std::min(best, component_weight(dc, form, c.id));
  return best;
}

WeightValue weight_at(const DualComplex& dc, const PluricanonicalForm& form,
                      const SkeletonPoint& p) {
  require_valid(dc, form);
  SkeletonPoint q = push_to_support(dc, p);
  WeightValue w{0, form.horizontal.count(q.stratum) > 0};
  for (const auto& [v, b] : q.barycentric) w.value += b * component_weight(dc, form, v);
  w.value.canonicalize();
  return w;
}

Subcomplex ks_skeleton(const DualComplex& dc, const PluricanonicalForm& form) {
  const Rational wmin = global_weight(dc, form);
  Subcomplex s;
  for (const auto& [id, x] : dc.simplices()) {
    if (form.horizontal.count(id)) continue;
    bool essential = std::all_of(x.vertices.begin(), x.vertices.end(), [&](const auto& v) {
      return component_weight(dc, form, v) == wmin;
    });
    if (essential) s.strata.insert(id);
  }
  if (!dc.is_face_closed(s))
    throw std::logic_error("essential faces are not face-closed");
  return s;
}

Subcomplex essential_skeleton(const DualComplex& dc,
                              std::span<const PluricanonicalForm> forms) {
  if (forms.empty()) throw DomainError("essential skeleton needs at least one form");
  Subcomplex s;
  for (const auto& f : forms) {
    Subcomplex k = ks_skeleton(dc, f);
    s.strata.insert(k.strata.begin(), k.strata.end());
  }
  return s;
}

bool is_connected(const DualComplex& dc, const Subcomplex& s) {
  return connected_components(dc, s).size() <= 1;
}

bool is_closed_pseudomanifold(const DualComplex& dc, const Subcomplex& s) {
  if (s.empty()) throw DomainError("pseudo-manifold test on an empty subcomplex");
  long d = -1;
  for (const auto& id : s.strata) d = std::max(d, dc.simplex(id).dimension);

  std::vector<std::string> top;
  for (const auto& id : s.strata)
    if (dc.simplex(id).dimension == d) top.push_back(id);

  // Purity: every stratum is a face of a top-dimensional one.
  std::set<std::string> covered;
  for (const auto& id : top) {
    const auto& c = dc.simplex(id).closure;
    covered.insert(c.begin(), c.end());
  }
  for (const auto& id : s.strata)
    if (!covered.count(id)) return false;

  if (d == 0) return top.size() == 1;

  // Each ridge in exactly two top faces.
  std::map<std::string, std::vector<std::size_t>> ridge_to_top;
  for (std::size_t i = 0; i < top.size(); ++i)
    for (const auto& [v, f] : dc.simplex(top[i]).facets) ridge_to_top[f].push_back(i);
  for (const auto& id : s.strata) {
    if (dc.simplex(id).dimension != d - 1) continue;
    auto it = ridge_to_top.find(id);
    if (it == ridge_to_top.end() || it->second.size() != 2) return false;
  }

  // Top faces connected through ridges.
  std::vector<std::size_t> parent(top.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [ridge, tops] : ridge_to_top)
    for (std::size_t k = 1; k < tops.size(); ++k) parent[find(tops[k])] = find(tops[0]);
  for (std::size_t i = 1; i < top.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace skeleta
