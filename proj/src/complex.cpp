#include "skeleta/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace skeleta {

const char* issue_name(IssueKind kind) {
  switch (kind) {
    case IssueKind::DuplicateComponent: return "duplicate-component";
    case IssueKind::BadMultiplicity: return "bad-multiplicity";
    case IssueKind::DuplicateStratum: return "duplicate-stratum";
    case IssueKind::EmptyStratum: return "empty-stratum";
    case IssueKind::UnknownComponent: return "unknown-component";
    case IssueKind::RepeatedComponent: return "repeated-component";
    case IssueKind::MissingVertexStratum: return "missing-vertex-stratum";
    case IssueKind::DuplicateVertexStratum: return "duplicate-vertex-stratum";
    case IssueKind::MissingFace: return "missing-face";
    case IssueKind::UnexpectedFace: return "unexpected-face";
    case IssueKind::DanglingFace: return "dangling-face";
    case IssueKind::FaceMismatch: return "face-mismatch";
    case IssueKind::SimplicialIncompatibility: return "simplicial-incompatibility";
    case IssueKind::BadLevel: return "bad-level";
    case IssueKind::MissingVertical: return "missing-vertical";
    case IssueKind::UnknownVertical: return "unknown-vertical";
    case IssueKind::UnknownHorizontal: return "unknown-horizontal";
    case IssueKind::HorizontalVertex: return "horizontal-vertex";
    case IssueKind::HorizontalNotClosed: return "horizontal-not-closed";
    case IssueKind::PointNotOnModel: return "point-not-on-model";
    case IssueKind::PointOutsideTube: return "point-outside-tube";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<Issue>& issues) {
  std::string s = "validation failed:";
  for (const auto& i : issues)
    s += std::string(" [") + issue_name(i.kind) + " " + i.subject + "]";
  return s;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

std::vector<Issue> validate(const ModelDescription& model) {
  std::vector<Issue> issues;
  std::map<std::string, long> comps;
  for (const auto& c : model.components) {
    if (!comps.emplace(c.id, c.multiplicity).second)
      issues.push_back({IssueKind::DuplicateComponent, c.id,
                        "component '" + c.id + "' is declared twice"});
    if (c.multiplicity < 1)
      issues.push_back({IssueKind::BadMultiplicity, c.id,
                        "component '" + c.id + "' has multiplicity " +
                            std::to_string(c.multiplicity) + " < 1"});
  }

  std::map<std::string, const Stratum*> by_id;
  std::set<std::string> broken;  // strata whose own data is malformed
  std::map<std::string, std::vector<std::string>> vertex_strata;
  for (const auto& s : model.strata) {
    if (!by_id.emplace(s.id, &s).second) {
      issues.push_back({IssueKind::DuplicateStratum, s.id,
                        "stratum '" + s.id + "' is declared twice"});
      broken.insert(s.id);
      continue;
    }
    if (s.components.empty()) {
      issues.push_back({IssueKind::EmptyStratum, s.id,
                        "stratum '" + s.id + "' lies on no component"});
      broken.insert(s.id);
      continue;
    }
    std::set<std::string> seen;
    for (const auto& c : s.components) {
      if (!comps.count(c)) {
        issues.push_back({IssueKind::UnknownComponent, s.id,
                          "stratum '" + s.id + "' refers to unknown component '" + c + "'"});
        broken.insert(s.id);
      }
      if (!seen.insert(c).second) {
        issues.push_back({IssueKind::RepeatedComponent, s.id,
                          "stratum '" + s.id + "' lists component '" + c + "' twice"});
        broken.insert(s.id);
      }
    }
    if (s.components.size() == 1) vertex_strata[s.components.front()].push_back(s.id);
  }

  for (const auto& c : model.components) {
    auto it = vertex_strata.find(c.id);
    if (it == vertex_strata.end())
      issues.push_back({IssueKind::MissingVertexStratum, c.id,
                        "component '" + c.id + "' has no vertex stratum"});
    else if (it->second.size() > 1)
      issues.push_back({IssueKind::DuplicateVertexStratum, c.id,
                        "component '" + c.id + "' has " +
                            std::to_string(it->second.size()) + " vertex strata"});
  }

  // Face maps.
  std::set<std::string> faulty = broken;
  for (const auto& s : model.strata) {
    if (broken.count(s.id) || by_id.at(s.id) != &s) continue;
    if (s.components.size() == 1) {
      if (!s.faces.empty()) {
        issues.push_back({IssueKind::UnexpectedFace, s.id,
                          "vertex stratum '" + s.id + "' declares faces"});
        faulty.insert(s.id);
      }
      continue;
    }
    const std::set<std::string> J(s.components.begin(), s.components.end());
    for (const auto& [removed, target] : s.faces) {
      if (!J.count(removed)) {
        issues.push_back({IssueKind::UnexpectedFace, s.id,
                          "stratum '" + s.id + "' declares a face for '" + removed +
                              "', which it does not lie on"});
        faulty.insert(s.id);
      }
    }
    for (const auto& j : J) {
      auto f = s.faces.find(j);
      if (f == s.faces.end()) {
        issues.push_back({IssueKind::MissingFace, s.id,
                          "stratum '" + s.id + "' has no face map for '" + j + "'"});
        faulty.insert(s.id);
        continue;
      }
      auto t = by_id.find(f->second);
      if (t == by_id.end()) {
        issues.push_back({IssueKind::DanglingFace, s.id,
                          "stratum '" + s.id + "' maps '" + j + "' to unknown stratum '" +
                              f->second + "'"});
        faulty.insert(s.id);
        continue;
      }
      std::set<std::string> expected = J;
      expected.erase(j);
      const std::set<std::string> got(t->second->components.begin(),
                                      t->second->components.end());
      if (got != expected) {
        issues.push_back({IssueKind::FaceMismatch, s.id,
                          "stratum '" + s.id + "' maps '" + j + "' to '" + f->second +
                              "', which does not lie on exactly the remaining components"});
        faulty.insert(s.id);
      }
    }
  }

  // Commuting squares: removing j then j' must agree with j' then j.
  for (const auto& s : model.strata) {
    if (faulty.count(s.id) || by_id.at(s.id) != &s || s.components.size() < 3) continue;
    bool ok = true;
    std::string detail;
    for (const auto& j : s.components) {
      const std::string& a = s.faces.at(j);
      if (faulty.count(a)) {
        ok = false;
        detail = "face '" + a + "' is malformed";
        break;
      }
      for (const auto& k : s.components) {
        if (k == j) continue;
        const std::string& b = s.faces.at(k);
        if (faulty.count(b)) continue;
        const std::string& ab = by_id.at(a)->faces.at(k);
        const std::string& ba = by_id.at(b)->faces.at(j);
        if (ab != ba) {
          ok = false;
          detail = "removing '" + j + "' then '" + k + "' gives '" + ab +
                   "' but the opposite order gives '" + ba + "'";
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok)
      issues.push_back({IssueKind::SimplicialIncompatibility, s.id,
                        "stratum '" + s.id + "': " + detail});
  }
  return issues;
}

// ------------------------------------------------------------ DualComplex

DualComplex::DualComplex(ModelDescription model) : model_(std::move(model)) {
  auto issues = validate(model_);
  if (!issues.empty()) throw ValidationError(std::move(issues));

  for (const auto& c : model_.components) multiplicity_[c.id] = c.multiplicity;
  for (const auto& s : model_.strata) {
    Simplex x;
    x.id = s.id;
    x.vertices = sorted(s.components);
    x.dimension = static_cast<long>(s.components.size()) - 1;
    x.facets = s.faces;
    simplices_.emplace(s.id, std::move(x));
    if (s.components.size() == 1) vertex_of_[s.components.front()] = s.id;
  }
  // Closures by increasing dimension.
  std::vector<Simplex*> order;
  for (auto& [id, s] : simplices_) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const Simplex* a, const Simplex* b) { return a->dimension < b->dimension; });
  for (Simplex* s : order) {
    s->closure.insert(s->id);
    for (const auto& [j, f] : s->facets) {
      const auto& sub = simplices_.at(f).closure;
      s->closure.insert(sub.begin(), sub.end());
    }
  }
}

const DualComplex::Simplex& DualComplex::simplex(const std::string& id) const {
  auto it = simplices_.find(id);
  if (it == simplices_.end()) throw DomainError("unknown stratum '" + id + "'");
  return it->second;
}

long DualComplex::multiplicity(const std::string& component) const {
  auto it = multiplicity_.find(component);
  if (it == multiplicity_.end()) throw DomainError("unknown component '" + component + "'");
  return it->second;
}

const std::string& DualComplex::vertex_stratum(const std::string& component) const {
  auto it = vertex_of_.find(component);
  if (it == vertex_of_.end()) throw DomainError("unknown component '" + component + "'");
  return it->second;
}

long DualComplex::dimension() const {
  long d = -1;
  for (const auto& [id, s] : simplices_) d = std::max(d, s.dimension);
  return d;
}

std::size_t DualComplex::count(long dimension) const {
  return static_cast<std::size_t>(std::count_if(
      simplices_.begin(), simplices_.end(),
      [&](const auto& kv) { return kv.second.dimension == dimension; }));
}

std::set<std::string> DualComplex::cofaces(const std::string& id) const {
  simplex(id);
  std::set<std::string> out;
  for (const auto& [sid, s] : simplices_)
    if (s.closure.count(id)) out.insert(sid);
  return out;
}

Subcomplex DualComplex::full() const {
  Subcomplex s;
  for (const auto& [id, x] : simplices_) s.strata.insert(id);
  return s;
}

Subcomplex DualComplex::closure(const std::set<std::string>& strata) const {
  Subcomplex s;
  for (const auto& id : strata) {
    const auto& c = simplex(id).closure;
    s.strata.insert(c.begin(), c.end());
  }
  return s;
}

bool DualComplex::is_face_closed(const Subcomplex& s) const {
  for (const auto& id : s.strata) {
    if (!contains(id)) return false;
    for (const auto& f : simplex(id).closure)
      if (!s.strata.count(f)) return false;
  }
  return true;
}

DualComplex build_complex(const ModelDescription& model) { return DualComplex(model); }

// ---------------------------------------------------------- coordinates

void check_point(const DualComplex& dc, const SkeletonPoint& p) {
  const auto& s = dc.simplex(p.stratum);
  if (p.barycentric.size() != s.vertices.size())
    throw DomainError("point on '" + p.stratum + "' needs one coordinate per component");
  Rational total = 0;
  for (const auto& v : s.vertices) {
    auto it = p.barycentric.find(v);
    if (it == p.barycentric.end())
      throw DomainError("point on '" + p.stratum + "' lacks a coordinate for '" + v + "'");
    if (it->second < 0)
      throw DomainError("negative barycentric coordinate for '" + v + "'");
    total += it->second;
  }
  if (total != 1)
    throw DomainError("barycentric coordinates on '" + p.stratum + "' sum to " +
                      to_string(total) + ", not 1");
}

SkeletonPoint push_to_support(const DualComplex& dc, const SkeletonPoint& p) {
  check_point(dc, p);
  SkeletonPoint q = p;
  for (const auto& [v, b] : p.barycentric) {
    if (b != 0) continue;
    q.stratum = dc.simplex(q.stratum).facets.at(v);
    q.barycentric.erase(v);
  }
  return q;
}

MonomialPointData phi(const DualComplex& dc, const SkeletonPoint& p) {
  SkeletonPoint q = push_to_support(dc, p);
  MonomialPointData d{q.stratum, {}};
  for (const auto& [v, b] : q.barycentric) {
    Rational a = b / dc.multiplicity(v);
    a.canonicalize();
    d.alpha.emplace(v, a);
  }
  return d;
}

SkeletonPoint phi_inverse(const DualComplex& dc, const MonomialPointData& d) {
  const auto& s = dc.simplex(d.stratum);
  if (d.alpha.size() != s.vertices.size())
    throw DomainError("monomial data on '" + d.stratum + "' needs one weight per component");
  SkeletonPoint p{d.stratum, {}};
  Rational total = 0;
  for (const auto& v : s.vertices) {
    auto it = d.alpha.find(v);
    if (it == d.alpha.end())
      throw DomainError("monomial data on '" + d.stratum + "' lacks a weight for '" + v + "'");
    if (it->second < 0) throw DomainError("negative weight for '" + v + "'");
    Rational b = it->second * dc.multiplicity(v);
    total += b;
    p.barycentric.emplace(v, b);
  }
  if (total != 1)
    throw DomainError("weights on '" + d.stratum + "' violate sum alpha_i N_i = 1 (sum is " +
                      to_string(total) + ")");
  return push_to_support(dc, p);
}

SkeletonPoint retract(const DualComplex& dc, const std::string& center,
                      const std::map<std::string, Rational>& alpha_at_center) {
  return phi_inverse(dc, MonomialPointData{center, alpha_at_center});
}

std::vector<std::set<std::string>> connected_components(const DualComplex& dc,
                                                        const Subcomplex& s) {
  // Union-find over component ids; each stratum glues its vertices.
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    auto it = parent.find(x);
    if (it->second == x) return x;
    std::string r = find(it->second);
    parent[x] = r;
    return r;
  };
  for (const auto& id : s.strata)
    for (const auto& v : dc.simplex(id).vertices) parent.emplace(v, v);
  for (const auto& id : s.strata) {
    const auto& vs = dc.simplex(id).vertices;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      std::string a = find(vs[0]), b = find(vs[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::string, std::set<std::string>> groups;
  for (const auto& id : s.strata) groups[find(dc.simplex(id).vertices.front())].insert(id);
  std::vector<std::set<std::string>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

std::vector<std::set<std::string>> connected_components(const DualComplex& dc) {
  return connected_components(dc, dc.full());
}

std::string to_dot(const DualComplex& dc) {
  std::ostringstream os;
  os << "graph dual_complex {\n";
  for (const auto& c : dc.model().components)
    os << "  \"" << c.id << "\" [label=\"" << c.id << " (N=" << c.multiplicity << ")\"];\n";
  for (const auto& [id, s] : dc.simplices())
    if (s.dimension == 1)
      os << "  \"" << s.vertices[0] << "\" -- \"" << s.vertices[1] << "\" [label=\"" << id
         << "\"];\n";
  for (const auto& [id, s] : dc.simplices()) {
    if (s.dimension < 2) continue;
    os << "  // " << s.dimension << "-face " << id << ":";
    for (const auto& v : s.vertices) os << " " << v;
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace skeleta
