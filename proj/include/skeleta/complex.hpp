#pragma once

// Combinatorial sncd models, their dual intersection complexes, and the
// coordinate maps between barycentric points and monomial data.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeleta/rational.hpp"

namespace skeleta {

struct Component {
  std::string id;
  long multiplicity = 1;

  friend bool operator==(const Component&, const Component&) = default;
};

/// A connected component of some intersection E_J. `faces` maps each j in J
/// to the stratum over J \ {j} whose closure contains this one; it is empty
/// for vertex strata.
struct Stratum {
  std::string id;
  std::vector<std::string> components;
  std::map<std::string, std::string> faces;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct ModelDescription {
  std::vector<Component> components;
  std::vector<Stratum> strata;

  friend bool operator==(const ModelDescription&, const ModelDescription&) = default;
};

enum class IssueKind {
  DuplicateComponent,
  BadMultiplicity,
  DuplicateStratum,
  EmptyStratum,
  UnknownComponent,
  RepeatedComponent,
  MissingVertexStratum,
  DuplicateVertexStratum,
  MissingFace,
  UnexpectedFace,
  DanglingFace,
  FaceMismatch,
  SimplicialIncompatibility,
  // Pluricanonical forms.
  BadLevel,
  MissingVertical,
  UnknownVertical,
  UnknownHorizontal,
  HorizontalVertex,
  HorizontalNotClosed,
  // Rigid points.
  PointNotOnModel,
  PointOutsideTube,
};

/// Stable machine name, e.g. "simplicial-incompatibility".
const char* issue_name(IssueKind kind);

struct Issue {
  IssueKind kind;
  std::string subject;  // offending component/stratum id
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

/// Every invariant violation of the model, in a deterministic order.
std::vector<Issue> validate(const ModelDescription& model);

/// A face-closed set of strata.
struct Subcomplex {
  std::set<std::string> strata;

  bool empty() const { return strata.empty(); }
  friend bool operator==(const Subcomplex&, const Subcomplex&) = default;
};

/// The finite simplicial set attached to a validated model: one simplex of
/// dimension |J| - 1 per stratum, vertices the components.
class DualComplex {
 public:
  struct Simplex {
    std::string id;
    std::vector<std::string> vertices;  // component ids, sorted
    long dimension = 0;
    std::map<std::string, std::string> facets;  // removed vertex -> stratum
    std::set<std::string> closure;              // all faces, itself included
  };

  /// Throws ValidationError carrying every issue found.
  explicit DualComplex(ModelDescription model);

  const ModelDescription& model() const { return model_; }
  const std::map<std::string, Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(const std::string& id) const;
  bool contains(const std::string& id) const { return simplices_.count(id) > 0; }

  long multiplicity(const std::string& component) const;
  /// Id of the vertex stratum of a component.
  const std::string& vertex_stratum(const std::string& component) const;

  std::size_t vertex_count() const { return model_.components.size(); }
  long dimension() const;
  /// Number of simplices of the given dimension.
  std::size_t count(long dimension) const;

  /// Strata having `id` as a face (itself included).
  std::set<std::string> cofaces(const std::string& id) const;

  Subcomplex full() const;
  Subcomplex closure(const std::set<std::string>& strata) const;
  bool is_face_closed(const Subcomplex& s) const;

 private:
  ModelDescription model_;
  std::map<std::string, long> multiplicity_;
  std::map<std::string, std::string> vertex_of_;
  std::map<std::string, Simplex> simplices_;
};

DualComplex build_complex(const ModelDescription& model);

/// A point of |Delta| with rational barycentric coordinates on a stratum.
struct SkeletonPoint {
  std::string stratum;
  std::map<std::string, Rational> barycentric;

  friend bool operator==(const SkeletonPoint&, const SkeletonPoint&) = default;
};

/// Monomial data: weights alpha_j on the local equations of the components
/// through a stratum, normalized by sum alpha_j N_j = 1.
struct MonomialPointData {
  std::string stratum;
  std::map<std::string, Rational> alpha;

  friend bool operator==(const MonomialPointData&, const MonomialPointData&) = default;
};

/// Checks the coordinates of p against its stratum; throws DomainError.
void check_point(const DualComplex& dc, const SkeletonPoint& p);

/// Moves p to the face spanned by its nonzero coordinates, following the face
/// maps along the vanishing ones.
SkeletonPoint push_to_support(const DualComplex& dc, const SkeletonPoint& p);

/// Barycentric point -> monomial data, alpha_j = beta_j / N_j on the support
/// face.
MonomialPointData phi(const DualComplex& dc, const SkeletonPoint& p);

/// Monomial data -> barycentric point, beta_j = alpha_j N_j. Zero weights are
/// stripped first.
SkeletonPoint phi_inverse(const DualComplex& dc, const MonomialPointData& d);

/// The skeleton point carrying the given valuations of the local equations
/// at a center stratum. Components with weight zero do not pass through the
/// center of the point and are dropped.
SkeletonPoint retract(const DualComplex& dc, const std::string& center,
                      const std::map<std::string, Rational>& alpha_at_center);

/// Connected components of the given strata, each a set of stratum ids.
/// Two strata are connected when they share a vertex within the set.
std::vector<std::set<std::string>> connected_components(const DualComplex& dc,
                                                        const Subcomplex& s);
std::vector<std::set<std::string>> connected_components(const DualComplex& dc);

/// Graphviz rendering: one node per component, one edge per 1-stratum,
/// higher strata as comments.
std::string to_dot(const DualComplex& dc);

}  // namespace skeleta
