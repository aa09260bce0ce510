#pragma once

// JSON schemas for models, forms, rigid points and results. Rationals are
// strings "p/q" in lowest terms; +inf is "inf". Objects serialize with
// sorted keys.

#include <json.hpp>

#include <filesystem>
#include <optional>

#include "skeleta/flow.hpp"
#include "skeleta/weight.hpp"

namespace skeleta {

using Json = nlohmann::json;

/// Malformed JSON or a schema mismatch.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const ModelDescription& m);
ModelDescription model_from_json(const Json& j);

Json to_json(const PluricanonicalForm& f);
PluricanonicalForm form_from_json(const Json& j);

Json to_json(const SkeletonPoint& p);
SkeletonPoint point_from_json(const Json& j);

Json to_json(const MonomialPointData& d);

/// Rigid point file: {"N1":1,"N2":1,"x1":"t/(1+t)","x2":"1+t"} with an
/// optional "ramification": e, in which case x1, x2 are written in u = t^(1/e).
struct RigidPointSpec {
  long n1 = 1;
  long n2 = 1;
  RigidPoint point;
  std::string x1_text;
  std::string x2_text;
};
RigidPointSpec rigid_point_from_json(const Json& j);
Json to_json(const RigidPointSpec& p);

/// Simplices, dimensions, vertices and facets of a dual complex.
Json to_json(const DualComplex& dc);

/// {"strata":[...]} plus whatever report fields the caller adds.
Json to_json(const Subcomplex& s);
Subcomplex subcomplex_from_json(const Json& j);

Json to_json(const FlowExpansion& e);

std::string rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Reads and parses a JSON file; FormatError on failure.
Json read_json_file(const std::filesystem::path& path);

}  // namespace skeleta
