#include "skeleta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "skeleta/io.hpp"
#include "skeleta/parse.hpp"
#include "skeleta/sampling.hpp"

namespace skeleta {
namespace {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;  // model first, then forms
  std::string output;
  bool emit_dot = false;
  bool verify = false;
  std::size_t samples = 500;
  std::uint64_t seed = 0x5eed;

  // weight
  std::string stratum;
  std::vector<std::string> beta;

  // check / flow / retract
  std::vector<std::string> rigid_files;
  std::string point_file;
  long n1 = 1, n2 = 1, ramification = 1;
  std::string x1, x2, alpha, f, s = "inf";
};

Json issues_json(const std::vector<Issue>& issues, const std::string& file) {
  Json arr = Json::array();
  for (const auto& i : issues) {
    Json j = {{"kind", issue_name(i.kind)}, {"subject", i.subject}, {"message", i.message}};
    if (!file.empty()) j["file"] = file;
    arr.push_back(std::move(j));
  }
  return arr;
}

void report(std::ostream& err, const std::vector<Issue>& issues, const std::string& file) {
  for (const auto& i : issues)
    err << (file.empty() ? "" : file + ": ") << issue_name(i.kind) << " '" << i.subject
        << "': " << i.message << "\n";
}

DualComplex load_complex(const std::string& path) {
  return DualComplex(model_from_json(read_json_file(path)));
}

std::vector<PluricanonicalForm> load_forms(const DualComplex& dc,
                                           const std::vector<std::string>& paths) {
  std::vector<PluricanonicalForm> forms;
  for (const auto& p : paths) {
    forms.push_back(form_from_json(read_json_file(p)));
    require_valid(dc, forms.back());
  }
  return forms;
}

// Reports for a computed skeleton.
Json skeleton_report(const DualComplex& dc, const Subcomplex& s) {
  Json j = to_json(s);
  j["connected"] = is_connected(dc, s);
  if (s.empty()) {
    j["pseudomanifold"] = false;
    j["degenerate"] = true;
  } else {
    long d = 0;
    for (const auto& id : s.strata) d = std::max(d, dc.simplex(id).dimension);
    j["dimension"] = d;
    j["pseudomanifold"] = is_closed_pseudomanifold(dc, s);
    j["degenerate"] = d == 0;
  }
  return j;
}

// Samples interior points of every face and checks the weight function
// against the global weight and the essential faces.
Json verify_weights(const DualComplex& dc, const PluricanonicalForm& form, const Subcomplex& ks,
                    std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rational wmin = global_weight(dc, form);
  std::size_t checked = 0, failures = 0;
  for (const auto& [id, s] : dc.simplices()) {
    for (std::size_t k = 0; k < samples; ++k) {
      const WeightValue w = weight_at(dc, form, random_interior_point(dc, id, rng));
      ++checked;
      if (w.value < wmin) ++failures;
      if (ks.strata.count(id) && (w.value != wmin || w.strict_lower_bound)) ++failures;
    }
  }
  return {{"samplesChecked", checked}, {"failures", failures}, {"seed", seed}};
}

RigidPointSpec rigid_from_config(const RunConfig& cfg) {
  if (!cfg.point_file.empty()) return rigid_point_from_json(read_json_file(cfg.point_file));
  if (cfg.x1.empty() || cfg.x2.empty())
    throw CLI::ValidationError("point", "give --point FILE or both --x1 and --x2");
  Json j = {{"N1", cfg.n1}, {"N2", cfg.n2}, {"x1", cfg.x1}, {"x2", cfg.x2},
            {"ramification", cfg.ramification}};
  return rigid_point_from_json(j);
}

std::map<std::string, Rational> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--beta", "expected ID=p/q, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "check") {
    bool ok = true;
    Json result = {{"issues", Json::array()}};
    auto add = [&](const std::vector<Issue>& issues, const std::string& file) {
      report(err, issues, file);
      for (auto& i : issues_json(issues, file)) result["issues"].push_back(i);
      ok = ok && issues.empty();
    };
    if (!cfg.inputs.empty()) {
      const ModelDescription model = model_from_json(read_json_file(cfg.inputs.front()));
      auto issues = validate(model);
      add(issues, cfg.inputs.front());
      if (issues.empty()) {
        DualComplex dc(model);
        for (std::size_t k = 1; k < cfg.inputs.size(); ++k)
          add(validate_form(dc, form_from_json(read_json_file(cfg.inputs[k]))), cfg.inputs[k]);
      }
    }
    for (const auto& path : cfg.rigid_files) {
      RigidPointSpec r = rigid_point_from_json(read_json_file(path));
      add(validate_point(BasicModel(r.n1, r.n2), r.point), path);
    }
    result["valid"] = ok;
    out << result.dump(2) << "\n";
    return ok ? kSuccess : kValidationError;
  }

  if (cfg.command == "complex") {
    DualComplex dc = load_complex(cfg.inputs.front());
    if (cfg.emit_dot)
      out << to_dot(dc);
    else
      out << to_json(dc).dump(2) << "\n";
    return kSuccess;
  }

  if (cfg.command == "weight") {
    DualComplex dc = load_complex(cfg.inputs.at(0));
    auto forms = load_forms(dc, {cfg.inputs.at(1)});
    SkeletonPoint p{cfg.stratum, parse_assignments(cfg.beta)};
    WeightValue w = weight_at(dc, forms.front(), p);
    Json j = {{"point", to_json(push_to_support(dc, p))},
              {"value", rational_json(w.value)},
              {"strictLowerBound", w.strict_lower_bound},
              {"globalWeight", rational_json(global_weight(dc, forms.front()))}};
    out << j.dump(2) << "\n";
    return kSuccess;
  }

  if (cfg.command == "ks") {
    DualComplex dc = load_complex(cfg.inputs.at(0));
    auto forms = load_forms(dc, {cfg.inputs.at(1)});
    Subcomplex s = ks_skeleton(dc, forms.front());
    Json j = skeleton_report(dc, s);
    j["globalWeight"] = rational_json(global_weight(dc, forms.front()));
    if (cfg.verify) {
      j["verification"] = verify_weights(dc, forms.front(), s, cfg.samples, cfg.seed);
      if (j["verification"]["failures"] != 0) {
        out << j.dump(2) << "\n";
        err << "weight verification failed\n";
        return kValidationError;
      }
    }
    out << j.dump(2) << "\n";
    return kSuccess;
  }

  if (cfg.command == "essential") {
    DualComplex dc = load_complex(cfg.inputs.at(0));
    std::vector<std::string> paths(cfg.inputs.begin() + 1, cfg.inputs.end());
    auto forms = load_forms(dc, paths);
    Subcomplex s = essential_skeleton(dc, forms);
    Json j = skeleton_report(dc, s);
    Json weights = Json::array();
    for (const auto& f : forms) weights.push_back(rational_json(global_weight(dc, f)));
    j["globalWeights"] = std::move(weights);
    j["formsUsed"] = forms.size();
    out << j.dump(2) << "\n";
    return kSuccess;
  }

  if (cfg.command == "flow") {
    const MultivariatePoly f = parse_polynomial(cfg.f, std::size_t{2});
    const FlowTime s = FlowTime::parse(cfg.s);
    Json j;
    if (!cfg.alpha.empty()) {
      const BasicModel bm(cfg.n1, cfg.n2);
      const auto comma = cfg.alpha.find(',');
      if (comma == std::string::npos)
        throw CLI::ValidationError("--alpha", "expected a1,a2");
      MonomialPointData d{"O",
                          {{"E1", parse_rational(cfg.alpha.substr(0, comma))},
                           {"E2", parse_rational(cfg.alpha.substr(comma + 1))}}};
      j = to_json(flow_expansion_monomial(bm, d, s, f));
      j["alpha"] = to_json(d);
    } else {
      RigidPointSpec r = rigid_from_config(cfg);
      const BasicModel bm(r.n1, r.n2);
      j = to_json(flow_expansion(bm, r.point, s, f));
      j["point"] = to_json(r);
    }
    j["s"] = s.str();
    out << j.dump(2) << "\n";
    return kSuccess;
  }

  if (cfg.command == "retract") {
    RigidPointSpec r = rigid_from_config(cfg);
    const BasicModel bm(r.n1, r.n2);
    MonomialPointData d = retract_point(bm, r.point);
    Json j = {{"point", to_json(r)},
              {"monomial", to_json(d)},
              {"skeletonPoint", to_json(phi_inverse(bm.complex(), d))}};
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Skeleta of sncd degenerations with exact rational arithmetic", "skeleta"};
  app.require_subcommand(1);
  app.add_option("-o,--output", cfg.output, "Write results to this file");
  app.add_option("--seed", cfg.seed, "Seed for property sampling");
  app.add_option("--samples", cfg.samples, "Samples per face for --verify")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Validate a model, forms and rigid points");
  check->add_option("files", cfg.inputs, "MODEL [FORM...]")->check(CLI::ExistingFile);
  check->add_option("--rigid", cfg.rigid_files, "Rigid point file")->check(CLI::ExistingFile);

  auto* cx = app.add_subcommand("complex", "Dual intersection complex of a model");
  cx->add_option("model", cfg.inputs, "Model file")->required()->check(CLI::ExistingFile);
  cx->add_flag("--dot", cfg.emit_dot, "Emit Graphviz instead of JSON");

  auto* wt = app.add_subcommand("weight", "Weight function at a skeleton point");
  wt->add_option("files", cfg.inputs, "MODEL FORM")->required()->expected(2)->check(CLI::ExistingFile);
  wt->add_option("--stratum", cfg.stratum, "Stratum of the point")->required();
  wt->add_option("--beta", cfg.beta, "Barycentric coordinate COMPONENT=p/q")->required();

  auto* ks = app.add_subcommand("ks", "Kontsevich-Soibelman skeleton of one form");
  ks->add_option("files", cfg.inputs, "MODEL FORM")->required()->expected(2)->check(CLI::ExistingFile);
  ks->add_flag("--verify", cfg.verify, "Cross-check weights on sampled points");

  auto* es = app.add_subcommand(
      "essential",
      "Union of the skeleta of the given forms (a subcomplex of the essential skeleton)");
  es->add_option("files", cfg.inputs, "MODEL FORM [FORM...]")
      ->required()
      ->expected(2, 1 << 20)
      ->check(CLI::ExistingFile);

  auto add_point_options = [&](CLI::App* sub) {
    sub->add_option("--point", cfg.point_file, "Rigid point file")->check(CLI::ExistingFile);
    sub->add_option("--n1", cfg.n1, "Multiplicity N1")->check(CLI::PositiveNumber);
    sub->add_option("--n2", cfg.n2, "Multiplicity N2")->check(CLI::PositiveNumber);
    sub->add_option("--x1", cfg.x1, "Coordinate T1(x)");
    sub->add_option("--x2", cfg.x2, "Coordinate T2(x)");
    sub->add_option("--ramification", cfg.ramification,
                    "Coordinates live in K(u), u^e = t, written in u")
        ->check(CLI::PositiveNumber);
  };
  auto* fl = app.add_subcommand("flow", "Valuation of f along the retraction flow");
  add_point_options(fl);
  fl->add_option("--alpha", cfg.alpha, "Monomial point a1,a2 instead of a rigid point");
  fl->add_option("--f", cfg.f, "Polynomial in T1, T2")->required();
  fl->add_option("--s", cfg.s, "Flow time: nonnegative rational or inf");

  auto* rt = app.add_subcommand("retract", "Image of a rigid point on the skeleton");
  add_point_options(rt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "cannot write '" << cfg.output << "'\n";
      return kUsageError;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    return dispatch(cfg, sink, err);
  } catch (const ValidationError& e) {
    report(err, e.issues(), "");
    return kValidationError;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace skeleta
