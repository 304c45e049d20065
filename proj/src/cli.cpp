#include "lieext/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lieext/algebra.hpp"
#include "lieext/casimir.hpp"
#include "lieext/coextend.hpp"
#include "lieext/decompose.hpp"
#include "lieext/errors.hpp"
#include "lieext/oracle.hpp"
#include "lieext/presets.hpp"

namespace lieext {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

json RunReport::to_json() const {
  json out;
  out["status"] = status;
  out["command"] = command;
  if (error_code) out["error"] = json{{"code", *error_code}, {"message", message}};
  out["payload"] = payload;
  out["provenance"] = json{{"tool", kToolName}, {"version", kToolVersion}, {"inputs", inputs}};
  return out;
}

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::UnknownPreset:
    case ErrorCode::InvalidLiePreset:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IndexOutOfRange:
      return 2;
    default:
      return 1;
  }
}

class Runner {
 public:
  Runner(const CommandSpec& spec, RunReport& report) : spec_(spec), report_(report) {}

  void dispatch() {
    const std::string& c = spec_.subcommand;
    if (c == "validate") return validate_cmd();
    if (c == "info") return info_cmd();
    if (c == "decompose") return decompose_cmd();
    if (c == "canonical") return canonical_cmd();
    if (c == "casimirs") return casimirs_cmd();
    if (c == "coextend") return coextend_cmd();
    if (c == "reduce") return reduce_cmd();
    if (c == "lift") return lift_cmd();
    if (c == "oracle-verify") return oracle_cmd();
    if (c == "preset") return preset_cmd();
    throw Error(ErrorCode::Parse, "unknown subcommand '" + c + "'");
  }

 private:
  void record(const std::string& role, const SourceText& src) {
    report_.inputs.push_back(json{{"role", role}, {"source", src.name}, {"sha256", sha256_hex(src.text)}});
  }

  StructureTensor algebra() {
    if (spec_.algebra.empty()) throw Error(ErrorCode::Parse, "--algebra is required");
    SourceText src;
    StructureTensor w = load_algebra(spec_.algebra, &src);
    record("algebra", src);
    return w;
  }

  // Validated algebra; an invalid tensor turns the run into a violation.
  std::optional<StructureTensor> valid_algebra() {
    StructureTensor w = algebra();
    const auto r = validate(w);
    if (!r.valid()) {
      violation("input tensor does not satisfy the symmetry and commutation conditions");
      report_.payload["validation"] = validation_json(r);
      return std::nullopt;
    }
    return w;
  }

  ReductionFrame frame(const StructureTensor& w) {
    auto f = detect_frame(w);
    if (!f) throw Error(ErrorCode::Inconsistent, "no unity and pseudo-zero frame in the given basis");
    return *f;
  }

  CasimirFile casimir_file() {
    SourceText src;
    CasimirFile f = load_casimirs(spec_.casimir, &src);
    record("casimir", src);
    return f;
  }

  void violation(const std::string& msg) {
    report_.status = "violation";
    report_.message = msg;
    report_.exit_code = 1;
  }

  static json validation_json(const ValidationReport& r) {
    json out;
    out["symmetric"] = r.symmetric;
    out["commuting"] = r.commuting;
    if (r.first_violation) {
      const auto& v = *r.first_violation;
      out["first_violation"] = json{{"kind", v.kind == Violation::Kind::Symmetry ? "symmetry" : "commutation"},
                                    {"indices", v.indices},
                                    {"lhs", v.lhs.str()},
                                    {"rhs", v.rhs.str()}};
    } else {
      out["first_violation"] = nullptr;
    }
    return out;
  }

  static json forms_json(const std::vector<SymmetricForm>& forms) {
    json out = json::array();
    for (const auto& f : forms) out.push_back(to_json(f.c));
    return out;
  }

  static std::vector<std::string> position_labels(const ReductionFrame& f) {
    std::vector<std::string> labels(static_cast<std::size_t>(f.tensor().dim()));
    for (int l = 0; l <= f.n(); ++l) labels[static_cast<std::size_t>(f.position_of(l) - 1)] = "e^" + std::to_string(l);
    return labels;
  }

  static std::vector<std::string> range_labels(int from, int to, const std::string& prefix) {
    std::vector<std::string> out;
    for (int l = from; l <= to; ++l) out.push_back(prefix + std::to_string(l));
    return out;
  }

  void validate_cmd() {
    StructureTensor w = algebra();
    const auto r = validate(w);
    const auto laws = check_product_laws(w);
    report_.payload["n"] = w.dim();
    report_.payload["validation"] = validation_json(r);
    report_.payload["product"] = json{{"commutative", laws.commutative}, {"associative", laws.associative}};
    if (!r.valid()) violation("tensor fails the extension conditions");
  }

  void info_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    json& p = report_.payload;
    p["n"] = w->dim();
    p["name"] = w->name();
    const auto u = find_unity(*w);
    p["unity"] = u ? to_json(u->coords) : json(nullptr);
    json ann = json::array();
    const Matrix a = annihilator(*w);
    for (std::size_t c = 0; c < a.cols(); ++c) ann.push_back(to_json(a.column(c)));
    p["annihilator"] = std::move(ann);
    p["nilpotent"] = is_nilpotent_family(*w);
    if (auto f = detect_frame(*w))
      p["frame"] = json{{"unity_pos", f->unity_pos()}, {"pseudo_zero_pos", f->pseudo_zero_pos()},
                        {"labels", position_labels(*f)}};
    else
      p["frame"] = nullptr;
    try {
      p["classification"] = classify(*w).str();
    } catch (const Error& e) {
      p["classification"] = json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    try {
      json evs = json::array();
      for (const auto& ev : common_eigenvectors(*w))
        evs.push_back(json{{"vector", to_json(ev.vector.coords)}, {"eigenvalues", to_json(ev.eigenvalues)}});
      p["common_eigenvectors"] = std::move(evs);
    } catch (const Error& e) {
      p["common_eigenvectors"] = json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
  }

  void decompose_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    const Decomposition d = decompose_ideals(*w, spec_.seed);
    json& p = report_.payload;
    p["complete"] = d.complete;
    p["block_dims"] = d.block_dims;
    p["basis_change"] = to_json(d.basis_change.a());
    json blocks = json::array();
    for (const auto& b : d.blocks) {
      json bj = algebra_to_json(b);
      try {
        bj["kind"] = classify(b).str();
      } catch (const Error& e) {
        bj["kind"] = json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
      }
      blocks.push_back(std::move(bj));
    }
    p["blocks"] = std::move(blocks);
  }

  void canonical_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    const CanonicalForm cf = canonical_solvable_basis(*w);
    report_.payload["basis_change"] = to_json(cf.basis_change.a());
    report_.payload["algebra"] = algebra_to_json(cf.tensor);
  }

  void casimirs_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    const auto n = static_cast<std::size_t>(w->dim());
    const bool both = !spec_.linear && !spec_.quadratic;
    json& p = report_.payload;
    p["n"] = w->dim();
    p["route"] = spec_.via_coextension ? "coextension" : "direct";
    if (spec_.linear || both) {
      json lin = json::array();
      for (const auto& c : canonical_vector_basis(linear_casimirs(*w), n)) lin.push_back(to_json(c.p.coords));
      p["linear"] = std::move(lin);
    }
    if (spec_.quadratic || both || spec_.via_coextension) {
      const auto forms = spec_.via_coextension ? casimir_from_boundary(frame(*w)) : quadratic_casimirs(*w);
      p["quadratic"] = forms_json(canonical_form_basis(forms, n));
    }
  }

  void coextend_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    const ReductionFrame f = frame(*w);
    const Coextension co = build_coextension(f);
    json& p = report_.payload;
    p["frame"] = json{{"unity_pos", f.unity_pos()}, {"pseudo_zero_pos", f.pseudo_zero_pos()}, {"n", f.n()}};
    p["algebra"] = algebra_to_json(*w, position_labels(f));
    p["gbar"] = to_json(co.gbar);
    p["abar"] = algebra_to_json(co.abar, range_labels(1, f.n() - 1, "e_"));
    p["solvable"] = algebra_to_json(solvable_coextension(f), range_labels(0, f.n() - 1, "e_"));
  }

  void reduce_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    const ReductionFrame f = frame(*w);
    std::vector<SymmetricForm> forms;
    if (spec_.casimir.empty())
      forms = canonical_form_basis(casimir_from_boundary(f), static_cast<std::size_t>(w->dim()));
    else
      forms = casimir_file().quadratic;
    std::vector<SymmetricForm> reduced;
    for (const auto& c : forms) reduced.push_back(reduce_casimir(f, c));
    report_.payload["algebra"] = algebra_to_json(reduced_algebra(f), range_labels(1, f.n() - 1, "e^"));
    report_.payload["quadratic"] = forms_json(reduced);
  }

  void lift_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    if (spec_.casimir.empty()) throw Error(ErrorCode::Parse, "lift needs --casimir with reduced forms");
    const ReductionFrame f = frame(*w);
    const Rational cnn = Rational::parse(spec_.cnn);
    json lifts = json::array();
    for (const auto& cbar : casimir_file().quadratic) {
      const CasimirLift l = lift_casimir(f, cbar, cnn);
      lifts.push_back(json{{"particular", to_json(l.particular.c)}, {"homogeneous", forms_json(l.homogeneous)}});
    }
    report_.payload["cnn"] = cnn.str();
    report_.payload["lifts"] = std::move(lifts);
  }

  void oracle_cmd() {
    auto w = valid_algebra();
    if (!w) return;
    SourceText lie_src;
    const LiePreset lie = load_lie(spec_.lie, &lie_src);
    record("lie", lie_src);
    CasimirFile cas;
    if (spec_.casimir.empty()) {
      cas.linear = linear_casimirs(*w);
      cas.quadratic = quadratic_casimirs(*w);
    } else {
      cas = casimir_file();
    }
    json& p = report_.payload;
    p["lie"] = lie.name;
    const auto jac = jacobi_check(*w, lie);
    json jj{{"ok", jac.ok}};
    if (!jac.ok) {
      json wit = json::array();
      for (const auto& [i, a] : jac.witness) wit.push_back(json{{"i", i}, {"a", a}});
      jj["witness"] = std::move(wit);
      jj["detail"] = jac.detail;
    }
    p["jacobi"] = std::move(jj);
    json results = json::array();
    bool all_ok = jac.ok;
    auto add = [&](const char* kind, std::size_t index, const CasimirVerdict& v) {
      json r{{"kind", kind}, {"index", index}, {"ok", v.ok}};
      if (!v.ok) {
        r["failing"] = json{{"i", v.failing->first}, {"a", v.failing->second}};
        r["residual"] = v.residual.str(lie.dim);
        all_ok = false;
      }
      results.push_back(std::move(r));
    };
    const auto m = static_cast<std::size_t>(lie.dim);
    for (std::size_t t = 0; t < cas.linear.size(); ++t) {
      if (cas.linear[t].p.coords.size() != static_cast<std::size_t>(w->dim()))
        throw Error(ErrorCode::DimensionMismatch, "linear Casimir " + std::to_string(t) + " has the wrong length");
      CasimirVerdict verdict;
      for (std::size_t a = 0; a < m && verdict.ok; ++a)
        verdict = verify_casimir(*w, lie, casimir_poly_linear(lie, cas.linear[t], unit_vector(m, a)));
      add("linear", t, verdict);
    }
    for (std::size_t t = 0; t < cas.quadratic.size(); ++t) {
      if (cas.quadratic[t].c.rows() != static_cast<std::size_t>(w->dim()))
        throw Error(ErrorCode::DimensionMismatch, "quadratic Casimir " + std::to_string(t) + " has the wrong size");
      add("quadratic", t, verify_casimir(*w, lie, casimir_poly_quadratic(lie, cas.quadratic[t])));
    }
    p["results"] = std::move(results);
    if (!all_ok) violation("oracle rejected at least one candidate");
  }

  void preset_cmd() {
    const StructureTensor w = preset(spec_.preset_name);
    const auto r = validate(w);
    if (!r.valid()) throw Error(ErrorCode::Inconsistent, "preset fails validation");
    report_.payload["algebra"] = algebra_to_json(w);
  }

  const CommandSpec& spec_;
  RunReport& report_;
};

}  // namespace

RunReport run(const CommandSpec& spec) {
  RunReport report;
  report.command = spec.subcommand;
  try {
    Runner(spec, report).dispatch();
  } catch (const Error& e) {
    report.status = "error";
    report.error_code = std::string(to_string(e.code()));
    report.message = e.what();
    report.payload = json::object();
    report.exit_code = exit_code_for(e.code());
  }
  return report;
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with universal Lie-algebra extensions and their commutative algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  CommandSpec spec;
  std::string out_path;

  auto add_common = [&](CLI::App* sub, bool needs_algebra) {
    auto* opt = sub->add_option("--algebra", spec.algebra, "Algebra file, '-' for stdin, or preset:NAME");
    if (needs_algebra) opt->required();
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the symmetry and commutation conditions");
  add_common(validate_cmd, true);
  auto* info_cmd = app.add_subcommand("info", "Unity, annihilator, frame, classification, joint eigenvectors");
  add_common(info_cmd, true);
  auto* decompose_cmd = app.add_subcommand("decompose", "Split into ideals");
  add_common(decompose_cmd, true);
  decompose_cmd->add_option("--seed", spec.seed, "Seed of the random centroid elements");
  auto* canonical_cmd = app.add_subcommand("canonical", "Power-filtration basis of a nilpotent algebra");
  add_common(canonical_cmd, true);
  auto* casimirs_cmd = app.add_subcommand("casimirs", "Linear and quadratic Casimirs");
  add_common(casimirs_cmd, true);
  casimirs_cmd->add_flag("--linear", spec.linear, "Linear Casimirs only");
  casimirs_cmd->add_flag("--quadratic", spec.quadratic, "Quadratic Casimirs only");
  casimirs_cmd->add_flag("--via-coextension", spec.via_coextension, "Quadratic Casimirs from the boundary values");
  auto* coextend_cmd = app.add_subcommand("coextend", "Coextension data of a unity and pseudo-zero frame");
  add_common(coextend_cmd, true);
  auto* reduce_cmd = app.add_subcommand("reduce", "Restrict Casimirs to the reduced algebra");
  add_common(reduce_cmd, true);
  reduce_cmd->add_option("--casimir", spec.casimir, "Casimir file (default: all Casimirs of the algebra)");
  auto* lift_cmd = app.add_subcommand("lift", "Lift reduced Casimirs to the full algebra");
  add_common(lift_cmd, true);
  lift_cmd->add_option("--casimir", spec.casimir, "Casimir file with reduced quadratic forms")->required();
  lift_cmd->add_option("--cnn", spec.cnn, "Value of C(e_n, e_n), as p/q");
  auto* oracle_cmd = app.add_subcommand("oracle-verify", "Check Casimirs by brute-force Poisson brackets");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--lie", spec.lie, "sl2 or a Lie structure-constant file");
  oracle_cmd->add_option("--casimir", spec.casimir, "Casimir file (default: the computed Casimirs)");
  auto* preset_cmd = app.add_subcommand("preset", "Emit a preset algebra");
  preset_cmd->add_option("name", spec.preset_name, "truncpoly:<n>, truncpoly-solvable:<n> or zero:<n>")->required();
  preset_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  spec.subcommand = app.get_subcommands().front()->get_name();

  const RunReport report = run(spec);
  const std::string text = report.to_json().dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
  }
  if (report.error_code) err << "error [" << *report.error_code << "]: " << report.message << "\n";
  return report.exit_code;
}

}  // namespace lieext
