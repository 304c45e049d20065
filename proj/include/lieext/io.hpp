#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lieext/casimir.hpp"
#include "lieext/matrix.hpp"
#include "lieext/oracle.hpp"
#include "lieext/structure_tensor.hpp"

namespace lieext {

using json = nlohmann::ordered_json;

/// Raw input text with the name used in diagnostics.
struct SourceText {
  std::string name;
  std::string text;
};

/// Reads a file, or standard input for "-". Throws Parse if unreadable.
SourceText read_source(const std::string& path);

/// Throws Parse with file, line, column and the offending line.
json parse_json(const SourceText& src);

json to_json(const Rational& r);
json to_json(const Matrix& m);
json to_json(const Vector& v);
Rational rational_from_json(const json& j, const SourceText& src, const std::string& where);

/// {"n", "name"?, "entries": [{"i","j","k","v"}], "labels"?}
json algebra_to_json(const StructureTensor& w, const std::vector<std::string>& labels = {});

/// Accepts a raw algebra object or a report envelope carrying
/// payload.algebra. Missing mirrored entries are filled in by symmetry.
StructureTensor algebra_from_json(const json& j, const SourceText& src);

/// "preset:NAME", "-" or a path. `src` receives the text that was parsed
/// (for presets, the serialized preset).
StructureTensor load_algebra(const std::string& spec, SourceText* src = nullptr);

/// {"dim": m, "name"?, "brackets": [{"a","b","d","v"}]}
LiePreset lie_from_json(const json& j, const SourceText& src);
json lie_to_json(const LiePreset& lie);
/// "sl2" or a path.
LiePreset load_lie(const std::string& spec, SourceText* src = nullptr);

/// {"linear": [[...]], "quadratic": [[[...]]]}, or a report envelope whose
/// payload has those keys.
struct CasimirFile {
  std::vector<LinearCasimir> linear;
  std::vector<SymmetricForm> quadratic;
};
CasimirFile casimirs_from_json(const json& j, const SourceText& src);
json casimirs_to_json(const CasimirFile& f);
CasimirFile load_casimirs(const std::string& path, SourceText* src = nullptr);

}  // namespace lieext
