#include "lieext/io.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "lieext/errors.hpp"
#include "lieext/presets.hpp"

namespace lieext {

namespace {

struct Location {
  std::size_t line;
  std::size_t column;
  std::string text;
};

Location location_at(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  Location loc{1, 1, {}};
  std::size_t line_start = 0;
  for (std::size_t p = 0; p < offset; ++p)
    if (text[p] == '\n') {
      ++loc.line;
      line_start = p + 1;
    }
  loc.column = offset - line_start + 1;
  const std::size_t line_end = text.find('\n', line_start);
  loc.text = text.substr(line_start, line_end == std::string::npos ? std::string::npos : line_end - line_start);
  return loc;
}

[[noreturn]] void fail(const SourceText& src, const std::string& where, const json* value, const std::string& why) {
  std::string token = value ? value->dump() : std::string();
  std::ostringstream msg;
  msg << src.name;
  std::optional<Location> loc;
  if (!token.empty()) {
    const auto p = src.text.find(token);
    if (p != std::string::npos) loc = location_at(src.text, p);
  }
  if (loc) msg << ":" << loc->line << ":" << loc->column;
  msg << ": " << why << " at " << (where.empty() ? "/" : where);
  if (!token.empty()) msg << " (offending token: " << token << ")";
  if (loc) msg << "\n  " << loc->text;
  throw Error(ErrorCode::Parse, msg.str());
}

const json& member(const json& obj, const char* key, const SourceText& src, const std::string& where) {
  if (!obj.is_object()) fail(src, where, &obj, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(src, where, nullptr, std::string("missing key \"") + key + "\"");
  return *it;
}

int int_member(const json& obj, const char* key, const SourceText& src, const std::string& where) {
  const json& v = member(obj, key, src, where);
  if (!v.is_number_integer()) fail(src, where + "/" + key, &v, "expected an integer");
  return v.get<int>();
}

const json& unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains("payload") && j["payload"].is_object()) {
    const json& p = j["payload"];
    if (key && p.contains(key)) return p[key];
    return p;
  }
  return j;
}

Vector vector_from_json(const json& j, std::size_t len, const SourceText& src, const std::string& where) {
  if (!j.is_array()) fail(src, where, &j, "expected an array");
  if (j.size() != len) fail(src, where, &j, "expected " + std::to_string(len) + " entries");
  Vector v;
  for (std::size_t t = 0; t < j.size(); ++t) v.push_back(rational_from_json(j[t], src, where + "/" + std::to_string(t)));
  return v;
}

}  // namespace

SourceText read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return {"<stdin>", buf.str()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open file");
  buf << in.rdbuf();
  return {path, buf.str()};
}

json parse_json(const SourceText& src) {
  try {
    return json::parse(src.text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const Location loc = location_at(src.text, offset);
    std::size_t end = offset;
    while (end < src.text.size() && !std::isspace(static_cast<unsigned char>(src.text[end])) &&
           std::string(",:{}[]").find(src.text[end]) == std::string::npos)
      ++end;
    std::string token = src.text.substr(offset, std::max<std::size_t>(end - offset, 1));
    if (offset >= src.text.size()) token = "<end of input>";
    std::ostringstream msg;
    msg << src.name << ":" << loc.line << ":" << loc.column << ": JSON syntax error (offending token: " << token
        << ")\n  " << loc.text;
    throw Error(ErrorCode::Parse, msg.str());
  }
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    a.push_back(to_json(Vector(row.begin(), row.end())));
  }
  return a;
}

Rational rational_from_json(const json& j, const SourceText& src, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(src, where, &j, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    fail(src, where, &j, "malformed rational");
  }
}

json algebra_to_json(const StructureTensor& w, const std::vector<std::string>& labels) {
  json out;
  out["n"] = w.dim();
  if (!w.name().empty()) out["name"] = w.name();
  json entries = json::array();
  for (const auto& [idx, v] : w.entries())
    entries.push_back(json{{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"v", v.str()}});
  out["entries"] = std::move(entries);
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

StructureTensor algebra_from_json(const json& raw, const SourceText& src) {
  const json& j = unwrap(raw, "algebra");
  const int n = int_member(j, "n", src, "");
  if (n < 0) fail(src, "/n", &j["n"], "dimension must be non-negative");
  const json& entries = member(j, "entries", src, "");
  if (!entries.is_array()) fail(src, "/entries", &entries, "expected an array");
  StructureTensor w(n);
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(src, "/name", &j["name"], "expected a string");
    w.set_name(j["name"].get<std::string>());
  }
  std::set<Index3> seen;
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const std::string where = "/entries/" + std::to_string(t);
    const json& e = entries[t];
    Index3 idx{int_member(e, "i", src, where), int_member(e, "j", src, where), int_member(e, "k", src, where)};
    const char* names[] = {"i", "j", "k"};
    for (int c = 0; c < 3; ++c)
      if (idx[c] < 1 || idx[c] > n)
        fail(src, where + "/" + names[c], &e[names[c]], "index outside 1.." + std::to_string(n));
    if (!seen.insert(idx).second) fail(src, where, &e, "duplicate entry");
    w.set(idx[0], idx[1], idx[2], rational_from_json(member(e, "v", src, where), src, where + "/v"));
  }
  for (const auto& idx : seen) {
    const Index3 mirror{idx[1], idx[0], idx[2]};
    if (!seen.count(mirror)) w.set(mirror[0], mirror[1], mirror[2], w(idx[0], idx[1], idx[2]));
  }
  return w;
}

StructureTensor load_algebra(const std::string& spec, SourceText* src) {
  if (spec.rfind("preset:", 0) == 0) {
    StructureTensor w = preset(spec.substr(7));
    if (src) *src = {spec, algebra_to_json(w).dump()};
    return w;
  }
  SourceText text = read_source(spec);
  StructureTensor w = algebra_from_json(parse_json(text), text);
  if (src) *src = std::move(text);
  return w;
}

LiePreset lie_from_json(const json& j, const SourceText& src) {
  const int m = int_member(j, "dim", src, "");
  const json& brackets = member(j, "brackets", src, "");
  if (!brackets.is_array()) fail(src, "/brackets", &brackets, "expected an array");
  std::map<Index3, Rational> c;
  for (std::size_t t = 0; t < brackets.size(); ++t) {
    const std::string where = "/brackets/" + std::to_string(t);
    const json& e = brackets[t];
    Index3 idx{int_member(e, "a", src, where), int_member(e, "b", src, where), int_member(e, "d", src, where)};
    for (int x : idx)
      if (x < 1 || x > m) fail(src, where, &e, "index outside 1.." + std::to_string(m));
    if (c.count(idx)) fail(src, where, &e, "duplicate bracket");
    c[idx] = rational_from_json(member(e, "v", src, where), src, where + "/v");
  }
  std::string name = src.name;
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return make_lie(name, m, c);
}

json lie_to_json(const LiePreset& lie) {
  json out;
  out["dim"] = lie.dim;
  out["name"] = lie.name;
  json b = json::array();
  for (const auto& [idx, v] : lie.c)
    if (idx[0] < idx[1]) b.push_back(json{{"a", idx[0]}, {"b", idx[1]}, {"d", idx[2]}, {"v", v.str()}});
  out["brackets"] = std::move(b);
  return out;
}

LiePreset load_lie(const std::string& spec, SourceText* src) {
  if (spec == "sl2") {
    LiePreset lie = preset_sl2();
    if (src) *src = {"sl2", lie_to_json(lie).dump()};
    return lie;
  }
  SourceText text = read_source(spec);
  LiePreset lie = lie_from_json(parse_json(text), text);
  if (src) *src = std::move(text);
  return lie;
}

CasimirFile casimirs_from_json(const json& raw, const SourceText& src) {
  const json& j = unwrap(raw, nullptr);
  if (!j.is_object()) fail(src, "", &j, "expected an object");
  CasimirFile out;
  if (j.contains("linear")) {
    const json& lin = j["linear"];
    if (!lin.is_array()) fail(src, "/linear", &lin, "expected an array");
    for (std::size_t t = 0; t < lin.size(); ++t) {
      const std::string where = "/linear/" + std::to_string(t);
      if (!lin[t].is_array()) fail(src, where, &lin[t], "expected an array");
      out.linear.push_back({{vector_from_json(lin[t], lin[t].size(), src, where)}});
    }
  }
  if (j.contains("quadratic")) {
    const json& quad = j["quadratic"];
    if (!quad.is_array()) fail(src, "/quadratic", &quad, "expected an array");
    for (std::size_t t = 0; t < quad.size(); ++t) {
      const std::string where = "/quadratic/" + std::to_string(t);
      const json& rows = quad[t];
      if (!rows.is_array()) fail(src, where, &rows, "expected an array of rows");
      const std::size_t n = rows.size();
      Matrix c(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        const Vector row = vector_from_json(rows[r], n, src, where + "/" + std::to_string(r));
        for (std::size_t col = 0; col < n; ++col) c(r, col) = row[col];
      }
      if (!c.is_symmetric()) fail(src, where, &rows, "quadratic form is not symmetric");
      out.quadratic.push_back({std::move(c)});
    }
  }
  return out;
}

json casimirs_to_json(const CasimirFile& f) {
  json out;
  json lin = json::array();
  for (const auto& p : f.linear) lin.push_back(to_json(p.p.coords));
  json quad = json::array();
  for (const auto& q : f.quadratic) quad.push_back(to_json(q.c));
  out["linear"] = std::move(lin);
  out["quadratic"] = std::move(quad);
  return out;
}

CasimirFile load_casimirs(const std::string& path, SourceText* src) {
  SourceText text = read_source(path);
  CasimirFile f = casimirs_from_json(parse_json(text), text);
  if (src) *src = std::move(text);
  return f;
}

}  // namespace lieext
