#include "lieext/presets.hpp"

#include <charconv>

#include "lieext/errors.hpp"

namespace lieext {

StructureTensor truncpoly(int n) {
  if (n < 0) throw Error(ErrorCode::UnknownPreset, "truncpoly needs n >= 0");
  StructureTensor w(n + 1, "truncpoly:" + std::to_string(n));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i + j - 1 <= n + 1) w.set(i, j, i + j - 1, 1);
  return w;
}

StructureTensor truncpoly_solvable(int n) {
  if (n < 1) throw Error(ErrorCode::UnknownPreset, "truncpoly-solvable needs n >= 1");
  StructureTensor w(n, "truncpoly-solvable:" + std::to_string(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) w.set(i, j, i + j, 1);
  return w;
}

StructureTensor zero_algebra(int n) {
  if (n < 1) throw Error(ErrorCode::UnknownPreset, "zero algebra needs n >= 1");
  return StructureTensor(n, "zero:" + std::to_string(n));
}

StructureTensor preset(const std::string& name) {
  const auto colon = name.rfind(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::UnknownPreset, "unknown preset '" + name + "' (expected family:<n>)");
  const std::string family = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || arg.empty())
    throw Error(ErrorCode::UnknownPreset, "preset '" + name + "': bad size '" + arg + "'");
  if (n > 64) throw Error(ErrorCode::UnknownPreset, "preset '" + name + "': size too large");
  if (family == "truncpoly") return truncpoly(n);
  if (family == "truncpoly-solvable") return truncpoly_solvable(n);
  if (family == "zero") return zero_algebra(n);
  throw Error(ErrorCode::UnknownPreset, "unknown preset family '" + family + "'");
}

}  // namespace lieext
