#include "garnier/variable.hpp"

#include <stdexcept>

namespace garnier {

std::string_view to_string(VarKind k) {
  switch (k) {
    case VarKind::phase: return "phase";
    case VarKind::time: return "time";
    case VarKind::epsilon: return "epsilon";
    case VarKind::parameter: return "parameter";
  }
  return "?";
}

std::optional<Var> Var::find(std::string_view name) {
  for (std::size_t i = 0; i < kUniverse.size(); ++i)
    if (kUniverse[i].name == name) return Var(static_cast<std::uint8_t>(i));
  return std::nullopt;
}

Var Var::named(std::string_view name) {
  if (auto v = find(name)) return *v;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

}  // namespace garnier
