#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace garnier {

enum class VarKind : std::uint8_t { phase, time, epsilon, parameter };

std::string_view to_string(VarKind k);

/// Number of exponent slots in a monomial; the symbol table below must fit.
inline constexpr std::size_t kMaxVars = 48;

/// Interned symbol. The universe is fixed at compile time and its order is the
/// global variable order used by the monomial ordering: phase pairs, then
/// times, then epsilon, then parameters.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint8_t id) : id_(id) {}

  constexpr std::uint8_t id() const { return id_; }
  std::string_view name() const;
  VarKind kind() const;

  /// Throws std::invalid_argument for unknown names.
  static Var named(std::string_view name);
  static std::optional<Var> find(std::string_view name);

  friend constexpr bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend constexpr bool operator!=(Var a, Var b) { return a.id_ != b.id_; }
  friend constexpr bool operator<(Var a, Var b) { return a.id_ < b.id_; }

 private:
  std::uint8_t id_ = 0;
};

struct VarInfo {
  std::string_view name;
  VarKind kind;
};

// a<k> is alpha_k, eps is epsilon; A<k> are the new parameters of the
// degeneration schemes; capital phase letters serve as chart and degeneration
// coordinates.
inline constexpr std::array<VarInfo, 41> kUniverse{{
    {"x", VarKind::phase},     {"y", VarKind::phase},      {"z", VarKind::phase},
    {"w", VarKind::phase},     {"q", VarKind::phase},      {"p", VarKind::phase},
    {"q1", VarKind::phase},    {"p1", VarKind::phase},     {"q2", VarKind::phase},
    {"p2", VarKind::phase},    {"X", VarKind::phase},      {"Y", VarKind::phase},
    {"Z", VarKind::phase},     {"W", VarKind::phase},      {"Q", VarKind::phase},
    {"P", VarKind::phase},     {"t", VarKind::time},       {"s", VarKind::time},
    {"u", VarKind::time},      {"T", VarKind::time},       {"S", VarKind::time},
    {"U", VarKind::time},      {"eps", VarKind::epsilon},  {"a0", VarKind::parameter},
    {"a1", VarKind::parameter}, {"a2", VarKind::parameter}, {"a3", VarKind::parameter},
    {"a4", VarKind::parameter}, {"a5", VarKind::parameter}, {"a6", VarKind::parameter},
    {"a7", VarKind::parameter}, {"eta", VarKind::parameter}, {"eta0", VarKind::parameter},
    {"eta1", VarKind::parameter}, {"nu", VarKind::parameter}, {"A0", VarKind::parameter},
    {"A1", VarKind::parameter}, {"A2", VarKind::parameter}, {"A3", VarKind::parameter},
    {"A4", VarKind::parameter}, {"A5", VarKind::parameter},
}};

static_assert(kUniverse.size() <= kMaxVars);

inline std::string_view Var::name() const { return kUniverse[id_].name; }
inline VarKind Var::kind() const { return kUniverse[id_].kind; }

}  // namespace garnier
