#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieinv {

enum class VarKind : std::uint8_t {
  Coordinate = 0,  // x_i, dual coordinate of basis element e_i
  GroupParam = 1,  // theta_k, second canonical coordinate of exp(theta_k ad e_k)
  ExpUnit = 2,     // v_k = exp(theta_k / q_k), invertible
};

// Variables order x < theta < v, then by index. Smaller variables are more
// significant in lexicographic comparisons of monomials.
struct Variable {
  VarKind kind = VarKind::Coordinate;
  std::uint32_t index = 0;

  auto operator<=>(const Variable&) const = default;

  static constexpr Variable x(std::uint32_t i) { return {VarKind::Coordinate, i}; }
  static constexpr Variable theta(std::uint32_t k) { return {VarKind::GroupParam, k}; }
  static constexpr Variable unit(std::uint32_t k) { return {VarKind::ExpUnit, k}; }
};

// Denominators q_k of the exponential units, keyed by parameter index.
// Missing entries mean q_k = 1.
using ExpScales = std::map<std::uint32_t, int>;

// Bidirectional naming context used by printing and parsing. Group
// parameters and units are always "t<k>" and "v<k>"; coordinates default to
// "x<i>" but algebras with structured bases (x13, x_f1, ...) override them.
class VarNames {
 public:
  VarNames() = default;
  explicit VarNames(std::vector<std::string> coordinate_names);

  static const VarNames& standard();

  std::string name(Variable v) const;
  std::optional<Variable> lookup(std::string_view name) const;

  bool has_custom_coordinates() const { return !coordinates_.empty(); }
  const std::vector<std::string>& coordinate_names() const { return coordinates_; }

 private:
  std::vector<std::string> coordinates_;
  std::map<std::string, std::uint32_t, std::less<>> by_name_;
};

}  // namespace lieinv
