#include "lieinv/variable.hpp"

#include <cctype>
#include <stdexcept>

namespace lieinv {

namespace {

std::optional<std::uint32_t> digits_suffix(std::string_view s, std::size_t from) {
  if (from >= s.size() || s.size() - from > 9) return std::nullopt;
  std::uint32_t value = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    value = value * 10 + static_cast<std::uint32_t>(s[i] - '0');
  }
  if (value == 0) return std::nullopt;
  return value;
}

}  // namespace

VarNames::VarNames(std::vector<std::string> coordinate_names) : coordinates_(std::move(coordinate_names)) {
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (!by_name_.emplace(coordinates_[i], static_cast<std::uint32_t>(i + 1)).second) {
      throw std::invalid_argument("duplicate coordinate name " + coordinates_[i]);
    }
  }
}

const VarNames& VarNames::standard() {
  static const VarNames names;
  return names;
}

std::string VarNames::name(Variable v) const {
  switch (v.kind) {
    case VarKind::Coordinate:
      if (v.index >= 1 && v.index <= coordinates_.size()) return coordinates_[v.index - 1];
      return "x" + std::to_string(v.index);
    case VarKind::GroupParam:
      return "t" + std::to_string(v.index);
    case VarKind::ExpUnit:
      return "v" + std::to_string(v.index);
  }
  return "?";
}

std::optional<Variable> VarNames::lookup(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return Variable::x(it->second);
  if (name.empty()) return std::nullopt;
  if (name[0] == 't') {
    if (auto k = digits_suffix(name, 1)) return Variable::theta(*k);
  }
  if (name[0] == 'v') {
    if (auto k = digits_suffix(name, 1)) return Variable::unit(*k);
  }
  // Custom coordinate sets are closed: x<i> only resolves in the default context.
  if (name[0] == 'x' && coordinates_.empty()) {
    if (auto i = digits_suffix(name, 1)) return Variable::x(*i);
  }
  return std::nullopt;
}

}  // namespace lieinv
