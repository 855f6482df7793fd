#include "nohair/layout.hpp"

#include <set>
#include <stdexcept>

namespace nohair {

std::string role_name(Role r) {
  switch (r) {
    case Role::F: return "F";
    case Role::BH: return "BH";
    case Role::I: return "I";
    case Role::E: return "E";
    case Role::R: return "R";
  }
  return "?";
}

SubsystemLayout::SubsystemLayout(std::vector<Index> dims, std::map<std::size_t, Role> roles)
    : dims_(std::move(dims)), roles_(std::move(roles)) {
  if (dims_.empty()) throw std::invalid_argument("layout: no factors");
  total_ = 1;
  for (Index d : dims_) {
    if (d < 1) throw std::invalid_argument("layout: factor dimension must be >= 1");
    total_ *= d;
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size(); k-- > 1;) {
    strides_[k - 1] = strides_[k] * dims_[k];
  }
  std::set<Role> seen;
  for (const auto& [factor, role] : roles_) {
    if (factor >= dims_.size()) throw std::out_of_range("layout: role on missing factor");
    if (!seen.insert(role).second) {
      throw std::invalid_argument("layout: role " + role_name(role) + " assigned twice");
    }
  }
}

std::optional<Role> SubsystemLayout::role_of(std::size_t factor) const {
  auto it = roles_.find(factor);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SubsystemLayout::factor_of(Role r) const {
  for (const auto& [factor, role] : roles_) {
    if (role == r) return factor;
  }
  return std::nullopt;
}

Index SubsystemLayout::dim_of(Role r) const {
  auto f = factor_of(r);
  if (!f) throw std::invalid_argument("layout: no factor with role " + role_name(r));
  return dims_[*f];
}

Index SubsystemLayout::flatten(const std::vector<Index>& multi) const {
  if (multi.size() != dims_.size()) throw std::invalid_argument("layout: multi-index arity");
  Index idx = 0;
  for (std::size_t k = 0; k < multi.size(); ++k) {
    if (multi[k] < 0 || multi[k] >= dims_[k]) throw std::out_of_range("layout: index out of range");
    idx += multi[k] * strides_[k];
  }
  return idx;
}

}  // namespace nohair
