#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nohair/types.hpp"

namespace nohair {

/// Subsystem role labels: infaller, black hole, interior, exterior, reference.
enum class Role { F, BH, I, E, R };

std::string role_name(Role r);

/// Ordered list of tensor factors with role labels. Factor 0 is the most
/// significant index (row-major composite indexing); every reshape in the
/// library derives from this one convention.
class SubsystemLayout {
 public:
  SubsystemLayout(std::vector<Index> dims, std::map<std::size_t, Role> roles);

  const std::vector<Index>& dims() const { return dims_; }
  Index dim(std::size_t factor) const { return dims_.at(factor); }
  std::size_t factor_count() const { return dims_.size(); }
  Index total_dim() const { return total_; }

  std::optional<Role> role_of(std::size_t factor) const;
  /// Factor index carrying the given role, if declared.
  std::optional<std::size_t> factor_of(Role r) const;
  /// Dimension of the factor carrying the given role; throws if absent.
  Index dim_of(Role r) const;

  /// Composite index of a multi-index (row-major, factor 0 most significant).
  Index flatten(const std::vector<Index>& multi) const;
  /// Strides per factor under the row-major convention.
  const std::vector<Index>& strides() const { return strides_; }

 private:
  std::vector<Index> dims_;
  std::map<std::size_t, Role> roles_;
  std::vector<Index> strides_;
  Index total_;
};

}  // namespace nohair
