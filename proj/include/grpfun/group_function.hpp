#pragma once

#include <span>
#include <vector>

#include "grpfun/group.hpp"

namespace grpfun {

// A total function between finite groups, stored as the dense array of
// codomain indices of its values.
class GroupFunction {
 public:
  // Throws Errc::shape when the value count differs from the domain order and
  // Errc::domain when a value is outside the codomain.
  GroupFunction(GroupPtr domain, GroupPtr codomain, std::vector<Element> values);

  static GroupFunction constant_identity(GroupPtr domain, GroupPtr codomain);
  // Inversion g -> g^-1 on a group.
  static GroupFunction inversion(GroupPtr g);

  const GroupPtr& domain() const noexcept { return domain_; }
  const GroupPtr& codomain() const noexcept { return codomain_; }
  std::span<const Element> values() const noexcept { return values_; }
  Element operator()(Element x) const;
  bool identity_preserving() const noexcept { return values_[0] == 0; }

  friend bool operator==(const GroupFunction& a, const GroupFunction& b) {
    return a.values_ == b.values_ && same_group(a.domain_, b.domain_) &&
           same_group(a.codomain_, b.codomain_);
  }

 private:
  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<Element> values_;
};

// g . f: apply f, then g. Throws Errc::shape when f's codomain is not g's domain.
GroupFunction compose(const GroupFunction& g, const GroupFunction& f);

}  // namespace grpfun
