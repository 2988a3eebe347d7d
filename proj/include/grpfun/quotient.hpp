#pragma once

#include "grpfun/group_function.hpp"
#include "grpfun/subgroup.hpp"

namespace grpfun {

// The quotient of a group by a normal subgroup. Element i of `group` is the
// coset of cosets.representatives()[i] (canonical, so the identity coset is 0).
struct QuotientGroup {
  GroupPtr group;
  GroupFunction projection;
  Subgroup kernel;
  CosetSystem cosets;

  const GroupPtr& parent() const noexcept { return kernel.parent(); }
  Element representative(Element coset) const { return cosets.representatives()[coset]; }
};

// Throws Errc::normality when n is not normal. The projection is checked to
// be a homomorphism with kernel n; a failure is Errc::invariant_violation.
QuotientGroup quotient(const Subgroup& n);

}  // namespace grpfun
