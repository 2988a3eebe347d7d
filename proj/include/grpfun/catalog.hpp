#pragma once

#include <string>
#include <vector>

#include "grpfun/function_space.hpp"

namespace grpfun {

struct CatalogEntry {
  std::string name;  // a spec expression accepted by parse_group_spec
  GroupPtr group;
};

// Spec-grammar groups of order <= 12 plus symmetric:4.
std::vector<CatalogEntry> builtin_catalog();

// A_4 on four points, generated by (0 1 2) and (0 1)(2 3).
GroupPtr make_alternating4();
// A_n inside S_n, computed as the derived subgroup (n >= 2).
Subgroup alternating_subgroup(const GroupPtr& sym);
// V_4 inside A_4, the derived subgroup of A_4.
Subgroup klein_subgroup(const GroupPtr& a4);

// A homomorphism G -> H/N to be lifted, with gcd(|G|, |N|) = 1.
struct Extension {
  std::string name;
  Subgroup normal;   // N, a subgroup of H
  Homomorphism hom;  // G -> quotient(N).group
};

std::vector<Extension> shipped_extensions();

}  // namespace grpfun
