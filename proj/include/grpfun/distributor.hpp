#pragma once

#include <vector>

#include "grpfun/function_space.hpp"

namespace grpfun {

// [x,y;f] = f(y)^-1 f(x)^-1 f(xy), so that f(xy) = f(x) f(y) [x,y;f].
Element distributor(const GroupFunction& f, Element x, Element y);

// All |G|^2 distributors; entries[x][y] = [x,y;f].
struct DistributorTable {
  GroupFunction function;
  std::vector<std::vector<Element>> entries;
};

DistributorTable distributor_table(const GroupFunction& f);

// D_a f : x -> [x,a;f].
GroupFunction distributor_operator(const GroupFunction& f, Element a);

// [y,z;f][x,yz;f] == [x,y;f]^f(z) [xy,z;f], with u^v = v^-1 u v.
bool verify_triple_identity(const GroupFunction& f, Element x, Element y, Element z);
// [xy,z;f] == [x,z;f][y,z;f^x].
bool verify_action_shift(const GroupFunction& f, Element x, Element y, Element z);

// [G,G;f], the subgroup of the codomain generated by every distributor.
// Checked to be normal in the image subgroup.
Subgroup distributor_subgroup(const GroupFunction& f);

// pi . f into f(G)/[G,G;f], with the groups it was built from.
struct CanonicalQuotient {
  InducedGroup image;          // f(G) as a group
  QuotientGroup quotient;      // f(G)/[G,G;f]
  Homomorphism hom;            // pi . f : G -> quotient.group
};

CanonicalQuotient canonical_quotient(const GroupFunction& f);
Homomorphism canonical_quotient_hom(const GroupFunction& f);

// For every normal K of f(G): pi_K . f is a homomorphism iff [G,G;f] <= K.
// The image order is limited to `order_cap` (Errc::size_limit).
bool verify_minimality(const GroupFunction& f, std::size_t order_cap = 24);

}  // namespace grpfun
