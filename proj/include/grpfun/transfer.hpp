#pragma once

#include <cstddef>
#include <vector>

#include "grpfun/function_space.hpp"

namespace grpfun {

// Pointwise product of the distinct conjugates of f, taken in orbit
// representative order. The values of f must generate an abelian subgroup
// (Errc::abelian otherwise); the result is certified as a homomorphism.
Homomorphism average_function(const GroupFunction& f);

// Data for the transfer G -> A through a subgroup H and pi : H -> A.
// Transfer uses right cosets H t_i; the identity coset is represented by 1.
struct TransferSetup {
  GroupPtr group;
  Subgroup subgroup;
  InducedGroup subgroup_group;  // H as a group; the domain of target
  Homomorphism target;          // pi : H -> A, abelian image
  CosetSystem cosets;           // right cosets of H
};

// Validates that pi is defined on H (as induced_group(h).group) and has an
// abelian image. Uses canonical right-coset representatives.
TransferSetup make_transfer_setup(const Subgroup& h, const Homomorphism& pi);
// Same setup with a different right transversal; the identity coset must
// still be represented by the identity.
TransferSetup with_representatives(const TransferSetup& setup, std::vector<Element> reps);

// f(h t_i) = pi(h).
GroupFunction transfer_base_function(const TransferSetup& setup);

// m = [Stab_G(f) : H] for the base function f. Asserts Stab_G(f) >= H.
std::size_t transfer_multiplicity(const TransferSetup& setup);

// theta(x) = prod_i f^{t_i}(x), certified as a homomorphism and checked
// against the average function power relation.
Homomorphism transfer(const TransferSetup& setup);

// theta(x) == (average(f)(x))^m for every x.
bool verify_transfer_power_relation(const TransferSetup& setup);

}  // namespace grpfun
