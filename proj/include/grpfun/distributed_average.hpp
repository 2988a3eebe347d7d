#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grpfun/distributor.hpp"

namespace grpfun {

// Everything the distributed average of f : G -> H depends on:
//   K <= Stab_G(f), an abelian A >= [G,G;f], a right transversal {a_i} of K,
//   and m with m [G:K] = 1 (mod |A|).
struct DistributedAverageContext {
  GroupFunction function;
  Subgroup k_subgroup;
  Subgroup a_subgroup;
  CosetSystem reps;
  std::uint64_t m;

  std::size_t index() const noexcept { return reps.size(); }
};

struct ContextOptions {
  std::optional<Subgroup> k;                           // default Stab_G(f)
  std::optional<Subgroup> a;                           // default [G,G;f]
  std::optional<std::vector<Element>> representatives; // default canonical right cosets of K
  std::optional<std::uint64_t> m;                      // default least inverse of [G:K] mod |A|
};

// Errors: Errc::precondition (f(1) != 1), Errc::containment (K not in the
// stabilizer or [G,G;f] not in A), Errc::abelian, Errc::coprimality.
DistributedAverageContext make_context(const GroupFunction& f, const ContextOptions& options = {});

// d(x) = (prod_i [a_i,x;f])^m, a function G -> A.
GroupFunction average_distributor(const DistributedAverageContext& ctx);

// x -> f(x) d(x), certified as a homomorphism (Errc::invariant_violation otherwise).
Homomorphism distributed_average(const DistributedAverageContext& ctx);

// True when every context (all built on the same f) gives the same result.
bool verify_invariance(const GroupFunction& f, const std::vector<DistributedAverageContext>& contexts);

// Pointwise f*a, for a : G -> A with K <= Stab_G(a). Errc::containment otherwise.
GroupFunction twist(const GroupFunction& f, const GroupFunction& a, const Subgroup& a_subgroup,
                    const Subgroup& k_subgroup);

enum class SectionChoice { canonical, alternate };

struct LiftStep {
  std::size_t kernel_order;
  std::uint64_t m;
  std::size_t index;
};

struct Lift {
  Homomorphism hom;  // G -> H
  std::vector<LiftStep> steps;
};

// Lifts f : G -> H/A through an abelian normal A with gcd(|A|,|G|) = 1 by
// taking the distributed average of a coset section.
Lift sz_lift_abelian(const QuotientGroup& q, const Homomorphism& f,
                     SectionChoice choice = SectionChoice::canonical);
// `f` must map into quotient(a).group (compared by table).
Lift sz_lift_abelian(const Subgroup& a, const Homomorphism& f,
                     SectionChoice choice = SectionChoice::canonical);

// Lifts through a soluble normal N one derived-series layer at a time.
Lift sz_lift_soluble(const Subgroup& n, const Homomorphism& f,
                     SectionChoice choice = SectionChoice::canonical);

// For two homomorphisms G -> H agreeing modulo the abelian normal A, returns
// c = (prod_{t in reps} a(t))^m with a(g) = f2(g)^-1 f1(g), so that
// f1(x) = c^-1 f2(x) c. The default context is f2 with K = 1 and the given A.
Element conjugator_between(const Homomorphism& f1, const Homomorphism& f2, const Subgroup& a,
                           const std::optional<DistributedAverageContext>& ctx = std::nullopt);

// Same for a soluble normal N, composing per-layer conjugators; c lies in N.
Element conjugator_soluble(const Homomorphism& f1, const Homomorphism& f2, const Subgroup& n);

}  // namespace grpfun
