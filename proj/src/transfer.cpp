#include "grpfun/transfer.hpp"

#include <string>

#include "grpfun/error.hpp"

namespace grpfun {

namespace {

Homomorphism certify(GroupFunction f, const char* what) {
  try {
    return as_homomorphism(f);
  } catch (const Error& e) {
    if (e.code() != Errc::certification) throw;
    fail(Errc::invariant_violation, std::string(what) + " is not a homomorphism", e.witness());
  }
}

// Product over the conjugates f^{t} for t in reps, evaluated pointwise.
GroupFunction conjugate_product(const GroupFunction& f, std::span<const Element> reps) {
  auto acc = GroupFunction::constant_identity(f.domain(), f.codomain());
  for (auto t : reps) acc = pointwise_product(acc, conjugate(f, t));
  return acc;
}

}  // namespace

Homomorphism average_function(const GroupFunction& f) {
  if (!image_subgroup(f).is_abelian())
    fail(Errc::abelian, "average function needs values spanning an abelian subgroup");
  // Conjugates are identity preserving, so f^1 is the orbit base even when f(1) != 1.
  const auto o = orbit(conjugate(f, 0));
  return certify(conjugate_product(o.base, o.representatives), "average function");
}

TransferSetup make_transfer_setup(const Subgroup& h, const Homomorphism& pi) {
  auto ind = induced_group(h);
  if (!same_group(pi.domain(), ind.group))
    fail(Errc::shape, "pi must be defined on the subgroup as a group in its own right");
  if (!pi.image().is_abelian()) fail(Errc::abelian, "pi must have an abelian image");
  auto cosets = right_cosets(h);
  return TransferSetup{h.parent(), h, std::move(ind), pi, std::move(cosets)};
}

TransferSetup with_representatives(const TransferSetup& setup, std::vector<Element> reps) {
  auto cosets = cosets_with_representatives(setup.subgroup, CosetSide::right, std::move(reps));
  if (cosets.representative_of(0) != 0)
    fail(Errc::precondition, "the subgroup itself must be represented by the identity");
  return TransferSetup{setup.group, setup.subgroup, setup.subgroup_group, setup.target,
                       std::move(cosets)};
}

GroupFunction transfer_base_function(const TransferSetup& setup) {
  const auto& g = *setup.group;
  std::vector<Element> values(g.order());
  for (std::size_t x = 0; x < values.size(); ++x) {
    const auto e = static_cast<Element>(x);
    const auto t = setup.cosets.representative_of(e);
    const auto h = g.mul(e, g.inv(t));
    if (!setup.subgroup.contains(h))
      fail(Errc::invariant_violation, "coset decomposition failed", std::to_string(x));
    values[x] = setup.target(setup.subgroup_group.from_parent(h));
  }
  return GroupFunction(setup.group, setup.target.codomain(), std::move(values));
}

std::size_t transfer_multiplicity(const TransferSetup& setup) {
  const auto stab = stabilizer(transfer_base_function(setup));
  if (!setup.subgroup.is_subset_of(stab))
    fail(Errc::invariant_violation, "base function is not stabilised by the subgroup");
  return stab.order() / setup.subgroup.order();
}

Homomorphism transfer(const TransferSetup& setup) {
  const auto f = transfer_base_function(setup);
  auto theta = certify(conjugate_product(f, setup.cosets.representatives()), "transfer");
  if (!verify_transfer_power_relation(setup))
    fail(Errc::invariant_violation, "transfer is not the expected power of the average function");
  return theta;
}

bool verify_transfer_power_relation(const TransferSetup& setup) {
  const auto f = transfer_base_function(setup);
  const auto theta = conjugate_product(f, setup.cosets.representatives());
  const auto m = static_cast<std::int64_t>(transfer_multiplicity(setup));
  const auto avg = average_function(f);
  const auto& a = *f.codomain();
  for (std::size_t x = 0; x < theta.values().size(); ++x)
    if (theta.values()[x] != a.pow(avg.function().values()[x], m)) return false;
  return true;
}

}  // namespace grpfun
