#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "grpfun/catalog.hpp"
#include "grpfun/error.hpp"
#include "grpfun/transfer.hpp"
#include "oracles.hpp"

using namespace grpfun;

namespace {

std::vector<Element> vals(const GroupFunction& f) { return {f.values().begin(), f.values().end()}; }

// pi : H -> A, indexed by parent elements, for the oracle.
std::map<Element, Element> pi_map(const TransferSetup& s) {
  std::map<Element, Element> out;
  for (Element i = 0; i < s.subgroup_group.group->order(); ++i) out[s.subgroup_group.to_parent(i)] = s.target(i);
  return out;
}

std::vector<Element> oracle_transfer(const TransferSetup& s) {
  const auto members = s.subgroup.members();
  return oracle::transfer(s.group->rows(), s.target.codomain()->rows(), {members.begin(), members.end()},
                          pi_map(s), {s.cosets.representatives().begin(), s.cosets.representatives().end()});
}

// Every setup with [G:H] <= 4 and pi = H -> H/[H,H].
std::vector<TransferSetup> catalog_setups() {
  std::vector<TransferSetup> out;
  for (const auto& [name, g] : builtin_catalog()) {
    if (g->order() > 12) continue;
    for (const auto& h : normal_subgroups(Subgroup::whole(g))) {
      if (h.index() > 4) continue;
      const auto ind = induced_group(h);
      const auto q = quotient(derived_subgroup(Subgroup::whole(ind.group)));
      out.push_back(make_transfer_setup(h, as_homomorphism(q.projection)));
    }
  }
  return out;
}

}  // namespace

TEST(Average, HomomorphismIsItsOwnAverage) {
  const auto z6 = make_cyclic(6);
  const auto f = GroupFunction::inversion(z6);
  EXPECT_EQ(average_function(f).function(), f);
  const auto s3 = make_symmetric(3);
  const GroupFunction sign(s3, make_cyclic(2), {0, 1, 1, 0, 0, 1});
  EXPECT_EQ(average_function(sign).function(), sign);
}

TEST(Average, CoprimeOrdersGiveTrivialAverage) {
  const auto z2 = make_cyclic(2), z3 = make_cyclic(3);
  for (Element a = 0; a < 3; ++a)
    EXPECT_EQ(average_function(GroupFunction(z2, z3, {0, a})).function(), GroupFunction::constant_identity(z2, z3));
}

TEST(Average, ExhaustiveZ4ToZ6) {
  const auto z4 = make_cyclic(4), z6 = make_cyclic(6);
  IdentityPreservingFunctions stream(z4, z6);
  std::size_t n = 0;
  while (auto f = stream.next()) {
    const auto avg = average_function(*f);
    EXPECT_TRUE(oracle::is_hom(z4->rows(), z6->rows(), vals(avg.function())));
    // Product of the distinct conjugates in any order.
    const auto o = orbit(*f);
    auto members = o.members;
    std::reverse(members.begin(), members.end());
    auto product = GroupFunction::constant_identity(z4, z6);
    for (const auto& m : members) product = pointwise_product(product, m);
    EXPECT_EQ(product, avg.function());
    ++n;
  }
  EXPECT_EQ(n, 216u);
}

TEST(Average, RequiresCommutingValues) {
  const auto z2 = make_cyclic(2), s3 = make_symmetric(3);
  const auto z4 = make_cyclic(4);
  EXPECT_NO_THROW(average_function(GroupFunction(z2, s3, {0, 1})));  // values span a group of order 2
  try {
    average_function(GroupFunction(z4, s3, {0, 1, 3, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::abelian);
  }
  // Values inside A3 are fine even though S3 is not abelian.
  const auto avg = average_function(GroupFunction(make_cyclic(3), s3, {0, 3, 3}));
  EXPECT_TRUE(avg.image().is_subset_of(alternating_subgroup(s3)));
}

TEST(Transfer, S3ToA3IsTrivial) {
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto ind = induced_group(a3);
  const auto z3 = make_cyclic(3);
  // Isomorphism A3 -> Z3 sending the first 3-cycle to 1.
  const auto pi = extend_from_generators(ind.group, z3, std::vector<Element>{ind.from_parent(3)}, std::vector<Element>{1});
  const auto setup = make_transfer_setup(a3, pi);
  const auto base = transfer_base_function(setup);
  for (auto h : a3.members()) EXPECT_EQ(base(h), pi(ind.from_parent(h)));
  const auto theta = transfer(setup);
  EXPECT_EQ(theta.function(), GroupFunction::constant_identity(s3, z3));
  EXPECT_EQ(vals(theta.function()), oracle_transfer(setup));
  for (auto reps : std::vector<std::vector<Element>>{{0, 1}, {0, 2}, {0, 5}}) {
    const auto alt = with_representatives(setup, reps);
    EXPECT_EQ(vals(transfer(alt).function()), oracle_transfer(alt));
    EXPECT_EQ(transfer(alt).function(), theta.function());
  }
  EXPECT_TRUE(verify_transfer_power_relation(setup));
}

TEST(Transfer, CyclicIntoSubgroupOfIndexTwo) {
  const auto z6 = make_cyclic(6);
  const auto h = subgroup_closure(z6, std::vector<Element>{2});
  const auto ind = induced_group(h);
  const auto z3 = make_cyclic(3);
  const auto pi = extend_from_generators(ind.group, z3, std::vector<Element>{ind.from_parent(2)}, std::vector<Element>{1});
  const auto setup = make_transfer_setup(h, pi);
  const auto theta = transfer(setup);
  EXPECT_EQ(vals(theta.function()), oracle_transfer(setup));
  // theta(x) = x^2 read in <2>: 2x mod 6 corresponds to x mod 3.
  for (Element x = 0; x < 6; ++x) EXPECT_EQ(theta(x), x % 3);
  EXPECT_EQ(transfer(with_representatives(setup, {0, 3})).function(), theta.function());
  EXPECT_EQ(transfer(with_representatives(setup, {0, 5})).function(), theta.function());
}

TEST(Transfer, BaseFunctionStabilisedBySubgroup) {
  for (const auto& setup : catalog_setups()) {
    const auto base = transfer_base_function(setup);
    EXPECT_TRUE(setup.subgroup.is_subset_of(stabilizer(base)));
    for (auto h : setup.subgroup.members()) EXPECT_EQ(base(h), setup.target(setup.subgroup_group.from_parent(h)));
  }
}

TEST(Transfer, MatchesProductFormulaAndPowerRelation) {
  const auto setups = catalog_setups();
  EXPECT_GT(setups.size(), 40u);
  std::mt19937_64 rng(31);
  for (const auto& setup : setups) {
    const auto theta = transfer(setup);
    EXPECT_EQ(vals(theta.function()), oracle_transfer(setup));
    EXPECT_TRUE(verify_transfer_power_relation(setup));
    const auto m = transfer_multiplicity(setup);
    const auto avg = average_function(transfer_base_function(setup));
    const auto& a = *theta.codomain();
    for (Element x = 0; x < setup.group->order(); ++x) EXPECT_EQ(theta(x), a.pow(avg(x), static_cast<std::int64_t>(m)));

    // Random right transversal.
    std::vector<Element> reps{0};
    for (std::size_t i = 1; i < setup.cosets.size(); ++i) {
      const auto rep = setup.cosets.representatives()[i];
      const auto members = setup.subgroup.members();
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      reps.push_back(setup.group->mul(members[pick(rng)], rep));
    }
    const auto alt = with_representatives(setup, reps);
    EXPECT_EQ(vals(transfer(alt).function()), oracle_transfer(alt));
    EXPECT_EQ(transfer(alt).function(), theta.function());
  }
}

TEST(Transfer, MultiplicityOneWhenStabiliserIsSubgroup) {
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto ind = induced_group(a3);
  const auto pi = extend_from_generators(ind.group, make_cyclic(3), std::vector<Element>{ind.from_parent(3)}, std::vector<Element>{1});
  const auto setup = make_transfer_setup(a3, pi);
  const auto base = transfer_base_function(setup);
  EXPECT_EQ(stabilizer(base), a3);
  EXPECT_EQ(transfer_multiplicity(setup), 1u);
  EXPECT_EQ(transfer(setup).function(), average_function(base).function());
}

TEST(Transfer, SetupValidation) {
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto ind = induced_group(a3);
  const auto pi = extend_from_generators(ind.group, make_cyclic(3), std::vector<Element>{ind.from_parent(3)}, std::vector<Element>{1});
  const auto setup = make_transfer_setup(a3, pi);
  try {
    with_representatives(setup, {3, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::precondition);
  }
  EXPECT_THROW(with_representatives(setup, {0, 3}), Error);
  EXPECT_THROW(make_transfer_setup(a3, as_homomorphism(GroupFunction::constant_identity(s3, s3))), Error);
  // pi into a non-abelian image.
  const auto whole = induced_group(Subgroup::whole(s3));
  std::vector<Element> identity(6);
  for (Element x = 0; x < 6; ++x) identity[x] = x;
  try {
    make_transfer_setup(Subgroup::whole(s3), as_homomorphism(GroupFunction(whole.group, whole.group, identity)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::abelian);
  }
}
