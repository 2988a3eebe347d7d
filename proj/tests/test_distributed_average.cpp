#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "grpfun/catalog.hpp"
#include "grpfun/distributed_average.hpp"
#include "grpfun/error.hpp"
#include "grpfun/group_io.hpp"
#include "grpfun/harness.hpp"
#include "oracles.hpp"

using namespace grpfun;

namespace {

Errc error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::invariant_violation;
}

std::vector<Element> vals(const GroupFunction& f) { return {f.values().begin(), f.values().end()}; }

// Random function G -> A (values drawn from A's members), identity preserving.
GroupFunction random_into(std::mt19937_64& rng, const GroupPtr& g, const Subgroup& a) {
  const auto members = a.members();
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::vector<Element> v(g->order(), 0);
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = members[pick(rng)];
  return GroupFunction(g, a.parent(), std::move(v));
}

// Homomorphism G -> H paired with an abelian normal A of H, |G| prime to |A|.
struct TwistCase {
  std::string name;
  Homomorphism hom;
  Subgroup a;
};

std::vector<TwistCase> twist_cases() {
  std::vector<TwistCase> out;
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  out.push_back({"Z2 -> S3", extend_from_generators(make_cyclic(2), s3, {1}, {1}), a3});
  out.push_back({"Z4 -> S3", extend_from_generators(make_cyclic(4), s3, {1}, {2}), a3});
  out.push_back({"Z2xZ2 -> S3", extend_from_generators(parse_group_spec("product:cyclic:2,cyclic:2"), s3,
                                                       {1, 2}, {5, 0}),
                 a3});
  const auto a4 = make_alternating4();
  const auto v4 = klein_subgroup(a4);
  out.push_back({"Z3 -> A4", extend_from_generators(make_cyclic(3), a4, {1}, {1}), v4});
  const auto d5 = make_dihedral(5);
  const auto rot = subgroup_closure(d5, std::vector<Element>{1});
  out.push_back({"Z2 -> D5", extend_from_generators(make_cyclic(2), d5, {1}, {5}), rot});
  out.push_back({"Z4 -> D5", extend_from_generators(make_cyclic(4), d5, {1}, {7}), rot});
  const auto z15 = make_cyclic(15);
  out.push_back({"Z5 -> Z15", extend_from_generators(make_cyclic(5), z15, {1}, {3}),
                 subgroup_closure(z15, std::vector<Element>{5})});
  return out;
}

}  // namespace

TEST(Context, HomomorphismHasTrivialIndex) {
  const auto s3 = make_symmetric(3);
  const auto f = GroupFunction(make_cyclic(2), s3, {0, 1});
  const auto ctx = make_context(f);
  EXPECT_TRUE(ctx.k_subgroup.is_whole());
  EXPECT_EQ(ctx.index(), 1u);
  EXPECT_EQ(ctx.m, 1u);
  EXPECT_EQ(distributed_average(ctx).function(), f);
  EXPECT_EQ(average_distributor(ctx), GroupFunction::constant_identity(f.domain(), s3));
}

TEST(Context, IndexTwoAgainstOrderThree) {
  const auto s3 = make_symmetric(3);
  const auto z2 = make_cyclic(2);
  const auto a3 = alternating_subgroup(s3);
  ContextOptions options;
  options.k = Subgroup::trivial(z2);
  options.a = a3;
  const auto ctx = make_context(GroupFunction(z2, s3, {0, 1}), options);
  EXPECT_EQ(ctx.index(), 2u);
  EXPECT_EQ(ctx.a_subgroup.order(), 3u);
  EXPECT_EQ(ctx.m, 2u);
}

TEST(Context, Errors) {
  const auto s3 = make_symmetric(3);
  const auto z2 = make_cyclic(2), z4 = make_cyclic(4);
  EXPECT_EQ(error_code([&] { make_context(GroupFunction(z2, s3, {1, 1})); }), Errc::precondition);
  {
    ContextOptions o;
    o.a = Subgroup::whole(s3);
    EXPECT_EQ(error_code([&] { make_context(GroupFunction(z2, s3, {0, 1}), o); }), Errc::abelian);
  }
  {
    // Values {0,1,1,0} in Z2: not a homomorphism, so [G,G;f] = Z2 and any index-4 K clashes.
    ContextOptions o;
    o.k = Subgroup::trivial(z4);
    EXPECT_EQ(error_code([&] { make_context(GroupFunction(z4, make_cyclic(2), {0, 1, 1, 0}), o); }),
              Errc::coprimality);
  }
  {
    // f = {0,1,0,2} into S3 is moved by 1 in Z4.
    const GroupFunction f(z4, s3, {0, 1, 0, 2});
    ContextOptions o;
    o.k = Subgroup::whole(z4);
    EXPECT_EQ(error_code([&] { make_context(f, o); }), Errc::containment);
    ContextOptions small_a;
    small_a.a = Subgroup::trivial(s3);
    EXPECT_EQ(error_code([&] { make_context(f, small_a); }), Errc::containment);
    ContextOptions bad_m;
    bad_m.k = Subgroup::trivial(z4);
    bad_m.m = 2;
    EXPECT_EQ(error_code([&] { make_context(f, bad_m); }), Errc::coprimality);
  }
}

TEST(DistributedAverage, NonHomomorphicSectionOfS3) {
  const auto s3 = make_symmetric(3);
  const auto z4 = make_cyclic(4);
  const auto a3 = alternating_subgroup(s3);
  // Projects onto x mod 2 in S3/A3 but uses two different transpositions.
  const GroupFunction f(z4, s3, {0, 1, 0, 2});
  ASSERT_FALSE(is_homomorphism(f));
  const auto ctx = make_context(f);
  EXPECT_TRUE(distributor_subgroup(f).is_subset_of(a3));
  const auto d = average_distributor(ctx);
  for (Element x = 0; x < 4; ++x) EXPECT_TRUE(a3.contains(d(x)));
  const auto avg = distributed_average(ctx);
  EXPECT_TRUE(oracle::is_hom(z4->rows(), s3->rows(), vals(avg.function())));
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(avg(x), s3->mul(f(x), d(x)));
  // Complement of A3: image has order 2 and meets A3 trivially.
  const auto image = avg.image();
  EXPECT_EQ(image.order(), 2u);
  EXPECT_EQ(image.members()[0], 0u);
  EXPECT_FALSE(a3.contains(image.members()[1]));
}

TEST(DistributedAverage, TwistedHomomorphismsAreCertifiedAndInvariant) {
  std::mt19937_64 rng(77);
  for (const auto& c : twist_cases()) {
    const auto g = c.hom.domain();
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_into(rng, g, c.a);
      const auto k = Subgroup::trivial(g);
      const auto f = twist(c.hom.function(), a, c.a, k);
      EXPECT_TRUE(distributor_subgroup(f).is_subset_of(c.a)) << c.name;

      std::vector<DistributedAverageContext> contexts;
      ContextOptions base;
      base.k = k;
      base.a = c.a;
      contexts.push_back(make_context(f, base));
      const auto reference = distributed_average(contexts.back());
      EXPECT_TRUE(oracle::is_hom(g->rows(), f.codomain()->rows(), vals(reference.function()))) << c.name;

      // Default K = Stab(f) and A = [G,G;f].
      contexts.push_back(make_context(f));
      // m shifted by |A|.
      auto shifted = base;
      shifted.m = contexts.front().m + c.a.order();
      contexts.push_back(make_context(f, shifted));
      // Random right transversal of the stabilizer.
      const auto stab = stabilizer(f);
      auto reps = contexts[1].reps.representatives();
      std::vector<Element> moved{0};
      const auto members = stab.members();
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      for (std::size_t i = 1; i < reps.size(); ++i) moved.push_back(g->mul(members[pick(rng)], reps[i]));
      ContextOptions with_reps;
      with_reps.representatives = moved;
      contexts.push_back(make_context(f, with_reps));
      // Reversed representative order.
      ContextOptions reversed;
      reversed.k = k;
      reversed.a = c.a;
      std::vector<Element> all(g->order());
      for (Element x = 0; x < g->order(); ++x) all[x] = x;
      std::reverse(all.begin() + 1, all.end());
      reversed.representatives = all;
      contexts.push_back(make_context(f, reversed));

      EXPECT_TRUE(verify_invariance(f, contexts)) << c.name;
      for (const auto& ctx : contexts) EXPECT_EQ(distributed_average(ctx).function(), reference.function());
    }
  }
}

TEST(DistributedAverage, LargerAbelianSubgroupGivesSameResult) {
  // Z2 -> Z2 x Z3 with f(1) = (1, 1): [G,G;f] is the Z3 factor; A may be the whole group.
  const auto z2 = make_cyclic(2);
  const auto h = parse_group_spec("product:cyclic:2,cyclic:3");
  const GroupFunction f(z2, h, {0, 4});
  const auto dist = distributor_subgroup(f);
  ContextOptions small, large;
  small.k = large.k = Subgroup::trivial(z2);
  small.a = dist;
  large.a = subgroup_closure(h, std::vector<Element>{2});  // the Z3 factor as {0,2,4}
  ASSERT_TRUE(dist.is_subset_of(*large.a));
  EXPECT_TRUE(verify_invariance(f, {make_context(f, small), make_context(f, large), make_context(f)}));
}

TEST(DistributedAverage, TwistRoundTrip) {
  std::mt19937_64 rng(5);
  for (const auto& c : twist_cases()) {
    const auto g = c.hom.domain();
    const auto k = Subgroup::trivial(g);
    const auto a = random_into(rng, g, c.a);
    EXPECT_EQ(twist(c.hom.function(), GroupFunction::constant_identity(g, a.codomain()), c.a, k), c.hom.function());
    EXPECT_EQ(twist(twist(c.hom.function(), a, c.a, k), pointwise_inverse(a), c.a, k), c.hom.function());
  }
  const auto s3 = make_symmetric(3);
  const auto z2 = make_cyclic(2);
  EXPECT_EQ(error_code([&] {
              twist(GroupFunction(z2, s3, {0, 1}), GroupFunction(z2, s3, {0, 1}), alternating_subgroup(s3),
                    Subgroup::trivial(z2));
            }),
            Errc::containment);
}

TEST(DistributedAverage, AuxiliaryAverageIsTrivial) {
  // Every function Z4 -> Z3 with K = 1: gcd(4, 3) = 1.
  const auto z4 = make_cyclic(4), z3 = make_cyclic(3);
  IdentityPreservingFunctions stream(z4, z3);
  std::size_t count = 0;
  while (auto a = stream.next()) {
    ContextOptions o;
    o.k = Subgroup::trivial(z4);
    o.a = Subgroup::whole(z3);
    EXPECT_EQ(distributed_average(make_context(*a, o)).function(), GroupFunction::constant_identity(z4, z3));
    ++count;
  }
  EXPECT_EQ(count, 27u);

  std::mt19937_64 rng(8);
  for (const auto& c : twist_cases()) {
    const auto g = c.hom.domain();
    for (int i = 0; i < 10; ++i) {
      ContextOptions o;
      o.k = Subgroup::trivial(g);
      o.a = c.a;
      const auto a = random_into(rng, g, c.a);
      EXPECT_EQ(distributed_average(make_context(a, o)).function(), GroupFunction::constant_identity(g, a.codomain()))
          << c.name;
    }
  }
}

TEST(DistributedAverage, CoprimeHomomorphismIsFixed) {
  for (const auto& c : twist_cases()) {
    ContextOptions o;
    o.k = Subgroup::trivial(c.hom.domain());
    o.a = c.a;
    EXPECT_EQ(distributed_average(make_context(c.hom.function(), o)).function(), c.hom.function()) << c.name;
  }
}

TEST(Lift, S3OverA3) {
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto q = quotient(a3);
  const auto z2 = make_cyclic(2);
  const auto f = as_homomorphism(GroupFunction(z2, q.group, {0, 1}));
  for (auto choice : {SectionChoice::canonical, SectionChoice::alternate}) {
    const auto lift = sz_lift_abelian(q, f, choice);
    EXPECT_EQ(compose(q.projection, lift.hom.function()), f.function());
    EXPECT_EQ(lift.hom.image().order(), 2u);
    EXPECT_EQ(s3->element_order(lift.hom(1)), 2u);
    ASSERT_EQ(lift.steps.size(), 1u);
    EXPECT_EQ(lift.steps[0].kernel_order, 3u);
  }
  const auto trivial = as_homomorphism(GroupFunction::constant_identity(z2, q.group));
  EXPECT_EQ(sz_lift_abelian(q, trivial).hom.function(), GroupFunction::constant_identity(z2, s3));
}

TEST(Lift, A4OverV4) {
  const auto a4 = make_alternating4();
  const auto v4 = klein_subgroup(a4);
  const auto q = quotient(v4);
  const auto z3 = make_cyclic(3);
  const auto f = extend_from_generators(z3, q.group, {1}, {1});
  const auto lift = sz_lift_abelian(q, f);
  EXPECT_EQ(compose(q.projection, lift.hom.function()), f.function());
  EXPECT_EQ(lift.hom.image().order(), 3u);
  EXPECT_TRUE(oracle::is_hom(z3->rows(), a4->rows(), vals(lift.hom.function())));
}

TEST(Lift, SolubleTwoStep) {
  const auto h = parse_group_spec("product:symmetric:3,cyclic:5");
  std::vector<Element> s3_factor;
  for (Element s = 0; s < 6; ++s) s3_factor.push_back(s * 5);
  const auto n = subgroup_closure(h, s3_factor);
  const auto q = quotient(n);
  const auto z5 = make_cyclic(5);
  const auto f = extend_from_generators(z5, q.group, {1}, {1});
  for (auto choice : {SectionChoice::canonical, SectionChoice::alternate}) {
    const auto lift = sz_lift_soluble(n, f, choice);
    ASSERT_EQ(lift.steps.size(), 2u);
    EXPECT_EQ(lift.steps[0].kernel_order, 2u);
    EXPECT_EQ(lift.steps[1].kernel_order, 3u);
    EXPECT_EQ(compose(q.projection, lift.hom.function()), f.function());
    EXPECT_EQ(lift.hom.image().order(), 5u);
  }
  const auto trivial = as_homomorphism(GroupFunction::constant_identity(z5, q.group));
  EXPECT_EQ(sz_lift_soluble(n, trivial).hom.function(), GroupFunction::constant_identity(z5, h));
}

TEST(Lift, AbelianKernelSolubleAgreesWithAbelian) {
  for (const auto& ext : shipped_extensions()) {
    if (!ext.normal.is_abelian()) continue;
    const auto q = quotient(ext.normal);
    EXPECT_EQ(sz_lift_soluble(ext.normal, ext.hom).hom.function(), sz_lift_abelian(q, ext.hom).hom.function())
        << ext.name;
  }
}

TEST(Lift, ShippedExtensions) {
  for (const auto& ext : shipped_extensions()) {
    const auto q = quotient(ext.normal);
    const auto g = ext.hom.domain();
    for (auto choice : {SectionChoice::canonical, SectionChoice::alternate}) {
      const auto lift = sz_lift_soluble(ext.normal, ext.hom, choice);
      EXPECT_TRUE(oracle::is_hom(g->rows(), ext.normal.parent()->rows(), vals(lift.hom.function()))) << ext.name;
      EXPECT_EQ(compose(q.projection, lift.hom.function()), ext.hom.function()) << ext.name;
    }
    // Two section choices give conjugate lifts.
    const auto l1 = sz_lift_soluble(ext.normal, ext.hom, SectionChoice::canonical).hom;
    const auto l2 = sz_lift_soluble(ext.normal, ext.hom, SectionChoice::alternate).hom;
    const auto c = conjugator_soluble(l1, l2, ext.normal);
    EXPECT_TRUE(ext.normal.contains(c));
    const auto& h = *ext.normal.parent();
    for (Element x = 0; x < g->order(); ++x) EXPECT_EQ(l1(x), h.conj(l2(x), c)) << ext.name;
  }
}

TEST(Lift, Errors) {
  const auto z6 = make_cyclic(6);
  const auto z3_in_z6 = subgroup_closure(z6, std::vector<Element>{2});
  const auto q = quotient(z3_in_z6);
  const auto z3 = make_cyclic(3);
  const auto trivial = as_homomorphism(GroupFunction::constant_identity(z3, q.group));
  EXPECT_EQ(error_code([&] { sz_lift_abelian(q, trivial); }), Errc::coprimality);
  EXPECT_EQ(error_code([&] { sz_lift_soluble(z3_in_z6, trivial); }), Errc::coprimality);

  const auto s3 = make_symmetric(3);
  const auto z2 = make_cyclic(2);
  const auto transposition = subgroup_closure(s3, std::vector<Element>{1});
  EXPECT_EQ(error_code([&] {
              sz_lift_soluble(transposition, as_homomorphism(GroupFunction::constant_identity(z3, z2)));
            }),
            Errc::normality);

  const auto s5 = make_symmetric(5);
  const auto a5 = alternating_subgroup(s5);
  const auto q5 = quotient(a5);
  const auto one = make_cyclic(1);
  EXPECT_EQ(error_code([&] { sz_lift_soluble(a5, as_homomorphism(GroupFunction::constant_identity(one, q5.group))); }),
            Errc::solubility);

  const auto a4 = make_alternating4();
  const auto q4 = quotient(Subgroup::whole(a4));
  EXPECT_EQ(error_code([&] {
              sz_lift_abelian(q4, as_homomorphism(GroupFunction::constant_identity(make_cyclic(5), q4.group)));
            }),
            Errc::abelian);
}

TEST(Conjugator, ComplementsOfA3) {
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto z2 = make_cyclic(2);
  const auto members = a3.members();
  const std::vector<Element> a3_members(members.begin(), members.end());
  std::vector<Homomorphism> lifts;
  for (Element t : {1u, 2u, 5u}) lifts.push_back(as_homomorphism(GroupFunction(z2, s3, {0, t})));
  int pairs = 0;
  for (const auto& f1 : lifts)
    for (const auto& f2 : lifts) {
      const auto c = conjugator_between(f1, f2, a3);
      EXPECT_TRUE(a3.contains(c));
      for (Element x = 0; x < 2; ++x) EXPECT_EQ(f1(x), s3->conj(f2(x), c));
      const auto found = oracle::conjugators(s3->rows(), vals(f1.function()), vals(f2.function()), a3_members);
      EXPECT_NE(std::find(found.begin(), found.end(), c), found.end());
      EXPECT_EQ(conjugator_soluble(f1, f2, a3), c);
      ++pairs;
    }
  EXPECT_EQ(pairs, 9);
}

TEST(Conjugator, OrderThreeLiftsInA4) {
  const auto a4 = make_alternating4();
  const auto v4 = klein_subgroup(a4);
  const auto q = quotient(v4);
  const auto z3 = make_cyclic(3);
  const auto f = extend_from_generators(z3, q.group, {1}, {1});
  // All homomorphisms Z3 -> A4 lifting f.
  std::vector<Homomorphism> lifts;
  for (Element y = 0; y < a4->order(); ++y) {
    if (a4->element_order(y) != 3 || q.projection(y) != f(1)) continue;
    lifts.push_back(extend_from_generators(z3, a4, {1}, {y}));
  }
  ASSERT_EQ(lifts.size(), 4u);
  const auto members = v4.members();
  const std::vector<Element> v4_members(members.begin(), members.end());
  for (const auto& f1 : lifts)
    for (const auto& f2 : lifts) {
      const auto c = conjugator_between(f1, f2, v4);
      EXPECT_TRUE(v4.contains(c));
      const auto found = oracle::conjugators(a4->rows(), vals(f1.function()), vals(f2.function()), v4_members);
      EXPECT_EQ(found.size(), 1u);
      EXPECT_NE(std::find(found.begin(), found.end(), c), found.end());
    }
}

TEST(Conjugator, TwistedLiftsAcrossCases) {
  // Conjugating a homomorphism by an element of A gives another lift; the formula recovers a conjugator.
  for (const auto& c : twist_cases()) {
    const auto& h = *c.hom.codomain();
    const auto g = c.hom.domain();
    for (auto n : c.a.members()) {
      std::vector<Element> v(g->order());
      for (Element x = 0; x < g->order(); ++x) v[x] = h.conj(c.hom(x), n);
      const auto f2 = as_homomorphism(GroupFunction(g, c.hom.codomain(), v));
      const auto k = conjugator_between(c.hom, f2, c.a);
      for (Element x = 0; x < g->order(); ++x) EXPECT_EQ(c.hom(x), h.conj(f2(x), k)) << c.name;
    }
  }
}

TEST(Conjugator, Errors) {
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto z2 = make_cyclic(2);
  const auto f1 = as_homomorphism(GroupFunction(z2, s3, {0, 1}));
  const auto f2 = as_homomorphism(GroupFunction::constant_identity(z2, s3));
  EXPECT_EQ(error_code([&] { conjugator_between(f1, f2, a3); }), Errc::not_cotwisted);
  EXPECT_EQ(error_code([&] { conjugator_soluble(f1, f2, a3); }), Errc::not_cotwisted);
}

TEST(DistributedAverage, CosetFunctionAverageIsPowerOfTransfer) {
  // a(k t_i) = phi(k) c_i is stabilised by K; its distributed average is the
  // m-th power of the transfer of phi, which need not be trivial.
  std::mt19937_64 rng(13);
  std::size_t cases = 0, nontrivial = 0;
  for (const auto& [name, g] : builtin_catalog()) {
    if (g->order() > 12) continue;
    for (Element x = 0; x < g->order(); ++x) {
      const auto k = subgroup_closure(g, std::vector<Element>{x});
      const auto ind = induced_group(k);
      for (std::size_t n = 2; n <= 5; ++n) {
        if (std::gcd(k.index(), n) != 1) continue;
        const auto a_group = make_cyclic(n);
        for (Element y = 0; y < n; ++y) {
          if ((k.order() * y) % n != 0) continue;
          const auto phi = extend_from_generators(ind.group, a_group, std::vector<Element>{ind.from_parent(x)},
                                                  std::vector<Element>{y});
          std::vector<Element> c(k.index(), 0);
          std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
          for (std::size_t i = 1; i < c.size(); ++i) c[i] = pick(rng);
          const auto a = coset_function(k, phi, c);
          EXPECT_TRUE(k.is_subset_of(stabilizer(a)));
          ContextOptions o;
          o.k = k;
          o.a = Subgroup::whole(a_group);
          const auto ctx = make_context(a, o);
          const auto avg = distributed_average(ctx);
          const auto theta = transfer(make_transfer_setup(k, phi));
          for (Element z = 0; z < g->order(); ++z)
            ASSERT_EQ(avg(z), a_group->pow(theta(z), static_cast<std::int64_t>(ctx.m))) << name;
          ++cases;
          nontrivial += !(avg.function() == GroupFunction::constant_identity(g, a_group));
        }
      }
    }
  }
  EXPECT_GT(cases, 100u);
  EXPECT_GT(nontrivial, 0u);
}

TEST(DistributedAverage, StabilisedHomomorphismIsNotAveragedAway) {
  // K = G, [G:K] = 1: the average of a non-trivial homomorphism a is a itself.
  const auto z3 = make_cyclic(3);
  const GroupFunction a(z3, z3, {0, 1, 2});
  ContextOptions o;
  o.k = Subgroup::whole(z3);
  o.a = Subgroup::whole(z3);
  EXPECT_EQ(distributed_average(make_context(a, o)).function(), a);
}

TEST(DistributedAverage, GeneratedAuxiliaryFunctionsAverageToIdentity) {
  const auto contexts = generated_auxiliary_contexts(99);
  EXPECT_GT(contexts.size(), 100u);
  for (const auto& ctx : contexts) {
    for (auto k : ctx.k_subgroup.members()) EXPECT_EQ(ctx.function(k), 0u);
    EXPECT_EQ(distributed_average(ctx).function(),
              GroupFunction::constant_identity(ctx.function.domain(), ctx.function.codomain()));
  }
}
