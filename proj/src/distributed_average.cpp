#include "grpfun/distributed_average.hpp"

#include <numeric>
#include <string>

#include "grpfun/error.hpp"
#include "grpfun/number.hpp"

namespace grpfun {

namespace {

bool stabilizes(const GroupFunction& f, const Subgroup& k) {
  for (auto s : k.generators())
    if (!(conjugate(f, s) == f)) return false;
  return true;
}

Homomorphism certify(GroupFunction f, const char* what) {
  try {
    return as_homomorphism(f);
  } catch (const Error& e) {
    if (e.code() != Errc::certification) throw;
    fail(Errc::invariant_violation, std::string(what) + " is not a homomorphism", e.witness());
  }
}

// Reads f as a function into `target` (same order, same table up to identity).
Homomorphism retarget(const Homomorphism& f, const GroupPtr& target) {
  if (!same_group(f.codomain(), target))
    fail(Errc::shape, "homomorphism does not map into the expected quotient");
  return as_homomorphism(GroupFunction(f.domain(), target,
                                       {f.function().values().begin(), f.function().values().end()}));
}

std::string pair_witness(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

DistributedAverageContext make_context(const GroupFunction& f, const ContextOptions& options) {
  if (!f.identity_preserving())
    fail(Errc::precondition, "distributed average needs an identity-preserving function");

  auto k = options.k ? *options.k : stabilizer(f);
  if (!same_group(k.parent(), f.domain())) fail(Errc::shape, "K must be a subgroup of the domain");
  if (!stabilizes(f, k)) fail(Errc::containment, "K is not contained in the stabilizer of f");

  const auto dist = distributor_subgroup(f);
  auto a = options.a ? *options.a : dist;
  if (!same_group(a.parent(), f.codomain())) fail(Errc::shape, "A must be a subgroup of the codomain");
  if (!a.is_abelian()) fail(Errc::abelian, "A must be abelian");
  if (!dist.is_subset_of(a)) fail(Errc::containment, "[G,G;f] is not contained in A");

  auto reps = options.representatives
                  ? cosets_with_representatives(k, CosetSide::right, *options.representatives)
                  : right_cosets(k);
  const std::uint64_t n = reps.size();
  const std::uint64_t order_a = a.order();
  if (std::gcd(n, order_a) != 1)
    fail(Errc::coprimality, "[G:K] = " + std::to_string(n) + " is not prime to |A| = " +
                                std::to_string(order_a));
  std::uint64_t m = mod_inverse(n, order_a);
  if (options.m) {
    if ((*options.m % order_a) * (n % order_a) % order_a != 1 % order_a)
      fail(Errc::coprimality, "m = " + std::to_string(*options.m) + " does not invert [G:K] mod |A|");
    m = *options.m;
  }
  return DistributedAverageContext{f, std::move(k), std::move(a), std::move(reps), m};
}

GroupFunction average_distributor(const DistributedAverageContext& ctx) {
  const auto& f = ctx.function;
  const auto& h = *f.codomain();
  const auto reps = ctx.reps.representatives();
  std::vector<Element> values(f.domain()->order());
  for (std::size_t x = 0; x < values.size(); ++x) {
    const auto ex = static_cast<Element>(x);
    Element forward = 0, backward = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      forward = h.mul(forward, distributor(f, reps[i], ex));
      backward = h.mul(backward, distributor(f, reps[reps.size() - 1 - i], ex));
    }
    if (forward != backward)
      fail(Errc::invariant_violation, "distributor product depends on representative order",
           std::to_string(x));
    values[x] = h.pow(forward, static_cast<std::int64_t>(ctx.m));
    if (!ctx.a_subgroup.contains(values[x]))
      fail(Errc::invariant_violation, "average distributor left A", std::to_string(x));
  }
  return GroupFunction(f.domain(), f.codomain(), std::move(values));
}

Homomorphism distributed_average(const DistributedAverageContext& ctx) {
  return certify(pointwise_product(ctx.function, average_distributor(ctx)), "distributed average");
}

bool verify_invariance(const GroupFunction& f, const std::vector<DistributedAverageContext>& contexts) {
  std::optional<GroupFunction> reference;
  for (const auto& ctx : contexts) {
    if (!(ctx.function == f)) fail(Errc::precondition, "context wraps a different function");
    auto result = pointwise_product(f, average_distributor(ctx));
    if (!reference) reference = std::move(result);
    else if (!(*reference == result)) return false;
  }
  return true;
}

GroupFunction twist(const GroupFunction& f, const GroupFunction& a, const Subgroup& a_subgroup,
                    const Subgroup& k_subgroup) {
  for (std::size_t x = 0; x < a.values().size(); ++x)
    if (!a_subgroup.contains(a.values()[x]))
      fail(Errc::containment, "twisting function leaves A", std::to_string(x));
  if (!a.identity_preserving() || !stabilizes(a, k_subgroup))
    fail(Errc::containment, "K is not contained in the stabilizer of the twisting function");
  return pointwise_product(f, a);
}

Lift sz_lift_abelian(const QuotientGroup& q, const Homomorphism& f, SectionChoice choice) {
  if (!q.kernel.is_abelian()) fail(Errc::abelian, "kernel must be abelian; use the soluble lift");
  if (std::gcd(q.kernel.order(), f.domain()->order()) != 1)
    fail(Errc::coprimality, "|A| = " + std::to_string(q.kernel.order()) + " is not prime to |G| = " +
                                std::to_string(f.domain()->order()));
  const auto target = retarget(f, q.group);
  const auto section = choice == SectionChoice::canonical
                           ? coset_section(q, target)
                           : coset_section(q, target, alternate_cosets(q.kernel, CosetSide::left));
  ContextOptions options;
  options.a = q.kernel;
  const auto ctx = make_context(section, options);
  auto lift = distributed_average(ctx);
  if (!(compose(q.projection, lift.function()) == target.function()))
    fail(Errc::invariant_violation, "lift does not project onto the original homomorphism");
  return Lift{std::move(lift), {LiftStep{q.kernel.order(), ctx.m, ctx.index()}}};
}

Lift sz_lift_abelian(const Subgroup& a, const Homomorphism& f, SectionChoice choice) {
  return sz_lift_abelian(quotient(a), f, choice);
}

namespace {

// One rung of the soluble chain: H/N_{j+1} modulo the image of N_j, and the
// identification of that quotient with H/N_j.
struct Layer {
  QuotientGroup fine;             // H / N_{j+1}
  QuotientGroup step;             // (H / N_{j+1}) / (N_j / N_{j+1})
  std::vector<Element> to_coarse; // step.group -> (H / N_j).group
  std::vector<Element> from_coarse;
};

Layer make_layer(const Subgroup& nj, const Subgroup& nj1, const QuotientGroup& coarse) {
  auto fine = quotient(nj1);
  std::vector<Element> image;
  for (auto x : nj.members()) image.push_back(fine.projection(x));
  auto step = quotient(subgroup_closure(fine.group, image));
  const auto k = step.group->order();
  if (k != coarse.group->order())
    fail(Errc::invariant_violation, "layer quotient order mismatch");
  std::vector<Element> to(k);
  constexpr auto unset = static_cast<Element>(-1);
  std::vector<Element> from(k, unset);
  for (std::size_t c = 0; c < k; ++c) {
    const auto in_h = fine.representative(step.representative(static_cast<Element>(c)));
    to[c] = coarse.projection(in_h);
    if (from[to[c]] != unset) fail(Errc::invariant_violation, "layer identification is not injective");
    from[to[c]] = static_cast<Element>(c);
  }
  return Layer{std::move(fine), std::move(step), std::move(to), std::move(from)};
}

std::vector<Subgroup> soluble_series(const Subgroup& n) {
  if (!is_normal(n)) fail(Errc::normality, "N must be normal");
  auto series = derived_series(n);
  if (!series.back().is_trivial()) fail(Errc::solubility, "N is not soluble");
  return series;
}

}  // namespace

Lift sz_lift_soluble(const Subgroup& n, const Homomorphism& f, SectionChoice choice) {
  const auto series = soluble_series(n);
  if (std::gcd(n.order(), f.domain()->order()) != 1)
    fail(Errc::coprimality, "|N| = " + std::to_string(n.order()) + " is not prime to |G| = " +
                                std::to_string(f.domain()->order()));
  auto coarse = quotient(series.front());
  auto current = retarget(f, coarse.group);
  std::vector<LiftStep> steps;
  for (std::size_t j = 0; j + 1 < series.size(); ++j) {
    auto layer = make_layer(series[j], series[j + 1], coarse);
    std::vector<Element> values(current.function().values().size());
    for (std::size_t x = 0; x < values.size(); ++x)
      values[x] = layer.from_coarse[current.function().values()[x]];
    const auto into_step = as_homomorphism(GroupFunction(f.domain(), layer.step.group, std::move(values)));
    auto lifted = sz_lift_abelian(layer.step, into_step, choice);
    steps.insert(steps.end(), lifted.steps.begin(), lifted.steps.end());
    current = std::move(lifted.hom);
    coarse = std::move(layer.fine);
  }
  // coarse is now H / 1; map coset indices back to elements of H.
  std::vector<Element> values(f.domain()->order());
  for (std::size_t x = 0; x < values.size(); ++x)
    values[x] = coarse.representative(current.function().values()[x]);
  auto lift = certify(GroupFunction(f.domain(), n.parent(), std::move(values)), "soluble lift");
  const auto top = quotient(n);
  if (!(compose(top.projection, lift.function()) == f.function()))
    fail(Errc::invariant_violation, "soluble lift does not project onto the original homomorphism");
  return Lift{std::move(lift), std::move(steps)};
}

Element conjugator_between(const Homomorphism& f1, const Homomorphism& f2, const Subgroup& a,
                           const std::optional<DistributedAverageContext>& ctx) {
  if (!same_group(f1.domain(), f2.domain()) || !same_group(f1.codomain(), f2.codomain()) ||
      !same_group(a.parent(), f1.codomain()))
    fail(Errc::shape, "conjugator needs two homomorphisms G -> H and A <= H");
  const auto& h = *f1.codomain();
  std::vector<Element> diff(f1.domain()->order());
  for (std::size_t x = 0; x < diff.size(); ++x) {
    const auto e = static_cast<Element>(x);
    diff[x] = h.mul(h.inv(f2(e)), f1(e));
    if (!a.contains(diff[x]))
      fail(Errc::not_cotwisted, "homomorphisms differ outside A", std::to_string(x));
  }
  const GroupFunction difference(f1.domain(), f1.codomain(), std::move(diff));

  DistributedAverageContext context = [&] {
    if (ctx) return *ctx;
    ContextOptions options;
    options.k = Subgroup::trivial(f1.domain());
    options.a = a;
    return make_context(f2.function(), options);
  }();
  if (!(context.function == f2.function()))
    fail(Errc::precondition, "context must be built on the second homomorphism");
  if (!stabilizes(difference, context.k_subgroup))
    fail(Errc::containment, "K does not stabilise the difference function");

  Element c = 0;
  for (auto t : context.reps.representatives()) c = h.mul(c, difference(t));
  c = h.pow(c, static_cast<std::int64_t>(context.m));
  for (std::size_t x = 0; x < difference.values().size(); ++x) {
    const auto e = static_cast<Element>(x);
    if (f1(e) != h.conj(f2(e), c))
      fail(Errc::invariant_violation, "conjugator identity fails", pair_witness(x, c));
  }
  return c;
}

Element conjugator_soluble(const Homomorphism& f1, const Homomorphism& f2, const Subgroup& n) {
  const auto series = soluble_series(n);
  const auto& h = *n.parent();
  const auto top = quotient(n);
  if (!(compose(top.projection, f1.function()) == compose(top.projection, f2.function())))
    fail(Errc::not_cotwisted, "homomorphisms differ modulo N");

  Element total = 0;
  auto moving = f2;
  for (std::size_t j = 0; j + 1 < series.size(); ++j) {
    const auto fine = quotient(series[j + 1]);
    std::vector<Element> image;
    for (auto x : series[j].members()) image.push_back(fine.projection(x));
    const auto layer_kernel = subgroup_closure(fine.group, image);
    const auto g1 = as_homomorphism(compose(fine.projection, f1.function()));
    const auto g2 = as_homomorphism(compose(fine.projection, moving.function()));
    const auto c_layer = fine.representative(conjugator_between(g1, g2, layer_kernel));
    if (!series[j].contains(c_layer))
      fail(Errc::invariant_violation, "layer conjugator is outside N_j", std::to_string(c_layer));
    std::vector<Element> values(moving.function().values().size());
    for (std::size_t x = 0; x < values.size(); ++x)
      values[x] = h.conj(moving.function().values()[x], c_layer);
    moving = as_homomorphism(GroupFunction(moving.domain(), moving.codomain(), std::move(values)));
    total = h.mul(total, c_layer);
  }
  for (std::size_t x = 0; x < f1.function().values().size(); ++x) {
    const auto e = static_cast<Element>(x);
    if (f1(e) != h.conj(f2(e), total))
      fail(Errc::invariant_violation, "composed conjugator identity fails", pair_witness(x, total));
  }
  return total;
}

}  // namespace grpfun
