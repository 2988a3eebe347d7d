#include "grpfun/function_space.hpp"

#include <algorithm>
#include <string>

#include "grpfun/error.hpp"

namespace grpfun {

namespace {

void require_identity_preserving(const GroupFunction& f, const char* what) {
  if (!f.identity_preserving())
    fail(Errc::precondition, std::string(what) + " is defined on identity-preserving functions only",
         "f(0) = " + std::to_string(f.values()[0]));
}

}  // namespace

GroupFunction conjugate(const GroupFunction& f, Element a) {
  const auto& g = *f.domain();
  const auto& h = *f.codomain();
  const auto fa_inv = h.inv(f(a));
  const auto row = g.row(a);
  std::vector<Element> values(g.order());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = h.row(fa_inv)[f.values()[row[x]]];
  return GroupFunction(f.domain(), f.codomain(), std::move(values));
}

GroupFunction act(const GroupFunction& f, Element a) {
  require_identity_preserving(f, "the function action");
  return conjugate(f, f.domain()->inv(a));
}

GroupFunction pointwise_product(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f.domain(), g.domain()) || !same_group(f.codomain(), g.codomain()))
    fail(Errc::shape, "pointwise product needs matching domain and codomain");
  const auto& h = *f.codomain();
  std::vector<Element> values(f.values().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = h.mul(f.values()[x], g.values()[x]);
  return GroupFunction(f.domain(), f.codomain(), std::move(values));
}

GroupFunction pointwise_inverse(const GroupFunction& f) {
  const auto& h = *f.codomain();
  std::vector<Element> values(f.values().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = h.inv(f.values()[x]);
  return GroupFunction(f.domain(), f.codomain(), std::move(values));
}

std::optional<std::pair<Element, Element>> homomorphism_failure(const GroupFunction& f) {
  const auto& g = *f.domain();
  const auto& h = *f.codomain();
  const auto v = f.values();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = g.row(static_cast<Element>(x));
    const auto hx = h.row(v[x]);
    for (std::size_t y = 0; y < g.order(); ++y)
      if (v[gx[y]] != hx[v[y]]) return std::pair{static_cast<Element>(x), static_cast<Element>(y)};
  }
  return std::nullopt;
}

bool is_homomorphism(const GroupFunction& f) { return !homomorphism_failure(f).has_value(); }

Homomorphism as_homomorphism(const GroupFunction& f) {
  if (const auto bad = homomorphism_failure(f))
    fail(Errc::certification, "function is not a homomorphism",
         "f(x*y) != f(x)f(y) at (x,y) = (" + std::to_string(bad->first) + "," +
             std::to_string(bad->second) + ")");
  std::vector<Element> kernel;
  for (std::size_t x = 0; x < f.values().size(); ++x)
    if (f.values()[x] == 0) kernel.push_back(static_cast<Element>(x));
  auto k = subgroup_from_members(f.domain(), kernel);
  if (!is_normal(k)) fail(Errc::invariant_violation, "homomorphism kernel is not normal");
  return Homomorphism(f, std::move(k), image_subgroup(f));
}

Subgroup image_subgroup(const GroupFunction& f) {
  return subgroup_closure(f.codomain(), f.values());
}

Subgroup stabilizer(const GroupFunction& f) {
  require_identity_preserving(f, "the stabilizer");
  std::vector<Element> members;
  for (std::size_t a = 0; a < f.domain()->order(); ++a)
    if (conjugate(f, static_cast<Element>(a)) == f) members.push_back(static_cast<Element>(a));
  return subgroup_from_members(f.domain(), members);
}

FunctionOrbit orbit(const GroupFunction& f) {
  auto stab = stabilizer(f);
  const auto cosets = right_cosets(stab);
  std::vector<Element> reps(cosets.representatives().begin(), cosets.representatives().end());
  std::vector<GroupFunction> members;
  members.reserve(reps.size());
  for (auto a : reps) members.push_back(conjugate(f, a));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j])
        fail(Errc::invariant_violation, "orbit members repeat",
             "representatives " + std::to_string(reps[i]) + "," + std::to_string(reps[j]));
  if (members.size() * stab.order() != f.domain()->order())
    fail(Errc::invariant_violation, "orbit-stabilizer count mismatch");
  return FunctionOrbit{f, std::move(reps), std::move(members), std::move(stab)};
}

std::uint64_t identity_preserving_count(const Group& domain, const Group& codomain) {
  constexpr auto saturated = static_cast<std::uint64_t>(-1);
  std::uint64_t count = 1;
  for (std::size_t i = 1; i < domain.order(); ++i) {
    if (count > saturated / codomain.order()) return saturated;
    count *= codomain.order();
  }
  return count;
}

IdentityPreservingFunctions::IdentityPreservingFunctions(GroupPtr domain, GroupPtr codomain,
                                                         std::uint64_t cap)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  count_ = identity_preserving_count(*domain_, *codomain_);
  if (count_ > cap)
    fail(Errc::size_limit, "enumeration of " + std::to_string(codomain_->order()) + "^" +
                               std::to_string(domain_->order() - 1) + " = " +
                               (count_ == static_cast<std::uint64_t>(-1) ? std::string("overflow")
                                                                         : std::to_string(count_)) +
                               " functions exceeds cap " + std::to_string(cap));
  current_.assign(domain_->order(), 0);
}

std::optional<GroupFunction> IdentityPreservingFunctions::next() {
  if (emitted_ == count_) return std::nullopt;
  if (emitted_ > 0) {
    const auto base = static_cast<Element>(codomain_->order());
    for (std::size_t pos = current_.size() - 1; pos >= 1; --pos) {
      if (++current_[pos] < base) break;
      current_[pos] = 0;
    }
  }
  ++emitted_;
  return GroupFunction(domain_, codomain_, current_);
}

std::uint64_t IdentityPreservingFunctions::index_of(const GroupFunction& f) const {
  std::uint64_t index = 0;
  for (std::size_t pos = 1; pos < f.values().size(); ++pos)
    index = index * codomain_->order() + f.values()[pos];
  return index;
}

OrbitCensus orbit_census(const GroupPtr& domain, const GroupPtr& codomain, std::uint64_t cap) {
  IdentityPreservingFunctions stream(domain, codomain, cap);
  OrbitCensus census;
  census.total = stream.count();
  std::vector<char> visited(stream.count(), 0);
  while (auto f = stream.next()) {
    if (is_homomorphism(*f)) ++census.homomorphism_count;
    const auto self = stream.index_of(*f);
    if (visited[self]) continue;
    const auto o = orbit(*f);
    for (const auto& member : o.members) visited[stream.index_of(member)] = 1;
    ++census.orbit_size_histogram[o.size()];
    if (o.size() == 1) census.fixed_points.push_back(*f);
  }
  return census;
}

GroupFunction coset_section(const QuotientGroup& q, const Homomorphism& target) {
  return coset_section(q, target, q.cosets);
}

GroupFunction coset_section(const QuotientGroup& q, const Homomorphism& target,
                            const CosetSystem& transversal) {
  if (!same_group(target.codomain(), q.group))
    fail(Errc::shape, "homomorphism does not map into the quotient");
  if (!(transversal.subgroup() == q.kernel))
    fail(Errc::shape, "transversal is not for the quotient kernel");
  // Map each quotient element to the supplied representative of its coset.
  std::vector<Element> pick(q.group->order());
  for (auto t : transversal.representatives()) pick[q.projection(t)] = t;
  if (pick[0] != 0)
    fail(Errc::precondition, "transversal must represent the kernel by the identity");
  std::vector<Element> values(target.domain()->order());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = pick[target(static_cast<Element>(x))];
  return GroupFunction(target.domain(), q.parent(), std::move(values));
}

Homomorphism extend_from_generators(const GroupPtr& domain, const GroupPtr& codomain,
                                    const std::vector<Element>& generators,
                                    const std::vector<Element>& images) {
  if (generators.size() != images.size())
    fail(Errc::precondition, "need one image per generator: " + std::to_string(generators.size()) +
                                 " generators, " + std::to_string(images.size()) + " images");
  for (auto x : generators)
    if (!domain->contains(x)) fail(Errc::domain, "generator " + std::to_string(x) + " out of range");
  for (auto y : images)
    if (!codomain->contains(y)) fail(Errc::domain, "image " + std::to_string(y) + " out of range");
  constexpr auto unset = static_cast<Element>(-1);
  std::vector<Element> values(domain->order(), unset);
  values[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const auto y = domain->mul(x, generators[i]);
      const auto v = codomain->mul(values[x], images[i]);
      if (values[y] == unset) {
        values[y] = v;
        queue.push_back(y);
      } else if (values[y] != v) {
        fail(Errc::precondition, "generator images do not define a homomorphism",
             "element " + std::to_string(y) + " reached with values " + std::to_string(values[y]) +
                 " and " + std::to_string(v));
      }
    }
  }
  if (queue.size() != domain->order())
    fail(Errc::precondition, "generators do not generate the domain (" + std::to_string(queue.size()) +
                                 " of " + std::to_string(domain->order()) + " elements reached)");
  return as_homomorphism(GroupFunction(domain, codomain, std::move(values)));
}

}  // namespace grpfun
