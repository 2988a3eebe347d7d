#include "grpfun/subgroup.hpp"

#include <algorithm>
#include <string>

#include "grpfun/error.hpp"

namespace grpfun {

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members, std::vector<Element> generators)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      generators_(std::move(generators)),
      in_(parent_->order(), 0) {
  for (auto m : members_) in_[m] = 1;
  if (parent_->order() % members_.size() != 0)
    fail(Errc::invariant_violation, "subgroup order " + std::to_string(members_.size()) +
                                        " does not divide group order " +
                                        std::to_string(parent_->order()));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {0}, {});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return subgroup_from_members(parent, all);
}

bool Subgroup::is_abelian() const {
  for (auto a : members_)
    for (auto b : members_)
      if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
  return true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (!same_group(parent_, other.parent_)) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Element a) { return other.contains(a); });
}

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Element> generators) {
  std::vector<Element> gens;
  for (auto x : generators) {
    if (!g->contains(x))
      fail(Errc::domain, "generator " + std::to_string(x) + " out of range");
    if (std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  }
  std::vector<char> seen(g->order(), 0);
  std::vector<Element> found{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const auto r = g->row(found[head]);
    for (auto s : gens) {
      const Element y = r[s];
      if (!seen[y]) {
        seen[y] = 1;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup(g, std::move(found), std::move(gens));
}

Subgroup subgroup_from_members(const GroupPtr& g, std::span<const Element> members) {
  std::vector<Element> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted[0] != 0) fail(Errc::validation, "subgroup must contain the identity");
  std::vector<char> in(g->order(), 0);
  for (auto m : sorted) {
    if (!g->contains(m)) fail(Errc::domain, "member " + std::to_string(m) + " out of range");
    in[m] = 1;
  }
  for (auto a : sorted)
    for (auto b : sorted)
      if (!in[g->mul(a, b)])
        fail(Errc::validation, "member set is not closed",
             "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  // Greedy generating set in index order.
  std::vector<Element> gens;
  std::vector<char> covered(g->order(), 0);
  covered[0] = 1;
  for (auto m : sorted) {
    if (covered[m]) continue;
    gens.push_back(m);
    const auto closure = subgroup_closure(g, gens);
    for (auto c : closure.members()) covered[c] = 1;
  }
  return Subgroup(g, std::move(sorted), std::move(gens));
}

bool is_normal(const Subgroup& s) { return is_normal_in(s, Subgroup::whole(s.parent())); }

bool is_normal_in(const Subgroup& n, const Subgroup& in) {
  if (!n.is_subset_of(in)) return false;
  const auto& g = n.group();
  for (auto x : in.members())
    for (auto s : n.generators())
      if (!n.contains(g.conj(s, x))) return false;
  return true;
}

Subgroup normalizer(const Subgroup& s) {
  const auto& g = s.group();
  std::vector<Element> members;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool normalizes = true;
    for (auto m : s.generators())
      if (!s.contains(g.conj(m, e))) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(e);
  }
  return subgroup_from_members(s.parent(), members);
}

Subgroup normal_closure(const Subgroup& in, std::span<const Element> elements) {
  const auto& g = in.group();
  std::vector<Element> gens(elements.begin(), elements.end());
  auto current = subgroup_closure(in.parent(), gens);
  for (;;) {
    std::vector<Element> extra;
    for (auto x : in.members())
      for (auto s : current.generators()) {
        const auto c = g.conj(s, x);
        if (!current.contains(c) && std::find(extra.begin(), extra.end(), c) == extra.end())
          extra.push_back(c);
      }
    if (extra.empty()) return current;
    auto next_gens = std::vector<Element>(current.generators().begin(), current.generators().end());
    next_gens.insert(next_gens.end(), extra.begin(), extra.end());
    current = subgroup_closure(in.parent(), next_gens);
  }
}

std::vector<Subgroup> normal_subgroups(const Subgroup& in, std::size_t order_cap) {
  if (in.order() > order_cap)
    fail(Errc::size_limit, "normal subgroup enumeration limited to order " +
                               std::to_string(order_cap) + ", got " + std::to_string(in.order()));
  std::vector<Subgroup> found{Subgroup::trivial(in.parent())};
  // Every normal subgroup is a join of normal closures of single elements.
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto x : in.members()) {
      if (found[head].contains(x)) continue;
      std::vector<Element> gens(found[head].generators().begin(), found[head].generators().end());
      gens.push_back(x);
      auto candidate = normal_closure(in, gens);
      if (std::find(found.begin(), found.end(), candidate) == found.end())
        found.push_back(std::move(candidate));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return found;
}

Subgroup derived_subgroup(const Subgroup& s) {
  const auto& g = s.group();
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> commutators;
  for (auto x : s.members())
    for (auto y : s.members()) {
      const auto c = g.commutator(x, y);
      if (c != 0 && !seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return subgroup_closure(s.parent(), commutators);
}

std::vector<Subgroup> derived_series(const Subgroup& s) {
  std::vector<Subgroup> series{s};
  for (;;) {
    auto next = derived_subgroup(series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

bool is_soluble(const Subgroup& s) { return derived_series(s).back().is_trivial(); }

CosetSystem::CosetSystem(Subgroup s, CosetSide side, std::vector<Element> reps,
                         std::vector<std::size_t> coset_of)
    : subgroup_(std::move(s)), side_(side), reps_(std::move(reps)), coset_of_(std::move(coset_of)) {}

namespace {

// Members of the coset containing g, on the given side.
std::vector<Element> coset_members(const Subgroup& s, CosetSide side, Element g) {
  const auto& grp = s.group();
  std::vector<Element> out;
  out.reserve(s.order());
  for (auto h : s.members()) out.push_back(side == CosetSide::left ? grp.mul(g, h) : grp.mul(h, g));
  return out;
}

}  // namespace

CosetSystem canonical_cosets(const Subgroup& s, CosetSide side) {
  const auto n = s.group().order();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(n, unset);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != unset) continue;
    const auto g = static_cast<Element>(x);
    for (auto y : coset_members(s, side, g)) coset_of[y] = reps.size();
    reps.push_back(g);
  }
  return CosetSystem(s, side, std::move(reps), std::move(coset_of));
}

CosetSystem cosets_with_representatives(const Subgroup& s, CosetSide side, std::vector<Element> reps) {
  const auto n = s.group().order();
  if (reps.size() * s.order() != n)
    fail(Errc::validation, "transversal has " + std::to_string(reps.size()) + " elements, index is " +
                               std::to_string(s.index()));
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(n, unset);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!s.group().contains(reps[i]))
      fail(Errc::domain, "representative " + std::to_string(reps[i]) + " out of range");
    for (auto y : coset_members(s, side, reps[i])) {
      if (coset_of[y] != unset)
        fail(Errc::validation, "two representatives share a coset",
             std::to_string(reps[coset_of[y]]) + "," + std::to_string(reps[i]));
      coset_of[y] = i;
    }
  }
  return CosetSystem(s, side, std::move(reps), std::move(coset_of));
}

CosetSystem alternate_cosets(const Subgroup& s, CosetSide side) {
  const auto canonical = canonical_cosets(s, side);
  std::vector<Element> reps(canonical.representatives().begin(), canonical.representatives().end());
  for (std::size_t i = 1; i < reps.size(); ++i) {
    const auto members = coset_members(s, side, reps[i]);
    reps[i] = *std::max_element(members.begin(), members.end());
  }
  return cosets_with_representatives(s, side, std::move(reps));
}

Element InducedGroup::from_parent(Element a) const {
  if (!source.contains(a))
    fail(Errc::domain, "element " + std::to_string(a) + " is not in the subgroup");
  const auto m = source.members();
  return static_cast<Element>(std::lower_bound(m.begin(), m.end(), a) - m.begin());
}

InducedGroup induced_group(const Subgroup& s) {
  const auto& g = s.group();
  const auto m = s.members();
  const std::size_t n = m.size();
  std::vector<Element> flat(n * n);
  std::vector<std::string> labels(n);
  InducedGroup ind{nullptr, s};
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g.label(m[i]);
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = ind.from_parent(g.mul(m[i], m[j]));
  }
  ind.group = Group::from_trusted_table(n, std::move(flat), g.has_labels() ? labels : std::vector<std::string>{});
  return ind;
}

Subgroup lower_subgroup(const InducedGroup& ind, const Subgroup& inner) {
  if (!inner.is_subset_of(ind.source))
    fail(Errc::containment, "subgroup is not contained in the induced group's source");
  std::vector<Element> members;
  for (auto m : inner.members()) members.push_back(ind.from_parent(m));
  return subgroup_from_members(ind.group, members);
}

Subgroup raise_subgroup(const InducedGroup& ind, const Subgroup& inner) {
  if (!same_group(inner.parent(), ind.group))
    fail(Errc::shape, "subgroup does not belong to the induced group");
  std::vector<Element> members;
  for (auto m : inner.members()) members.push_back(ind.to_parent(m));
  return subgroup_from_members(ind.source.parent(), members);
}

}  // namespace grpfun
