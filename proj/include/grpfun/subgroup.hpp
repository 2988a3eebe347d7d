#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grpfun/group.hpp"

namespace grpfun {

// A subgroup of a parent group. Members are kept sorted, so members()[0] == 0.
// Only constructed through closure or a verified member set.
class Subgroup {
 public:
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const Group& group() const noexcept { return *parent_; }
  std::span<const Element> members() const noexcept { return members_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }

  bool contains(Element a) const noexcept { return a < in_.size() && in_[a]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }
  bool is_abelian() const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr parent, std::vector<Element> members, std::vector<Element> generators);

  friend Subgroup subgroup_closure(const GroupPtr&, std::span<const Element>);
  friend Subgroup subgroup_from_members(const GroupPtr&, std::span<const Element>);

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<Element> generators_;
  std::vector<char> in_;
};

// Smallest subgroup containing `generators`.
Subgroup subgroup_closure(const GroupPtr& g, std::span<const Element> generators);
// Verifies that `members` is closed and contains the identity; throws
// Errc::validation otherwise. Chooses a greedy generating set.
Subgroup subgroup_from_members(const GroupPtr& g, std::span<const Element> members);

// x s x^-1 is contained in s for every x in the parent.
bool is_normal(const Subgroup& s);
// n is normal in the subgroup `in` (n must be a subset of `in`).
bool is_normal_in(const Subgroup& n, const Subgroup& in);
Subgroup normalizer(const Subgroup& s);
// Smallest subgroup of `in` that is normal in `in` and contains `elements`.
Subgroup normal_closure(const Subgroup& in, std::span<const Element> elements);
// Every normal subgroup of `in`, sorted by order then members.
std::vector<Subgroup> normal_subgroups(const Subgroup& in, std::size_t order_cap = 24);

Subgroup derived_subgroup(const Subgroup& s);
std::vector<Subgroup> derived_series(const Subgroup& s);
bool is_soluble(const Subgroup& s);

enum class CosetSide { left, right };

// A transversal of a subgroup. Left cosets are g*S, right cosets S*g.
// Canonical representatives are the minimal index per coset, in increasing order.
class CosetSystem {
 public:
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  CosetSide side() const noexcept { return side_; }
  std::span<const Element> representatives() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }
  // Position of the coset containing g.
  std::size_t coset_of(Element g) const { return coset_of_.at(g); }
  Element representative_of(Element g) const { return reps_[coset_of(g)]; }

 private:
  CosetSystem(Subgroup s, CosetSide side, std::vector<Element> reps, std::vector<std::size_t> coset_of);

  friend CosetSystem canonical_cosets(const Subgroup&, CosetSide);
  friend CosetSystem cosets_with_representatives(const Subgroup&, CosetSide, std::vector<Element>);

  Subgroup subgroup_;
  CosetSide side_;
  std::vector<Element> reps_;
  std::vector<std::size_t> coset_of_;
};

CosetSystem canonical_cosets(const Subgroup& s, CosetSide side);
inline CosetSystem left_cosets(const Subgroup& s) { return canonical_cosets(s, CosetSide::left); }
inline CosetSystem right_cosets(const Subgroup& s) { return canonical_cosets(s, CosetSide::right); }
// Uses the supplied transversal in the supplied order; throws Errc::validation
// unless it has exactly one element from each coset.
CosetSystem cosets_with_representatives(const Subgroup& s, CosetSide side, std::vector<Element> reps);
// Replaces every canonical representative t (other than the identity coset's)
// by the largest-index element of its coset. A deterministic second transversal.
CosetSystem alternate_cosets(const Subgroup& s, CosetSide side);

// A subgroup re-expressed as a group in its own right. Index i of `group`
// corresponds to source.members()[i], so the identity stays at 0.
struct InducedGroup {
  GroupPtr group;
  Subgroup source;

  Element to_parent(Element a) const { return source.members()[a]; }
  // Throws Errc::domain when `a` is not in the source subgroup.
  Element from_parent(Element a) const;
};

InducedGroup induced_group(const Subgroup& s);
// `inner` must be contained in ind.source; returns it as a subgroup of ind.group.
Subgroup lower_subgroup(const InducedGroup& ind, const Subgroup& inner);
// Inverse of lower_subgroup: a subgroup of ind.group mapped into the parent.
Subgroup raise_subgroup(const InducedGroup& ind, const Subgroup& inner);

}  // namespace grpfun
