#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grpfun/group_function.hpp"
#include "grpfun/quotient.hpp"
#include "grpfun/subgroup.hpp"

namespace grpfun {

// A GroupFunction certified exhaustively to satisfy f(xy) = f(x)f(y).
class Homomorphism {
 public:
  const GroupFunction& function() const noexcept { return function_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  const Subgroup& image() const noexcept { return image_; }
  const GroupPtr& domain() const noexcept { return function_.domain(); }
  const GroupPtr& codomain() const noexcept { return function_.codomain(); }
  Element operator()(Element x) const { return function_(x); }

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.function_ == b.function_;
  }

 private:
  Homomorphism(GroupFunction f, Subgroup kernel, Subgroup image)
      : function_(std::move(f)), kernel_(std::move(kernel)), image_(std::move(image)) {}
  friend Homomorphism as_homomorphism(const GroupFunction& f);

  GroupFunction function_;
  Subgroup kernel_;
  Subgroup image_;
};

// f^a(x) = f(a)^-1 f(ax).
GroupFunction conjugate(const GroupFunction& f, Element a);
// The left action a.f = f^(a^-1); defined on identity-preserving f only.
GroupFunction act(const GroupFunction& f, Element a);
// (f*g)(x) = f(x)g(x).
GroupFunction pointwise_product(const GroupFunction& f, const GroupFunction& g);
GroupFunction pointwise_inverse(const GroupFunction& f);

// A pair (x, y) with f(xy) != f(x)f(y), if any.
std::optional<std::pair<Element, Element>> homomorphism_failure(const GroupFunction& f);
bool is_homomorphism(const GroupFunction& f);
// Throws Errc::certification with a failing pair when f is not a homomorphism.
Homomorphism as_homomorphism(const GroupFunction& f);

Subgroup image_subgroup(const GroupFunction& f);
// {a : f^a = f}. Requires f identity preserving (Errc::precondition).
Subgroup stabilizer(const GroupFunction& f);

// The distinct conjugates of a function. f^(s a) = f^a for s in the
// stabilizer, so members are indexed by right cosets of the stabilizer.
struct FunctionOrbit {
  GroupFunction base;
  std::vector<Element> representatives;
  std::vector<GroupFunction> members;
  Subgroup stabilizer;

  std::size_t size() const noexcept { return members.size(); }
};

FunctionOrbit orbit(const GroupFunction& f);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Lexicographic stream of all identity-preserving functions domain -> codomain.
// The last position varies fastest.
class IdentityPreservingFunctions {
 public:
  // Throws Errc::size_limit when the count exceeds `cap`.
  IdentityPreservingFunctions(GroupPtr domain, GroupPtr codomain,
                              std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const noexcept { return count_; }
  // Next function in order, or nullopt once exhausted. Single consumer.
  std::optional<GroupFunction> next();
  // Position of f in the stream.
  std::uint64_t index_of(const GroupFunction& f) const;

 private:
  GroupPtr domain_;
  GroupPtr codomain_;
  std::uint64_t count_ = 0;
  std::uint64_t emitted_ = 0;
  std::vector<Element> current_;
};

// Saturating |codomain|^(|domain| - 1).
std::uint64_t identity_preserving_count(const Group& domain, const Group& codomain);

struct OrbitCensus {
  std::uint64_t total = 0;
  std::map<std::size_t, std::uint64_t> orbit_size_histogram;
  std::vector<GroupFunction> fixed_points;
  std::uint64_t homomorphism_count = 0;
};

// Partitions every identity-preserving function into orbits of the function
// action; fixed points are listed in lexicographic order.
OrbitCensus orbit_census(const GroupPtr& domain, const GroupPtr& codomain,
                         std::uint64_t cap = kDefaultEnumerationCap);

// A function into the parent of q with projection . section = target, using
// the canonical coset representatives of q.
GroupFunction coset_section(const QuotientGroup& q, const Homomorphism& target);
// Same with an explicit transversal of q.kernel.
GroupFunction coset_section(const QuotientGroup& q, const Homomorphism& target,
                            const CosetSystem& transversal);

// Completes a homomorphism from images of domain generators. Throws
// Errc::precondition when the generators do not generate the domain or the
// completion is ambiguous, Errc::certification when it is not a homomorphism.
Homomorphism extend_from_generators(const GroupPtr& domain, const GroupPtr& codomain,
                                    const std::vector<Element>& generators,
                                    const std::vector<Element>& images);

}  // namespace grpfun
