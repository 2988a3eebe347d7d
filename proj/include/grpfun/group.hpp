#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grpfun {

// Elements are dense indices 0..order-1; index 0 is always the identity.
using Element = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Default element cap for closure-based constructors.
inline constexpr std::size_t kDefaultElementCap = 5040;

// A finite group stored as its full multiplication table. Immutable.
class Group {
 public:
  // Validates every group axiom (identity at 0, latin rows/columns,
  // associativity). Throws Errc::validation naming the failing row or triple.
  static GroupPtr from_table(const std::vector<std::vector<Element>>& rows,
                             std::vector<std::string> labels = {});

  // For tables that are groups by construction (products, quotients, closures).
  // Only the identity and inverse structure is derived; no axiom check.
  static GroupPtr from_trusted_table(std::size_t order, std::vector<Element> flat,
                                     std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }

  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::int64_t k) const;
  // b^-1 a b
  Element conj(Element a, Element b) const;
  // x^-1 y^-1 x y
  Element commutator(Element x, Element y) const;
  std::size_t element_order(Element a) const;

  bool contains(Element a) const noexcept { return a < order_; }
  bool is_abelian() const;

  // Unchecked row access for hot loops.
  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Element> inverses() const { return inverse_; }

  std::string label(Element a) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

  std::vector<std::vector<Element>> rows() const;
  // Structural equality of multiplication tables.
  bool same_table(const Group& other) const noexcept;

 private:
  Group(std::size_t order, std::vector<Element> flat, std::vector<std::string> labels);
  void check(Element a) const;

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

bool same_group(const Group& a, const Group& b) noexcept;
inline bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept {
  return a == b || (a && b && same_group(*a, *b));
}

// Throws Errc::validation with a witness when `rows` is not a group table.
void validate_cayley_table(const std::vector<std::vector<Element>>& rows);

GroupPtr make_cyclic(std::size_t n);
GroupPtr make_symmetric(std::size_t n);
GroupPtr make_dihedral(std::size_t n);
GroupPtr make_direct_product(const Group& g1, const Group& g2);
GroupPtr from_cayley_table(const std::vector<std::vector<Element>>& rows);

// Permutations use 0-based one-line notation. The product a*b is the
// composition "apply b, then a": (a*b)(i) = a[b[i]].
using Permutation = std::vector<std::uint32_t>;
GroupPtr from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                           std::size_t element_cap = kDefaultElementCap);

// Sorted multiset of element orders; the only isomorphism heuristic offered.
std::vector<std::size_t> order_multiset(const Group& g);

}  // namespace grpfun
