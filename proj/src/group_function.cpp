#include "grpfun/group_function.hpp"

#include <string>

#include "grpfun/error.hpp"

namespace grpfun {

GroupFunction::GroupFunction(GroupPtr domain, GroupPtr codomain, std::vector<Element> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (!domain_ || !codomain_) fail(Errc::shape, "function needs a domain and a codomain");
  if (values_.size() != domain_->order())
    fail(Errc::shape, "function has " + std::to_string(values_.size()) +
                          " values for a domain of order " + std::to_string(domain_->order()));
  for (std::size_t x = 0; x < values_.size(); ++x)
    if (!codomain_->contains(values_[x]))
      fail(Errc::domain, "value " + std::to_string(values_[x]) + " at " + std::to_string(x) +
                             " is outside the codomain");
}

GroupFunction GroupFunction::constant_identity(GroupPtr domain, GroupPtr codomain) {
  const auto n = domain->order();
  return GroupFunction(std::move(domain), std::move(codomain), std::vector<Element>(n, 0));
}

GroupFunction GroupFunction::inversion(GroupPtr g) {
  auto inv = std::vector<Element>(g->inverses().begin(), g->inverses().end());
  return GroupFunction(g, g, std::move(inv));
}

Element GroupFunction::operator()(Element x) const {
  if (x >= values_.size())
    fail(Errc::domain, "argument " + std::to_string(x) + " out of range");
  return values_[x];
}

GroupFunction compose(const GroupFunction& g, const GroupFunction& f) {
  if (!same_group(f.codomain(), g.domain()))
    fail(Errc::shape, "cannot compose: codomain and domain differ");
  std::vector<Element> values(f.values().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = g.values()[f.values()[x]];
  return GroupFunction(f.domain(), g.codomain(), std::move(values));
}

}  // namespace grpfun
