#include "grpfun/distributor.hpp"

#include <string>

#include "grpfun/error.hpp"

namespace grpfun {

Element distributor(const GroupFunction& f, Element x, Element y) {
  const auto& g = *f.domain();
  const auto& h = *f.codomain();
  const auto fx = f(x), fy = f(y), fxy = f(g.mul(x, y));
  const auto direct = h.mul(h.mul(h.inv(fy), h.inv(fx)), fxy);
  // f(y)^-1 f^x(y), with f^x(y) = f(x)^-1 f(xy).
  const auto via_conjugate = h.mul(h.inv(fy), h.mul(h.inv(fx), fxy));
  if (direct != via_conjugate || h.mul(h.mul(fx, fy), direct) != fxy)
    fail(Errc::invariant_violation, "distributor definitions disagree",
         "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return direct;
}

DistributorTable distributor_table(const GroupFunction& f) {
  const auto n = f.domain()->order();
  std::vector<std::vector<Element>> entries(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      entries[x][y] = distributor(f, static_cast<Element>(x), static_cast<Element>(y));
  return DistributorTable{f, std::move(entries)};
}

GroupFunction distributor_operator(const GroupFunction& f, Element a) {
  std::vector<Element> values(f.domain()->order());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = distributor(f, static_cast<Element>(x), a);
  return GroupFunction(f.domain(), f.codomain(), std::move(values));
}

bool verify_triple_identity(const GroupFunction& f, Element x, Element y, Element z) {
  const auto& g = *f.domain();
  const auto& h = *f.codomain();
  const auto lhs = h.mul(distributor(f, y, z), distributor(f, x, g.mul(y, z)));
  const auto rhs = h.mul(h.conj(distributor(f, x, y), f(z)), distributor(f, g.mul(x, y), z));
  return lhs == rhs;
}

bool verify_action_shift(const GroupFunction& f, Element x, Element y, Element z) {
  const auto& g = *f.domain();
  const auto& h = *f.codomain();
  const auto lhs = distributor(f, g.mul(x, y), z);
  const auto rhs = h.mul(distributor(f, x, z), distributor(conjugate(f, x), y, z));
  return lhs == rhs;
}

Subgroup distributor_subgroup(const GroupFunction& f) {
  const auto n = f.domain()->order();
  std::vector<char> seen(f.codomain()->order(), 0);
  std::vector<Element> values;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto d = distributor(f, static_cast<Element>(x), static_cast<Element>(y));
      if (d != 0 && !seen[d]) {
        seen[d] = 1;
        values.push_back(d);
      }
    }
  auto sub = subgroup_closure(f.codomain(), values);
  if (!is_normal_in(sub, image_subgroup(f)))
    fail(Errc::invariant_violation, "distributor subgroup is not normal in the image subgroup");
  return sub;
}

CanonicalQuotient canonical_quotient(const GroupFunction& f) {
  auto image = induced_group(image_subgroup(f));
  const auto dist = distributor_subgroup(f);
  auto q = [&] {
    try {
      return quotient(lower_subgroup(image, dist));
    } catch (const Error& e) {
      if (e.code() == Errc::normality)
        fail(Errc::invariant_violation, "distributor subgroup is not normal in f(G)");
      throw;
    }
  }();
  std::vector<Element> values(f.domain()->order());
  for (std::size_t x = 0; x < values.size(); ++x)
    values[x] = q.projection(image.from_parent(f.values()[x]));
  auto hom = [&] {
    try {
      return as_homomorphism(GroupFunction(f.domain(), q.group, std::move(values)));
    } catch (const Error& e) {
      fail(Errc::invariant_violation, "pi . f is not a homomorphism", e.witness());
    }
  }();
  return CanonicalQuotient{std::move(image), std::move(q), std::move(hom)};
}

Homomorphism canonical_quotient_hom(const GroupFunction& f) { return canonical_quotient(f).hom; }

bool verify_minimality(const GroupFunction& f, std::size_t order_cap) {
  const auto img = image_subgroup(f);
  if (img.order() > order_cap)
    fail(Errc::size_limit, "image order " + std::to_string(img.order()) + " exceeds " +
                               std::to_string(order_cap));
  const auto dist = distributor_subgroup(f);
  const auto image = induced_group(img);
  for (const auto& k : normal_subgroups(img, order_cap)) {
    const auto q = quotient(lower_subgroup(image, k));
    std::vector<Element> values(f.domain()->order());
    for (std::size_t x = 0; x < values.size(); ++x)
      values[x] = q.projection(image.from_parent(f.values()[x]));
    const bool hom = is_homomorphism(GroupFunction(f.domain(), q.group, std::move(values)));
    if (hom != dist.is_subset_of(k)) return false;
  }
  return true;
}

}  // namespace grpfun
