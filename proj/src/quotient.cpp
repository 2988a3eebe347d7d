#include "grpfun/quotient.hpp"

#include <string>

#include "grpfun/error.hpp"

namespace grpfun {

QuotientGroup quotient(const Subgroup& n) {
  if (!is_normal(n)) fail(Errc::normality, "subgroup is not normal");
  const auto& g = n.group();
  auto cosets = left_cosets(n);
  const auto k = cosets.size();
  const auto reps = cosets.representatives();
  std::vector<Element> flat(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = g.label(reps[i]) + "N";
    for (std::size_t j = 0; j < k; ++j)
      flat[i * k + j] = static_cast<Element>(cosets.coset_of(g.mul(reps[i], reps[j])));
  }
  auto qg = Group::from_trusted_table(k, std::move(flat), std::move(labels));
  std::vector<Element> proj(g.order());
  for (std::size_t x = 0; x < proj.size(); ++x)
    proj[x] = static_cast<Element>(cosets.coset_of(static_cast<Element>(x)));
  GroupFunction projection(n.parent(), qg, std::move(proj));

  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
      if (projection(g.mul(ea, eb)) != qg->mul(projection(ea), projection(eb)))
        fail(Errc::invariant_violation, "quotient projection is not a homomorphism",
             "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  for (std::size_t x = 0; x < g.order(); ++x)
    if ((projection(static_cast<Element>(x)) == 0) != n.contains(static_cast<Element>(x)))
      fail(Errc::invariant_violation, "quotient projection kernel differs from the subgroup",
           std::to_string(x));

  return QuotientGroup{std::move(qg), std::move(projection), n, std::move(cosets)};
}

}  // namespace grpfun
