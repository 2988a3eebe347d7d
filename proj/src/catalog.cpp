#include "grpfun/catalog.hpp"

#include "grpfun/group_io.hpp"

namespace grpfun {

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("cyclic:" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) names.push_back("dihedral:" + std::to_string(n));
  names.insert(names.end(), {
                                "symmetric:3",
                                "symmetric:4",
                                "product:cyclic:2,cyclic:2",
                                "product:cyclic:2,cyclic:3",
                                "product:cyclic:2,cyclic:4",
                                "product:cyclic:3,cyclic:3",
                                "product:cyclic:2,cyclic:6",
                                "product:cyclic:2,symmetric:3",
                                "product:cyclic:2,product:cyclic:2,cyclic:2",
                            });
  std::vector<CatalogEntry> out;
  out.reserve(names.size());
  for (auto& n : names) {
    auto g = parse_group_spec(n);
    out.push_back({std::move(n), std::move(g)});
  }
  return out;
}

GroupPtr make_alternating4() { return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

Subgroup alternating_subgroup(const GroupPtr& sym) { return derived_subgroup(Subgroup::whole(sym)); }

Subgroup klein_subgroup(const GroupPtr& a4) { return derived_subgroup(Subgroup::whole(a4)); }

namespace {

Extension make_extension(std::string name, const Subgroup& n, const GroupPtr& g,
                         const std::vector<Element>& generators, const std::vector<Element>& images) {
  const auto q = quotient(n);
  return Extension{std::move(name), n, extend_from_generators(g, q.group, generators, images)};
}

}  // namespace

std::vector<Extension> shipped_extensions() {
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto a4 = make_alternating4();
  const auto v4 = klein_subgroup(a4);
  const auto s3z5 = parse_group_spec("product:symmetric:3,cyclic:5");
  std::vector<Element> s3_factor;
  for (Element s = 0; s < 6; ++s) s3_factor.push_back(s * 5);
  const auto d5 = make_dihedral(5);
  const Element rotation = 1;
  const auto z6 = make_cyclic(6);
  const auto v4_abstract = parse_group_spec("product:cyclic:2,cyclic:2");

  std::vector<Extension> out;
  out.push_back(make_extension("S3/A3 <- Z2", a3, make_cyclic(2), {1}, {1}));
  out.push_back(make_extension("A4/V4 <- Z3", v4, make_cyclic(3), {1}, {1}));
  out.push_back(make_extension("(S3xZ5)/(S3x1) <- Z5", subgroup_closure(s3z5, s3_factor),
                               make_cyclic(5), {1}, {1}));
  out.push_back(make_extension("D5/Z5 <- Z2", subgroup_closure(d5, std::vector<Element>{rotation}),
                               make_cyclic(2), {1}, {1}));
  out.push_back(make_extension("Z6/Z3 <- Z2", subgroup_closure(z6, std::vector<Element>{2}),
                               make_cyclic(2), {1}, {1}));
  out.push_back(make_extension("S3/A3 <- Z4", a3, make_cyclic(4), {1}, {1}));
  out.push_back(make_extension("S3/A3 <- Z2xZ2", a3, v4_abstract, {2, 1}, {1, 0}));
  out.push_back(make_extension("D5/Z5 <- Z4", subgroup_closure(d5, std::vector<Element>{rotation}),
                               make_cyclic(4), {1}, {1}));
  out.push_back(make_extension("A4/V4 <- Z9", v4, make_cyclic(9), {1}, {1}));
  return out;
}

}  // namespace grpfun
