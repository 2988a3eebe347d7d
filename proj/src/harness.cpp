#include "grpfun/harness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "grpfun/catalog.hpp"
#include "grpfun/error.hpp"
#include "grpfun/number.hpp"

namespace grpfun {

namespace {

std::vector<Element> values_of(const GroupFunction& f) { return {f.values().begin(), f.values().end()}; }

std::vector<Element> members_of(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

Json histogram_json(const std::map<std::size_t, std::uint64_t>& h) {
  Json j = Json::object();
  for (const auto& [size, count] : h) j[std::to_string(size)] = count;
  return j;
}

std::string pair_text(Element x, Element y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// First x with f(x) != g(x), as a witness string.
std::string first_difference(const GroupFunction& f, const GroupFunction& g) {
  for (Element x = 0; x < f.domain()->order(); ++x)
    if (f(x) != g(x))
      return "x=" + std::to_string(x) + ": " + std::to_string(f(x)) + " vs " + std::to_string(g(x));
  return {};
}

std::string hom_witness(const GroupFunction& f) {
  const auto bad = homomorphism_failure(f);
  return bad ? "pair " + pair_text(bad->first, bad->second) : std::string{};
}

// Number of distinct subgroups n^-1 S n for n in N.
std::size_t conjugates_under(const Subgroup& s, const Subgroup& n) {
  const auto& g = *s.parent();
  std::set<std::vector<Element>> seen;
  for (auto c : n.members()) {
    std::vector<Element> image;
    for (auto x : s.members()) image.push_back(g.conj(x, c));
    std::sort(image.begin(), image.end());
    seen.insert(std::move(image));
  }
  return seen.size();
}

Element pick_from(std::mt19937_64& rng, std::span<const Element> xs) {
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  return xs[pick(rng)];
}

GroupFunction random_into(std::mt19937_64& rng, const GroupPtr& g, const Subgroup& a) {
  std::vector<Element> v(g->order(), 0);
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = pick_from(rng, a.members());
  return GroupFunction(g, a.parent(), std::move(v));
}

}  // namespace

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness)});
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) cj["witness"] = c.witness;
    cs.push_back(std::move(cj));
  }
  j["checks"] = std::move(cs);
  j["ok"] = ok();
  return j;
}

CauchyResult cauchy_demo(const GroupPtr& g, std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) fail(Errc::precondition, std::to_string(p) + " is not prime");
  if (g->order() % p != 0)
    fail(Errc::precondition, std::to_string(p) + " does not divide |G| = " + std::to_string(g->order()));
  CauchyResult r;
  const auto zp = make_cyclic(p);
  const auto count = identity_preserving_count(*zp, *g);
  bool found = false;
  if (count <= cap) {
    const auto census = orbit_census(zp, g, cap);
    r.full_census = true;
    r.functions = census.total;
    r.fixed_points = census.fixed_points.size();
    r.orbit_sizes = census.orbit_size_histogram;
    for (const auto& [size, n] : census.orbit_size_histogram)
      if (size != 1 && size != p)
        fail(Errc::invariant_violation, "orbit of size " + std::to_string(size) + " for p = " + std::to_string(p));
    for (const auto& f : census.fixed_points)
      if (f(1) != 0) {
        r.element = f(1);
        found = true;
        break;
      }
  } else {
    r.functions = count;
    for (Element x = 0; x < g->order(); ++x) {
      if (g->pow(x, static_cast<std::int64_t>(p)) != 0) continue;
      ++r.fixed_points;
      if (x != 0 && !found) {
        r.element = x;
        found = true;
      }
    }
  }
  if (r.fixed_points % p != 0)
    fail(Errc::invariant_violation, "fixed point count " + std::to_string(r.fixed_points) + " is not divisible by p");
  if (!found || g->element_order(r.element) != p)
    fail(Errc::invariant_violation, "no element of order " + std::to_string(p) + " found");
  return r;
}

SylowResult sylow_build(const GroupPtr& g, std::uint64_t p, std::uint64_t cap) {
  const auto first = cauchy_demo(g, p, cap);
  auto h = subgroup_closure(g, std::vector<Element>{first.element});
  const auto target = p_part(g->order(), p);
  std::vector<SylowStep> steps;
  while (h.order() < target) {
    const auto n = normalizer(h);
    const auto ind = induced_group(n);
    const auto q = quotient(lower_subgroup(ind, h));
    if (q.group->order() % p != 0)
      fail(Errc::invariant_violation, "p does not divide [N_G(H):H]",
           "|H| = " + std::to_string(h.order()) + ", |N| = " + std::to_string(n.order()));
    const auto c = cauchy_demo(q.group, p, cap);
    const auto x = ind.to_parent(q.representative(c.element));
    steps.push_back({h.order(), n.order(), q.group->order(), x});
    auto gens = std::vector<Element>(h.generators().begin(), h.generators().end());
    gens.push_back(x);
    const auto before = h.order();
    h = subgroup_closure(g, gens);
    if (h.order() != before * p)
      fail(Errc::invariant_violation, "extension step did not multiply the order by p", std::to_string(x));
  }
  return {std::move(h), std::move(steps)};
}

Report cauchy_report(const std::string& spec, std::uint64_t p, std::uint64_t cap) {
  const auto g = load_group(spec);
  Report r;
  r.command = "cauchy";
  r.inputs = {{"group", spec}, {"prime", p}, {"cap", cap}};
  const auto c = cauchy_demo(g, p, cap);
  r.result["group_order"] = g->order();
  r.result["element"] = c.element;
  if (g->has_labels()) r.result["element_label"] = g->label(c.element);
  r.result["element_order"] = g->element_order(c.element);
  r.result["census_mode"] = c.full_census ? "full" : "fixed_points_only";
  r.result["functions"] = c.functions;
  r.result["fixed_points"] = c.fixed_points;
  if (c.full_census) r.result["orbit_sizes"] = histogram_json(c.orbit_sizes);

  r.add("element has order p", g->element_order(c.element) == p, std::to_string(c.element));
  r.add("fixed points divisible by p", c.fixed_points % p == 0, std::to_string(c.fixed_points));
  r.add("fixed points at least p", c.fixed_points >= p, std::to_string(c.fixed_points));
  if (c.full_census) {
    std::uint64_t covered = 0;
    bool sizes_ok = true;
    for (const auto& [size, n] : c.orbit_sizes) {
      covered += size * n;
      sizes_ok = sizes_ok && (size == 1 || size == p);
    }
    r.add("orbit sizes are 1 or p", sizes_ok);
    r.add("orbits partition the functions", covered == c.functions,
          std::to_string(covered) + " of " + std::to_string(c.functions));
    // The fixed point through the element is a homomorphism and fixed by the action.
    const auto zp = make_cyclic(p);
    std::vector<Element> v(p);
    for (Element k = 0; k < p; ++k) v[k] = g->pow(c.element, k);
    const GroupFunction f(zp, g, v);
    r.add("fixed point is a homomorphism", is_homomorphism(f), hom_witness(f));
    r.add("fixed point is stable under the action", act(f, 1) == f);
  } else {
    r.add("element satisfies x^p = 1", g->pow(c.element, static_cast<std::int64_t>(p)) == 0);
  }
  return r;
}

Report sylow_report(const std::string& spec, std::uint64_t p, std::uint64_t cap) {
  const auto g = load_group(spec);
  Report r;
  r.command = "sylow";
  r.inputs = {{"group", spec}, {"prime", p}, {"cap", cap}};
  const auto s = sylow_build(g, p, cap);
  const auto target = p_part(g->order(), p);
  r.result["group_order"] = g->order();
  r.result["p_part"] = target;
  r.result["subgroup_order"] = s.subgroup.order();
  r.result["generators"] = std::vector<Element>(s.subgroup.generators().begin(), s.subgroup.generators().end());
  r.result["members"] = members_of(s.subgroup);
  Json steps = Json::array();
  bool divides = true;
  for (const auto& st : s.steps) {
    steps.push_back({{"subgroup_order", st.subgroup_order},
                     {"normalizer_order", st.normalizer_order},
                     {"quotient_order", st.quotient_order},
                     {"element", st.element}});
    divides = divides && st.quotient_order % p == 0;
  }
  r.result["steps"] = std::move(steps);

  r.add("order equals the p-part", s.subgroup.order() == target,
        std::to_string(s.subgroup.order()) + " vs " + std::to_string(target));
  std::string closure_witness;
  try {
    subgroup_from_members(g, s.subgroup.members());
  } catch (const Error& e) {
    closure_witness = e.what();
  }
  r.add("subgroup is closed", closure_witness.empty(), closure_witness);
  r.add("p divides [N_G(H):H] at every step", divides);
  std::string bad_element;
  for (auto x : s.subgroup.members())
    if (p_part(g->element_order(x), p) != g->element_order(x)) bad_element = std::to_string(x);
  r.add("every element has p-power order", bad_element.empty(), bad_element);
  return r;
}

Report census_report(const std::string& domain, const std::string& codomain, std::uint64_t cap) {
  const auto g = load_group(domain), h = load_group(codomain);
  Report r;
  r.command = "census";
  r.inputs = {{"domain", domain}, {"codomain", codomain}, {"cap", cap}};
  const auto census = orbit_census(g, h, cap);
  r.result["total"] = census.total;
  r.result["orbit_size_histogram"] = histogram_json(census.orbit_size_histogram);
  r.result["fixed_points"] = census.fixed_points.size();
  r.result["homomorphisms"] = census.homomorphism_count;

  std::uint64_t covered = 0;
  std::string bad_size;
  for (const auto& [size, n] : census.orbit_size_histogram) {
    covered += size * n;
    if (g->order() % size != 0) bad_size = std::to_string(size);
  }
  r.add("orbits partition the functions", covered == census.total,
        std::to_string(covered) + " of " + std::to_string(census.total));
  r.add("orbit sizes divide |G|", bad_size.empty(), bad_size);
  r.add("fixed points are the homomorphisms", census.fixed_points.size() == census.homomorphism_count,
        std::to_string(census.fixed_points.size()) + " vs " + std::to_string(census.homomorphism_count));
  std::string not_hom;
  for (const auto& f : census.fixed_points)
    if (!is_homomorphism(f)) not_hom = hom_witness(f);
  r.add("every fixed point is a homomorphism", not_hom.empty(), not_hom);
  // Action law on the first functions of the enumeration.
  IdentityPreservingFunctions stream(g, h, cap);
  std::string law;
  for (int i = 0; i < 64 && law.empty(); ++i) {
    const auto f = stream.next();
    if (!f) break;
    for (Element a = 0; a < g->order() && law.empty(); ++a)
      for (Element b = 0; b < g->order(); ++b)
        if (!(act(act(*f, a), b) == act(*f, g->mul(b, a)))) {
          law = "function " + std::to_string(i) + ", pair " + pair_text(a, b);
          break;
        }
  }
  r.add("action law", law.empty(), law);
  return r;
}

Report transfer_report(const std::string& group, const std::vector<Element>& subgroup_gens,
                       const std::optional<std::string>& codomain, const std::vector<Element>& pi_values) {
  const auto g = load_group(group);
  Report r;
  r.command = "transfer";
  r.inputs = {{"group", group}, {"subgroup", subgroup_gens}};
  if (codomain) r.inputs["codomain"] = *codomain;
  r.inputs["pi"] = pi_values;

  const auto h = subgroup_closure(g, subgroup_gens);
  const auto ind = induced_group(h);
  auto pi = [&] {
    if (!codomain) {
      if (!pi_values.empty()) fail(Errc::precondition, "--pi needs --codomain");
      return as_homomorphism(quotient(derived_subgroup(Subgroup::whole(ind.group))).projection);
    }
    std::vector<Element> gens;
    for (auto x : subgroup_gens) gens.push_back(ind.from_parent(x));
    return extend_from_generators(ind.group, load_group(*codomain), gens, pi_values);
  }();
  const auto setup = make_transfer_setup(h, pi);
  const auto theta = transfer(setup);
  const auto alternate = alternate_cosets(h, CosetSide::right);
  const auto reps = alternate.representatives();
  const auto alt = with_representatives(setup, std::vector<Element>(reps.begin(), reps.end()));
  const auto theta_alt = transfer(alt);
  const auto base = transfer_base_function(setup);

  const auto values = values_of(theta.function());
  r.result["group"] = group;
  r.result["subgroup_order"] = h.order();
  r.result["index"] = h.index();
  r.result["multiplicity_m"] = transfer_multiplicity(setup);
  r.result["transfer_values"] = values;
  r.result["is_trivial"] = std::all_of(values.begin(), values.end(), [](Element v) { return v == 0; });

  r.add("transfer is a homomorphism", is_homomorphism(theta.function()), hom_witness(theta.function()));
  r.add("power relation", verify_transfer_power_relation(setup));
  r.add("representative invariance", theta_alt.function() == theta.function(),
        first_difference(theta_alt.function(), theta.function()));
  r.add("base function stabilised by H", h.is_subset_of(stabilizer(base)));
  return r;
}

Report lift_report(const std::string& extension, const std::vector<Element>& normal_gens, const std::string& domain,
                   const std::vector<Element>& domain_gens, const std::vector<Element>& hom_values) {
  const auto h = load_group(extension);
  const auto g = load_group(domain);
  Report r;
  r.command = "lift";
  r.inputs = {{"extension", extension}, {"normal", normal_gens}, {"domain", domain}};

  const auto n = subgroup_closure(h, normal_gens);
  if (!is_normal(n)) fail(Errc::normality, "the normal subgroup generators do not generate a normal subgroup");
  const auto q = quotient(n);
  const auto whole = Subgroup::whole(g);
  const std::vector<Element> gens =
      domain_gens.empty() ? std::vector<Element>(whole.generators().begin(), whole.generators().end()) : domain_gens;
  r.inputs["domain_generators"] = gens;
  r.inputs["hom"] = hom_values;
  std::vector<Element> images;
  for (auto y : hom_values) {
    if (!h->contains(y)) fail(Errc::domain, "hom value " + std::to_string(y) + " is not in the extension group");
    images.push_back(q.projection(y));
  }
  const auto f = extend_from_generators(g, q.group, gens, images);

  const bool abelian = n.is_abelian();
  const auto lift_with = [&](SectionChoice choice) {
    return abelian ? sz_lift_abelian(q, f, choice) : sz_lift_soluble(n, f, choice);
  };
  const auto lift = lift_with(SectionChoice::canonical);
  const auto alt = lift_with(SectionChoice::alternate);
  const auto c = abelian ? conjugator_between(lift.hom, alt.hom, n) : conjugator_soluble(lift.hom, alt.hom, n);
  const auto image = lift.hom.image();

  r.result["group"] = extension;
  r.result["extension"] = {{"normal_order", n.order()}, {"quotient_order", q.group->order()}, {"domain", domain}};
  r.result["kernel_order"] = n.order();
  Json steps = Json::array();
  for (const auto& s : lift.steps) steps.push_back({{"kernel_order", s.kernel_order}, {"m", s.m}, {"index", s.index}});
  r.result["steps"] = std::move(steps);
  r.result["lift_values"] = values_of(lift.hom.function());
  r.result["alternate_lift_values"] = values_of(alt.hom.function());
  r.result["conjugator"] = c;
  r.result["image_order"] = image.order();
  r.result["conjugacy_class_size_of_image"] = conjugates_under(image, n);

  r.add("lift is a homomorphism", is_homomorphism(lift.hom.function()), hom_witness(lift.hom.function()));
  r.add("lift projects onto the homomorphism", compose(q.projection, lift.hom.function()) == f.function(),
        first_difference(compose(q.projection, lift.hom.function()), f.function()));
  r.add("alternate lift projects onto the homomorphism", compose(q.projection, alt.hom.function()) == f.function(),
        first_difference(compose(q.projection, alt.hom.function()), f.function()));
  std::string conj_witness;
  for (Element x = 0; x < g->order(); ++x)
    if (lift.hom(x) != h->conj(alt.hom(x), c)) conj_witness = "x=" + std::to_string(x);
  r.add("lifts are conjugate by a kernel element", n.contains(c) && conj_witness.empty(), conj_witness);
  std::string meet;
  for (auto x : image.members())
    if (x != 0 && n.contains(x)) meet = std::to_string(x);
  r.add("image meets the kernel trivially", meet.empty(), meet);
  return r;
}

Json distributor_census(const GroupFunction& f) {
  const auto d = distributor_subgroup(f);
  const auto img = image_subgroup(f);
  Json j;
  j["function"] = values_of(f);
  j["distributor_subgroup_order"] = d.order();
  j["image_order"] = img.order();
  j["quotient_order"] = img.order() / d.order();
  return j;
}

std::vector<AverageCase> generated_average_cases(std::uint64_t seed, std::size_t twists_per_extension) {
  std::mt19937_64 rng(seed);
  std::vector<AverageCase> out;
  for (const auto& ext : shipped_extensions()) {
    if (!ext.normal.is_abelian()) continue;
    const auto& n = ext.normal;
    const auto q = quotient(n);
    const auto g = ext.hom.domain();
    const auto trivial_k = Subgroup::trivial(g);

    const auto contexts_for = [&](const GroupFunction& f) {
      std::vector<DistributedAverageContext> cs;
      cs.push_back(make_context(f));
      ContextOptions wide;
      wide.k = trivial_k;
      wide.a = n;
      cs.push_back(make_context(f, wide));
      auto shifted = wide;
      shifted.m = cs.back().m + n.order();
      cs.push_back(make_context(f, shifted));
      // Random right transversal of the stabilizer, with A = N.
      const auto stab = stabilizer(f);
      const auto stab_cosets = right_cosets(stab);
      const auto canonical = stab_cosets.representatives();
      std::vector<Element> reps{0};
      for (std::size_t i = 1; i < canonical.size(); ++i)
        reps.push_back(g->mul(pick_from(rng, stab.members()), canonical[i]));
      ContextOptions moved;
      moved.a = n;
      moved.representatives = reps;
      cs.push_back(make_context(f, moved));
      // Every element as a representative of K = 1, in reverse.
      std::vector<Element> all(g->order());
      std::iota(all.begin(), all.end(), Element{0});
      std::reverse(all.begin() + 1, all.end());
      ContextOptions reversed = wide;
      reversed.representatives = all;
      cs.push_back(make_context(f, reversed));
      return cs;
    };

    for (auto choice : {0, 1}) {
      const auto section =
          choice == 0 ? coset_section(q, ext.hom) : coset_section(q, ext.hom, alternate_cosets(n, CosetSide::left));
      out.push_back({ext.name + (choice == 0 ? " section" : " alternate section"), section, contexts_for(section)});
    }
    const auto lift = sz_lift_abelian(q, ext.hom).hom;
    for (std::size_t i = 0; i < twists_per_extension; ++i) {
      const auto f = twist(lift.function(), random_into(rng, g, n), n, trivial_k);
      out.push_back({ext.name + " twist " + std::to_string(i), f, contexts_for(f)});
    }
  }
  return out;
}

GroupFunction coset_function(const Subgroup& k, const Homomorphism& phi, const std::vector<Element>& c) {
  const auto& g = *k.parent();
  const auto ind = induced_group(k);
  const auto cosets = right_cosets(k);
  if (!same_group(phi.domain(), ind.group) || c.size() != cosets.size() || c.front() != 0)
    fail(Errc::shape, "coset_function needs phi on K and one value per right coset, the first being 1");
  const auto& a = *phi.codomain();
  std::vector<Element> v(g.order());
  for (Element y = 0; y < g.order(); ++y) {
    const auto i = cosets.coset_of(y);
    const auto kk = g.mul(y, g.inv(cosets.representatives()[i]));
    v[y] = a.mul(phi(ind.from_parent(kk)), c[i]);
  }
  return GroupFunction(k.parent(), phi.codomain(), std::move(v));
}

std::vector<DistributedAverageContext> generated_auxiliary_contexts(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DistributedAverageContext> out;
  // Functions constant on each right coset of a cyclic K.
  for (const auto& [name, g] : builtin_catalog()) {
    if (g->order() > 12) continue;
    std::set<std::vector<Element>> seen;
    for (Element x = 0; x < g->order(); ++x) {
      const auto k = subgroup_closure(g, std::vector<Element>{x});
      if (!seen.insert(members_of(k)).second) continue;
      const auto index = k.index();
      for (std::size_t n = 2; n <= 5; ++n) {
        if (std::gcd(index, n) != 1) continue;
        const auto a_group = make_cyclic(n);
        const auto phi = as_homomorphism(GroupFunction::constant_identity(induced_group(k).group, a_group));
        std::vector<Element> c(index, 0);
        std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = pick(rng);
        ContextOptions o;
        o.k = k;
        o.a = Subgroup::whole(a_group);
        out.push_back(make_context(coset_function(k, phi, c), o));
      }
    }
  }
  // Differences f2^-1 f1 of lifts of the shipped extensions, K = 1.
  for (const auto& ext : shipped_extensions()) {
    if (!ext.normal.is_abelian()) continue;
    const auto g = ext.hom.domain();
    for (int i = 0; i < 8; ++i) {
      ContextOptions o;
      o.k = Subgroup::trivial(g);
      o.a = ext.normal;
      out.push_back(make_context(random_into(rng, g, ext.normal), o));
    }
  }
  return out;
}

std::vector<std::pair<std::string, TransferSetup>> shipped_transfer_setups() {
  std::vector<std::pair<std::string, TransferSetup>> out;
  {
    const auto s3 = make_symmetric(3);
    const auto a3 = alternating_subgroup(s3);
    const auto ind = induced_group(a3);
    const auto pi = extend_from_generators(ind.group, make_cyclic(3), std::vector<Element>{ind.from_parent(3)},
                                           std::vector<Element>{1});
    out.emplace_back("symmetric:3 over A3", make_transfer_setup(a3, pi));
  }
  {
    const auto z6 = make_cyclic(6);
    const auto h = subgroup_closure(z6, std::vector<Element>{2});
    const auto ind = induced_group(h);
    const auto pi = extend_from_generators(ind.group, make_cyclic(3), std::vector<Element>{ind.from_parent(2)},
                                           std::vector<Element>{1});
    out.emplace_back("cyclic:6 over <2>", make_transfer_setup(h, pi));
  }
  for (const auto& [name, g] : builtin_catalog()) {
    if (g->order() > 12) continue;
    for (const auto& h : normal_subgroups(Subgroup::whole(g))) {
      if (h.index() > 4) continue;
      const auto ind = induced_group(h);
      const auto pi = as_homomorphism(quotient(derived_subgroup(Subgroup::whole(ind.group))).projection);
      out.emplace_back(name + " over order " + std::to_string(h.order()), make_transfer_setup(h, pi));
    }
  }
  return out;
}

namespace {

using Pair = std::pair<std::string, std::string>;
const std::vector<Pair> kActionPairs{{"cyclic:2", "cyclic:2"},
                                     {"cyclic:2", "cyclic:3"},
                                     {"cyclic:2", "symmetric:3"},
                                     {"cyclic:3", "cyclic:3"},
                                     {"cyclic:3", "symmetric:3"}};

GroupFunction random_function(std::mt19937_64& rng, const GroupPtr& g, const GroupPtr& h) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(h->order() - 1));
  std::vector<Element> v(g->order(), 0);
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = pick(rng);
  return GroupFunction(g, h, std::move(v));
}

Check criterion_action_laws() {
  for (const auto& [dom, cod] : kActionPairs) {
    const auto g = parse_group_spec(dom), h = parse_group_spec(cod);
    IdentityPreservingFunctions stream(g, h);
    while (auto f = stream.next()) {
      for (Element a = 0; a < g->order(); ++a) {
        const auto fa = conjugate(*f, a);
        if (fa(0) != 0) return {"1 action laws", false, dom + "->" + cod + " f^a(1) != 1 at a=" + std::to_string(a)};
        for (Element b = 0; b < g->order(); ++b)
          if (!(conjugate(fa, b) == conjugate(*f, g->mul(a, b))))
            return {"1 action laws", false, dom + "->" + cod + " pair " + pair_text(a, b)};
      }
      bool fixed = true;
      for (Element a = 0; a < g->order() && fixed; ++a) fixed = act(*f, a) == *f;
      if (fixed != is_homomorphism(*f))
        return {"1 action laws", false, dom + "->" + cod + " index " + std::to_string(stream.index_of(*f))};
    }
  }
  return {"1 action laws", true, {}};
}

Check criterion_census() {
  const auto s3 = make_symmetric(3);
  const auto c3 = orbit_census(make_cyclic(3), s3);
  const auto c2 = orbit_census(make_cyclic(2), s3);
  const bool ok = c3.total == 36 && c3.orbit_size_histogram == std::map<std::size_t, std::uint64_t>{{1, 3}, {3, 11}} &&
                  c2.total == 6 && c2.fixed_points.size() == 4 &&
                  c2.orbit_size_histogram == std::map<std::size_t, std::uint64_t>{{1, 4}, {2, 1}};
  return {"2 Cauchy census", ok, ok ? "" : histogram_json(c3.orbit_size_histogram).dump() + " " +
                                               histogram_json(c2.orbit_size_histogram).dump()};
}

Check criterion_cauchy(std::uint64_t cap) {
  int runs = 0;
  for (const auto& [name, g] : builtin_catalog()) {
    for (std::uint64_t p = 2; p <= g->order(); ++p) {
      if (!is_prime(p) || g->order() % p != 0) continue;
      const auto r = cauchy_demo(g, p, cap);
      // Direct scan: least k with x^k = 1.
      std::uint64_t k = 1;
      for (Element y = r.element; y != 0; y = g->mul(y, r.element)) ++k;
      if (k != p) return {"3 Cauchy end-to-end", false, name + " p=" + std::to_string(p)};
      ++runs;
    }
  }
  return {"3 Cauchy end-to-end", runs > 0, "no runs"};
}

Check criterion_sylow(std::uint64_t cap) {
  const auto s4 = make_symmetric(4);
  if (sylow_build(s4, 2, cap).subgroup.order() != 8 || sylow_build(s4, 3, cap).subgroup.order() != 3)
    return {"4 Sylow", false, "symmetric:4"};
  for (const auto& [name, g] : builtin_catalog())
    for (std::uint64_t p = 2; p <= g->order(); ++p) {
      if (!is_prime(p) || g->order() % p != 0) continue;
      const auto s = sylow_build(g, p, cap);
      if (s.subgroup.order() != p_part(g->order(), p)) return {"4 Sylow", false, name + " p=" + std::to_string(p)};
      for (const auto& st : s.steps)
        if (st.quotient_order % p != 0) return {"4 Sylow", false, name + " step " + std::to_string(st.element)};
    }
  return {"4 Sylow", true, {}};
}

bool product_rule_holds(const GroupFunction& f, const GroupFunction& g, Element a) {
  const auto& h = *f.codomain();
  const auto lhs = conjugate(pointwise_product(f, g), a);
  const auto fa = conjugate(f, a), ga = conjugate(g, a);
  for (Element x = 0; x < f.domain()->order(); ++x)
    if (lhs(x) != h.mul(h.conj(fa(x), g(a)), ga(x))) return false;
  return true;
}

Check criterion_product_rule(std::mt19937_64& rng) {
  const auto z2 = make_cyclic(2), s3 = make_symmetric(3);
  for (Element f0 = 0; f0 < 6; ++f0)
    for (Element f1 = 0; f1 < 6; ++f1)
      for (Element g0 = 0; g0 < 6; ++g0)
        for (Element g1 = 0; g1 < 6; ++g1)
          for (Element a = 0; a < 2; ++a)
            if (!product_rule_holds(GroupFunction(z2, s3, {f0, f1}), GroupFunction(z2, s3, {g0, g1}), a))
              return {"5 product rule", false, "Z2->S3 " + pair_text(f1, g1)};
  const auto catalog = builtin_catalog();
  std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto& g = catalog[pick(rng)];
    const auto& h = catalog[pick(rng)];
    std::uniform_int_distribution<Element> pa(0, static_cast<Element>(g.group->order() - 1));
    if (!product_rule_holds(random_function(rng, g.group, h.group), random_function(rng, g.group, h.group), pa(rng)))
      return {"5 product rule", false, g.name + "->" + h.name + " sample " + std::to_string(i)};
  }
  return {"5 product rule", true, {}};
}

Check criterion_average() {
  const auto z4 = make_cyclic(4), z6 = make_cyclic(6);
  IdentityPreservingFunctions stream(z4, z6);
  std::size_t n = 0;
  while (auto f = stream.next()) {
    const auto avg = average_function(*f);
    if (!is_homomorphism(avg.function()) || (is_homomorphism(*f) && !(avg.function() == *f)))
      return {"6 average function", false, "index " + std::to_string(n)};
    ++n;
  }
  return {"6 average function", n == 216, std::to_string(n) + " functions"};
}

Check criterion_transfer() {
  const auto setups = shipped_transfer_setups();
  const auto& s3 = setups.front().second;
  const auto theta = transfer(s3);
  if (!(theta.function() == GroupFunction::constant_identity(s3.group, theta.codomain())))
    return {"7 transfer", false, "S3 -> A3 transfer is not trivial"};
  for (const auto& [name, setup] : setups) {
    if (!verify_transfer_power_relation(setup)) return {"7 transfer", false, name + ": power relation"};
    const auto alternate = alternate_cosets(setup.subgroup, CosetSide::right);
    const auto reps = alternate.representatives();
    const auto alt = with_representatives(setup, std::vector<Element>(reps.begin(), reps.end()));
    if (!(transfer(alt).function() == transfer(setup).function()))
      return {"7 transfer", false, name + ": representative choice"};
  }
  return {"7 transfer", true, {}};
}

Check criterion_distributor_identities(std::mt19937_64& rng) {
  const auto mo = GroupFunction::inversion(make_symmetric(3));
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      for (Element z = 0; z < 6; ++z)
        if (!verify_triple_identity(mo, x, y, z) || !verify_action_shift(mo, x, y, z))
          return {"8 distributor identities", false, "inversion on S3 at " + pair_text(x, y) + "," + std::to_string(z)};
  const auto catalog = builtin_catalog();
  std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto& g = catalog[pick(rng)].group;
    const auto f = random_function(rng, g, catalog[pick(rng)].group);
    std::uniform_int_distribution<Element> pe(0, static_cast<Element>(g->order() - 1));
    const auto x = pe(rng), y = pe(rng), z = pe(rng);
    if (!verify_triple_identity(f, x, y, z) || !verify_action_shift(f, x, y, z))
      return {"8 distributor identities", false, "sample " + std::to_string(i)};
  }
  return {"8 distributor identities", true, {}};
}

Check criterion_distributor_subgroup(std::mt19937_64& rng) {
  const auto catalog = builtin_catalog();
  for (const auto& [name, g] : catalog)
    if (!(distributor_subgroup(GroupFunction::inversion(g)) == derived_subgroup(Subgroup::whole(g))))
      return {"9 distributor subgroup", false, name};
  if (distributor_subgroup(GroupFunction::inversion(make_symmetric(3))).order() != 3 ||
      distributor_subgroup(GroupFunction::inversion(make_symmetric(4))).order() != 12)
    return {"9 distributor subgroup", false, "symmetric orders"};
  std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
  for (int i = 0; i < 60; ++i) {
    const auto f = random_function(rng, catalog[pick(rng)].group, catalog[pick(rng)].group);
    canonical_quotient_hom(f);  // throws unless certified
    if (!verify_minimality(f)) return {"9 distributor subgroup", false, "minimality sample " + std::to_string(i)};
  }
  return {"9 distributor subgroup", true, {}};
}

Check criterion_distributed_average(std::uint64_t seed) {
  std::size_t contexts = 0;
  for (const auto& c : generated_average_cases(seed)) {
    for (const auto& ctx : c.contexts) {
      distributed_average(ctx);  // certified or throws
      ++contexts;
    }
    if (!verify_invariance(c.function, c.contexts)) return {"10 distributed average", false, c.name};
  }
  return {"10 distributed average", contexts >= 100, std::to_string(contexts) + " contexts"};
}

Check criterion_lifts() {
  for (const auto& ext : shipped_extensions()) {
    if (ext.name != "S3/A3 <- Z2" && ext.name != "A4/V4 <- Z3" && ext.name != "(S3xZ5)/(S3x1) <- Z5") continue;
    const auto q = quotient(ext.normal);
    const auto lift = sz_lift_soluble(ext.normal, ext.hom);
    if (!(compose(q.projection, lift.hom.function()) == ext.hom.function())) return {"11 lifts", false, ext.name};
  }
  const auto s3 = make_symmetric(3);
  const auto a3 = alternating_subgroup(s3);
  const auto q = quotient(a3);
  const auto z2 = make_cyclic(2);
  const auto iso = GroupFunction(z2, q.group, {0, 1});
  std::vector<Homomorphism> lifts;
  std::set<std::vector<Element>> images;
  IdentityPreservingFunctions stream(z2, s3);
  while (auto f = stream.next())
    if (is_homomorphism(*f) && compose(q.projection, *f) == iso) {
      lifts.push_back(as_homomorphism(*f));
      images.insert(members_of(lifts.back().image()));
    }
  if (images.size() != 3) return {"11 lifts", false, std::to_string(images.size()) + " complements"};
  for (const auto& f1 : lifts)
    for (const auto& f2 : lifts) {
      const auto c = conjugator_between(f1, f2, a3);
      bool searched = false;
      for (auto cand : a3.members())
        if (cand == c && s3->conj(f2(1), cand) == f1(1)) searched = true;
      if (!searched) return {"11 lifts", false, "conjugator " + std::to_string(c)};
    }
  return {"11 lifts", true, {}};
}

Check criterion_triviality(std::uint64_t seed) {
  const auto contexts = generated_auxiliary_contexts(seed);
  for (const auto& ctx : contexts) {
    const auto avg = distributed_average(ctx);
    if (!(avg.function() == GroupFunction::constant_identity(ctx.function.domain(), ctx.function.codomain())))
      return {"12 triviality", false, first_difference(avg.function(), GroupFunction::constant_identity(
                                                                           ctx.function.domain(), ctx.function.codomain()))};
  }
  return {"12 triviality", !contexts.empty(), "no contexts"};
}

template <typename Fn>
Check guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return {name, false, std::string(errc_name(e.code())) + ": " + e.what() + (e.witness().empty() ? "" : " [" + e.witness() + "]")};
  }
}

}  // namespace

Check check_fixture(const std::string& path) {
  const auto name = "fixture " + path;
  return guarded(name, [&]() -> Check {
    const auto j = read_json_file(path);
    if (j.contains("values")) {
      const auto f = function_from_json(j);
      const auto expect = j.value("expect", std::string("homomorphism"));
      if (expect == "homomorphism") {
        const auto w = hom_witness(f);
        return {name, w.empty(), w};
      }
      if (expect == "identity-preserving") return {name, f.identity_preserving(), "f(1) = " + std::to_string(f(0))};
      fail(Errc::parse, "unknown expectation '" + expect + "'");
    }
    const auto g = group_from_json(j);
    if (j.contains("expect_order") && j.at("expect_order").get<std::size_t>() != g->order())
      return {name, false, "order " + std::to_string(g->order())};
    return {name, true, {}};
  });
}

Report selfcheck_report(std::uint64_t seed, const std::vector<std::string>& fixtures) {
  Report r;
  r.command = "selfcheck";
  r.inputs = {{"seed", seed}, {"fixtures", fixtures}};
  std::mt19937_64 rng(seed);
  const auto catalog = builtin_catalog();
  r.result["catalog_size"] = catalog.size();
  Json names = Json::array();
  for (const auto& e : catalog) names.push_back(e.name);
  r.result["catalog"] = std::move(names);

  const auto cap = kDefaultEnumerationCap;
  r.checks.push_back(guarded("1 action laws", [] { return criterion_action_laws(); }));
  r.checks.push_back(guarded("2 Cauchy census", [] { return criterion_census(); }));
  r.checks.push_back(guarded("3 Cauchy end-to-end", [&] { return criterion_cauchy(cap); }));
  r.checks.push_back(guarded("4 Sylow", [&] { return criterion_sylow(cap); }));
  r.checks.push_back(guarded("5 product rule", [&] { return criterion_product_rule(rng); }));
  r.checks.push_back(guarded("6 average function", [] { return criterion_average(); }));
  r.checks.push_back(guarded("7 transfer", [] { return criterion_transfer(); }));
  r.checks.push_back(guarded("8 distributor identities", [&] { return criterion_distributor_identities(rng); }));
  r.checks.push_back(guarded("9 distributor subgroup", [&] { return criterion_distributor_subgroup(rng); }));
  r.checks.push_back(guarded("10 distributed average", [&] { return criterion_distributed_average(seed); }));
  r.checks.push_back(guarded("11 lifts", [] { return criterion_lifts(); }));
  r.checks.push_back(guarded("12 triviality", [&] { return criterion_triviality(seed); }));
  r.add("catalog has at least 15 groups", catalog.size() >= 15, std::to_string(catalog.size()));
  for (const auto& path : fixtures) r.checks.push_back(check_fixture(path));
  for (auto& c : r.checks)
    if (c.pass) c.witness.clear();
  return r;
}

}  // namespace grpfun
