#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpfun/distributed_average.hpp"
#include "grpfun/group_io.hpp"
#include "grpfun/transfer.hpp"

namespace grpfun {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when pass
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool pass, std::string witness = {});
  Json to_json() const;
};

// Cauchy by orbit counting on identity-preserving Z_p -> G.
struct CauchyResult {
  Element element = 0;
  bool full_census = false;  // false: fixed points only
  std::uint64_t functions = 0;
  std::uint64_t fixed_points = 0;
  std::map<std::size_t, std::uint64_t> orbit_sizes;  // empty without a full census
};

CauchyResult cauchy_demo(const GroupPtr& g, std::uint64_t p, std::uint64_t cap = kDefaultEnumerationCap);

// One pass of the extension argument: H -> <H, x> inside N_G(H).
struct SylowStep {
  std::size_t subgroup_order;
  std::size_t normalizer_order;
  std::size_t quotient_order;
  Element element;  // pulled back generator
};

struct SylowResult {
  Subgroup subgroup;
  std::vector<SylowStep> steps;
};

SylowResult sylow_build(const GroupPtr& g, std::uint64_t p, std::uint64_t cap = kDefaultEnumerationCap);

Report cauchy_report(const std::string& spec, std::uint64_t p, std::uint64_t cap);
Report sylow_report(const std::string& spec, std::uint64_t p, std::uint64_t cap);
Report census_report(const std::string& domain, const std::string& codomain, std::uint64_t cap);

// Without a codomain, pi is H -> H/[H,H] and pi_values must be empty.
// Otherwise pi_values are the images of the subgroup generators.
Report transfer_report(const std::string& group, const std::vector<Element>& subgroup_gens,
                       const std::optional<std::string>& codomain, const std::vector<Element>& pi_values);

// Homomorphism values are elements of the extension group, one per domain
// generator, read modulo the normal subgroup.
Report lift_report(const std::string& extension, const std::vector<Element>& normal_gens,
                   const std::string& domain, const std::vector<Element>& domain_gens,
                   const std::vector<Element>& hom_values);

// Distributor census for one function.
Json distributor_census(const GroupFunction& f);

// A generated family of distributed-average inputs: twisted homomorphisms and
// coset sections over the shipped extensions, with several admissible contexts each.
struct AverageCase {
  std::string name;
  GroupFunction function;
  std::vector<DistributedAverageContext> contexts;
};

std::vector<AverageCase> generated_average_cases(std::uint64_t seed, std::size_t twists_per_extension = 12);

// a(k t_i) = phi(k) c_i over the canonical right cosets K t_i, with c_1 = 1.
// Every such a is stabilised by K, and a restricted to K is phi.
GroupFunction coset_function(const Subgroup& k, const Homomorphism& phi, const std::vector<Element>& c);

// Functions a : G -> A stabilised by K with gcd([G:K], |A|) = 1 and a trivial
// on K: coset functions with phi = 1, and A-valued functions with K = 1.
std::vector<DistributedAverageContext> generated_auxiliary_contexts(std::uint64_t seed);

// S3 over A3 and Z6 over <2> into Z3, then every normal H of index <= 4 in the
// catalog groups of order <= 12 with pi = H -> H/[H,H].
std::vector<std::pair<std::string, TransferSetup>> shipped_transfer_setups();

// Criteria 1-12 over the built-in catalog, then each fixture file.
Report selfcheck_report(std::uint64_t seed, const std::vector<std::string>& fixtures);

// Checks a fixture: a group JSON is validated as a table; a function JSON
// (with "values") must be a homomorphism unless "expect" says otherwise.
Check check_fixture(const std::string& path);

}  // namespace grpfun
