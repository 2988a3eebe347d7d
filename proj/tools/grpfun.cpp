#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grpfun/error.hpp"
#include "grpfun/harness.hpp"

using namespace grpfun;

namespace {

struct Output {
  bool pretty = false;
  std::uint64_t seed = 20240601;
  std::uint64_t cap = kDefaultEnumerationCap;
};

void print(const Json& j, const Output& out) { std::cout << (out.pretty ? j.dump(2) : j.dump()) << '\n'; }

int emit(const Report& r, const Output& out) {
  print(r.to_json(), out);
  return r.ok() ? 0 : exit_code(Errc::invariant_violation);
}

void add_format_flags(CLI::App* cmd, Output& out) {
  cmd->add_flag("--pretty", out.pretty, "indented JSON");
  cmd->add_flag("--json", "compact JSON (default)");
  cmd->add_option("--cap", out.cap, "enumeration cap")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functions between finite groups: orbit censuses, transfer, distributed averages"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--pretty", out.pretty, "indented JSON");
  app.add_flag("--json", "compact JSON (default)");
  app.add_option("--seed", out.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--cap", out.cap, "enumeration cap")->capture_default_str();

  std::string group, domain, codomain_spec, extension, function_path;
  std::uint64_t prime = 0;
  std::vector<Element> subgroup_gens, pi_values, normal_gens, domain_gens, hom_values;
  std::optional<std::string> codomain;
  std::vector<std::string> fixtures;

  auto* cauchy = app.add_subcommand("cauchy", "element of order p by orbit counting");
  cauchy->add_option("--group", group, "group spec or JSON file")->required();
  cauchy->add_option("--prime", prime)->required();
  add_format_flags(cauchy, out);

  auto* sylow = app.add_subcommand("sylow", "Sylow p-subgroup by normalizer extension");
  sylow->add_option("--group", group, "group spec or JSON file")->required();
  sylow->add_option("--prime", prime)->required();
  add_format_flags(sylow, out);

  auto* census = app.add_subcommand("census", "orbit census of identity-preserving functions");
  census->add_option("--domain", domain)->required();
  census->add_option("--codomain", codomain_spec)->required();
  add_format_flags(census, out);

  auto* transfer_cmd = app.add_subcommand("transfer", "transfer into an abelian group");
  transfer_cmd->add_option("--group", group)->required();
  transfer_cmd->add_option("--subgroup", subgroup_gens, "subgroup generators")->required()->delimiter(',');
  transfer_cmd->add_option("--codomain", codomain, "abelian target; default H/[H,H]");
  transfer_cmd->add_option("--pi", pi_values, "images of the subgroup generators")->delimiter(',');
  add_format_flags(transfer_cmd, out);

  auto* lift = app.add_subcommand("lift", "lift a homomorphism into H/N to H");
  lift->add_option("--extension", extension, "H as a spec or JSON file")->required();
  lift->add_option("--normal", normal_gens, "generators of N")->required()->delimiter(',');
  lift->add_option("--domain", domain, "G as a spec or JSON file")->required();
  lift->add_option("--domain-gens", domain_gens, "generators of G; default a greedy generating set")->delimiter(',');
  lift->add_option("--hom", hom_values, "elements of H giving each generator's image mod N")->required()->delimiter(',');
  add_format_flags(lift, out);

  auto* distributors = app.add_subcommand("distributors", "distributor subgroup census of a function");
  distributors->add_option("--function", function_path, "function JSON file")->required()->check(CLI::ExistingFile);
  add_format_flags(distributors, out);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suite over the built-in catalog");
  selfcheck->add_option("--fixture", fixtures, "group or function JSON to validate")->check(CLI::ExistingFile);
  selfcheck->add_option("--seed", out.seed, "seed for sampled checks");
  add_format_flags(selfcheck, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cauchy) return emit(cauchy_report(group, prime, out.cap), out);
    if (*sylow) return emit(sylow_report(group, prime, out.cap), out);
    if (*census) return emit(census_report(domain, codomain_spec, out.cap), out);
    if (*transfer_cmd) return emit(transfer_report(group, subgroup_gens, codomain, pi_values), out);
    if (*lift) return emit(lift_report(extension, normal_gens, domain, domain_gens, hom_values), out);
    if (*distributors) {
      print(distributor_census(function_from_json(read_json_file(function_path))), out);
      return 0;
    }
    if (*selfcheck) return emit(selfcheck_report(out.seed, fixtures), out);
  } catch (const Error& e) {
    Json j;
    j["error"] = std::string(errc_name(e.code()));
    j["message"] = e.what();
    if (!e.witness().empty()) j["witness"] = e.witness();
    print(j, out);
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return 1;
}
