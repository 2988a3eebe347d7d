#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpfun {

enum class Errc {
  invalid_order,
  size_limit,
  validation,
  domain,
  precondition,
  shape,
  normality,
  coprimality,
  certification,
  abelian,
  containment,
  solubility,
  not_cotwisted,
  invariant_violation,
  parse,
};

std::string_view errc_name(Errc code);

// Process exit status for the CLI: 1 precondition, 2 invariant violation, 3 size limit.
int exit_code(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::string witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::string witness_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what, std::string witness = {}) {
  throw Error(code, what, std::move(witness));
}

}  // namespace grpfun
