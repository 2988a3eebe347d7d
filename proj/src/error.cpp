#include "grpfun/error.hpp"

namespace grpfun {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_order: return "invalid_order";
    case Errc::size_limit: return "size_limit";
    case Errc::validation: return "validation";
    case Errc::domain: return "domain";
    case Errc::precondition: return "precondition";
    case Errc::shape: return "shape";
    case Errc::normality: return "normality";
    case Errc::coprimality: return "coprimality";
    case Errc::certification: return "certification";
    case Errc::abelian: return "abelian";
    case Errc::containment: return "containment";
    case Errc::solubility: return "solubility";
    case Errc::not_cotwisted: return "not_cotwisted";
    case Errc::invariant_violation: return "invariant_violation";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::size_limit: return 3;
    case Errc::invariant_violation: return 2;
    default: return 1;
  }
}

}  // namespace grpfun
