#include "grpfun/group_io.hpp"

#include <cctype>
#include <fstream>

#include "grpfun/error.hpp"

namespace grpfun {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupPtr parse() {
    auto g = parse_spec();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse, "group spec '" + std::string(text_) + "': " + what + " at position " +
                          std::to_string(pos_));
  }

  std::string_view word() {
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const auto start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) error("number too large");
      ++pos_;
    }
    if (pos_ == start) error("expected a number");
    return value;
  }

  GroupPtr parse_spec() {
    const auto start = pos_;
    const auto kind = word();
    expect(':');
    if (kind == "cyclic") return make_cyclic(number());
    if (kind == "symmetric") return make_symmetric(number());
    if (kind == "dihedral") return make_dihedral(number());
    if (kind == "product") {
      auto left = parse_spec();
      expect(',');
      auto right = parse_spec();
      return make_direct_product(*left, *right);
    }
    pos_ = start;
    error("unknown group kind '" + std::string(kind) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool looks_like_spec(std::string_view s) {
  for (std::string_view k : {"cyclic:", "symmetric:", "dihedral:", "product:"})
    if (s.substr(0, k.size()) == k) return true;
  return false;
}

}  // namespace

GroupPtr parse_group_spec(std::string_view expr) { return SpecParser(expr).parse(); }

GroupPtr group_from_json(const Json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cayley") {
      auto rows = j.at("table").get<std::vector<std::vector<Element>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != rows.size())
        fail(Errc::validation, "declared order does not match table size");
      return from_cayley_table(rows);
    }
    if (kind == "perm") {
      const auto degree = j.at("degree").get<std::size_t>();
      const auto gens = j.at("generators").get<std::vector<Permutation>>();
      return from_permutations(degree, gens);
    }
    if (kind == "spec") return parse_group_spec(j.at("expr").get<std::string>());
    fail(Errc::parse, "unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("malformed group JSON: ") + e.what());
  }
}

Json group_to_json(const Group& g) {
  Json j;
  j["kind"] = "cayley";
  j["order"] = g.order();
  j["table"] = g.rows();
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, "'" + path + "' is not valid JSON: " + e.what());
  }
}

GroupPtr load_group(std::string_view spec_or_path) {
  if (looks_like_spec(spec_or_path)) return parse_group_spec(spec_or_path);
  return group_from_json(read_json_file(std::string(spec_or_path)));
}

Json function_to_json(const GroupFunction& f) {
  Json j;
  j["domain"] = group_to_json(*f.domain());
  j["codomain"] = group_to_json(*f.codomain());
  j["values"] = std::vector<Element>(f.values().begin(), f.values().end());
  return j;
}

GroupFunction function_from_json(const Json& j) {
  auto load = [](const Json& ref) {
    return ref.is_string() ? load_group(ref.get<std::string>()) : group_from_json(ref);
  };
  try {
    return GroupFunction(load(j.at("domain")), load(j.at("codomain")),
                         j.at("values").get<std::vector<Element>>());
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("malformed function JSON: ") + e.what());
  }
}

}  // namespace grpfun
