#include "grpfun/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "grpfun/error.hpp"

namespace grpfun {

namespace {

std::string perm_label(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

GroupPtr group_from_permutation_list(const std::vector<Permutation>& elements) {
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(perm_label(p));
  return Group::from_trusted_table(n, std::move(flat), std::move(labels));
}

}  // namespace

Group::Group(std::size_t order, std::vector<Element> flat, std::vector<std::string> labels)
    : order_(order), table_(std::move(flat)), inverse_(order), labels_(std::move(labels)) {
  for (std::size_t a = 0; a < order_; ++a) {
    const auto r = row(static_cast<Element>(a));
    const auto it = std::find(r.begin(), r.end(), Element{0});
    inverse_[a] = static_cast<Element>(it - r.begin());
  }
}

GroupPtr Group::from_table(const std::vector<std::vector<Element>>& rows,
                           std::vector<std::string> labels) {
  validate_cayley_table(rows);
  const std::size_t n = rows.size();
  if (!labels.empty() && labels.size() != n)
    fail(Errc::validation, "label count " + std::to_string(labels.size()) +
                               " does not match order " + std::to_string(n));
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return GroupPtr(new Group(n, std::move(flat), std::move(labels)));
}

GroupPtr Group::from_trusted_table(std::size_t order, std::vector<Element> flat,
                                   std::vector<std::string> labels) {
  if (order == 0) fail(Errc::invalid_order, "group order must be positive");
  if (flat.size() != order * order) fail(Errc::validation, "table size does not match order");
  return GroupPtr(new Group(order, std::move(flat), std::move(labels)));
}

void Group::check(Element a) const {
  if (a >= order_)
    fail(Errc::domain, "element " + std::to_string(a) + " out of range for group of order " +
                           std::to_string(order_));
}

Element Group::mul(Element a, Element b) const {
  check(a);
  check(b);
  return table_[static_cast<std::size_t>(a) * order_ + b];
}

Element Group::inv(Element a) const {
  check(a);
  return inverse_[a];
}

Element Group::pow(Element a, std::int64_t k) const {
  check(a);
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  Element result = 0;
  Element base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Element Group::conj(Element a, Element b) const { return mul(mul(inv(b), a), b); }

Element Group::commutator(Element x, Element y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

std::size_t Group::element_order(Element a) const {
  check(a);
  std::size_t k = 1;
  for (Element x = a; x != 0; x = table_[static_cast<std::size_t>(x) * order_ + a]) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

std::string Group::label(Element a) const {
  check(a);
  if (labels_.empty()) return std::to_string(a);
  return labels_[a];
}

std::vector<std::vector<Element>> Group::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    const auto r = row(static_cast<Element>(a));
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

bool Group::same_table(const Group& other) const noexcept {
  return order_ == other.order_ && table_ == other.table_;
}

bool same_group(const Group& a, const Group& b) noexcept { return &a == &b || a.same_table(b); }

void validate_cayley_table(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) fail(Errc::invalid_order, "Cayley table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      fail(Errc::validation, "Cayley table is not square", "row " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b)
      if (rows[a][b] >= n)
        fail(Errc::validation, "Cayley table entry out of range",
             "row " + std::to_string(a) + " column " + std::to_string(b));
  }
  for (std::size_t x = 0; x < n; ++x)
    if (rows[0][x] != x || rows[x][0] != x)
      fail(Errc::validation, "index 0 is not the identity", "element " + std::to_string(x));

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[rows[a][b]])
        fail(Errc::validation, "Cayley table row is not a permutation (latin square violated)",
             "row " + std::to_string(a) + " repeats " + std::to_string(rows[a][b]));
      seen[rows[a][b]] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[rows[a][b]])
        fail(Errc::validation, "Cayley table column is not a permutation (latin square violated)",
             "column " + std::to_string(b) + " repeats " + std::to_string(rows[a][b]));
      seen[rows[a][b]] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = rows[a][b];
      for (std::size_t c = 0; c < n; ++c)
        if (rows[ab][c] != rows[a][rows[b][c]])
          fail(Errc::validation, "Cayley table is not associative",
               "triple (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                   ")");
    }
}

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) fail(Errc::invalid_order, "cyclic group order must be at least 1");
  if (n > kDefaultElementCap)
    fail(Errc::size_limit, "cyclic group order " + std::to_string(n) + " exceeds element cap");
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>((a + b) % n);
  return Group::from_trusted_table(n, std::move(flat));
}

GroupPtr make_symmetric(std::size_t n) {
  if (n == 0) fail(Errc::invalid_order, "symmetric group degree must be at least 1");
  if (n > 6) fail(Errc::size_limit, "symmetric group degree " + std::to_string(n) + " exceeds 6");
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> elements;
  do elements.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return group_from_permutation_list(elements);
}

GroupPtr make_dihedral(std::size_t n) {
  if (n == 0) fail(Errc::invalid_order, "dihedral group parameter must be at least 1");
  if (2 * n > kDefaultElementCap) fail(Errc::size_limit, "dihedral group exceeds element cap");
  // 0..n-1 are rotations r^k; n..2n-1 are reflections s r^k, with r s = s r^-1.
  const std::size_t order = 2 * n;
  std::vector<Element> flat(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    labels[x] = x < n ? "r^" + std::to_string(x) : "s r^" + std::to_string(x - n);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % n;
      const std::size_t b = y % n;
      std::size_t v;
      if (x < n && y < n) v = (a + b) % n;
      else if (x < n) v = n + (b + n - a) % n;
      else if (y < n) v = n + (a + b) % n;
      else v = (b + n - a) % n;
      flat[x * order + y] = static_cast<Element>(v);
    }
  }
  return Group::from_trusted_table(order, std::move(flat), std::move(labels));
}

GroupPtr make_direct_product(const Group& g1, const Group& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const std::size_t n = n1 * n2;
  if (n > kDefaultElementCap) fail(Errc::size_limit, "direct product exceeds element cap");
  std::vector<Element> flat(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto x1 = static_cast<Element>(x / n2);
    const auto x2 = static_cast<Element>(x % n2);
    labels[x] = "(" + g1.label(x1) + "," + g2.label(x2) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto y1 = static_cast<Element>(y / n2);
      const auto y2 = static_cast<Element>(y % n2);
      flat[x * n + y] = static_cast<Element>(g1.mul(x1, y1) * n2 + g2.mul(x2, y2));
    }
  }
  return Group::from_trusted_table(n, std::move(flat), std::move(labels));
}

GroupPtr from_cayley_table(const std::vector<std::vector<Element>>& rows) {
  return Group::from_table(rows);
}

GroupPtr from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                           std::size_t element_cap) {
  if (degree == 0) fail(Errc::invalid_order, "permutation degree must be at least 1");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    if (p.size() != degree)
      fail(Errc::validation, "generator " + std::to_string(g) + " has wrong degree");
    std::vector<char> seen(degree);
    for (auto v : p) {
      if (v >= degree || seen[v])
        fail(Errc::validation, "generator " + std::to_string(g) + " is not a permutation");
      seen[v] = 1;
    }
  }
  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  std::vector<Permutation> elements{identity};
  std::map<Permutation, Element> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      auto next = compose(elements[head], s);
      if (index.count(next)) continue;
      if (elements.size() >= element_cap)
        fail(Errc::size_limit, "permutation closure exceeds element cap " +
                                   std::to_string(element_cap));
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  return group_from_permutation_list(elements);
}

std::vector<std::size_t> order_multiset(const Group& g) {
  std::vector<std::size_t> orders(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) orders[a] = g.element_order(static_cast<Element>(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace grpfun
