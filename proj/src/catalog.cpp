#include "commtop/catalog.hpp"

#include "commtop/error.hpp"

#include <algorithm>
#include <charconv>

namespace commtop::catalog {

namespace {

std::string power_name(const char* base, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return std::string(base) + "^" + std::to_string(k);
}

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group of order 0");
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(power_name("a", a));
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = Element((a + b) % n);
  }
  return FiniteGroup(n, std::move(table), std::move(names), "Z" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t order) {
  if (order < 2 || order % 2) throw InvalidArgument("dihedral group order must be even and >= 2");
  const std::size_t n = order / 2;
  // r^k s^e at index e*n + k; s r = r^-1 s.
  std::vector<Element> table(order * order);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t k = x % n, e = x / n;
    names.push_back(e == 0 ? power_name("r", k) : (k == 0 ? "s" : power_name("r", k) + " s"));
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t m = y % n, f = y / n;
      std::size_t kk = e == 0 ? (k + m) % n : (k + n - m) % n;
      table[x * order + y] = Element(((e + f) % 2) * n + kk);
    }
  }
  return FiniteGroup(order, std::move(table), std::move(names), "D" + std::to_string(order));
}

FiniteGroup dicyclic(std::size_t order) {
  if (order < 8 || order % 4) throw InvalidArgument("dicyclic group order must be a multiple of 4, >= 8");
  const std::size_t n = order / 4, m2 = 2 * n;
  // a^k x^e at index e*2n + k; x a = a^-1 x, x^2 = a^n.
  std::vector<Element> table(order * order);
  std::vector<std::string> names;
  const bool quaternion = order == 8;
  static const char* q8[] = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t k = x % m2, e = x / m2;
    if (quaternion)
      names.push_back(q8[x]);
    else
      names.push_back(e == 0 ? power_name("a", k) : (k == 0 ? "x" : power_name("a", k) + " x"));
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t m = y % m2, f = y / m2;
      std::size_t kk, ee;
      if (e == 0) {
        kk = (k + m) % m2;
        ee = f;
      } else {
        kk = (k + m2 - m) % m2;
        ee = (1 + f) % 2;
        if (f == 1) kk = (kk + n) % m2;
      }
      table[x * order + y] = Element(ee * m2 + kk);
    }
  }
  return FiniteGroup(order, std::move(table), std::move(names), "Q" + std::to_string(order));
}

FiniteGroup symmetric(std::size_t degree) {
  if (degree < 1) throw InvalidArgument("symmetric group of degree 0");
  if (degree == 1) return cyclic(1).relabeled("S1");
  std::vector<std::uint32_t> swap(degree), cycle(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    swap[i] = std::uint32_t(i);
    cycle[i] = std::uint32_t((i + 1) % degree);
  }
  std::swap(swap[0], swap[1]);
  return FiniteGroup::from_permutations(degree, {swap, cycle}, {}, "S" + std::to_string(degree));
}

FiniteGroup alternating4() {
  return FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, {}, "A4");
}

FiniteGroup abelian(const std::vector<std::size_t>& factors) {
  if (factors.empty()) return cyclic(1);
  FiniteGroup g = cyclic(factors[0]);
  std::string label = "Z" + std::to_string(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    g = direct_product(g, cyclic(factors[i]));
    label += "xZ" + std::to_string(factors[i]);
  }
  return g.relabeled(label);
}

FiniteGroup central_product_over_involution(const FiniteGroup& h, const FiniteGroup& k) {
  auto involution = [](const FiniteGroup& g) {
    std::optional<Element> found;
    const Subgroup z_g = center(g);
    for (auto z : z_g.elements()) {
      if (g.element_order(z) != 2) continue;
      if (found) throw InvalidArgument(g.label() + " has more than one central involution");
      found = z;
    }
    if (!found) throw InvalidArgument(g.label() + " has no central involution");
    return *found;
  };
  auto cp = central_product(h, k, {{kIdentity, kIdentity}, {involution(h), involution(k)}});
  return cp.group;
}

FiniteGroup group(std::string_view name) {
  auto unknown = [&] { return ParseError("unknown catalog group \"" + std::string(name) + "\""); };
  if (auto star = name.find('*'); star != std::string_view::npos) {
    auto h = group(name.substr(0, star));
    auto k = group(name.substr(star + 1));
    return central_product_over_involution(h, k).relabeled(std::string(name));
  }
  if (name == "Q8" || name == "Q16") return dicyclic(name == "Q8" ? 8 : 16);
  if (name == "S3" || name == "S4") return symmetric(name == "S3" ? 3 : 4);
  if (name == "A4") return alternating4();
  if (name.size() >= 2 && name[0] == 'D') {
    auto order = parse_size(name.substr(1));
    if (!order || *order < 2 || *order % 2) throw unknown();
    return dihedral(*order);
  }
  if (name.size() >= 2 && name[0] == 'Z') {
    std::vector<std::size_t> factors;
    for (auto part : split(name, 'x')) {
      if (part.size() < 2 || part[0] != 'Z') throw unknown();
      auto n = parse_size(part.substr(1));
      if (!n || *n == 0) throw unknown();
      factors.push_back(*n);
    }
    if (factors.size() == 1) return cyclic(factors[0]);
    return abelian(factors);
  }
  throw unknown();
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "Z1",   "Z2",   "Z3",    "Z4",    "Z2xZ2", "Z5",  "Z6",    "S3",    "D6",    "Z7",
      "Z8",   "Z2xZ4", "Z2xZ2xZ2", "D8",  "Q8",    "Z9",  "Z3xZ3", "Z10",   "D10",   "Z12",
      "Z2xZ6", "D12", "A4",    "Z14",   "D14",   "Z16", "Z4xZ4", "Z2xZ8", "D16",   "Q16",
      "Q8*Z4", "D8*Z4", "S4"};
  return kNames;
}

}  // namespace commtop::catalog
