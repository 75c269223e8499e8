#include "commtop/numeric.hpp"

#include "commtop/error.hpp"

#include <limits>

namespace commtop {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Rational r{BigInt(num), BigInt(den)};
  if (r.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt floor_div(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_div(r)); }

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMax / base) return kMax;
    out *= base;
  }
  return out;
}

void check_budget(std::uint64_t count, std::uint64_t budget, std::string_view what) {
  if (count > budget)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(count) +
                         " exceeds budget " + std::to_string(budget));
}

}  // namespace commtop
