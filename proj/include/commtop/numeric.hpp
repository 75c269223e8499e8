#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace commtop {

using BigInt = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Default enumeration cap shared by every exhaustive search.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

// Fractional part in [0,1).
Rational frac(const Rational& r);
BigInt floor_div(const Rational& r);

// base^exp with saturation at UINT64_MAX; used for budget checks.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

// Throws BudgetExceeded naming `what` if `count` > `budget`.
void check_budget(std::uint64_t count, std::uint64_t budget, std::string_view what);

}  // namespace commtop
