#include "commtop/invariants.hpp"

#include <algorithm>

namespace commtop {

AbelianGroupInvariants AbelianGroupInvariants::from_cyclic_orders(const std::vector<BigInt>& orders) {
  AbelianGroupInvariants out;
  std::vector<BigInt> finite;
  for (const auto& o : orders) {
    BigInt a = abs(o);
    if (a == 0)
      ++out.free_rank;
    else if (a != 1)
      finite.push_back(a);
  }
  // diag(a, b) is equivalent to diag(gcd, lcm); sweeping pairs yields a divisibility chain.
  std::sort(finite.begin(), finite.end());
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      BigInt g = gcd(finite[i], finite[j]);
      if (g == finite[i]) continue;
      BigInt l = finite[i] / g * finite[j];
      finite[i] = g;
      finite[j] = l;
    }
  }
  for (auto& f : finite)
    if (f != 1) out.torsion.push_back(f);
  return out;
}

std::string torsion_string(const std::vector<BigInt>& factors) {
  std::string s = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ",";
    s += factors[i].get_str();
  }
  return s + "]";
}

std::string to_string(const AbelianGroupInvariants& a) {
  if (a.is_trivial()) return "0";
  std::string s;
  if (a.free_rank > 0) s = "Z^" + std::to_string(a.free_rank);
  if (!a.torsion.empty()) {
    if (!s.empty()) s += " x ";
    s += torsion_string(a.torsion);
  }
  return s;
}

}  // namespace commtop
