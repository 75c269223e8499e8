#pragma once

#include "commtop/group.hpp"
#include "commtop/lattice.hpp"
#include "commtop/numeric.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commtop {

/// Element (t, f) of an extension of F by T = R^k/Z^k. Torus coordinates
/// are exact rationals in [0,1). `owner` identifies the parent extension.
struct ExtElement {
  RationalVector t;
  Element f = kIdentity;
  std::uint64_t owner = 0;

  bool operator==(const ExtElement& o) const { return f == o.f && t == o.t && owner == o.owner; }
};

/// "((1/2,0), tau)"
std::string to_string(const ExtElement& x, const FiniteGroup& f);

/// Lexicographic order on (t, f), comparing t first.
bool ext_less(const ExtElement& a, const ExtElement& b);

/// T x_rho F, optionally divided by a finite central subgroup Z generated by
/// elements of the split extension. Product: (t,f)(t',f') = (t + rho(f)t', ff').
class TorusExtension {
 public:
  /// `action` lists rho(f) for every element of F in index order. Throws
  /// InvalidArgument naming the failed check ("rho not a homomorphism at
  /// (f,g)", non-central or infinite Z generator, ...).
  TorusExtension(std::size_t rank, FiniteGroup finite, std::vector<IntMatrix> action,
                 std::vector<std::pair<RationalVector, Element>> quotient = {}, std::string label = {});

  /// Extends generator images to all of F through the Cayley graph, then validates as above.
  static TorusExtension from_generator_action(std::size_t rank, FiniteGroup finite,
                                              const std::vector<std::pair<Element, IntMatrix>>& generator_images,
                                              std::vector<std::pair<RationalVector, Element>> quotient = {},
                                              std::string label = {});

  std::size_t rank() const { return d_->rank; }
  const FiniteGroup& finite() const { return d_->finite; }
  const IntMatrix& action(Element f) const { return d_->action.at(f); }
  const std::string& label() const { return d_->label; }
  bool is_split() const { return d_->central.size() == 1; }
  /// Generators as given and the full finite central subgroup (split-extension elements).
  const std::vector<std::pair<RationalVector, Element>>& quotient_generators() const { return d_->quotient; }
  const std::vector<ExtElement>& central_subgroup() const { return d_->central; }

  ExtElement identity() const;
  /// Reduces t mod 1 and picks the canonical coset representative.
  ExtElement element(RationalVector t, Element f) const;
  ExtElement torus(RationalVector t) const { return element(std::move(t), kIdentity); }
  /// The lift (0, f).
  ExtElement lift(Element f) const { return element(RationalVector(rank(), 0), f); }

  ExtElement multiply(const ExtElement& a, const ExtElement& b) const;
  ExtElement inverse(const ExtElement& a) const;
  /// [a,b] = a^-1 b^-1 a b.
  ExtElement commutator(const ExtElement& a, const ExtElement& b) const;
  /// Lexicographically least (t,f) in the Z-orbit of the input.
  ExtElement canonical(const ExtElement& a) const;

  /// Torus coordinates of `a` if it lies in T (some Z-translate has trivial F-part).
  std::optional<RationalVector> torus_part(const ExtElement& a) const;

  /// All elements whose torus coordinates have denominator dividing m, ordered by (f, t).
  std::vector<ExtElement> elements_with_denominator(std::size_t m, std::uint64_t budget = kDefaultBudget) const;

 private:
  struct Data {
    std::size_t rank = 0;
    FiniteGroup finite;
    std::vector<IntMatrix> action;
    std::vector<std::pair<RationalVector, Element>> quotient;
    std::vector<ExtElement> central;
    std::string label;
    std::uint64_t id = 0;
  };
  void check_owner(const ExtElement& a) const;
  ExtElement split_multiply(const ExtElement& a, const ExtElement& b) const;
  std::shared_ptr<const Data> d_;
};

/// The k x k matrix L(q) with [lift(q), (t,1)] = L(q) t mod Z^k, i.e. I - rho(q^-1).
IntMatrix psi_star(const TorusExtension& e, Element q);

struct CommutatorLattices {
  Lattice sum;       // sum over q of im psi_star(q)
  Lattice subtorus;  // its saturation
};
CommutatorLattices commutator_lattices(const TorusExtension& e);

struct Pi1Split {
  Lattice sub;         // pi_1 of the commutator subtorus
  Lattice complement;  // primitive complement, sub + complement = Z^k
};
Pi1Split pi1_split(const TorusExtension& e);

/// Whether the rational point t (mod Z^k) lies on the subtorus with pi_1 lattice `sub`.
bool in_subtorus(const Lattice& sub, const RationalVector& t);

struct CommutatorWitness {
  ExtElement target, x, y;  // target = [x, y]
};

struct SingleCommutatorCover {
  bool covered = false;
  std::size_t denominator = 0;         // N
  std::size_t search_denominator = 0;  // M
  std::size_t target_count = 0;
  std::size_t found_count = 0;
  std::uint64_t pairs_examined = 0;
  std::vector<CommutatorWitness> witnesses;  // in target order
  std::vector<ExtElement> missing;           // targets with no witness
};

/// Tries to write every denominator-N point of the commutator subtorus as a
/// single commutator [x,y] with torus parts of denominator dividing M
/// (default N |F|). A false result means "not found within budget".
SingleCommutatorCover single_commutator_cover(const TorusExtension& e, std::size_t n, std::size_t m = 0,
                                              std::uint64_t budget = kDefaultBudget);

/// Checks [p s, q t] = [p,q] psi([p,q])(s) psi(q^-1 p q)(t) psi(q)(s^-1), where
/// p, q are lifts, s, t torus points and psi(g)(u) = [lift(g), u].
bool commutator_identity_holds(const TorusExtension& e, Element p, Element q, const RationalVector& s,
                               const RationalVector& t);

namespace extension_catalog {

/// O2, NT_SU2, Z2_diag, Z2_swap, Z4_rot, Z3_rot, Z6_rot, S3_perm, D8_sq, trivial.
TorusExtension extension(std::string_view name);
const std::vector<std::string>& names();

/// A split extension with |F| <= 8, rank <= 3, seeded. The action is a
/// signed-permutation representation conjugated by a random unimodular matrix.
TorusExtension random_extension(std::uint64_t seed);

}  // namespace extension_catalog

}  // namespace commtop
