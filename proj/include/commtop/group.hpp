#pragma once

#include "commtop/invariants.hpp"
#include "commtop/numeric.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace commtop {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

using Tuple = std::vector<Element>;

/// A finite group stored as a multiplication table. Element 0 is the
/// identity. Instances are immutable and cheap to copy (shared storage).
class FiniteGroup {
 public:
  /// Validates the identity row/column and the Latin-square property, and
  /// checks associativity exhaustively for order <= 64 (sampled above).
  /// Throws InvalidArgument on failure.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names = {},
              std::string label = {});

  /// Closure of permutation generators (images, 0-indexed). The identity
  /// permutation is element 0; the rest appear in breadth-first order over
  /// the generators. With `generator_names`, elements are named by their
  /// shortest word, otherwise by cycle notation.
  static FiniteGroup from_permutations(std::size_t degree,
                                       const std::vector<std::vector<std::uint32_t>>& generators,
                                       const std::vector<std::string>& generator_names = {},
                                       std::string label = {});

  std::size_t order() const { return d_->order; }
  Element mul(Element a, Element b) const { return d_->table[std::size_t(a) * d_->order + b]; }
  Element inv(Element a) const { return d_->inverse[a]; }
  /// [a,b] = a^-1 b^-1 a b.
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  Element power(Element a, long long n) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  const std::string& name(Element a) const { return d_->names[a]; }
  std::optional<Element> find(std::string_view name) const;
  const std::string& label() const { return d_->label; }
  std::span<const Element> table() const { return d_->table; }

  /// Same group, new display label.
  FiniteGroup relabeled(std::string label) const;

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> names;
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A subgroup of a parent group, as a sorted element set.
class Subgroup {
 public:
  static Subgroup generated(const FiniteGroup& g, std::span<const Element> generators);
  /// Throws InvalidArgument unless `elements` is closed under product and inverse.
  static Subgroup from_elements(const FiniteGroup& g, std::vector<Element> elements);
  static Subgroup trivial(const FiniteGroup& g) { return generated(g, {}); }
  static Subgroup whole(const FiniteGroup& g);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element a) const { return a < mask_.size() && mask_[a]; }
  bool is_abelian() const;
  bool is_normal() const;
  bool is_central() const;

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  Subgroup(FiniteGroup parent, std::vector<Element> elements);
  FiniteGroup parent_;
  std::vector<Element> elements_;
  std::vector<bool> mask_;
};

/// Fixed-width list of tuples stored contiguously.
class TupleList {
 public:
  explicit TupleList(std::size_t width = 0) : width_(width) {}
  std::size_t width() const { return width_; }
  std::size_t size() const { return width_ == 0 ? empty_count_ : data_.size() / width_; }
  bool empty() const { return size() == 0; }
  std::span<const Element> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  void push_back(std::span<const Element> t);
  Tuple tuple(std::size_t i) const {
    auto s = (*this)[i];
    return {s.begin(), s.end()};
  }
  /// Index of `t` assuming the list is sorted lexicographically.
  std::optional<std::size_t> find_sorted(std::span<const Element> t) const;
  void sort_lexicographic();
  const std::vector<Element>& data() const { return data_; }

 private:
  std::size_t width_;
  std::size_t empty_count_ = 0;  // zero-width tuples carry no data
  std::vector<Element> data_;
};

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Element a);
/// Subgroup generated by all [h,k] with h in H, k in K.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Element> map;  // parent element -> quotient element
};
/// G/N for normal N. Coset of the smallest parent index represents each class.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& normal);

/// Invariant factors of a finite abelian group, read off from counts of
/// elements killed by prime powers. Throws InvalidArgument if not abelian.
AbelianGroupInvariants abelian_invariants(const FiniteGroup& a);
/// Invariant factors of G/[G,G].
AbelianGroupInvariants abelianization(const FiniteGroup& g);

/// All n-tuples of pairwise commuting elements, in lexicographic order.
/// C_0 is the single empty tuple. Throws BudgetExceeded when |G|^n > budget.
TupleList commuting_tuples(const FiniteGroup& g, std::size_t n, std::uint64_t budget = kDefaultBudget);
/// All n-tuples whose pairwise commutators lie in the central subgroup K.
TupleList almost_commuting_tuples(const FiniteGroup& g, const Subgroup& k, std::size_t n,
                                  std::uint64_t budget = kDefaultBudget);

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k);

struct CentralProduct {
  FiniteGroup group;
  /// Index h*|K| + k of H x K -> element of the central product.
  std::vector<Element> quotient_map;
  std::size_t k_order = 0;
  Element project(Element h, Element k) const { return quotient_map[std::size_t(h) * k_order + k]; }
};

/// H x_Z K: the quotient of H x K by {(z, phi(z)^-1)}. `identification`
/// lists every pair (z, phi(z)) of the isomorphism Z_H -> Z_K between central
/// subgroups. Throws InvalidArgument for non-central or non-isomorphic data.
CentralProduct central_product(const FiniteGroup& h, const FiniteGroup& k,
                               const std::vector<std::pair<Element, Element>>& identification);

struct PullbackCheck {
  bool ok = true;
  std::size_t source_count = 0;  // |H^n x C_n(K)|
  std::size_t target_count = 0;  // |C_n(H x_Z K)|
  std::size_t fiber_size = 0;    // expected |Z|^n
  std::string failure;
};

/// Checks that (h, k) -> project(h_i, k_i) maps H^n x C_n(K) onto
/// C_n(H x_Z K) with every fiber of size |Z|^n. H must be abelian.
PullbackCheck check_central_product_pullback(const FiniteGroup& h, const FiniteGroup& k, const CentralProduct& cp,
                                             std::size_t z_order, std::size_t n,
                                             std::uint64_t budget = kDefaultBudget);

/// First triple (lexicographic) with [g2,g3] = c1, [g1,g3] = c2, [g1,g2] = 1.
std::optional<Tuple> realize_triple(const FiniteGroup& g, const Subgroup& k, Element c1, Element c2,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace commtop
