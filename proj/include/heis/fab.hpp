#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heis/qz.hpp"

namespace heis {

// Element of a finite abelian group, written additively: one coordinate
// per cyclic factor, canonically reduced to 0 <= x_i < n_i.
struct GroupElement {
  std::vector<long long> x;

  bool operator==(const GroupElement& o) const = default;
  bool operator<(const GroupElement& o) const { return x < o.x; }
  bool is_zero() const;
};

// Finite abelian group A = Z/n_1 x ... x Z/n_r in a fixed factorization.
// Factors with n_i = 1 contribute nothing and are stripped at
// construction, so the trivial group has rank 0.
class FinAbGroup {
public:
  explicit FinAbGroup(std::vector<long long> moduli);

  std::size_t rank() const { return moduli_.size(); }
  const std::vector<long long>& moduli() const { return moduli_; }
  unsigned long long order() const { return order_; }

  // Validates coordinate count and ranges; out-of-range coordinates are an
  // error here, use reduce() to canonicalize arbitrary integers.
  GroupElement element(std::vector<long long> coords) const;
  GroupElement reduce(std::vector<long long> coords) const;

  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const GroupElement& a, long long k) const;

  long long element_order(const GroupElement& a) const;

  // Standard generators e_1, ..., e_r.
  std::vector<GroupElement> generators() const;
  GroupElement generator(std::size_t i) const;

  // Lexicographic enumeration (last coordinate fastest) and the matching
  // element <-> index maps.
  std::vector<GroupElement> elements() const;
  unsigned long long index_of(const GroupElement& a) const;
  GroupElement at(unsigned long long idx) const;

  bool operator==(const FinAbGroup& o) const { return moduli_ == o.moduli_; }

private:
  void check(const GroupElement& a, const char* what) const;

  std::vector<long long> moduli_;
  unsigned long long order_;
};

}  // namespace heis
