#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

// Element of Q/Z stored as a reduced fraction num/den with 0 <= num < den
// and gcd(num, den) = 1.  The zero class is 0/1.  All arithmetic is exact;
// there is no floating point anywhere in this library.
class QZ {
public:
  QZ() : num_(0), den_(1) {}

  // Canonicalizes an arbitrary integer fraction.  den must be positive.
  QZ(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  // Additive order in Q/Z; equals the reduced denominator.
  long long order() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  QZ operator+(const QZ& o) const;
  QZ operator-() const;
  QZ operator-(const QZ& o) const { return *this + (-o); }

  // Integer scalar multiple k * (num/den) in Q/Z.
  QZ times(long long k) const;

  bool operator==(const QZ& o) const = default;

  // Total order used only to make sorted output deterministic.
  bool operator<(const QZ& o) const;

  std::string str() const;

private:
  long long num_;
  long long den_;
};

// Canonical solution of n*b = a in Q/Z: the solution with the smallest
// numerator when written over denominator n*den(a).  n must be positive.
QZ qz_divide(const QZ& a, long long n);

// Smallest solution of n*b = a inside the cyclic subgroup (1/m)Z/Z, i.e.
// with denominator dividing m.  Requires den(a) | m.  Throws
// std::domain_error when no solution exists in that subgroup.
QZ qz_divide_mod(const QZ& a, long long n, long long m);
bool qz_divisible_mod(const QZ& a, long long n, long long m);

// Value of a coefficient group element: one Q/Z coordinate per factor of
// the ambient product group.  Plain aggregate; the coefficient context
// (see CoeffContext) knows which denominators are admissible.
struct CoeffVec {
  std::vector<QZ> coords;

  bool operator==(const CoeffVec& o) const = default;
  bool operator<(const CoeffVec& o) const { return coords < o.coords; }
  bool is_zero() const;

  // lcm of coordinate orders: the additive order in the product group.
  long long order() const;
};

CoeffVec operator+(const CoeffVec& a, const CoeffVec& b);
CoeffVec operator-(const CoeffVec& a);
CoeffVec operator-(const CoeffVec& a, const CoeffVec& b);
CoeffVec cv_times(const CoeffVec& a, long long k);

// Coefficient group C: either the finite product Z/m_1 x ... x Z/m_k
// realized inside (Q/Z)^k as (1/m_1)Z/Z x ... x (1/m_k)Z/Z, or the full
// divisible group (Q/Z)^k.  Values of either kind are CoeffVecs; a finite
// context additionally constrains coordinate denominators.
class CoeffContext {
public:
  static CoeffContext divisible(std::size_t rank);
  static CoeffContext finite(std::vector<long long> moduli);

  std::size_t rank() const { return rank_; }
  bool is_divisible() const { return divisible_; }

  // Finite contexts only.
  const std::vector<long long>& moduli() const;

  // Order of the finite coefficient group (product of moduli).
  unsigned long long size() const;

  // Whether v lies in the context: rank matches and, for finite contexts,
  // every coordinate denominator divides the corresponding modulus.
  bool contains(const CoeffVec& v) const;

  // Throws std::invalid_argument with a description when !contains(v).
  void require(const CoeffVec& v, const char* what) const;

  CoeffVec zero() const;

  // Generator of the j-th cyclic factor (finite contexts): 1/m_j in
  // coordinate j.
  CoeffVec generator(std::size_t j) const;

  // Componentwise division by n > 0: canonical n-th part for divisible
  // contexts, smallest in-context solution for finite ones.  Throws
  // std::domain_error when some coordinate has no in-context solution.
  CoeffVec divide(const CoeffVec& v, long long n) const;
  bool divisible_by(const CoeffVec& v, long long n) const;

  // |C[m]|, the number of m-torsion values: prod_j gcd(m, m_j) for finite
  // contexts and m^k for divisible ones.
  unsigned long long torsion_count(long long m) const;

  // All m-torsion values, lexicographically by coordinate digits.
  std::vector<CoeffVec> torsion_values(long long m) const;

  // Finite contexts: full value list, value <-> index, both lexicographic
  // with the last coordinate varying fastest.
  std::vector<CoeffVec> values() const;
  unsigned long long index_of(const CoeffVec& v) const;
  CoeffVec value_at(unsigned long long idx) const;

  bool operator==(const CoeffContext& o) const = default;

private:
  CoeffContext(bool divisible, std::size_t rank, std::vector<long long> moduli);

  bool divisible_;
  std::size_t rank_;
  std::vector<long long> moduli_;
};

}  // namespace heis
