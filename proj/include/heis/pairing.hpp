#pragma once

#include <cstddef>
#include <vector>

#include "heis/fab.hpp"
#include "heis/qz.hpp"

namespace heis {

// Bimultiplicative pairing beta: A x A -> C, determined by the r x r
// matrix of generator values b_ij = beta(e_i, e_j).  Well-definedness
// forces order(b_ij) | gcd(n_i, n_j), which construction checks.
class Pairing {
public:
  Pairing(FinAbGroup a, CoeffContext ctx, std::vector<CoeffVec> entries);

  // Zero pairing.
  static Pairing zero(FinAbGroup a, CoeffContext ctx);

  const FinAbGroup& group() const { return a_; }
  const CoeffContext& context() const { return ctx_; }

  const CoeffVec& entry(std::size_t i, std::size_t j) const;

  // beta(x, y) = sum_{i,j} x_i y_j b_ij.
  CoeffVec eval(const GroupElement& x, const GroupElement& y) const;

  bool is_symmetric() const;
  bool is_alternating() const;

  bool operator==(const Pairing& o) const;

private:
  FinAbGroup a_;
  CoeffContext ctx_;
  std::vector<CoeffVec> b_;  // row-major r x r
};

Pairing pairing_add(const Pairing& p, const Pairing& q);
Pairing pairing_neg(const Pairing& p);
Pairing pairing_sub(const Pairing& p, const Pairing& q);

// Alternating bimultiplicative pairing: beta(x, x) = 0 for all x, which
// for a matrix means zero diagonal and b_ji = -b_ij.  The wrapper only
// exists to mark that the invariant was checked.
class SymplecticPairing {
public:
  // Validates; throws std::invalid_argument when p is not alternating.
  static SymplecticPairing from(Pairing p);

  const Pairing& pairing() const { return p_; }
  const FinAbGroup& group() const { return p_.group(); }
  const CoeffContext& context() const { return p_.context(); }
  CoeffVec eval(const GroupElement& x, const GroupElement& y) const {
    return p_.eval(x, y);
  }

  bool operator==(const SymplecticPairing& o) const { return p_ == o.p_; }

private:
  explicit SymplecticPairing(Pairing p) : p_(std::move(p)) {}
  Pairing p_;
};

// omega(x, y) = beta(x, y) - beta(y, x); alternating by construction.
SymplecticPairing omega_of(const Pairing& p);

// {x in A : beta(x, -) = 0}, decided on generators, listed in
// enumeration order.
std::vector<GroupElement> adjoint_kernel(const Pairing& p);

bool is_nondegenerate(const Pairing& p);

// |Hom(A, C)|: prod_{i,j} gcd(n_i, m_j) for finite contexts, |A|^k for
// divisible ones.
unsigned long long hom_count(const FinAbGroup& a, const CoeffContext& ctx);

// Nondegenerate and the adjoint A -> Hom(A, C) is onto, i.e. the image
// size |A| / |kernel| equals |Hom(A, C)|.
bool is_regular(const Pairing& p);

// The strictly upper triangular pairing b with omega_of(b) = w, using the
// standard generators.  Postcondition checked.
Pairing beta_from_alternating(const SymplecticPairing& w);

}  // namespace heis
