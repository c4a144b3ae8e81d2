#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heis/cocycle.hpp"
#include "heis/heisenberg.hpp"
#include "heis/scan.hpp"

namespace heis {

// Invertible monomial matrix of dimension d: basis vector e_a goes to
// weight[a] * e_{perm[a]}, where the weight is a root of unity written
// additively as a CoeffVec exponent.  All entries are exact; the matrices
// under composition form a group.
class MonomialMatrix {
public:
  MonomialMatrix(std::vector<std::uint32_t> perm, std::vector<CoeffVec> weight);

  // Trivial permutation, constant weight t.
  static MonomialMatrix scalar(std::uint32_t d, const CoeffVec& t);

  std::uint32_t dimension() const { return static_cast<std::uint32_t>(perm_.size()); }
  const std::vector<std::uint32_t>& perm() const { return perm_; }
  const std::vector<CoeffVec>& weights() const { return weight_; }

  // this after o: e_a -> (w_o(a) + w_this(perm_o(a))) e_{perm_this(perm_o(a))}.
  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;

  bool is_scalar() const;

  bool operator==(const MonomialMatrix& o) const = default;

private:
  std::vector<std::uint32_t> perm_;
  std::vector<CoeffVec> weight_;
};

// Family of monomial matrices indexed by the elements of the extension H
// (linear flavor) or of its base A (projective flavor), together with the
// cocycle that twists them.  Construction checks only the shape; whether
// the flavor's multiplication law actually holds is answered by
// law_violation, and the building operations below verify it themselves.
class RepTable {
public:
  enum class Flavor { linear, projective };

  RepTable(Flavor flavor, HeisenbergGroup h, std::vector<MonomialMatrix> rho);

  Flavor flavor() const { return flavor_; }
  const HeisenbergGroup& extension() const { return h_; }
  const Cocycle& cocycle() const { return h_.cocycle(); }
  std::uint64_t size() const { return rho_.size(); }

  const MonomialMatrix& operator[](std::uint64_t idx) const { return rho_[idx]; }
  // Linear flavor lookup.
  const MonomialMatrix& at_element(const HElem& g) const;
  // Projective flavor lookup.
  const MonomialMatrix& at_point(const GroupElement& x) const;

  // First pair (i, j) in row-major index order violating the flavor's
  // law: rho(g_i) rho(g_j) = rho(g_i g_j) for linear tables, and
  // rho(x_i) rho(x_j) = c(x_i, x_j) rho(x_i + x_j) for projective ones.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> law_violation(
      scan::Mode mode = scan::Mode::parallel) const;

  bool operator==(const RepTable& o) const;

private:
  Flavor flavor_;
  HeisenbergGroup h_;
  std::vector<MonomialMatrix> rho_;
};

// Linear representation of H on the coordinate space of its base A:
// (t, x) sends index a to the index of x + a with weight t + c(x, a).
// Requires a finite coefficient context.  The homomorphism property is a
// restatement of the cocycle identity; it is asserted on all pairs
// whenever |H| <= 256.  In particular (t, 0) acts as the scalar t.
RepTable induced_rep(const HeisenbergGroup& h,
                     scan::Mode mode = scan::Mode::parallel);

// Restriction of a linear table to the base: sigma'(x) = sigma(0, x).
// Requires sigma(t, 0) = scalar t for every t (the violating t is named
// otherwise), and verifies the projective law of the result on all
// pairs, reporting the first failing pair.
RepTable projectivize(const RepTable& sigma,
                      scan::Mode mode = scan::Mode::parallel);

// Extension of a projective table to the whole group:
// rho~(t, x) = scalar(t) rho(x).  The projective law of the input is
// verified first (the witness pair is named otherwise), and the result
// is checked to be a homomorphism on all pairs.  Inverse to
// projectivize: both roundtrips are identities.
RepTable linearize(const RepTable& rho,
                   scan::Mode mode = scan::Mode::parallel);

// When every rho(x) is a scalar, the projective law collapses to a
// coboundary equation, and negating the scalar exponents yields a
// quadratic refinement of the attached cocycle: lambda with
// morphism_defect(lambda) = c.  Returns nothing when some rho(x) is not
// scalar or the extracted function fails that equation.
std::optional<CochainFunction> scalar_test(const RepTable& rho);

}  // namespace heis
