#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heis/fab.hpp"
#include "heis/pairing.hpp"
#include "heis/qz.hpp"
#include "heis/scan.hpp"

namespace heis {

// Normalized 2-cocycle c: A x A -> C.  Two storage forms: a
// bimultiplicative pairing (always a cocycle), or a dense value table
// indexed by element pairs, which need not satisfy the cocycle laws until
// verify_cocycle says so.  Values are immutable once built.
class Cocycle {
public:
  static Cocycle bimult(Pairing p);
  static Cocycle table(FinAbGroup a, CoeffContext ctx, std::vector<CoeffVec> values);

  static Cocycle zero(const FinAbGroup& a, const CoeffContext& ctx);

  const FinAbGroup& group() const { return a_; }
  const CoeffContext& context() const { return ctx_; }
  bool is_bimult() const { return form_.has_value(); }
  const Pairing& form() const;

  CoeffVec eval(const GroupElement& x, const GroupElement& y) const;
  const CoeffVec& eval_idx(std::uint64_t i, std::uint64_t j) const;

  // Dense |A|^2 table of values, row index first.  Bimultiplicative
  // cocycles on groups past the materialization cap skip the table and
  // evaluate through the pairing; dense() then throws length_error.
  const std::vector<CoeffVec>& dense() const;

  bool operator==(const Cocycle& o) const;

private:
  Cocycle(FinAbGroup a, CoeffContext ctx, std::optional<Pairing> form,
          std::vector<CoeffVec> values);

  FinAbGroup a_;
  CoeffContext ctx_;
  std::optional<Pairing> form_;
  std::vector<CoeffVec> table_;  // empty only for bimult forms past the cap
};

// Outcome of verify_cocycle.  When not ok, the witness names the first
// violated law in scan order: a normalization failure c(x,0) != 0 or
// c(0,x) != 0, or the first triple (x,y,z) with
// c(x,y) + c(x+y,z) != c(y,z) + c(x,y+z).
struct CocycleCheck {
  enum class Failure { none, normalization, identity };
  Failure failure = Failure::none;
  GroupElement x, y, z;

  bool ok() const { return failure == Failure::none; }
};

CocycleCheck verify_cocycle(const Cocycle& c,
                            scan::Mode mode = scan::Mode::parallel);

Cocycle cocycle_add(const Cocycle& c, const Cocycle& d);
Cocycle cocycle_neg(const Cocycle& c);
Cocycle cocycle_sub(const Cocycle& c, const Cocycle& d);

bool is_symmetric(const Cocycle& c);

// Normalized 1-cochain f: A -> C with f(0) = 0, dense by element index.
struct CochainFunction {
  FinAbGroup a;
  CoeffContext ctx;
  std::vector<CoeffVec> values;

  CochainFunction(FinAbGroup a_, CoeffContext ctx_, std::vector<CoeffVec> values_);

  const CoeffVec& operator()(const GroupElement& x) const {
    return values[a.index_of(x)];
  }

  bool operator==(const CochainFunction& o) const;
};

// Coboundary of f: (x, y) -> f(x+y) - f(x) - f(y).  Always a symmetric
// cocycle.
Cocycle morphism_defect(const CochainFunction& f);

// The alternating pairing omega_c(x, y) = c(x, y) - c(y, x), computed on
// generators.  For table form cocycles the bimultiplicative extension is
// checked against the whole table; a mismatch means the table was not a
// cocycle and raises std::logic_error.
SymplecticPairing omega_c(const Cocycle& c);

// Quadratic refinement: f with morphism_defect(f) = c for symmetric c.
// One telescoped division per cyclic factor decides existence; over a
// finite coefficient group an unsolvable division raises
// std::domain_error ("no refinement in this coefficient group").  The
// returned f is re-verified exhaustively before being handed out.
CochainFunction quadratic_refinement(const Cocycle& c);

// Exhaustive oracle for quadratic_refinement: scan every f with values in
// C[torsion], torsion dividing denom_bound, and return the first (in
// candidate order) with morphism_defect(f) = c.  Refuses with
// std::length_error when the search space exceeds 10^7 candidates.
std::optional<CochainFunction> brute_refinement(
    const Cocycle& c, long long denom_bound,
    scan::Mode mode = scan::Mode::parallel);

// How two cocycles compare as extension classes.  Over a divisible
// context omega equality decides, with a refinement of c - c' as the
// certificate.  Over a finite context omega equality stays necessary
// while sufficiency is decided separately by brute_refinement; both
// verdicts are reported.
struct CohomologyVerdict {
  bool omega_equal = false;
  // Generator pair separating the classes when omega differs.
  std::optional<std::pair<GroupElement, GroupElement>> separator;
  // Refinement of c - c' when one was produced.
  std::optional<CochainFunction> certificate;
  // Finite contexts only: whether c - c' has a refinement inside C.
  std::optional<bool> refinable_in_context;

  bool equivalent() const {
    return omega_equal && (!refinable_in_context || *refinable_in_context);
  }
};

CohomologyVerdict cohomologous(const Cocycle& c, const Cocycle& cprime);

// Bimultiplicative representative of the class of c: the strictly upper
// triangular beta with omega_of(beta) = omega_c(c), plus the certificate
// f with morphism_defect(f) = c - beta.  Over a finite context the
// certificate may fail to exist (std::domain_error propagates).
struct BimultRepresentative {
  Pairing beta;
  CochainFunction f;
};

BimultRepresentative bimult_representative(const Cocycle& c);

// |H^2(A, C)| = prod_{i<j} |C[gcd(n_i, n_j)]|.
unsigned long long h2_order(const FinAbGroup& a, const CoeffContext& ctx);

// All normalized table cocycles over a finite coefficient group, in
// ascending table order.  The candidate space has size
// |C|^((|A|-1)^2); past 10^7 the scan refuses with std::length_error
// naming the estimate.
std::vector<Cocycle> enumerate_cocycles(const FinAbGroup& a,
                                        const CoeffContext& ctx,
                                        scan::Mode mode = scan::Mode::parallel);

}  // namespace heis
