#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heis/cocycle.hpp"
#include "heis/finite_group.hpp"

namespace heis {

// Element (t, x) of the extension C x A.
struct HElem {
  CoeffVec t;
  GroupElement x;

  bool operator==(const HElem& o) const { return t == o.t && x == o.x; }
  bool operator<(const HElem& o) const {
    if (!(t == o.t)) return t < o.t;
    return x < o.x;
  }
};

// The central extension of A by C with multiplication twisted by a
// cocycle: (t, x)(t', y) = (t + t' + c(x, y), x + y).  Table cocycles are
// re-verified on construction; the alternating pairing omega is computed
// once and cached.
class HeisenbergGroup {
public:
  explicit HeisenbergGroup(Cocycle c);

  const FinAbGroup& group() const { return c_.group(); }
  const CoeffContext& context() const { return c_.context(); }
  const Cocycle& cocycle() const { return c_; }
  const SymplecticPairing& omega() const { return omega_; }

  bool finite() const { return !context().is_divisible(); }
  // Finite contexts only.
  std::uint64_t order() const;

  HElem identity() const;
  // Validates both components.
  HElem element(const CoeffVec& t, const GroupElement& x) const;

  HElem mul(const HElem& g, const HElem& h) const;
  HElem inv(const HElem& g) const;
  HElem pow(const HElem& g, long long k) const;
  // g h g^-1 h^-1; asserted equal to (omega(x_g, x_h), 0).
  HElem commutator(const HElem& g, const HElem& h) const;
  std::size_t element_order(const HElem& g) const;

  // Finite contexts: elements in lexicographic (t, x) order, index
  // = t_index * |A| + x_index.
  std::vector<HElem> elements() const;
  std::uint64_t index_of(const HElem& g) const;
  HElem at(std::uint64_t i) const;

private:
  Cocycle c_;
  SymplecticPairing omega_;
};

// Center = C x radical where the radical is the kernel of the adjoint of
// omega.  For finite contexts the elements are enumerated, and for
// |H| <= 512 the description is asserted against the brute-force center.
struct CenterInfo {
  std::vector<GroupElement> radical;  // enumeration order
  bool whole_group = false;
  std::optional<std::vector<HElem>> elements;  // finite contexts only
};

CenterInfo center(const HeisenbergGroup& h);

// Subgroup generated by all commutators: (closure of the omega values
// under addition) x {0}, in ascending value order.
std::vector<HElem> commutator_subgroup(const HeisenbergGroup& h);

// 0 for the trivial group, 1 when the law is commutative, 2 otherwise.
int nilpotency_class(const HeisenbergGroup& h);

// Section A -> H respecting the projection: s(x) = (g(x), x).
struct Section {
  CochainFunction g;

  HElem operator()(const GroupElement& x) const { return HElem{g(x), x}; }
};

Section standard_section(const HeisenbergGroup& h);

// The multiplication defect s(x) s(y) s(x+y)^-1, which is central for
// every section; its t-part, tabulated, is a cocycle.  For the standard
// section it reproduces the stored cocycle exactly; shifting the section
// by a cochain g subtracts the coboundary of g.
Cocycle defect_of_section(const HeisenbergGroup& h, const Section& s);

// Equivalence (t, x) -> (t + f(x), x) between extensions of the same A
// by the same C.  Requires morphism_defect(f) = c_to - c_from (checked
// entrywise; the first failing pair is reported).  The homomorphism
// property, injectivity, and the fixed C and A sides are then verified
// over a finite snapshot: every (t, x) with t drawn from the subgroup
// generated by all values of the two cocycles and f.
struct Equivalence {
  CochainFunction f;

  HElem apply(const HElem& g) const { return HElem{g.t + f(g.x), g.x}; }
  HElem unapply(const HElem& g) const { return HElem{g.t - f(g.x), g.x}; }
};

Equivalence equivalence_iso(const HeisenbergGroup& from,
                            const HeisenbergGroup& to,
                            const CochainFunction& f);

// Injective coordinatewise map from a finite coefficient group into a
// divisible one: generator j of Z/m_j goes to images[j].
struct CoeffEmbedding {
  CoeffContext from;
  CoeffContext to;
  std::vector<QZ> images;

  CoeffEmbedding(CoeffContext from_, std::vector<QZ> images_);

  // 1/m_j per coordinate, so every value is carried to itself.
  static CoeffEmbedding canonical(const CoeffContext& from_);

  bool injective() const;
  CoeffVec apply(const CoeffVec& v) const;
};

// Same A, cocycle values carried through the embedding.
HeisenbergGroup pushforward(const HeisenbergGroup& h, const CoeffEmbedding& e);

// Multiplication table over the canonical element order; |H| <= 4096.
FiniteGroup cayley_table(const HeisenbergGroup& h);

}  // namespace heis
