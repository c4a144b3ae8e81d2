#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heis/cocycle.hpp"
#include "heis/finite_group.hpp"
#include "heis/heisenberg.hpp"

namespace heis {

// A finite group presented as a central extension: a designated central
// subgroup, abelian coordinates for the quotient, and a deterministic
// section picking the lowest group index in each coset (the identity for
// the trivial coset).
struct CentralExtensionData {
  FiniteGroup g;
  std::vector<std::uint32_t> central;  // sorted element indices, subgroup of Z(G)
  FinAbGroup a;                        // coordinates for the quotient
  CoeffContext context;                // finite coefficients matching central
  std::vector<std::uint32_t> coset_of; // group index -> element index in a
  std::vector<std::uint32_t> section;  // element index in a -> group index
  std::vector<CoeffVec> central_value; // position in central -> coefficient value

  // Coefficient value of a central element; rejects anything outside.
  const CoeffVec& value_of(std::uint32_t g_index) const;
  // Inverse of value_of.
  std::uint32_t central_element(const CoeffVec& v) const;
};

struct ExtractedCocycle {
  CentralExtensionData ext;
  Cocycle cocycle;
};

// Reads off the extension data and the section's defect cocycle.  The
// subset must be a subgroup lying inside the center with abelian
// quotient; the coefficient context comes from the subgroup's own cyclic
// decomposition, one coordinate 1/m_j per factor.
ExtractedCocycle extract_cocycle(const FiniteGroup& g,
                                 std::vector<std::uint32_t> central);

// A class-2 group rebuilt as a twisted product: coefficients pushed into
// their divisible closure, the cocycle replaced by its bimultiplicative
// representative beta, and an explicit isomorphism onto the beta model.
struct HeisenbergPresentation {
  CentralExtensionData ext;
  Cocycle cocycle;            // extracted, finite coefficients
  CoeffEmbedding embedding;   // finite -> divisible closure
  Pairing beta;               // bimultiplicative representative, divisible
  CochainFunction shift;      // carries the beta model onto the cocycle model
  HeisenbergGroup model;      // twisted product for beta
  std::vector<HElem> iso;     // group index -> model element
  // Whether the extension is already equivalent to the beta model over
  // the original finite coefficients, with a witnessing cochain when so.
  bool refinable_in_original = false;
  std::optional<CochainFunction> original_shift;
  CommutatorPairing quotient_pairing;  // commutator map on Z(G) cosets
};

HeisenbergPresentation recognize(const FiniteGroup& g,
                                 std::vector<std::uint32_t> central);

// Checks on every pair x, y that the commutator of section lifts,
// read through the coefficient embedding, equals the antisymmetrization
// of beta.
bool verify_omega_factorization(const HeisenbergPresentation& p);

}  // namespace heis
