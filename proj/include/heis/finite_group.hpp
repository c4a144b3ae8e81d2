#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heis/fab.hpp"
#include "heis/scan.hpp"

namespace heis {

// A finite group given by its multiplication table.  Construction checks
// closure, the Latin square property, the identity, and two-sided
// inverses; associativity is scanned exhaustively (n^3 triples) for
// n <= 512 and taken on trust above that.
class FiniteGroup {
public:
  // table is row-major n x n, table[i*n + j] = index of the product of
  // element i with element j.
  FiniteGroup(std::size_t identity, std::vector<std::uint32_t> table);

  std::size_t order() const { return n_; }
  std::uint32_t identity() const { return id_; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    return mul_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
  const std::vector<std::uint32_t>& table() const { return mul_; }

  // g h g^-1 h^-1
  std::uint32_t commutator(std::uint32_t g, std::uint32_t h) const {
    return mul(mul(mul(g, h), inv_[g]), inv_[h]);
  }

  std::size_t element_order(std::uint32_t i) const;
  bool is_abelian() const;

private:
  std::size_t n_;
  std::uint32_t id_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

// Sorted element indices commuting with everything.
std::vector<std::uint32_t> center(const FiniteGroup& g);

// Smallest subgroup containing the seeds, sorted.
std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& seeds);

// Subgroup generated by all commutators, sorted.
std::vector<std::uint32_t> commutator_subgroup(const FiniteGroup& g);

// Whether [G,G] lies inside Z(G).
bool is_class_at_most_2(const FiniteGroup& g);

// Length of the lower central series until it hits the trivial subgroup:
// 0 for the trivial group, 1 for abelian, 2 when every commutator is
// central, and so on.  nullopt when the series stabilizes above the
// trivial subgroup (the group is not nilpotent).
std::optional<int> lower_central_class(const FiniteGroup& g);

// The commutator map on Z(G)-cosets, with every property it needs to be
// an alternating nondegenerate bimultiplicative pairing into [G,G]
// checked exhaustively.  Well-definedness, alternation and nondegeneracy
// hold for every group; bimultiplicativity holds exactly when
// [G,G] <= Z(G), and its first failing triple is kept as a witness.
struct CommutatorPairing {
  std::vector<std::uint32_t> center;       // sorted
  std::vector<std::uint32_t> commutators;  // [G,G], sorted
  std::vector<std::uint32_t> coset_rep;    // per element: lowest index in its coset
  std::vector<std::uint32_t> reps;         // distinct coset reps, sorted
  std::vector<std::uint32_t> table;        // reps x reps -> commutator, row-major

  bool well_defined = false;
  bool alternating = false;
  bool bimultiplicative = false;
  bool nondegenerate = false;
  // Rep indices (i, j, k) with table value of (reps[i]*reps[j], reps[k])
  // differing from the product of the parts.
  std::optional<std::array<std::uint32_t, 3>> bimult_witness;

  bool ok() const {
    return well_defined && alternating && bimultiplicative && nondegenerate;
  }

  std::size_t quotient_order() const { return reps.size(); }
  std::uint32_t value(std::size_t i, std::size_t j) const {
    return table[i * reps.size() + j];
  }
};

CommutatorPairing commutator_pairing_report(const FiniteGroup& g);

// Strict form: throws std::domain_error when the report is not ok, i.e.
// when [G,G] is not contained in Z(G).
CommutatorPairing commutator_pairing(const FiniteGroup& g);

// Explicit decomposition of an abelian table group: A lists cyclic
// factors in increasing order and to_group maps each enumerated element
// of A to its group index.  The map is verified to be a bijective
// homomorphism before it is returned.
struct AbelianStructure {
  FinAbGroup a;
  std::vector<std::uint32_t> to_group;

  std::uint32_t image(const GroupElement& x) const {
    return to_group[a.index_of(x)];
  }
};

AbelianStructure abelian_structure(const FiniteGroup& b);

// Table fixtures.
FiniteGroup cyclic_group(long long n);
FiniteGroup klein_group();
FiniteGroup dihedral_group(long long n);  // order 2n
FiniteGroup quaternion8();
FiniteGroup unitriangular3(long long m);  // order m^3
FiniteGroup symmetric3();

// Dispatch by name: "cyclic(6)", "klein", "dihedral(4)", "quaternion8",
// "unitriangular(3,Z/2)", "symmetric3".
FiniteGroup builtin_group(const std::string& name);

}  // namespace heis
