#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heis/recognize.hpp"

using namespace heis;

namespace {

Pairing make_pairing(const FinAbGroup& a, const CoeffContext& ctx,
                     std::vector<CoeffVec> entries) {
  return Pairing(a, ctx, std::move(entries));
}

HeisenbergGroup d4_model() {
  FinAbGroup a({2, 2});
  CoeffContext f2 = CoeffContext::finite({2});
  return HeisenbergGroup(Cocycle::bimult(make_pairing(
      a, f2,
      {CoeffVec{{QZ()}}, CoeffVec{{QZ(1, 2)}}, CoeffVec{{QZ()}}, CoeffVec{{QZ()}}})));
}

HeisenbergGroup q8_model() {
  FinAbGroup a({2, 2});
  CoeffContext f2 = CoeffContext::finite({2});
  return HeisenbergGroup(Cocycle::bimult(make_pairing(
      a, f2,
      {CoeffVec{{QZ(1, 2)}}, CoeffVec{{QZ(1, 2)}}, CoeffVec{{QZ()}},
       CoeffVec{{QZ(1, 2)}}})));
}

HeisenbergGroup z33_model() {
  FinAbGroup a({3, 3});
  CoeffContext f3 = CoeffContext::finite({3});
  return HeisenbergGroup(Cocycle::bimult(make_pairing(
      a, f3,
      {CoeffVec{{QZ()}}, CoeffVec{{QZ(1, 3)}}, CoeffVec{{QZ()}}, CoeffVec{{QZ()}}})));
}

HeisenbergGroup degenerate_model() {
  FinAbGroup a({2, 4});
  CoeffContext f4 = CoeffContext::finite({4});
  return HeisenbergGroup(Cocycle::bimult(make_pairing(
      a, f4,
      {CoeffVec{{QZ()}}, CoeffVec{{QZ(1, 2)}}, CoeffVec{{QZ()}}, CoeffVec{{QZ()}}})));
}

const CoeffVec kHalf{{QZ(1, 2)}};
const CoeffVec kThird{{QZ(1, 3)}};

}  // namespace

TEST_CASE("extraction from the dihedral group") {
  FiniteGroup d4 = dihedral_group(4);
  ExtractedCocycle exc = extract_cocycle(d4, {0, 2});
  const FinAbGroup& a = exc.ext.a;

  CHECK(a == FinAbGroup({2, 2}));
  CHECK(exc.ext.context.moduli() == std::vector<long long>{2});
  CHECK(exc.ext.central == std::vector<std::uint32_t>{0, 2});

  // lowest-index section: identity, r, s, rs
  CHECK(exc.ext.section == std::vector<std::uint32_t>{0, 1, 4, 5});
  for (std::uint32_t i = 0; i < a.order(); ++i)
    CHECK(exc.ext.coset_of[exc.ext.section[i]] == i);
  // each fiber has |C| elements
  std::vector<int> fiber(4, 0);
  for (std::uint32_t h = 0; h < 8; ++h) ++fiber[exc.ext.coset_of[h]];
  for (int f : fiber) CHECK(f == 2);

  GroupElement e1 = a.element({1, 0}), e2 = a.element({0, 1});
  // the reflection square is trivial, the rotation square is central
  CHECK(exc.cocycle.eval(e1, e1).is_zero());
  CHECK(exc.cocycle.eval(e2, e2) == kHalf);
  SymplecticPairing w = omega_c(exc.cocycle);
  CHECK(w.pairing().eval(e1, e2) == kHalf);
  CHECK(is_nondegenerate(w.pairing()));

  CHECK(exc.ext.value_of(2) == kHalf);
  CHECK(exc.ext.value_of(0).is_zero());
  CHECK(exc.ext.central_element(kHalf) == 2);
  CHECK_THROWS_AS(exc.ext.value_of(1), std::invalid_argument);
}

TEST_CASE("extraction rejects bad subsets") {
  FiniteGroup d4 = dihedral_group(4);
  CHECK_THROWS_WITH_AS(extract_cocycle(d4, {}), doctest::Contains("empty"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(extract_cocycle(d4, {0, 1}),
                       doctest::Contains("not closed"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(extract_cocycle(d4, {0, 4}),
                       doctest::Contains("not central"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(extract_cocycle(d4, {0, 2, 2}),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(extract_cocycle(d4, {0, 99}),
                       doctest::Contains("out of range"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(extract_cocycle(builtin_group("symmetric3"), {0}),
                       doctest::Contains("not abelian"), std::invalid_argument);
}

TEST_CASE("extraction with the whole group as subgroup") {
  FiniteGroup z4 = cyclic_group(4);
  ExtractedCocycle exc = extract_cocycle(z4, {0, 1, 2, 3});
  CHECK(exc.ext.a.order() == 1);
  CHECK(exc.ext.a.rank() == 0);
  CHECK(exc.ext.context.moduli() == std::vector<long long>{4});
  CHECK(exc.cocycle.dense().size() == 1);
  CHECK(exc.cocycle.dense()[0].is_zero());
  CHECK(exc.ext.value_of(1) == CoeffVec{{QZ(1, 4)}});
  CHECK(exc.ext.value_of(3) == CoeffVec{{QZ(3, 4)}});
}

TEST_CASE("extraction from a cyclic group by its even part") {
  ExtractedCocycle exc = extract_cocycle(cyclic_group(4), {0, 2});
  CHECK(exc.ext.a == FinAbGroup({2}));
  // c(1,1) = 1/2, everything else normalized to zero
  std::vector<CoeffVec> expect = {exc.ext.context.zero(),
                                  exc.ext.context.zero(),
                                  exc.ext.context.zero(), kHalf};
  CHECK(exc.cocycle.dense() == expect);
  CHECK(is_symmetric(exc.cocycle));
  CHECK(omega_c(exc.cocycle).pairing().is_alternating());
}

TEST_CASE("different sections give cohomologous cocycles") {
  FiniteGroup d4 = dihedral_group(4);
  ExtractedCocycle exc = extract_cocycle(d4, {0, 2});
  const FinAbGroup& a = exc.ext.a;

  // replace every nonzero section value by the other coset member
  std::vector<std::uint32_t> alt = exc.ext.section;
  for (std::uint32_t i = 1; i < alt.size(); ++i) alt[i] = d4.mul(2, alt[i]);
  std::vector<CoeffVec> values;
  for (std::uint64_t i = 0; i < a.order(); ++i)
    for (std::uint64_t j = 0; j < a.order(); ++j) {
      std::uint64_t s = a.index_of(a.add(a.at(i), a.at(j)));
      std::uint32_t z = d4.mul(d4.mul(alt[i], alt[j]), d4.inv(alt[s]));
      values.push_back(exc.ext.value_of(z));
    }
  Cocycle other = Cocycle::table(a, exc.ext.context, std::move(values));
  CHECK(verify_cocycle(other).ok());
  CHECK_FALSE(other.dense() == exc.cocycle.dense());

  CohomologyVerdict v = cohomologous(exc.cocycle, other);
  CHECK(v.omega_equal);
  CHECK(v.equivalent());
}

TEST_CASE("round trips through cayley tables") {
  for (const HeisenbergGroup& h :
       {d4_model(), q8_model(), z33_model(), degenerate_model()}) {
    FiniteGroup t = cayley_table(h);
    std::vector<std::uint32_t> central;
    for (unsigned long long k = 0; k < h.context().size(); ++k)
      central.push_back(static_cast<std::uint32_t>(k * h.group().order()));
    ExtractedCocycle exc = extract_cocycle(t, central);
    CHECK(exc.ext.a == h.group());
    CHECK(exc.ext.context == h.context());
    // the lowest-index section is the standard one, so the defect table
    // comes back on the nose
    CHECK(exc.cocycle.dense() == h.cocycle().dense());

    HeisenbergPresentation p = recognize(t, central);
    SymplecticPairing wp = omega_of(p.beta);
    SymplecticPairing wc = omega_c(h.cocycle());
    for (std::size_t i = 0; i < h.group().rank(); ++i)
      for (std::size_t j = 0; j < h.group().rank(); ++j)
        CHECK(wp.pairing().entry(i, j) == wc.pairing().entry(i, j));
    CHECK(verify_omega_factorization(p));
  }
}

TEST_CASE("recognition of the dihedral group") {
  FiniteGroup d4 = dihedral_group(4);
  HeisenbergPresentation p = recognize(d4, {0, 2});
  const FinAbGroup& a = p.ext.a;

  CHECK(p.model.context().is_divisible());
  CHECK(p.beta.entry(0, 1) == kHalf);
  CHECK(p.beta.entry(1, 0).is_zero());
  CHECK(p.beta.entry(0, 0).is_zero());
  CHECK(p.beta.entry(1, 1).is_zero());

  // bijective homomorphism onto the model
  std::set<HElem> seen(p.iso.begin(), p.iso.end());
  CHECK(seen.size() == 8);
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t j = 0; j < 8; ++j)
      CHECK(p.iso[d4.mul(i, j)] == p.model.mul(p.iso[i], p.iso[j]));
  // identity on the coefficient subgroup, identity on the quotient
  CHECK(p.iso[0] == p.model.identity());
  CHECK(p.iso[2] == p.model.element(kHalf, a.zero()));
  for (std::uint32_t gi = 0; gi < 8; ++gi)
    CHECK(p.iso[gi].x == a.at(p.ext.coset_of[gi]));

  CHECK(verify_omega_factorization(p));
  CHECK(p.quotient_pairing.ok());
  CHECK(p.quotient_pairing.quotient_order() == 4);

  // the rotation square puts 1/2 on the diagonal of c - beta, and no
  // coboundary over Z/2 has a nonzero diagonal entry, so the equivalence
  // needs the divisible coefficients
  GroupElement e2 = a.element({0, 1});
  CHECK(p.cocycle.eval(e2, e2) == kHalf);
  CHECK_FALSE(p.refinable_in_original);
  CHECK_FALSE(p.original_shift.has_value());
  CoeffContext f2 = CoeffContext::finite({2});
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<CoeffVec> fv(4, f2.zero());
    for (int i = 0; i < 3; ++i)
      if (bits >> i & 1) fv[i + 1] = kHalf;
    Cocycle cb = morphism_defect(CochainFunction(a, f2, fv));
    for (const GroupElement& x : a.elements()) CHECK(cb.eval(x, x).is_zero());
  }
}

TEST_CASE("recognition of the quaternion group") {
  FiniteGroup q8 = builtin_group("quaternion8");
  HeisenbergPresentation p = recognize(q8, {0, 1});
  const FinAbGroup& a = p.ext.a;

  CHECK(p.ext.section == std::vector<std::uint32_t>{0, 2, 4, 6});
  GroupElement e1 = a.element({1, 0}), e2 = a.element({0, 1});
  // every lift squares to the central involution
  CHECK(p.cocycle.eval(e1, e1) == kHalf);
  CHECK(p.cocycle.eval(e2, e2) == kHalf);
  CHECK_FALSE(p.refinable_in_original);
  CHECK(verify_omega_factorization(p));

  // same symplectic invariant as the dihedral presentation
  HeisenbergPresentation pd = recognize(dihedral_group(4), {0, 2});
  CHECK(p.beta == pd.beta);
}

TEST_CASE("recognition of unitriangular groups") {
  FiniteGroup u2 = builtin_group("unitriangular(3,Z/2)");
  HeisenbergPresentation p2 = recognize(u2, center(u2));
  CHECK(p2.ext.a == FinAbGroup({2, 2}));
  CHECK(p2.beta.entry(0, 1) == kHalf);
  // both generator lifts square to the identity here, so the original
  // Z/2 coefficients already carry the equivalence
  GroupElement e1 = p2.ext.a.element({1, 0}), e2 = p2.ext.a.element({0, 1});
  CHECK(p2.cocycle.eval(e1, e1).is_zero());
  CHECK(p2.cocycle.eval(e2, e2).is_zero());
  CHECK(p2.refinable_in_original);
  REQUIRE(p2.original_shift.has_value());
  Pairing bf2(p2.ext.a, p2.ext.context,
              {p2.beta.entry(0, 0), p2.beta.entry(0, 1), p2.beta.entry(1, 0),
               p2.beta.entry(1, 1)});
  CHECK(morphism_defect(*p2.original_shift).dense() ==
        cocycle_sub(p2.cocycle, Cocycle::bimult(bf2)).dense());
  CHECK(verify_omega_factorization(p2));

  FiniteGroup u3 = builtin_group("unitriangular(3,Z/3)");
  HeisenbergPresentation p3 = recognize(u3, center(u3));
  CHECK(p3.ext.a == FinAbGroup({3, 3}));
  CHECK(p3.ext.context.moduli() == std::vector<long long>{3});
  CHECK(p3.beta.entry(0, 1) == kThird);
  CHECK(p3.ext.value_of(3) == kThird);
  CHECK(p3.ext.value_of(6) == CoeffVec{{QZ(2, 3)}});
  CHECK(p3.refinable_in_original);
  CHECK(verify_omega_factorization(p3));
  CHECK(p3.quotient_pairing.ok());
  CHECK(p3.quotient_pairing.quotient_order() == 9);
  std::set<HElem> seen(p3.iso.begin(), p3.iso.end());
  CHECK(seen.size() == 27);
}

TEST_CASE("recognition of an abelian group by itself") {
  FiniteGroup z4 = cyclic_group(4);
  HeisenbergPresentation p = recognize(z4, {0, 1, 2, 3});
  CHECK(p.ext.a.rank() == 0);
  CHECK(p.refinable_in_original);
  CHECK(verify_omega_factorization(p));
  // the whole group maps onto pure coefficient elements
  for (std::uint32_t gi = 0; gi < 4; ++gi) {
    CHECK(p.iso[gi].x.is_zero());
    CHECK(p.iso[gi].t == p.embedding.apply(p.ext.value_of(gi)));
  }
}

TEST_CASE("recognition rejects higher class") {
  FiniteGroup s3 = builtin_group("symmetric3");
  CHECK_THROWS_WITH_AS(recognize(s3, {0}), doctest::Contains("[G,G]"),
                       std::invalid_argument);
}

TEST_CASE("class two characterizations agree") {
  for (const char* name :
       {"cyclic(6)", "klein", "dihedral(4)", "quaternion8",
        "unitriangular(3,Z/2)", "unitriangular(3,Z/3)", "symmetric3"}) {
    FiniteGroup g = builtin_group(name);
    auto lcc = lower_central_class(g);
    bool by_series = lcc.has_value() && *lcc <= 2;
    bool by_inclusion = is_class_at_most_2(g);
    CommutatorPairing r = commutator_pairing_report(g);
    bool by_pairing =
        r.well_defined && r.alternating && r.bimultiplicative && r.nondegenerate;
    CHECK(by_series == by_inclusion);
    CHECK(by_inclusion == by_pairing);
  }
}

TEST_CASE("omega factorization detects corruption") {
  HeisenbergPresentation p = recognize(dihedral_group(4), {0, 2});
  REQUIRE(verify_omega_factorization(p));
  std::swap(p.ext.central_value[0], p.ext.central_value[1]);
  CHECK_FALSE(verify_omega_factorization(p));
}
