#include "heis/recognize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace heis {

namespace {

std::size_t central_position(const std::vector<std::uint32_t>& central,
                             std::uint32_t g_index) {
  auto it = std::lower_bound(central.begin(), central.end(), g_index);
  if (it == central.end() || *it != g_index)
    throw std::invalid_argument("central element lookup: element " +
                                std::to_string(g_index) +
                                " is not in the designated subgroup");
  return static_cast<std::size_t>(it - central.begin());
}

}  // namespace

const CoeffVec& CentralExtensionData::value_of(std::uint32_t g_index) const {
  return central_value[central_position(central, g_index)];
}

std::uint32_t CentralExtensionData::central_element(const CoeffVec& v) const {
  for (std::size_t p = 0; p < central_value.size(); ++p)
    if (central_value[p] == v) return central[p];
  throw std::invalid_argument(
      "central element lookup: value is not attained on the subgroup");
}

ExtractedCocycle extract_cocycle(const FiniteGroup& g,
                                 std::vector<std::uint32_t> central) {
  const std::size_t n = g.order();
  if (central.empty())
    throw std::invalid_argument("extract_cocycle: central subset is empty");
  std::sort(central.begin(), central.end());
  for (std::size_t p = 0; p + 1 < central.size(); ++p)
    if (central[p] == central[p + 1])
      throw std::invalid_argument("extract_cocycle: duplicate element index " +
                                  std::to_string(central[p]));
  for (std::uint32_t idx : central)
    if (idx >= n)
      throw std::invalid_argument("extract_cocycle: element index " +
                                  std::to_string(idx) + " is out of range");

  auto in_central = [&](std::uint32_t idx) {
    return std::binary_search(central.begin(), central.end(), idx);
  };
  for (std::uint32_t p : central)
    for (std::uint32_t q : central)
      if (!in_central(g.mul(p, q)))
        throw std::invalid_argument(
            "extract_cocycle: subset is not closed under multiplication: "
            "product of " + std::to_string(p) + " and " + std::to_string(q) +
            " falls outside");
  for (std::uint32_t z : central)
    for (std::uint32_t h = 0; h < n; ++h)
      if (g.mul(z, h) != g.mul(h, z))
        throw std::invalid_argument("extract_cocycle: subset is not central: " +
                                    std::to_string(z) +
                                    " does not commute with " +
                                    std::to_string(h));

  // Cosets, keyed by their lowest member.  Scanning group indices in
  // order assigns coset ranks by lowest member as well.
  const std::size_t k = central.size();
  std::vector<std::uint32_t> coset_key(n);
  for (std::uint32_t h = 0; h < n; ++h) {
    std::uint32_t key = g.mul(central[0], h);
    for (std::uint32_t z : central) key = std::min(key, g.mul(z, h));
    coset_key[h] = key;
  }
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> rank(n, 0);
  for (std::uint32_t h = 0; h < n; ++h)
    if (coset_key[h] == h) {
      rank[h] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(h);
    }
  const std::size_t q = reps.size();
  std::vector<std::uint32_t> coset_rank(n);
  for (std::uint32_t h = 0; h < n; ++h) coset_rank[h] = rank[coset_key[h]];

  std::vector<std::uint32_t> bt(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      bt[i * q + j] = coset_rank[g.mul(reps[i], reps[j])];
  FiniteGroup b(coset_rank[g.identity()], std::move(bt));
  if (!b.is_abelian())
    throw std::invalid_argument(
        "extract_cocycle: quotient by the subset is not abelian");
  AbelianStructure qs = abelian_structure(b);

  std::vector<std::uint32_t> b_to_a(q);
  for (std::uint32_t i = 0; i < q; ++i) b_to_a[qs.to_group[i]] = i;
  std::vector<std::uint32_t> coset_of(n);
  for (std::uint32_t h = 0; h < n; ++h) coset_of[h] = b_to_a[coset_rank[h]];
  std::vector<std::uint32_t> section(q);
  for (std::uint32_t i = 0; i < q; ++i) section[i] = reps[qs.to_group[i]];
  section[qs.a.index_of(qs.a.zero())] = g.identity();

  // Coefficient coordinates from the subgroup's own structure.
  CoeffContext context = CoeffContext::finite({1});
  std::vector<CoeffVec> central_value(k, context.zero());
  if (k > 1) {
    std::vector<std::uint32_t> ct(k * k);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t r = 0; r < k; ++r)
        ct[p * k + r] =
            static_cast<std::uint32_t>(central_position(central, g.mul(central[p], central[r])));
    FiniteGroup cg(central_position(central, g.identity()), std::move(ct));
    AbelianStructure cs = abelian_structure(cg);
    context = CoeffContext::finite(cs.a.moduli());
    central_value.assign(k, context.zero());
    for (std::uint64_t i = 0; i < cs.a.order(); ++i) {
      const GroupElement e = cs.a.at(i);
      CoeffVec v;
      v.coords.reserve(e.x.size());
      for (std::size_t j = 0; j < e.x.size(); ++j)
        v.coords.emplace_back(e.x[j], cs.a.moduli()[j]);
      central_value[cs.to_group[i]] = std::move(v);
    }
  }

  // The section's defect, tabulated over the quotient coordinates.
  const FinAbGroup& a = qs.a;
  const std::uint64_t qa = a.order();
  std::vector<CoeffVec> values;
  values.reserve(qa * qa);
  for (std::uint64_t i = 0; i < qa; ++i)
    for (std::uint64_t j = 0; j < qa; ++j) {
      const std::uint64_t s =
          a.index_of(a.add(a.at(i), a.at(j)));
      const std::uint32_t z =
          g.mul(g.mul(section[i], section[j]), g.inv(section[s]));
      if (!in_central(z))
        throw std::logic_error(
            "extract_cocycle: section defect left the designated subgroup");
      values.push_back(central_value[central_position(central, z)]);
    }
  Cocycle cocycle = Cocycle::table(a, context, std::move(values));
  if (!verify_cocycle(cocycle).ok())
    throw std::logic_error(
        "extract_cocycle: section defect violated the cocycle laws");

  CentralExtensionData ext{g,
                           std::move(central),
                           a,
                           std::move(context),
                           std::move(coset_of),
                           std::move(section),
                           std::move(central_value)};
  return ExtractedCocycle{std::move(ext), std::move(cocycle)};
}

HeisenbergPresentation recognize(const FiniteGroup& g,
                                 std::vector<std::uint32_t> central) {
  if (!is_class_at_most_2(g))
    throw std::invalid_argument(
        "recognize: [G,G] is not contained in Z(G); the nilpotency class "
        "exceeds 2");
  ExtractedCocycle exc = extract_cocycle(g, std::move(central));
  const FinAbGroup& a = exc.ext.a;

  CoeffEmbedding emb = CoeffEmbedding::canonical(exc.ext.context);
  std::vector<CoeffVec> pushed_values;
  pushed_values.reserve(exc.cocycle.dense().size());
  for (const CoeffVec& v : exc.cocycle.dense())
    pushed_values.push_back(emb.apply(v));
  Cocycle pushed = Cocycle::table(a, emb.to, std::move(pushed_values));

  BimultRepresentative rep = bimult_representative(pushed);
  HeisenbergGroup model(Cocycle::bimult(rep.beta));
  HeisenbergGroup target(std::move(pushed));
  Equivalence eq = equivalence_iso(model, target, rep.f);

  const std::size_t n = g.order();
  std::vector<HElem> iso;
  iso.reserve(n);
  for (std::uint32_t gi = 0; gi < n; ++gi) {
    const std::uint32_t xi = exc.ext.coset_of[gi];
    const std::uint32_t z = g.mul(gi, g.inv(exc.ext.section[xi]));
    iso.push_back(eq.unapply(
        target.element(emb.apply(exc.ext.value_of(z)), a.at(xi))));
  }
  std::set<HElem> distinct(iso.begin(), iso.end());
  if (distinct.size() != n)
    throw std::logic_error("recognize: isomorphism table is not injective");
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (!(iso[g.mul(i, j)] == model.mul(iso[i], iso[j])))
        throw std::logic_error(
            "recognize: isomorphism table failed the homomorphism check at "
            "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  for (std::size_t p = 0; p < exc.ext.central.size(); ++p)
    if (!(iso[exc.ext.central[p]] ==
          model.element(emb.apply(exc.ext.central_value[p]), a.zero())))
      throw std::logic_error(
          "recognize: isomorphism does not restrict to the coefficient "
          "embedding on the central subgroup");
  for (std::uint32_t gi = 0; gi < n; ++gi)
    if (!(iso[gi].x == a.at(exc.ext.coset_of[gi])))
      throw std::logic_error(
          "recognize: isomorphism does not induce the identity on the "
          "quotient");

  // Whether beta is reachable from the cocycle without leaving the
  // original finite coefficients.
  std::vector<CoeffVec> beta_entries;
  beta_entries.reserve(a.rank() * a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      beta_entries.push_back(rep.beta.entry(i, j));
  Pairing beta_fin(a, exc.ext.context, std::move(beta_entries));
  Cocycle diff = cocycle_sub(exc.cocycle, Cocycle::bimult(beta_fin));
  long long bound = 1;
  for (long long m : exc.ext.context.moduli()) bound = std::lcm(bound, m);
  std::optional<CochainFunction> original_shift;
  bool refinable = false;
  try {
    original_shift = brute_refinement(diff, bound);
    refinable = original_shift.has_value();
  } catch (const std::length_error&) {
    // Search space too large; the closed-form construction decides
    // existence just as exactly.
    try {
      original_shift = quadratic_refinement(diff);
      refinable = true;
    } catch (const std::domain_error&) {
      refinable = false;
    }
  }

  CommutatorPairing qp = commutator_pairing_report(g);
  return HeisenbergPresentation{std::move(exc.ext),
                                std::move(exc.cocycle),
                                std::move(emb),
                                std::move(rep.beta),
                                std::move(rep.f),
                                std::move(model),
                                std::move(iso),
                                refinable,
                                std::move(original_shift),
                                std::move(qp)};
}

bool verify_omega_factorization(const HeisenbergPresentation& p) {
  const FiniteGroup& g = p.ext.g;
  const FinAbGroup& a = p.ext.a;
  const Pairing& w = p.model.omega().pairing();
  for (std::uint64_t i = 0; i < a.order(); ++i)
    for (std::uint64_t j = 0; j < a.order(); ++j) {
      const std::uint32_t com =
          g.commutator(p.ext.section[i], p.ext.section[j]);
      if (!(w.eval(a.at(i), a.at(j)) ==
            p.embedding.apply(p.ext.value_of(com))))
        return false;
    }
  return true;
}

}  // namespace heis
