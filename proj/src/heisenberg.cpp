#include "heis/heisenberg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace heis {

namespace {

std::string coords(const GroupElement& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x.x[i]);
  }
  return s + ")";
}

SymplecticPairing checked_omega(const Cocycle& c) {
  // Bimultiplicative forms satisfy the two laws identically; tables are
  // rechecked whenever the triple scan is affordable.
  if (!c.is_bimult() && c.group().order() <= 1024) {
    CocycleCheck r = verify_cocycle(c);
    if (!r.ok()) {
      std::string what =
          r.failure == CocycleCheck::Failure::normalization
              ? "normalization fails at " + coords(r.x)
              : "associativity law fails at " + coords(r.x) + ", " +
                    coords(r.y) + ", " + coords(r.z);
      throw std::invalid_argument("HeisenbergGroup: table is not a cocycle: " +
                                  what);
    }
  }
  return omega_c(c);
}

// Closure of the given values under addition; starts from zero.
std::vector<CoeffVec> additive_closure(const CoeffContext& ctx,
                                       const std::vector<CoeffVec>& gens,
                                       std::size_t limit) {
  std::set<CoeffVec> have;
  std::vector<CoeffVec> work{ctx.zero()};
  have.insert(ctx.zero());
  for (std::size_t head = 0; head < work.size(); ++head)
    for (const CoeffVec& g : gens) {
      CoeffVec s = work[head] + g;
      if (have.insert(s).second) {
        if (have.size() > limit)
          throw std::length_error("coefficient closure exceeds " +
                                  std::to_string(limit) + " values");
        work.push_back(s);
      }
    }
  return std::vector<CoeffVec>(have.begin(), have.end());
}

}  // namespace

HeisenbergGroup::HeisenbergGroup(Cocycle c)
    : c_(std::move(c)), omega_(checked_omega(c_)) {}

std::uint64_t HeisenbergGroup::order() const {
  if (!finite())
    throw std::logic_error("HeisenbergGroup: infinite over a divisible context");
  return context().size() * group().order();
}

HElem HeisenbergGroup::identity() const {
  return HElem{context().zero(), group().zero()};
}

HElem HeisenbergGroup::element(const CoeffVec& t, const GroupElement& x) const {
  context().require(t, "HeisenbergGroup");
  return HElem{t, group().element(x.x)};
}

HElem HeisenbergGroup::mul(const HElem& g, const HElem& h) const {
  return HElem{g.t + h.t + c_.eval(g.x, h.x), group().add(g.x, h.x)};
}

HElem HeisenbergGroup::inv(const HElem& g) const {
  GroupElement nx = group().neg(g.x);
  return HElem{-g.t - c_.eval(g.x, nx), nx};
}

HElem HeisenbergGroup::pow(const HElem& g, long long k) const {
  if (k < 0) return pow(inv(g), -k);
  HElem acc = identity();
  for (long long i = 0; i < k; ++i) acc = mul(acc, g);
  return acc;
}

HElem HeisenbergGroup::commutator(const HElem& g, const HElem& h) const {
  HElem w = mul(mul(mul(g, h), inv(g)), inv(h));
  if (!w.x.is_zero() ||
      !(w.t == omega_.pairing().eval(g.x, h.x)))
    throw std::logic_error("HeisenbergGroup: commutator is not (omega, 0)");
  return w;
}

std::size_t HeisenbergGroup::element_order(const HElem& g) const {
  std::size_t k = 1;
  HElem acc = g;
  const HElem e = identity();
  while (!(acc == e)) {
    acc = mul(acc, g);
    ++k;
  }
  return k;
}

std::vector<HElem> HeisenbergGroup::elements() const {
  if (!finite())
    throw std::logic_error("HeisenbergGroup: cannot enumerate a divisible context");
  std::vector<HElem> out;
  out.reserve(order());
  for (const CoeffVec& t : context().values())
    for (const GroupElement& x : group().elements()) out.push_back(HElem{t, x});
  return out;
}

std::uint64_t HeisenbergGroup::index_of(const HElem& g) const {
  return context().index_of(g.t) * group().order() + group().index_of(g.x);
}

HElem HeisenbergGroup::at(std::uint64_t i) const {
  const std::uint64_t na = group().order();
  return HElem{context().value_at(i / na), group().at(i % na)};
}

CenterInfo center(const HeisenbergGroup& h) {
  CenterInfo info;
  info.radical = adjoint_kernel(h.omega().pairing());
  info.whole_group = info.radical.size() == h.group().order();
  if (h.finite()) {
    std::vector<HElem> elems;
    for (const CoeffVec& t : h.context().values())
      for (const GroupElement& x : info.radical) elems.push_back(HElem{t, x});
    // Small groups: compare against the definition directly.
    if (h.order() <= 512) {
      std::vector<HElem> brute;
      std::vector<HElem> all = h.elements();
      for (const HElem& z : all) {
        bool central = true;
        for (const HElem& w : all) {
          if (!(h.mul(z, w) == h.mul(w, z))) {
            central = false;
            break;
          }
        }
        if (central) brute.push_back(z);
      }
      if (!(brute == elems))
        throw std::logic_error("center: radical description disagrees with "
                               "the brute-force center");
    }
    info.elements = std::move(elems);
  }
  return info;
}

std::vector<HElem> commutator_subgroup(const HeisenbergGroup& h) {
  const Pairing& w = h.omega().pairing();
  std::vector<CoeffVec> gens;
  for (std::size_t i = 0; i < h.group().rank(); ++i)
    for (std::size_t j = 0; j < h.group().rank(); ++j) gens.push_back(w.entry(i, j));
  std::vector<CoeffVec> vals = additive_closure(h.context(), gens, 1u << 20);
  std::vector<HElem> out;
  out.reserve(vals.size());
  for (CoeffVec& v : vals) out.push_back(HElem{std::move(v), h.group().zero()});
  return out;
}

int nilpotency_class(const HeisenbergGroup& h) {
  const bool trivial_c = h.context().is_divisible() ? h.context().rank() == 0
                                                    : h.context().size() == 1;
  if (trivial_c && h.group().order() == 1) return 0;
  if (h.omega().pairing() == Pairing::zero(h.group(), h.context())) return 1;
  return 2;
}

Section standard_section(const HeisenbergGroup& h) {
  std::vector<CoeffVec> zeros(h.group().order(), h.context().zero());
  return Section{CochainFunction(h.group(), h.context(), std::move(zeros))};
}

Cocycle defect_of_section(const HeisenbergGroup& h, const Section& s) {
  if (!(s.g.a == h.group()) || !(s.g.ctx == h.context()))
    throw std::invalid_argument(
        "defect_of_section: section belongs to a different extension");
  const auto& elems = h.group().elements();
  const std::size_t n = elems.size();
  std::vector<CoeffVec> table;
  table.reserve(n * n);
  for (const GroupElement& x : elems)
    for (const GroupElement& y : elems) {
      HElem d = h.mul(h.mul(s(x), s(y)), h.inv(s(h.group().add(x, y))));
      if (!d.x.is_zero())
        throw std::logic_error("defect_of_section: defect left the fiber");
      table.push_back(std::move(d.t));
    }
  return Cocycle::table(h.group(), h.context(), std::move(table));
}

Equivalence equivalence_iso(const HeisenbergGroup& from,
                            const HeisenbergGroup& to,
                            const CochainFunction& f) {
  if (!(from.group() == to.group()) || !(from.context() == to.context()))
    throw std::invalid_argument(
        "equivalence_iso: extensions live over different groups or coefficients");
  if (!(f.a == from.group()) || !(f.ctx == from.context()))
    throw std::invalid_argument("equivalence_iso: cochain over the wrong group");

  const FinAbGroup& a = from.group();
  const std::size_t n = a.order();
  std::vector<CoeffVec> diff = cocycle_sub(to.cocycle(), from.cocycle()).dense();
  std::vector<CoeffVec> df = morphism_defect(f).dense();
  for (std::size_t k = 0; k < n * n; ++k)
    if (!(df[k] == diff[k]))
      throw std::invalid_argument(
          "equivalence_iso: defect of f differs from the cocycle difference at " +
          coords(a.elements()[k / n]) + ", " + coords(a.elements()[k % n]));

  Equivalence eq{f};

  // Snapshot of t-parts: the whole coefficient group when small, else
  // the subgroup its constants generate.
  std::vector<CoeffVec> tvals;
  if (from.finite() && from.context().size() * n <= 256) {
    tvals = from.context().values();
  } else {
    std::vector<CoeffVec> gens = from.cocycle().dense();
    const std::vector<CoeffVec>& dto = to.cocycle().dense();
    gens.insert(gens.end(), dto.begin(), dto.end());
    gens.insert(gens.end(), f.values.begin(), f.values.end());
    tvals = additive_closure(from.context(), gens, 4096);
  }
  if (tvals.size() * n > 1024)
    throw std::length_error("equivalence_iso: verification snapshot too large");

  std::vector<HElem> snap;
  snap.reserve(tvals.size() * n);
  for (const CoeffVec& t : tvals)
    for (const GroupElement& x : a.elements()) snap.push_back(HElem{t, x});

  for (const HElem& g : snap) {
    HElem im = eq.apply(g);
    if (!(im.x == g.x) || !(eq.unapply(im) == g))
      throw std::logic_error("equivalence_iso: map is not a fiber-preserving "
                             "bijection on the snapshot");
    if (g.x.is_zero() && !(im == g))
      throw std::logic_error("equivalence_iso: map moves the central subgroup");
    for (const HElem& h2 : snap)
      if (!(eq.apply(from.mul(g, h2)) == to.mul(im, eq.apply(h2))))
        throw std::logic_error("equivalence_iso: homomorphism check failed");
  }
  return eq;
}

CoeffEmbedding::CoeffEmbedding(CoeffContext from_, std::vector<QZ> images_)
    : from(std::move(from_)),
      to(CoeffContext::divisible(images_.size())),
      images(std::move(images_)) {
  if (from.is_divisible())
    throw std::invalid_argument("CoeffEmbedding: source must be finite");
  const auto& m = from.moduli();
  if (images.size() != m.size())
    throw std::invalid_argument("CoeffEmbedding: one generator image per modulus");
  for (std::size_t j = 0; j < m.size(); ++j)
    if (!images[j].times(m[j]).is_zero())
      throw std::invalid_argument("CoeffEmbedding: image of generator " +
                                  std::to_string(j + 1) +
                                  " is not killed by its modulus");
}

CoeffEmbedding CoeffEmbedding::canonical(const CoeffContext& from_) {
  if (from_.is_divisible())
    throw std::invalid_argument("CoeffEmbedding: source must be finite");
  std::vector<QZ> im;
  for (long long m : from_.moduli()) im.emplace_back(1, m);
  return CoeffEmbedding(from_, std::move(im));
}

bool CoeffEmbedding::injective() const {
  const auto& m = from.moduli();
  for (std::size_t j = 0; j < m.size(); ++j)
    if (images[j].order() != m[j]) return false;
  return true;
}

CoeffVec CoeffEmbedding::apply(const CoeffVec& v) const {
  from.require(v, "CoeffEmbedding");
  const auto& m = from.moduli();
  std::vector<QZ> out;
  out.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    long long digit = v.coords[j].num() * (m[j] / v.coords[j].den());
    out.push_back(images[j].times(digit));
  }
  return CoeffVec{std::move(out)};
}

HeisenbergGroup pushforward(const HeisenbergGroup& h, const CoeffEmbedding& e) {
  if (!(e.from == h.context()))
    throw std::invalid_argument(
        "pushforward: embedding source differs from the coefficient context");
  if (!e.injective())
    throw std::invalid_argument("pushforward: embedding is not injective");
  const FinAbGroup& a = h.group();
  if (h.cocycle().is_bimult()) {
    const Pairing& p = h.cocycle().form();
    std::vector<CoeffVec> entries;
    entries.reserve(a.rank() * a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j)
        entries.push_back(e.apply(p.entry(i, j)));
    return HeisenbergGroup(Cocycle::bimult(Pairing(a, e.to, std::move(entries))));
  }
  std::vector<CoeffVec> dense;
  dense.reserve(h.cocycle().dense().size());
  for (const CoeffVec& v : h.cocycle().dense()) dense.push_back(e.apply(v));
  return HeisenbergGroup(Cocycle::table(a, e.to, std::move(dense)));
}

FiniteGroup cayley_table(const HeisenbergGroup& h) {
  if (!h.finite())
    throw std::invalid_argument("cayley_table: finite coefficients required");
  const std::uint64_t n = h.order();
  if (n > 4096)
    throw std::length_error("cayley_table: group order " + std::to_string(n) +
                            " exceeds 4096");
  std::vector<HElem> elems = h.elements();
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint32_t>(h.index_of(h.mul(elems[i], elems[j])));
  return FiniteGroup(static_cast<std::size_t>(h.index_of(h.identity())),
                     std::move(table));
}

}  // namespace heis
