#include "heis/projrep.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace heis {

namespace {

std::string fmt_vec(const CoeffVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) s += ", ";
    s += v.coords[i].str();
  }
  return s + ")";
}

std::string fmt_pair(std::uint64_t i, std::uint64_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

MonomialMatrix::MonomialMatrix(std::vector<std::uint32_t> perm,
                               std::vector<CoeffVec> weight)
    : perm_(std::move(perm)), weight_(std::move(weight)) {
  if (perm_.empty())
    throw std::invalid_argument("MonomialMatrix: dimension must be positive");
  if (perm_.size() != weight_.size())
    throw std::invalid_argument("MonomialMatrix: one weight per index");
  std::vector<bool> seen(perm_.size(), false);
  for (std::uint32_t p : perm_) {
    if (p >= perm_.size() || seen[p])
      throw std::invalid_argument("MonomialMatrix: not a permutation");
    seen[p] = true;
  }
  for (const CoeffVec& w : weight_)
    if (w.coords.size() != weight_[0].coords.size())
      throw std::invalid_argument("MonomialMatrix: weight ranks differ");
}

MonomialMatrix MonomialMatrix::scalar(std::uint32_t d, const CoeffVec& t) {
  std::vector<std::uint32_t> perm(d);
  for (std::uint32_t i = 0; i < d; ++i) perm[i] = i;
  return MonomialMatrix(std::move(perm), std::vector<CoeffVec>(d, t));
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  const std::uint32_t d = dimension();
  if (o.dimension() != d)
    throw std::invalid_argument("MonomialMatrix: dimension mismatch");
  std::vector<std::uint32_t> perm(d);
  std::vector<CoeffVec> weight;
  weight.reserve(d);
  for (std::uint32_t a = 0; a < d; ++a) {
    perm[a] = perm_[o.perm_[a]];
    weight.push_back(o.weight_[a] + weight_[o.perm_[a]]);
  }
  return MonomialMatrix(std::move(perm), std::move(weight));
}

MonomialMatrix MonomialMatrix::inverse() const {
  const std::uint32_t d = dimension();
  std::vector<std::uint32_t> perm(d);
  std::vector<CoeffVec> weight(d);
  for (std::uint32_t a = 0; a < d; ++a) {
    perm[perm_[a]] = a;
    weight[perm_[a]] = -weight_[a];
  }
  return MonomialMatrix(std::move(perm), std::move(weight));
}

bool MonomialMatrix::is_scalar() const {
  for (std::uint32_t a = 0; a < dimension(); ++a)
    if (perm_[a] != a || !(weight_[a] == weight_[0])) return false;
  return true;
}

RepTable::RepTable(Flavor flavor, HeisenbergGroup h,
                   std::vector<MonomialMatrix> rho)
    : flavor_(flavor), h_(std::move(h)), rho_(std::move(rho)) {
  if (!h_.finite())
    throw std::invalid_argument("RepTable: requires a finite coefficient context");
  const std::uint64_t want =
      flavor_ == Flavor::linear ? h_.order() : h_.group().order();
  if (rho_.size() != want)
    throw std::invalid_argument("RepTable: expected one matrix per element, got " +
                                std::to_string(rho_.size()) + " of " +
                                std::to_string(want));
  for (const MonomialMatrix& m : rho_)
    if (m.dimension() != rho_[0].dimension())
      throw std::invalid_argument("RepTable: matrix dimensions differ");
}

const MonomialMatrix& RepTable::at_element(const HElem& g) const {
  if (flavor_ != Flavor::linear)
    throw std::invalid_argument("RepTable: at_element wants a linear table");
  return rho_[h_.index_of(g)];
}

const MonomialMatrix& RepTable::at_point(const GroupElement& x) const {
  if (flavor_ != Flavor::projective)
    throw std::invalid_argument("RepTable: at_point wants a projective table");
  return rho_[h_.group().index_of(x)];
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> RepTable::law_violation(
    scan::Mode mode) const {
  const std::uint64_t n = rho_.size();
  const FinAbGroup& a = h_.group();
  auto ok = [&](std::uint64_t k) {
    const std::uint64_t i = k / n, j = k % n;
    if (flavor_ == Flavor::linear) {
      const HElem prod = h_.mul(h_.at(i), h_.at(j));
      return rho_[i] * rho_[j] == rho_[h_.index_of(prod)];
    }
    const GroupElement xi = a.at(i), xj = a.at(j);
    const MonomialMatrix lhs = rho_[i] * rho_[j];
    const MonomialMatrix rhs =
        MonomialMatrix::scalar(rho_[i].dimension(),
                               h_.cocycle().eval(xi, xj)) *
        rho_[a.index_of(a.add(xi, xj))];
    return lhs == rhs;
  };
  const auto v = scan::first_violation(n * n, ok, mode);
  if (!v) return std::nullopt;
  return std::make_pair(*v / n, *v % n);
}

bool RepTable::operator==(const RepTable& o) const {
  return flavor_ == o.flavor_ && h_.cocycle() == o.h_.cocycle() && rho_ == o.rho_;
}

RepTable induced_rep(const HeisenbergGroup& h, scan::Mode mode) {
  if (!h.finite())
    throw std::invalid_argument("induced_rep: the coefficient context must be finite");
  const FinAbGroup& a = h.group();
  const std::uint64_t d = a.order();
  const std::uint64_t n = h.order();
  std::vector<MonomialMatrix> rho;
  rho.reserve(n);
  for (std::uint64_t gi = 0; gi < n; ++gi) {
    const HElem g = h.at(gi);
    std::vector<std::uint32_t> perm(d);
    std::vector<CoeffVec> weight;
    weight.reserve(d);
    for (std::uint64_t ai = 0; ai < d; ++ai) {
      const GroupElement pt = a.at(ai);
      perm[ai] = static_cast<std::uint32_t>(a.index_of(a.add(g.x, pt)));
      weight.push_back(g.t + h.cocycle().eval(g.x, pt));
    }
    rho.emplace_back(std::move(perm), std::move(weight));
  }
  RepTable table(RepTable::Flavor::linear, h, std::move(rho));
  // The homomorphism property is exactly the cocycle identity in the
  // weights, so this cannot fire for a verified cocycle.
  if (n <= 256) {
    if (const auto bad = table.law_violation(mode))
      throw std::logic_error("induced_rep: homomorphism check failed at pair " +
                             fmt_pair(bad->first, bad->second));
  }
  return table;
}

RepTable projectivize(const RepTable& sigma, scan::Mode mode) {
  if (sigma.flavor() != RepTable::Flavor::linear)
    throw std::invalid_argument("projectivize: expects a linear table");
  const HeisenbergGroup& h = sigma.extension();
  const FinAbGroup& a = h.group();
  const std::uint32_t d = sigma[0].dimension();
  for (const CoeffVec& t : h.context().values()) {
    const HElem g = h.element(t, a.zero());
    if (!(sigma.at_element(g) == MonomialMatrix::scalar(d, t)))
      throw std::invalid_argument(
          "projectivize: sigma(t, 0) is not the scalar t for t = " + fmt_vec(t));
  }
  std::vector<MonomialMatrix> rho;
  rho.reserve(a.order());
  for (std::uint64_t ai = 0; ai < a.order(); ++ai)
    rho.push_back(sigma.at_element(h.element(h.context().zero(), a.at(ai))));
  RepTable out(RepTable::Flavor::projective, h, std::move(rho));
  if (const auto bad = out.law_violation(mode))
    throw std::invalid_argument("projectivize: the projective law fails at pair " +
                                fmt_pair(bad->first, bad->second));
  return out;
}

RepTable linearize(const RepTable& rho, scan::Mode mode) {
  if (rho.flavor() != RepTable::Flavor::projective)
    throw std::invalid_argument("linearize: expects a projective table");
  if (const auto bad = rho.law_violation(mode))
    throw std::invalid_argument("linearize: the projective law fails at pair " +
                                fmt_pair(bad->first, bad->second));
  const HeisenbergGroup& h = rho.extension();
  const std::uint32_t d = rho[0].dimension();
  std::vector<MonomialMatrix> out;
  out.reserve(h.order());
  for (std::uint64_t gi = 0; gi < h.order(); ++gi) {
    const HElem g = h.at(gi);
    out.push_back(MonomialMatrix::scalar(d, g.t) * rho.at_point(g.x));
  }
  RepTable lin(RepTable::Flavor::linear, h, std::move(out));
  // Scalars commute with every monomial matrix, so the projective law
  // already forces this; kept as a tripwire.
  if (const auto bad = lin.law_violation(mode))
    throw std::logic_error("linearize: homomorphism check failed at pair " +
                           fmt_pair(bad->first, bad->second));
  return lin;
}

std::optional<CochainFunction> scalar_test(const RepTable& rho) {
  if (rho.flavor() != RepTable::Flavor::projective)
    throw std::invalid_argument("scalar_test: expects a projective table");
  const FinAbGroup& a = rho.extension().group();
  const CoeffContext& ctx = rho.extension().context();
  std::vector<CoeffVec> lambda;
  lambda.reserve(a.order());
  for (std::uint64_t i = 0; i < a.order(); ++i) {
    if (!rho[i].is_scalar()) return std::nullopt;
    lambda.push_back(-rho[i].weights()[0]);
  }
  // A genuine scalar solution of the projective law has lambda normalized
  // and in context; anything else is not a refinement, not an error.
  if (!lambda[a.index_of(a.zero())].is_zero()) return std::nullopt;
  for (const CoeffVec& v : lambda)
    if (!ctx.contains(v)) return std::nullopt;
  CochainFunction f(a, ctx, std::move(lambda));
  if (!(morphism_defect(f) == rho.cocycle())) return std::nullopt;
  return f;
}

}  // namespace heis
