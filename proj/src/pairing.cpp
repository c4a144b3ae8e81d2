#include "heis/pairing.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace heis {

Pairing::Pairing(FinAbGroup a, CoeffContext ctx, std::vector<CoeffVec> entries)
    : a_(std::move(a)), ctx_(std::move(ctx)), b_(std::move(entries)) {
  const std::size_t r = a_.rank();
  if (b_.size() != r * r)
    throw std::invalid_argument("Pairing: expected a full generator matrix");
  const auto& n = a_.moduli();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const CoeffVec& v = b_[i * r + j];
      ctx_.require(v, "Pairing");
      long long g = std::gcd(n[i], n[j]);
      if (g % v.order() != 0)
        throw std::invalid_argument(
            "Pairing: entry (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ") has order " + std::to_string(v.order()) +
            " which does not divide gcd(n_i, n_j) = " + std::to_string(g));
    }
  }
}

Pairing Pairing::zero(FinAbGroup a, CoeffContext ctx) {
  std::size_t r = a.rank();
  std::vector<CoeffVec> e(r * r, ctx.zero());
  return Pairing(std::move(a), std::move(ctx), std::move(e));
}

const CoeffVec& Pairing::entry(std::size_t i, std::size_t j) const {
  const std::size_t r = a_.rank();
  if (i >= r || j >= r) throw std::out_of_range("Pairing::entry");
  return b_[i * r + j];
}

CoeffVec Pairing::eval(const GroupElement& x, const GroupElement& y) const {
  const std::size_t r = a_.rank();
  if (x.x.size() != r || y.x.size() != r)
    throw std::invalid_argument("Pairing::eval: wrong coordinate count");
  CoeffVec acc = ctx_.zero();
  for (std::size_t i = 0; i < r; ++i) {
    if (x.x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y.x[j] == 0) continue;
      acc = acc + cv_times(b_[i * r + j], x.x[i] * y.x[j]);
    }
  }
  return acc;
}

bool Pairing::is_symmetric() const {
  const std::size_t r = a_.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (!(b_[i * r + j] == b_[j * r + i])) return false;
  return true;
}

bool Pairing::is_alternating() const {
  const std::size_t r = a_.rank();
  for (std::size_t i = 0; i < r; ++i) {
    if (!b_[i * r + i].is_zero()) return false;
    for (std::size_t j = i + 1; j < r; ++j)
      if (!(b_[i * r + j] + b_[j * r + i]).is_zero()) return false;
  }
  return true;
}

bool Pairing::operator==(const Pairing& o) const {
  return a_ == o.a_ && ctx_ == o.ctx_ && b_ == o.b_;
}

namespace {

Pairing entrywise(const Pairing& p, const Pairing& q,
                  CoeffVec (*op)(const CoeffVec&, const CoeffVec&)) {
  if (!(p.group() == q.group()) || !(p.context() == q.context()))
    throw std::invalid_argument("Pairing: group or context mismatch");
  const std::size_t r = p.group().rank();
  std::vector<CoeffVec> e;
  e.reserve(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      e.push_back(op(p.entry(i, j), q.entry(i, j)));
  return Pairing(p.group(), p.context(), std::move(e));
}

}  // namespace

Pairing pairing_add(const Pairing& p, const Pairing& q) {
  return entrywise(p, q, [](const CoeffVec& a, const CoeffVec& b) { return a + b; });
}

Pairing pairing_neg(const Pairing& p) {
  const std::size_t r = p.group().rank();
  std::vector<CoeffVec> e;
  e.reserve(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) e.push_back(-p.entry(i, j));
  return Pairing(p.group(), p.context(), std::move(e));
}

Pairing pairing_sub(const Pairing& p, const Pairing& q) {
  return entrywise(p, q, [](const CoeffVec& a, const CoeffVec& b) { return a - b; });
}

SymplecticPairing SymplecticPairing::from(Pairing p) {
  if (!p.is_alternating())
    throw std::invalid_argument("SymplecticPairing: pairing is not alternating");
  return SymplecticPairing(std::move(p));
}

SymplecticPairing omega_of(const Pairing& p) {
  SymplecticPairing w = SymplecticPairing::from(pairing_sub(
      p, Pairing(p.group(), p.context(), [&] {
        const std::size_t r = p.group().rank();
        std::vector<CoeffVec> t;
        t.reserve(r * r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) t.push_back(p.entry(j, i));
        return t;
      }())));
  return w;
}

std::vector<GroupElement> adjoint_kernel(const Pairing& p) {
  const FinAbGroup& a = p.group();
  auto gens = a.generators();
  std::vector<GroupElement> kernel;
  for (const GroupElement& x : a.elements()) {
    bool in = true;
    for (const GroupElement& e : gens) {
      if (!p.eval(x, e).is_zero()) {
        in = false;
        break;
      }
    }
    if (in) kernel.push_back(x);
  }
  return kernel;
}

bool is_nondegenerate(const Pairing& p) { return adjoint_kernel(p).size() == 1; }

unsigned long long hom_count(const FinAbGroup& a, const CoeffContext& ctx) {
  unsigned long long n = 1;
  if (ctx.is_divisible()) {
    for (std::size_t k = 0; k < ctx.rank(); ++k) n *= a.order();
    return n;
  }
  for (long long ni : a.moduli())
    for (long long mj : ctx.moduli())
      n *= static_cast<unsigned long long>(std::gcd(ni, mj));
  return n;
}

bool is_regular(const Pairing& p) {
  const auto kernel = adjoint_kernel(p);
  if (kernel.size() != 1) return false;
  // Adjoint image has size |A| / |kernel|; regular means it is all of
  // Hom(A, C).
  return p.group().order() / kernel.size() == hom_count(p.group(), p.context());
}

Pairing beta_from_alternating(const SymplecticPairing& w) {
  const std::size_t r = w.group().rank();
  std::vector<CoeffVec> e(r * r, w.context().zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      e[i * r + j] = w.pairing().entry(i, j);
  Pairing b(w.group(), w.context(), std::move(e));
  if (!(omega_of(b) == w))
    throw std::logic_error("beta_from_alternating: postcondition failed");
  return b;
}

}  // namespace heis
