#include "heis/cocycle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heis {

namespace {

// Index form of the group addition table, the workhorse of every
// exhaustive law check below.
std::vector<std::uint32_t> add_index_table(const FinAbGroup& a) {
  const std::uint64_t n = a.order();
  std::vector<std::uint32_t> t(n * n);
  auto els = a.elements();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      t[i * n + j] = static_cast<std::uint32_t>(a.index_of(a.add(els[i], els[j])));
  return t;
}

std::string pow_estimate(unsigned long long base, unsigned long long exp) {
  std::string s = std::to_string(base) + "^" + std::to_string(exp);
  const double lg = static_cast<double>(exp) * std::log10(static_cast<double>(base));
  if (lg < 15) {
    unsigned long long v = 1;
    for (unsigned long long i = 0; i < exp; ++i) v *= base;
    s += " = " + std::to_string(v);
  } else {
    s += " ~ 10^" + std::to_string(static_cast<long long>(lg));
  }
  return s;
}

}  // namespace

Cocycle::Cocycle(FinAbGroup a, CoeffContext ctx, std::optional<Pairing> form,
                 std::vector<CoeffVec> values)
    : a_(std::move(a)), ctx_(std::move(ctx)), form_(std::move(form)),
      table_(std::move(values)) {}

namespace {
// Largest |A|^2 worth precomputing; above this a bimult cocycle
// evaluates through its pairing instead.
constexpr std::uint64_t kDenseCap = std::uint64_t(1) << 20;
}  // namespace

Cocycle Cocycle::bimult(Pairing p) {
  FinAbGroup a = p.group();
  CoeffContext ctx = p.context();
  const std::uint64_t n = a.order();
  std::vector<CoeffVec> t;
  if (n * n <= kDenseCap) {
    t.reserve(n * n);
    auto els = a.elements();
    for (const GroupElement& x : els)
      for (const GroupElement& y : els) t.push_back(p.eval(x, y));
  }
  return Cocycle(std::move(a), std::move(ctx), std::move(p), std::move(t));
}

Cocycle Cocycle::table(FinAbGroup a, CoeffContext ctx, std::vector<CoeffVec> values) {
  const std::uint64_t n = a.order();
  if (values.size() != n * n)
    throw std::invalid_argument("Cocycle: malformed table, expected " +
                                std::to_string(n * n) + " entries, got " +
                                std::to_string(values.size()));
  for (const CoeffVec& v : values) ctx.require(v, "Cocycle");
  return Cocycle(std::move(a), std::move(ctx), std::nullopt, std::move(values));
}

Cocycle Cocycle::zero(const FinAbGroup& a, const CoeffContext& ctx) {
  return bimult(Pairing::zero(a, ctx));
}

const Pairing& Cocycle::form() const {
  if (!form_) throw std::logic_error("Cocycle: not in bimultiplicative form");
  return *form_;
}

CoeffVec Cocycle::eval(const GroupElement& x, const GroupElement& y) const {
  if (table_.empty()) return form_->eval(x, y);
  return table_[a_.index_of(x) * a_.order() + a_.index_of(y)];
}

const CoeffVec& Cocycle::eval_idx(std::uint64_t i, std::uint64_t j) const {
  // Callers index only into materialized tables; every table-form cocycle
  // has one, and so does every bimult cocycle small enough for the
  // exhaustive scans that use this accessor.
  return table_[i * a_.order() + j];
}

const std::vector<CoeffVec>& Cocycle::dense() const {
  if (table_.empty())
    throw std::length_error("Cocycle: dense table of " +
                            std::to_string(a_.order() * a_.order()) +
                            " entries exceeds the materialization cap");
  return table_;
}

bool Cocycle::operator==(const Cocycle& o) const {
  // Compared as functions; storage form does not matter.
  if (!(a_ == o.a_ && ctx_ == o.ctx_)) return false;
  if (form_ && o.form_) return *form_ == *o.form_;
  return dense() == o.dense();
}

CocycleCheck verify_cocycle(const Cocycle& c, scan::Mode mode) {
  const FinAbGroup& a = c.group();
  const std::uint64_t n = a.order();
  if (n > 1024)
    throw std::length_error("verify_cocycle: group too large for the exhaustive check");

  // Normalization first: c(x,0) for all x, then c(0,x).
  auto norm_ok = [&](std::uint64_t v) {
    return v < n ? c.eval_idx(v, 0).is_zero() : c.eval_idx(0, v - n).is_zero();
  };
  if (auto v = scan::first_violation(2 * n, norm_ok, mode)) {
    CocycleCheck r;
    r.failure = CocycleCheck::Failure::normalization;
    r.x = a.at(*v < n ? *v : *v - n);
    r.y = a.zero();
    r.z = a.zero();
    if (*v >= n) std::swap(r.x, r.y);
    return r;
  }

  const auto add = add_index_table(a);
  auto triple_ok = [&](std::uint64_t t) {
    const std::uint64_t k = t % n, j = t / n % n, i = t / (n * n);
    return c.eval_idx(i, j) + c.eval_idx(add[i * n + j], k) ==
           c.eval_idx(j, k) + c.eval_idx(i, add[j * n + k]);
  };
  if (auto t = scan::first_violation(n * n * n, triple_ok, mode)) {
    CocycleCheck r;
    r.failure = CocycleCheck::Failure::identity;
    r.x = a.at(*t / (n * n));
    r.y = a.at(*t / n % n);
    r.z = a.at(*t % n);
    return r;
  }
  return CocycleCheck{};
}

Cocycle cocycle_add(const Cocycle& c, const Cocycle& d) {
  if (!(c.group() == d.group()) || !(c.context() == d.context()))
    throw std::invalid_argument("cocycle_add: group or context mismatch");
  if (c.is_bimult() && d.is_bimult())
    return Cocycle::bimult(pairing_add(c.form(), d.form()));
  std::vector<CoeffVec> t;
  t.reserve(c.dense().size());
  for (std::size_t i = 0; i < c.dense().size(); ++i)
    t.push_back(c.dense()[i] + d.dense()[i]);
  return Cocycle::table(c.group(), c.context(), std::move(t));
}

Cocycle cocycle_neg(const Cocycle& c) {
  if (c.is_bimult()) return Cocycle::bimult(pairing_neg(c.form()));
  std::vector<CoeffVec> t;
  t.reserve(c.dense().size());
  for (const CoeffVec& v : c.dense()) t.push_back(-v);
  return Cocycle::table(c.group(), c.context(), std::move(t));
}

Cocycle cocycle_sub(const Cocycle& c, const Cocycle& d) {
  return cocycle_add(c, cocycle_neg(d));
}

bool is_symmetric(const Cocycle& c) {
  if (c.is_bimult()) return c.form().is_symmetric();
  const std::uint64_t n = c.group().order();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j)
      if (!(c.eval_idx(i, j) == c.eval_idx(j, i))) return false;
  return true;
}

CochainFunction::CochainFunction(FinAbGroup a_, CoeffContext ctx_,
                                 std::vector<CoeffVec> values_)
    : a(std::move(a_)), ctx(std::move(ctx_)), values(std::move(values_)) {
  if (values.size() != a.order())
    throw std::invalid_argument("CochainFunction: expected one value per element");
  if (!values[0].is_zero())
    throw std::invalid_argument("CochainFunction: f(0) must be 0");
  for (const CoeffVec& v : values) ctx.require(v, "CochainFunction");
}

bool CochainFunction::operator==(const CochainFunction& o) const {
  return a == o.a && ctx == o.ctx && values == o.values;
}

Cocycle morphism_defect(const CochainFunction& f) {
  const FinAbGroup& a = f.a;
  const std::uint64_t n = a.order();
  const auto add = add_index_table(a);
  std::vector<CoeffVec> t;
  t.reserve(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      t.push_back(f.values[add[i * n + j]] - f.values[i] - f.values[j]);
  return Cocycle::table(a, f.ctx, std::move(t));
}

SymplecticPairing omega_c(const Cocycle& c) {
  if (c.is_bimult()) return omega_of(c.form());

  const FinAbGroup& a = c.group();
  const std::size_t r = a.rank();
  const std::uint64_t n = a.order();
  std::vector<std::uint64_t> gen_idx(r);
  for (std::size_t i = 0; i < r; ++i) gen_idx[i] = a.index_of(a.generator(i));
  std::vector<CoeffVec> w;
  w.reserve(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      w.push_back(c.eval_idx(gen_idx[i], gen_idx[j]) -
                  c.eval_idx(gen_idx[j], gen_idx[i]));
  Pairing wp = [&] {
    try {
      return Pairing(a, c.context(), std::move(w));
    } catch (const std::invalid_argument& e) {
      throw std::logic_error(
          std::string("omega_c: table is not a cocycle; generator "
                      "antisymmetrization is not a pairing: ") +
          e.what());
    }
  }();

  // The generator matrix must reproduce the whole antisymmetrized table;
  // anything else means the input violated the cocycle laws.
  auto els = a.elements();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      if (!(c.eval_idx(i, j) - c.eval_idx(j, i) == wp.eval(els[i], els[j])))
        throw std::logic_error(
            "omega_c: table is not a cocycle; antisymmetrization is not "
            "bimultiplicative at pair (" + std::to_string(i) + "," +
            std::to_string(j) + ")");
  return SymplecticPairing::from(std::move(wp));
}

CochainFunction quadratic_refinement(const Cocycle& c) {
  if (!is_symmetric(c))
    throw std::invalid_argument("quadratic_refinement: cocycle is not symmetric");
  const FinAbGroup& a = c.group();
  const CoeffContext& ctx = c.context();
  const std::size_t r = a.rank();
  const auto& n = a.moduli();

  // One obstruction per cyclic factor: t_i telescopes c along powers of
  // e_i, and f(e_i) must solve n_i * u = -t_i.
  std::vector<CoeffVec> u;
  u.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    GroupElement e = a.generator(i);
    CoeffVec t = ctx.zero();
    GroupElement p = e;
    for (long long j = 1; j < n[i]; ++j) {
      t = t + c.eval(p, e);
      p = a.add(p, e);
    }
    try {
      u.push_back(ctx.divide(-t, n[i]));
    } catch (const std::domain_error&) {
      throw std::domain_error(
          "quadratic_refinement: no refinement in this coefficient group");
    }
  }

  // Extend multiplicatively over canonical coordinates, factors in index
  // order, tracking the central part of prod_i (u_i, e_i)^{x_i}.
  const std::uint64_t ord = a.order();
  std::vector<CoeffVec> vals;
  vals.reserve(ord);
  for (std::uint64_t idx = 0; idx < ord; ++idx) {
    GroupElement x = a.at(idx);
    CoeffVec t = ctx.zero();
    GroupElement acc = a.zero();
    for (std::size_t i = 0; i < r; ++i) {
      GroupElement e = a.generator(i);
      for (long long k = 0; k < x.x[i]; ++k) {
        t = t + u[i] + c.eval(acc, e);
        acc = a.add(acc, e);
      }
    }
    vals.push_back(std::move(t));
  }
  CochainFunction f(a, ctx, std::move(vals));

  // Exhaustive re-check before handing the refinement out.
  if (!(morphism_defect(f) == Cocycle::table(a, ctx, c.dense())))
    throw std::logic_error("quadratic_refinement: verification failed");
  return f;
}

std::optional<CochainFunction> brute_refinement(const Cocycle& c,
                                                long long denom_bound,
                                                scan::Mode mode) {
  if (denom_bound <= 0)
    throw std::invalid_argument("brute_refinement: bound must be positive");
  const FinAbGroup& a = c.group();
  const CoeffContext& ctx = c.context();
  const std::uint64_t n = a.order();
  const unsigned long long per = ctx.torsion_count(denom_bound);
  constexpr unsigned long long kLimit = 10'000'000;

  unsigned long long space = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    if (space > kLimit / per + 1) {
      space = kLimit + 1;
      break;
    }
    space *= per;
  }
  if (space > kLimit)
    throw std::length_error("brute_refinement: search space " +
                            pow_estimate(per, n - 1) + " exceeds " +
                            std::to_string(kLimit));

  const auto vals = ctx.torsion_values(denom_bound);
  const auto add = add_index_table(a);
  const auto& table = c.dense();

  // Candidate k encodes (f(1), ..., f(n-1)) base `per`, element 1 most
  // significant, so the first match is the lexicographically least f.
  auto decode = [&](std::uint64_t k, std::vector<std::uint32_t>& digit) {
    digit.assign(n, 0);
    for (std::uint64_t i = n; i-- > 1;) {
      digit[i] = static_cast<std::uint32_t>(k % per);
      k /= per;
    }
  };
  auto matches = [&](std::uint64_t k) {
    thread_local std::vector<std::uint32_t> digit;
    decode(k, digit);
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) {
        const CoeffVec& want = table[i * n + j];
        if (!(vals[digit[add[i * n + j]]] - vals[digit[i]] - vals[digit[j]] == want))
          return false;
      }
    return true;
  };

  auto hit = scan::first_match(space, matches, mode);
  if (!hit) return std::nullopt;
  std::vector<std::uint32_t> digit;
  decode(*hit, digit);
  std::vector<CoeffVec> fv;
  fv.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) fv.push_back(vals[digit[i]]);
  return CochainFunction(a, ctx, std::move(fv));
}

CohomologyVerdict cohomologous(const Cocycle& c, const Cocycle& cprime) {
  if (!(c.group() == cprime.group()) || !(c.context() == cprime.context()))
    throw std::invalid_argument("cohomologous: group or context mismatch");
  const FinAbGroup& a = c.group();
  const CoeffContext& ctx = c.context();

  SymplecticPairing wc = omega_c(c), wp = omega_c(cprime);
  CohomologyVerdict v;
  v.omega_equal = wc == wp;
  if (!v.omega_equal) {
    const std::size_t r = a.rank();
    for (std::size_t i = 0; i < r && !v.separator; ++i)
      for (std::size_t j = 0; j < r && !v.separator; ++j)
        if (!(wc.pairing().entry(i, j) == wp.pairing().entry(i, j)))
          v.separator = {a.generator(i), a.generator(j)};
  }

  Cocycle d = cocycle_sub(c, cprime);
  if (ctx.is_divisible()) {
    if (v.omega_equal) v.certificate = quadratic_refinement(d);
    return v;
  }

  // Finite coefficients: omega equality is necessary but not sufficient;
  // existence of an in-context refinement is decided by exhaustive search
  // and reported on its own.
  if (!v.omega_equal) {
    v.refinable_in_context = false;
    return v;
  }
  long long lcm = 1;
  for (long long m : ctx.moduli()) lcm = std::lcm(lcm, m);
  auto f = brute_refinement(d, lcm);
  v.refinable_in_context = f.has_value();
  if (f) v.certificate = std::move(*f);
  return v;
}

BimultRepresentative bimult_representative(const Cocycle& c) {
  SymplecticPairing w = omega_c(c);
  Pairing beta = beta_from_alternating(w);
  Cocycle d = cocycle_sub(c, Cocycle::bimult(beta));
  if (!is_symmetric(d))
    throw std::logic_error("bimult_representative: difference is not symmetric");
  CochainFunction f = quadratic_refinement(d);
  return BimultRepresentative{std::move(beta), std::move(f)};
}

unsigned long long h2_order(const FinAbGroup& a, const CoeffContext& ctx) {
  unsigned long long h = 1;
  const auto& n = a.moduli();
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      h *= ctx.torsion_count(std::gcd(n[i], n[j]));
  return h;
}

std::vector<Cocycle> enumerate_cocycles(const FinAbGroup& a,
                                        const CoeffContext& ctx,
                                        scan::Mode mode) {
  if (ctx.is_divisible())
    throw std::invalid_argument("enumerate_cocycles: finite coefficients required");
  const std::uint64_t n = a.order();
  const unsigned long long per = ctx.size();
  const std::uint64_t free_pos = (n - 1) * (n - 1);
  constexpr unsigned long long kLimit = 10'000'000;

  unsigned long long space = 1;
  for (std::uint64_t p = 0; p < free_pos; ++p) {
    if (space > kLimit / per + 1) {
      space = kLimit + 1;
      break;
    }
    space *= per;
  }
  if (space > kLimit)
    throw std::length_error("enumerate_cocycles: candidate space " +
                            pow_estimate(per, free_pos) + " exceeds " +
                            std::to_string(kLimit));

  const auto vals = ctx.values();
  const auto add = add_index_table(a);

  // Value-index addition keeps the identity check in plain integers; for
  // an unusually large coefficient group fall back to direct vector sums.
  const bool fast = per <= 2048;
  std::vector<std::uint32_t> vadd;
  if (fast) {
    vadd.resize(per * per);
    for (unsigned long long u = 0; u < per; ++u)
      for (unsigned long long w = 0; w < per; ++w)
        vadd[u * per + w] = static_cast<std::uint32_t>(ctx.index_of(vals[u] + vals[w]));
  }

  // Candidate digits fill positions (x,y), x,y nonzero, row-major, first
  // position most significant.
  auto decode = [&](std::uint64_t k, std::vector<std::uint32_t>& t) {
    t.assign(n * n, 0);
    for (std::uint64_t x = n - 1; x >= 1; --x)
      for (std::uint64_t y = n - 1; y >= 1; --y) {
        t[x * n + y] = static_cast<std::uint32_t>(k % per);
        k /= per;
      }
  };
  auto is_cocycle = [&](std::uint64_t k) {
    thread_local std::vector<std::uint32_t> t;
    decode(k, t);
    for (std::uint64_t i = 1; i < n; ++i)
      for (std::uint64_t j = 1; j < n; ++j) {
        const std::uint64_t ij = add[i * n + j];
        for (std::uint64_t l = 1; l < n; ++l) {
          const std::uint64_t jl = add[j * n + l];
          if (fast) {
            if (vadd[t[i * n + j] * per + t[ij * n + l]] !=
                vadd[t[j * n + l] * per + t[i * n + jl]])
              return false;
          } else if (!(vals[t[i * n + j]] + vals[t[ij * n + l]] ==
                       vals[t[j * n + l]] + vals[t[i * n + jl]])) {
            return false;
          }
        }
      }
    return true;
  };

  auto good = scan::collect_matching(space, is_cocycle, mode);
  std::vector<Cocycle> out;
  out.reserve(good.size());
  std::vector<std::uint32_t> t;
  for (std::uint64_t k : good) {
    decode(k, t);
    std::vector<CoeffVec> tv;
    tv.reserve(n * n);
    for (std::uint64_t i = 0; i < n * n; ++i) tv.push_back(vals[t[i]]);
    out.push_back(Cocycle::table(a, ctx, std::move(tv)));
  }
  return out;
}

}  // namespace heis
