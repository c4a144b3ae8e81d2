#include "heis/qz.hpp"

#include <numeric>
#include <utility>

namespace heis {

namespace {

// Denominators in this library come from lcms of small moduli and from
// dividing by small integers; anything past this bound indicates runaway
// input rather than legitimate use.
constexpr long long kDenLimit = 1'000'000'000'000LL;

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a mod m for gcd(a, m) = 1, extended Euclid.
long long mod_inverse(long long a, long long m) {
  long long t = 0, new_t = 1;
  long long r = m, new_r = mod_floor(a, m);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_floor(t, m);
}

}  // namespace

QZ::QZ(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("QZ: denominator must be positive");
  if (den > kDenLimit) throw std::overflow_error("QZ: denominator too large");
  num = mod_floor(num, den);
  long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

QZ QZ::operator+(const QZ& o) const {
  long long l = std::lcm(den_, o.den_);
  if (l > kDenLimit) throw std::overflow_error("QZ: denominator too large");
  return QZ(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

QZ QZ::operator-() const { return QZ(den_ - num_, den_); }

QZ QZ::times(long long k) const {
  k = mod_floor(k, den_);
  auto p = static_cast<__int128>(k) * num_ % den_;
  return QZ(static_cast<long long>(p), den_);
}

bool QZ::operator<(const QZ& o) const {
  // Compare num_/den_ as rationals in [0, 1); cross products stay well
  // inside long long at the denominator bound enforced above.
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

std::string QZ::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QZ qz_divide(const QZ& a, long long n) {
  if (n <= 0) throw std::invalid_argument("qz_divide: divisor must be positive");
  return QZ(a.num(), a.den() * n);
}

QZ qz_divide_mod(const QZ& a, long long n, long long m) {
  if (n <= 0) throw std::invalid_argument("qz_divide_mod: divisor must be positive");
  if (m <= 0 || m % a.den() != 0)
    throw std::invalid_argument("qz_divide_mod: value lies outside (1/m)Z/Z");
  // Solve n*t = s (mod m) over denominator m, smallest t.
  long long s = a.num() * (m / a.den());
  long long g = std::gcd(n % m, m);  // gcd(0, m) = m
  if (s % g != 0)
    throw std::domain_error("qz_divide_mod: not divisible in this coefficient group");
  long long mg = m / g;
  long long t = mg == 1 ? 0 : mod_floor((s / g) % mg * mod_inverse((n / g) % mg, mg), mg);
  return QZ(t, m);
}

bool qz_divisible_mod(const QZ& a, long long n, long long m) {
  if (m % a.den() != 0) return false;
  long long s = a.num() * (m / a.den());
  long long g = std::gcd(n % m, m);
  return s % g == 0;
}

bool CoeffVec::is_zero() const {
  for (const QZ& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

long long CoeffVec::order() const {
  long long l = 1;
  for (const QZ& c : coords) l = std::lcm(l, c.order());
  return l;
}

CoeffVec operator+(const CoeffVec& a, const CoeffVec& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("CoeffVec: rank mismatch");
  CoeffVec r;
  r.coords.reserve(a.coords.size());
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    r.coords.push_back(a.coords[i] + b.coords[i]);
  return r;
}

CoeffVec operator-(const CoeffVec& a) {
  CoeffVec r;
  r.coords.reserve(a.coords.size());
  for (const QZ& c : a.coords) r.coords.push_back(-c);
  return r;
}

CoeffVec operator-(const CoeffVec& a, const CoeffVec& b) { return a + (-b); }

CoeffVec cv_times(const CoeffVec& a, long long k) {
  CoeffVec r;
  r.coords.reserve(a.coords.size());
  for (const QZ& c : a.coords) r.coords.push_back(c.times(k));
  return r;
}

CoeffContext::CoeffContext(bool divisible, std::size_t rank,
                           std::vector<long long> moduli)
    : divisible_(divisible), rank_(rank), moduli_(std::move(moduli)) {}

CoeffContext CoeffContext::divisible(std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("CoeffContext: rank must be positive");
  return CoeffContext(true, rank, {});
}

CoeffContext CoeffContext::finite(std::vector<long long> moduli) {
  if (moduli.empty()) throw std::invalid_argument("CoeffContext: rank must be positive");
  for (long long m : moduli)
    if (m <= 0) throw std::invalid_argument("CoeffContext: moduli must be positive");
  const std::size_t rank = moduli.size();
  return CoeffContext(false, rank, std::move(moduli));
}

const std::vector<long long>& CoeffContext::moduli() const {
  if (divisible_) throw std::logic_error("CoeffContext: divisible context has no moduli");
  return moduli_;
}

unsigned long long CoeffContext::size() const {
  if (divisible_) throw std::logic_error("CoeffContext: divisible context is infinite");
  unsigned long long n = 1;
  for (long long m : moduli_) n *= static_cast<unsigned long long>(m);
  return n;
}

bool CoeffContext::contains(const CoeffVec& v) const {
  if (v.coords.size() != rank_) return false;
  if (divisible_) return true;
  for (std::size_t j = 0; j < rank_; ++j)
    if (moduli_[j] % v.coords[j].den() != 0) return false;
  return true;
}

void CoeffContext::require(const CoeffVec& v, const char* what) const {
  if (!contains(v))
    throw std::invalid_argument(std::string(what) +
                                ": value lies outside the coefficient group");
}

CoeffVec CoeffContext::zero() const {
  CoeffVec r;
  r.coords.assign(rank_, QZ());
  return r;
}

CoeffVec CoeffContext::generator(std::size_t j) const {
  if (j >= rank_) throw std::out_of_range("CoeffContext: generator index");
  CoeffVec r = zero();
  r.coords[j] = divisible_ ? QZ(1, 1) : QZ(1, moduli_[j]);
  return r;
}

CoeffVec CoeffContext::divide(const CoeffVec& v, long long n) const {
  require(v, "CoeffContext::divide");
  CoeffVec r;
  r.coords.reserve(rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    r.coords.push_back(divisible_ ? qz_divide(v.coords[j], n)
                                  : qz_divide_mod(v.coords[j], n, moduli_[j]));
  return r;
}

bool CoeffContext::divisible_by(const CoeffVec& v, long long n) const {
  if (divisible_) return true;
  for (std::size_t j = 0; j < rank_; ++j)
    if (!qz_divisible_mod(v.coords[j], n, moduli_[j])) return false;
  return true;
}

unsigned long long CoeffContext::torsion_count(long long m) const {
  unsigned long long n = 1;
  for (std::size_t j = 0; j < rank_; ++j)
    n *= static_cast<unsigned long long>(divisible_ ? m : std::gcd(m, moduli_[j]));
  return n;
}

std::vector<CoeffVec> CoeffContext::torsion_values(long long m) const {
  std::vector<long long> sizes(rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    sizes[j] = divisible_ ? m : std::gcd(m, moduli_[j]);
  std::vector<CoeffVec> out;
  std::vector<long long> digit(rank_, 0);
  for (;;) {
    CoeffVec v;
    v.coords.reserve(rank_);
    for (std::size_t j = 0; j < rank_; ++j) v.coords.emplace_back(digit[j], sizes[j]);
    out.push_back(std::move(v));
    std::size_t j = rank_;
    while (j > 0 && ++digit[j - 1] == sizes[j - 1]) digit[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

std::vector<CoeffVec> CoeffContext::values() const {
  if (divisible_) throw std::logic_error("CoeffContext: divisible context is infinite");
  std::vector<CoeffVec> out;
  out.reserve(size());
  for (unsigned long long i = 0; i < size(); ++i) out.push_back(value_at(i));
  return out;
}

unsigned long long CoeffContext::index_of(const CoeffVec& v) const {
  require(v, "CoeffContext::index_of");
  if (divisible_) throw std::logic_error("CoeffContext: divisible context is infinite");
  unsigned long long idx = 0;
  for (std::size_t j = 0; j < rank_; ++j) {
    const QZ& c = v.coords[j];
    idx = idx * static_cast<unsigned long long>(moduli_[j]) +
          static_cast<unsigned long long>(c.num() * (moduli_[j] / c.den()));
  }
  return idx;
}

CoeffVec CoeffContext::value_at(unsigned long long idx) const {
  if (divisible_) throw std::logic_error("CoeffContext: divisible context is infinite");
  CoeffVec v;
  v.coords.assign(rank_, QZ());
  for (std::size_t j = rank_; j-- > 0;) {
    auto m = static_cast<unsigned long long>(moduli_[j]);
    v.coords[j] = QZ(static_cast<long long>(idx % m), moduli_[j]);
    idx /= m;
  }
  if (idx != 0) throw std::out_of_range("CoeffContext::value_at");
  return v;
}

}  // namespace heis
