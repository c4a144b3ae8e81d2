#include "heis/fab.hpp"

#include <numeric>
#include <stdexcept>

namespace heis {

bool GroupElement::is_zero() const {
  for (long long c : x)
    if (c != 0) return false;
  return true;
}

FinAbGroup::FinAbGroup(std::vector<long long> moduli) {
  for (long long n : moduli) {
    if (n <= 0) throw std::invalid_argument("FinAbGroup: moduli must be positive");
    if (n > 1) moduli_.push_back(n);
  }
  order_ = 1;
  for (long long n : moduli_) order_ *= static_cast<unsigned long long>(n);
}

void FinAbGroup::check(const GroupElement& a, const char* what) const {
  if (a.x.size() != moduli_.size())
    throw std::invalid_argument(std::string(what) + ": wrong coordinate count");
}

GroupElement FinAbGroup::element(std::vector<long long> coords) const {
  if (coords.size() != moduli_.size())
    throw std::invalid_argument("FinAbGroup::element: wrong coordinate count");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] < 0 || coords[i] >= moduli_[i])
      throw std::invalid_argument("FinAbGroup::element: coordinate " +
                                  std::to_string(i + 1) + " out of range");
  return GroupElement{std::move(coords)};
}

GroupElement FinAbGroup::reduce(std::vector<long long> coords) const {
  if (coords.size() != moduli_.size())
    throw std::invalid_argument("FinAbGroup::reduce: wrong coordinate count");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    long long r = coords[i] % moduli_[i];
    coords[i] = r < 0 ? r + moduli_[i] : r;
  }
  return GroupElement{std::move(coords)};
}

GroupElement FinAbGroup::zero() const {
  return GroupElement{std::vector<long long>(moduli_.size(), 0)};
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a, "FinAbGroup::add");
  check(b, "FinAbGroup::add");
  std::vector<long long> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (a.x[i] + b.x[i]) % moduli_[i];
  return GroupElement{std::move(c)};
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
  check(a, "FinAbGroup::neg");
  std::vector<long long> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.x[i] == 0 ? 0 : moduli_[i] - a.x[i];
  return GroupElement{std::move(c)};
}

GroupElement FinAbGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement FinAbGroup::scale(const GroupElement& a, long long k) const {
  check(a, "FinAbGroup::scale");
  std::vector<long long> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long r = (a.x[i] % moduli_[i]) * (k % moduli_[i]) % moduli_[i];
    c[i] = r < 0 ? r + moduli_[i] : r;
  }
  return GroupElement{std::move(c)};
}

long long FinAbGroup::element_order(const GroupElement& a) const {
  check(a, "FinAbGroup::element_order");
  long long ord = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    ord = std::lcm(ord, moduli_[i] / std::gcd(a.x[i], moduli_[i]));
  return ord;
}

std::vector<GroupElement> FinAbGroup::generators() const {
  std::vector<GroupElement> g;
  g.reserve(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) g.push_back(generator(i));
  return g;
}

GroupElement FinAbGroup::generator(std::size_t i) const {
  if (i >= moduli_.size()) throw std::out_of_range("FinAbGroup::generator");
  GroupElement e = zero();
  e.x[i] = 1;
  return e;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (unsigned long long i = 0; i < order_; ++i) out.push_back(at(i));
  return out;
}

unsigned long long FinAbGroup::index_of(const GroupElement& a) const {
  check(a, "FinAbGroup::index_of");
  unsigned long long idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    idx = idx * static_cast<unsigned long long>(moduli_[i]) +
          static_cast<unsigned long long>(a.x[i]);
  return idx;
}

GroupElement FinAbGroup::at(unsigned long long idx) const {
  std::vector<long long> c(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    auto n = static_cast<unsigned long long>(moduli_[i]);
    c[i] = static_cast<long long>(idx % n);
    idx /= n;
  }
  if (idx != 0) throw std::out_of_range("FinAbGroup::at");
  return GroupElement{std::move(c)};
}

}  // namespace heis
