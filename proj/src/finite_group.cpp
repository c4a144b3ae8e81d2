#include "heis/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heis {

namespace {

std::string at_pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t identity, std::vector<std::uint32_t> table)
    : mul_(std::move(table)) {
  const auto sz = mul_.size();
  n_ = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(sz))));
  if (n_ == 0 || n_ * n_ != sz)
    throw std::invalid_argument("FiniteGroup: table size " + std::to_string(sz) +
                                " is not a positive square");
  if (identity >= n_)
    throw std::invalid_argument("FiniteGroup: identity index out of range");
  id_ = static_cast<std::uint32_t>(identity);

  for (std::size_t i = 0; i < sz; ++i)
    if (mul_[i] >= n_)
      throw std::invalid_argument("FiniteGroup: entry " + at_pair(i / n_, i % n_) +
                                  " out of range");

  // Latin square: every row and every column is a permutation.
  std::vector<char> seen(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n_; ++j) {
      std::uint32_t v = mul_[i * n_ + j];
      if (seen[v])
        throw std::invalid_argument("FiniteGroup: row " + std::to_string(i) +
                                    " repeats entry " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t v = mul_[i * n_ + j];
      if (seen[v])
        throw std::invalid_argument("FiniteGroup: column " + std::to_string(j) +
                                    " repeats entry " + std::to_string(v));
      seen[v] = 1;
    }
  }

  for (std::uint32_t g = 0; g < n_; ++g)
    if (mul(id_, g) != g || mul(g, id_) != g)
      throw std::invalid_argument("FiniteGroup: " + std::to_string(identity) +
                                  " is not a two-sided identity at " +
                                  std::to_string(g));

  inv_.resize(n_);
  for (std::uint32_t g = 0; g < n_; ++g) {
    std::uint32_t h = 0;
    while (mul(g, h) != id_) ++h;  // exists: row g is a permutation
    if (mul(h, g) != id_)
      throw std::invalid_argument("FiniteGroup: element " + std::to_string(g) +
                                  " has no two-sided inverse");
    inv_[g] = h;
  }

  // Exhaustive associativity for small tables; larger ones rely on the
  // structural checks above.
  if (n_ <= 512) {
    const std::uint64_t n = n_;
    const std::uint32_t* t = mul_.data();
    auto assoc = [t, n](std::uint64_t v) {
      const std::uint32_t k = static_cast<std::uint32_t>(v % n);
      const std::uint32_t j = static_cast<std::uint32_t>((v / n) % n);
      const std::uint32_t i = static_cast<std::uint32_t>(v / (n * n));
      return t[t[i * n + j] * n + k] == t[i * n + t[j * n + k]];
    };
    if (auto bad = scan::first_violation(n * n * n, assoc)) {
      const std::uint64_t v = *bad;
      throw std::invalid_argument(
          "FiniteGroup: not associative at (" + std::to_string(v / (n * n)) +
          ", " + std::to_string((v / n) % n) + ", " + std::to_string(v % n) + ")");
    }
  }
}

std::size_t FiniteGroup::element_order(std::uint32_t i) const {
  std::size_t k = 1;
  std::uint32_t acc = i;
  while (acc != id_) {
    acc = mul(acc, i);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::vector<std::uint32_t> center(const FiniteGroup& g) {
  std::vector<std::uint32_t> z;
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t i = 0; i < n; ++i) {
    bool central = true;
    for (std::uint32_t j = 0; j < n && central; ++j)
      central = g.mul(i, j) == g.mul(j, i);
    if (central) z.push_back(i);
  }
  return z;
}

std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::uint32_t> work{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < work.size(); ++head)
    for (std::uint32_t s : seeds) {
      std::uint32_t p = g.mul(work[head], s);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<std::uint32_t> commutator_subgroup(const FiniteGroup& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t c = g.commutator(i, j);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_closure(g, gens);
}

bool is_class_at_most_2(const FiniteGroup& g) {
  std::vector<std::uint32_t> z = center(g);
  std::vector<char> in_z(g.order(), 0);
  for (std::uint32_t i : z) in_z[i] = 1;
  for (std::uint32_t c : commutator_subgroup(g))
    if (!in_z[c]) return false;
  return true;
}

std::optional<int> lower_central_class(const FiniteGroup& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> layer(n);
  for (std::uint32_t i = 0; i < n; ++i) layer[i] = i;
  int k = 0;
  while (true) {
    if (layer.size() == 1) return k;
    // next term: subgroup generated by [g, x] over x in the current term
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> gens;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t x : layer) {
        std::uint32_t c = g.commutator(i, x);
        if (!seen[c]) {
          seen[c] = 1;
          gens.push_back(c);
        }
      }
    std::vector<std::uint32_t> next = subgroup_closure(g, gens);
    if (next.size() == layer.size()) return std::nullopt;  // stabilized above 1
    layer = std::move(next);
    ++k;
  }
}

CommutatorPairing commutator_pairing_report(const FiniteGroup& g) {
  CommutatorPairing r;
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  r.center = center(g);
  r.commutators = commutator_subgroup(g);

  // Lowest-index representative per center coset.
  r.coset_rep.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t m = i;
    for (std::uint32_t z : r.center) m = std::min(m, g.mul(i, z));
    r.coset_rep[i] = m;
  }
  r.reps = r.coset_rep;
  std::sort(r.reps.begin(), r.reps.end());
  r.reps.erase(std::unique(r.reps.begin(), r.reps.end()), r.reps.end());
  std::vector<std::uint32_t> rep_index(n, 0);
  for (std::uint32_t qi = 0; qi < r.reps.size(); ++qi)
    rep_index[r.reps[qi]] = qi;

  const std::size_t q = r.reps.size();
  r.table.resize(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      r.table[i * q + j] = g.commutator(r.reps[i], r.reps[j]);

  // Well-defined: the commutator only sees the cosets.
  r.well_defined = true;
  for (std::uint32_t i = 0; i < n && r.well_defined; ++i)
    for (std::uint32_t j = 0; j < n && r.well_defined; ++j)
      r.well_defined = g.commutator(i, j) ==
                       r.table[rep_index[r.coset_rep[i]] * q +
                               rep_index[r.coset_rep[j]]];

  r.alternating = true;
  for (std::size_t i = 0; i < q && r.alternating; ++i)
    r.alternating = r.table[i * q + i] == g.identity();

  // Bimultiplicative in each slot, on coset representatives.
  r.bimultiplicative = true;
  for (std::uint32_t i = 0; i < q && r.bimultiplicative; ++i)
    for (std::uint32_t j = 0; j < q && r.bimultiplicative; ++j)
      for (std::uint32_t k = 0; k < q && r.bimultiplicative; ++k) {
        std::uint32_t ij = rep_index[r.coset_rep[g.mul(r.reps[i], r.reps[j])]];
        bool left = r.table[ij * q + k] ==
                    g.mul(r.table[i * q + k], r.table[j * q + k]);
        bool right = r.table[k * q + ij] ==
                     g.mul(r.table[k * q + i], r.table[k * q + j]);
        if (!left || !right) {
          r.bimultiplicative = false;
          r.bimult_witness = {{i, j, k}};
        }
      }

  r.nondegenerate = true;
  const std::uint32_t id_coset = rep_index[r.coset_rep[g.identity()]];
  for (std::uint32_t i = 0; i < q && r.nondegenerate; ++i) {
    if (i == id_coset) continue;
    bool pairs = false;
    for (std::uint32_t j = 0; j < q && !pairs; ++j)
      pairs = r.table[i * q + j] != g.identity();
    r.nondegenerate = pairs;
  }
  return r;
}

CommutatorPairing commutator_pairing(const FiniteGroup& g) {
  CommutatorPairing r = commutator_pairing_report(g);
  if (!r.ok())
    throw std::domain_error(
        "commutator map does not descend to a bimultiplicative pairing: "
        "[G,G] is not contained in Z(G)");
  return r;
}

namespace {

std::uint32_t table_pow(const FiniteGroup& g, std::uint32_t base, long long e) {
  std::uint32_t acc = g.identity();
  for (long long i = 0; i < e; ++i) acc = g.mul(acc, base);
  return acc;
}

}  // namespace

AbelianStructure abelian_structure(const FiniteGroup& b) {
  if (!b.is_abelian())
    throw std::invalid_argument("abelian_structure: group is not abelian");

  // Peel off a maximal-order cyclic summand, quotient, repeat.  Each
  // level keeps its coset membership lists so generators can be lifted
  // back down with their orders intact.
  std::vector<FiniteGroup> chain{b};
  std::vector<long long> mods;
  std::vector<std::uint32_t> gen_at_level;
  std::vector<std::vector<std::vector<std::uint32_t>>> cosets;

  while (chain.back().order() > 1) {
    const FiniteGroup& cur = chain.back();
    const std::uint32_t n = static_cast<std::uint32_t>(cur.order());

    std::uint32_t gmax = cur.identity();
    std::size_t best = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::size_t o = cur.element_order(i);
      if (o > best) {
        best = o;
        gmax = i;
      }
    }
    mods.push_back(static_cast<long long>(best));
    gen_at_level.push_back(gmax);

    std::vector<std::uint32_t> cyc;
    std::uint32_t acc = cur.identity();
    do {
      cyc.push_back(acc);
      acc = cur.mul(acc, gmax);
    } while (acc != cur.identity());

    std::vector<std::uint32_t> rep(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t m = i;
      for (std::uint32_t h : cyc) m = std::min(m, cur.mul(i, h));
      rep[i] = m;
    }
    std::vector<std::uint32_t> qreps = rep;
    std::sort(qreps.begin(), qreps.end());
    qreps.erase(std::unique(qreps.begin(), qreps.end()), qreps.end());
    std::vector<std::uint32_t> qindex(n, 0);
    for (std::uint32_t qi = 0; qi < qreps.size(); ++qi) qindex[qreps[qi]] = qi;

    std::vector<std::vector<std::uint32_t>> members(qreps.size());
    for (std::uint32_t i = 0; i < n; ++i) members[qindex[rep[i]]].push_back(i);
    cosets.push_back(members);

    const std::uint32_t q = static_cast<std::uint32_t>(qreps.size());
    std::vector<std::uint32_t> qt(static_cast<std::size_t>(q) * q);
    for (std::uint32_t i = 0; i < q; ++i)
      for (std::uint32_t j = 0; j < q; ++j)
        qt[static_cast<std::size_t>(i) * q + j] =
            qindex[rep[cur.mul(qreps[i], qreps[j])]];
    chain.emplace_back(qindex[rep[cur.identity()]], std::move(qt));
  }

  // Lift a level-k element to an order-preserving element of level 0.
  auto lift = [&](std::size_t level, std::uint32_t x) {
    while (level > 0) {
      const FiniteGroup& down = chain[level - 1];
      const std::size_t want = chain[level].element_order(x);
      std::uint32_t pick = 0;
      bool found = false;
      for (std::uint32_t m : cosets[level - 1][x])
        if (down.element_order(m) == want) {
          pick = m;
          found = true;
          break;
        }
      if (!found)
        throw std::logic_error(
            "abelian_structure: no order-preserving coset representative");
      x = pick;
      --level;
    }
    return x;
  };

  std::vector<std::uint32_t> gens;
  for (std::size_t k = 0; k < mods.size(); ++k)
    gens.push_back(lift(k, gen_at_level[k]));

  std::reverse(mods.begin(), mods.end());
  std::reverse(gens.begin(), gens.end());

  FinAbGroup a(mods);
  std::vector<std::uint32_t> to_group;
  for (const GroupElement& x : a.elements()) {
    std::uint32_t acc = b.identity();
    for (std::size_t r = 0; r < a.rank(); ++r)
      acc = b.mul(acc, table_pow(b, gens[r], x.x[r]));
    to_group.push_back(acc);
  }

  // Postcondition: bijective homomorphism.
  std::vector<char> hit(b.order(), 0);
  for (std::uint32_t i : to_group) {
    if (hit[i]) throw std::logic_error("abelian_structure: map is not injective");
    hit[i] = 1;
  }
  if (to_group.size() != b.order())
    throw std::logic_error("abelian_structure: map is not onto");
  const auto& elems = a.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (to_group[a.index_of(a.add(elems[i], elems[j]))] !=
          b.mul(to_group[i], to_group[j]))
        throw std::logic_error("abelian_structure: map is not a homomorphism");

  return AbelianStructure{std::move(a), std::move(to_group)};
}

namespace {

constexpr std::size_t kMaxBuiltin = 4096;

long long mod_floor(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteGroup cyclic_group(long long n) {
  if (n <= 0 || static_cast<std::size_t>(n) > kMaxBuiltin)
    throw std::invalid_argument("cyclic_group: order out of range");
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      t[i * m + j] = static_cast<std::uint32_t>((i + j) % m);
  return FiniteGroup(0, std::move(t));
}

FiniteGroup klein_group() {
  std::vector<std::uint32_t> t(16);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) t[i * 4 + j] = i ^ j;
  return FiniteGroup(0, std::move(t));
}

FiniteGroup dihedral_group(long long n) {
  if (n <= 0 || static_cast<std::size_t>(n) > kMaxBuiltin / 2)
    throw std::invalid_argument("dihedral_group: order out of range");
  // index e*n + i represents r^i s^e; s r = r^-1 s
  const long long sz = 2 * n;
  std::vector<std::uint32_t> t(static_cast<std::size_t>(sz * sz));
  for (long long e1 = 0; e1 < 2; ++e1)
    for (long long i1 = 0; i1 < n; ++i1)
      for (long long e2 = 0; e2 < 2; ++e2)
        for (long long i2 = 0; i2 < n; ++i2) {
          long long i = mod_floor(i1 + (e1 ? -i2 : i2), n);
          long long e = e1 ^ e2;
          t[static_cast<std::size_t>((e1 * n + i1) * sz + (e2 * n + i2))] =
              static_cast<std::uint32_t>(e * n + i);
        }
  return FiniteGroup(0, std::move(t));
}

FiniteGroup quaternion8() {
  // index = axis*2 + sign with axes 1, i, j, k and sign 1 meaning negated
  auto mul = [](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a1 = x / 2, s1 = x % 2, a2 = y / 2, s2 = y % 2;
    std::uint32_t axis, extra;
    if (a1 == 0) {
      axis = a2;
      extra = 0;
    } else if (a2 == 0) {
      axis = a1;
      extra = 0;
    } else if (a1 == a2) {
      axis = 0;
      extra = 1;
    } else {
      // cyclic i j k: forward products positive, backward negated
      axis = 6 - a1 - a2;
      extra = (a2 == a1 % 3 + 1) ? 0 : 1;
    }
    return axis * 2 + (s1 ^ s2 ^ extra);
  };
  std::vector<std::uint32_t> t(64);
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t j = 0; j < 8; ++j) t[i * 8 + j] = mul(i, j);
  return FiniteGroup(0, std::move(t));
}

FiniteGroup unitriangular3(long long m) {
  if (m <= 0 || m * m * m > static_cast<long long>(kMaxBuiltin))
    throw std::invalid_argument("unitriangular3: order out of range");
  // triples (a, b, c); (a,b,c)(a',b',c') = (a+a', b+b'+a*c', c+c')
  const long long sz = m * m * m;
  auto idx = [m](long long a, long long b, long long c) {
    return static_cast<std::uint32_t>((a * m + b) * m + c);
  };
  std::vector<std::uint32_t> t(static_cast<std::size_t>(sz * sz));
  for (long long a1 = 0; a1 < m; ++a1)
    for (long long b1 = 0; b1 < m; ++b1)
      for (long long c1 = 0; c1 < m; ++c1)
        for (long long a2 = 0; a2 < m; ++a2)
          for (long long b2 = 0; b2 < m; ++b2)
            for (long long c2 = 0; c2 < m; ++c2)
              t[static_cast<std::size_t>(idx(a1, b1, c1)) * sz +
                idx(a2, b2, c2)] = idx((a1 + a2) % m,
                                       (b1 + b2 + a1 * c2) % m,
                                       (c1 + c2) % m);
  return FiniteGroup(0, std::move(t));
}

FiniteGroup symmetric3() {
  // permutations of {0,1,2} in lexicographic one-line order
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    return -1;
  };
  std::vector<std::uint32_t> t(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i * 6 + j] = static_cast<std::uint32_t>(find(comp));
    }
  return FiniteGroup(0, std::move(t));
}

FiniteGroup builtin_group(const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != ' ' && c != '\t') s.push_back(c);
  auto arg = [&s](const std::string& head) -> std::optional<long long> {
    if (s.size() <= head.size() + 1 || s.compare(0, head.size(), head) != 0 ||
        s[head.size()] != '(' || s.back() != ')')
      return std::nullopt;
    try {
      std::size_t used = 0;
      std::string body = s.substr(head.size() + 1, s.size() - head.size() - 2);
      long long v = std::stoll(body, &used);
      if (used != body.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (s == "klein") return klein_group();
  if (s == "quaternion8") return quaternion8();
  if (s == "symmetric3") return symmetric3();
  if (auto n = arg("cyclic")) return cyclic_group(*n);
  if (auto n = arg("dihedral")) return dihedral_group(*n);
  if (s.compare(0, 16, "unitriangular(3,") == 0 && s.size() > 17 &&
      s.back() == ')') {
    std::string body = s.substr(16, s.size() - 17);
    if (body.compare(0, 2, "Z/") == 0) {
      try {
        std::size_t used = 0;
        long long m = std::stoll(body.substr(2), &used);
        if (used == body.size() - 2) return unitriangular3(m);
      } catch (const std::exception&) {
      }
    }
  }
  throw std::invalid_argument("unknown builtin group: " + name);
}

}  // namespace heis
