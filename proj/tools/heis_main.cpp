// Command line front end: classification, equivalence, refinement,
// construction, recognition, and enumeration over the text formats the
// library defines.  Outputs are deterministic key=value lines; exit
// codes are 0 success/equivalent, 1 definitively not, 2 input error,
// 3 hypothesis failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "heis/cocycle.hpp"
#include "heis/finite_group.hpp"
#include "heis/heisenberg.hpp"
#include "heis/recognize.hpp"
#include "heis/textio.hpp"

using namespace heis;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

const char* yn(bool b) { return b ? "yes" : "no"; }

// Precondition on the mathematics rather than the input syntax; exits 3.
struct Hypothesis {
  std::string what;
};

std::string coords(const GroupElement& x) {
  std::string s;
  for (std::size_t i = 0; i < x.x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.x[i]);
  }
  return s;
}

std::string witness_line(const CocycleCheck& chk) {
  if (chk.failure == CocycleCheck::Failure::normalization)
    return "normalization fails at (" + coords(chk.x) + " | " + coords(chk.y) +
           ")";
  return "cocycle identity fails at x=(" + coords(chk.x) + ") y=(" +
         coords(chk.y) + ") z=(" + coords(chk.z) + ")";
}

// Least common multiple of every value denominator, capped.
long long denom_lcm(const Cocycle& c) {
  constexpr long long kCap = 1000000;
  long long l = 1;
  auto fold = [&](const CoeffVec& v) {
    for (const QZ& q : v.coords) {
      l = std::lcm(l, q.order());
      if (l > kCap) throw std::length_error("certificate denominators exceed " +
                                            std::to_string(kCap));
    }
  };
  if (c.is_bimult()) {
    const std::size_t r = c.group().rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) fold(c.form().entry(i, j));
  } else {
    for (const CoeffVec& v : c.dense()) fold(v);
  }
  return l;
}

long long denom_lcm(const CochainFunction& f) {
  long long l = 1;
  for (const CoeffVec& v : f.values)
    for (const QZ& q : v.coords) l = std::lcm(l, q.order());
  return l;
}

// Distinct alternating pairings realized by explicit bimultiplicative
// cocycles, enumerated over the strictly upper triangular entry choices.
unsigned long long brute_pairing_classes(const FinAbGroup& a,
                                         const CoeffContext& ctx) {
  const std::size_t r = a.rank();
  struct Slot {
    std::size_t i, j;
    std::vector<CoeffVec> vals;
  };
  std::vector<Slot> slots;
  unsigned long long total = 1;
  constexpr unsigned long long kLimit = 10'000'000;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Slot s{i, j, ctx.torsion_values(std::gcd(a.moduli()[i], a.moduli()[j]))};
      if (total > kLimit / s.vals.size() + 1)
        throw std::length_error(
            "alternating pairing enumeration exceeds 10000000 candidates");
      total *= s.vals.size();
      slots.push_back(std::move(s));
    }
  if (total > kLimit)
    throw std::length_error(
        "alternating pairing enumeration exceeds 10000000 candidates");

  std::vector<SymplecticPairing> seen;
  for (unsigned long long k = 0; k < total; ++k) {
    std::vector<CoeffVec> entries(r * r, ctx.zero());
    unsigned long long rem = k;
    for (const Slot& s : slots) {
      const CoeffVec& v = s.vals[rem % s.vals.size()];
      rem /= s.vals.size();
      entries[s.i * r + s.j] = v;
      entries[s.j * r + s.i] = -v;
    }
    SymplecticPairing w = SymplecticPairing::from(Pairing(a, ctx, entries));
    Cocycle cb = Cocycle::bimult(beta_from_alternating(w));
    if (!(omega_c(cb) == w))
      throw std::logic_error(
          "bimultiplicative realization changed the alternating pairing");
    if (std::find(seen.begin(), seen.end(), w) == seen.end())
      seen.push_back(std::move(w));
  }
  return seen.size();
}

unsigned long long distinct_omega(const std::vector<Cocycle>& all) {
  std::vector<SymplecticPairing> seen;
  for (const Cocycle& c : all) {
    SymplecticPairing w = omega_c(c);
    if (std::find(seen.begin(), seen.end(), w) == seen.end())
      seen.push_back(std::move(w));
  }
  return seen.size();
}

int cmd_classify(const std::string& gspec, const std::string& cspec,
                 bool brute) {
  const FinAbGroup a = textio::parse_group(gspec);
  const CoeffContext ctx = textio::parse_context(cspec);
  const unsigned long long h2 = h2_order(a, ctx);

  std::string out;
  out += "group=" + textio::fmt_group(a) + "\n";
  out += "coeff=" + textio::fmt_context(ctx) + "\n";
  out += "H2_order=" + std::to_string(h2) + "\n";
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j)
      out += "basis(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             ")=" +
             std::to_string(
                 ctx.torsion_count(std::gcd(a.moduli()[i], a.moduli()[j]))) +
             "\n";

  bool agree = true;
  if (brute) {
    unsigned long long counted;
    if (ctx.is_divisible()) {
      counted = brute_pairing_classes(a, ctx);
    } else {
      counted = distinct_omega(enumerate_cocycles(a, ctx));
    }
    out += "brute_distinct_omega=" + std::to_string(counted) + "\n";
    agree = counted == h2;
    out += std::string("brute=") + (agree ? "agree" : "disagree") + "\n";
  }
  std::cout << out;
  return agree ? 0 : 3;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b,
              const std::string& out_path) {
  const Cocycle ca = textio::parse_cocycle_file(slurp(file_a));
  const Cocycle cb = textio::parse_cocycle_file(slurp(file_b));
  if (!(ca.group() == cb.group())) {
    std::cerr << "error: group mismatch: " << textio::fmt_group(ca.group())
              << " vs " << textio::fmt_group(cb.group()) << "\n";
    return 2;
  }
  if (!(ca.context() == cb.context())) {
    std::cerr << "error: coefficient mismatch: "
              << textio::fmt_context(ca.context()) << " vs "
              << textio::fmt_context(cb.context()) << "\n";
    return 2;
  }
  for (const auto* c : {&ca, &cb}) {
    const CocycleCheck chk = verify_cocycle(*c);
    if (!chk.ok()) {
      std::cerr << "error: " << (c == &ca ? file_a : file_b)
                << " is not a cocycle: " << witness_line(chk) << "\n";
      return 2;
    }
  }

  const CohomologyVerdict v = cohomologous(ca, cb);
  std::string out;
  out += "group=" + textio::fmt_group(ca.group()) + "\n";
  out += "coeff=" + textio::fmt_context(ca.context()) + "\n";
  out += std::string("omega_equal=") + yn(v.omega_equal) + "\n";
  if (v.separator)
    out += "separator=(" + coords(v.separator->first) + " | " +
           coords(v.separator->second) + ")\n";
  if (v.refinable_in_context)
    out += std::string("refinable_in_context=") + yn(*v.refinable_in_context) +
           "\n";
  out += std::string("equivalent=") + yn(v.equivalent()) + "\n";

  if (v.equivalent()) {
    if (!v.certificate ||
        !(morphism_defect(*v.certificate) == cocycle_sub(ca, cb)))
      throw std::logic_error("certificate does not refine the difference");
    const std::string cert = textio::fmt_refinement(*v.certificate);
    if (!out_path.empty()) {
      spill(out_path, cert);
      out += "certificate=" + out_path + "\n";
    } else {
      out += cert;
    }
  }
  std::cout << out;
  return v.equivalent() ? 0 : 1;
}

int cmd_refine(const std::string& file, bool brute, long long brute_bound,
               const std::string& out_path) {
  const Cocycle c = textio::parse_cocycle_file(slurp(file));
  const CocycleCheck chk = verify_cocycle(c);
  if (!chk.ok()) {
    std::cerr << "error: " << file << " is not a cocycle: " << witness_line(chk)
              << "\n";
    return 2;
  }

  std::string out;
  out += "group=" + textio::fmt_group(c.group()) + "\n";
  out += "coeff=" + textio::fmt_context(c.context()) + "\n";
  if (!is_symmetric(c)) {
    out += "symmetric=no\n";
    std::cout << out;
    std::cerr << "hypothesis failure: the cocycle is not symmetric, so no "
                 "function can refine it\n";
    return 3;
  }
  out += "symmetric=yes\n";

  std::optional<CochainFunction> f;
  std::string reason;
  try {
    f = quadratic_refinement(c);
  } catch (const std::domain_error& e) {
    reason = e.what();
  }

  if (brute) {
    long long bound = brute_bound;
    if (bound <= 0) {
      bound = 2 * denom_lcm(c);
      if (f) bound = std::lcm(bound, denom_lcm(*f));
    }
    const std::optional<CochainFunction> g = brute_refinement(c, bound);
    out += "brute_bound=" + std::to_string(bound) + "\n";
    if (f && !g && bound % denom_lcm(*f) != 0) {
      // The requested bound excludes the known certificate, so finding
      // nothing under it proves nothing.  Scope error, not a conflict.
      out += "brute=bound_excludes_certificate\n";
      std::cout << out;
      std::cerr << "error: --brute-bound " << bound
                << " omits the certificate, whose denominators need "
                << denom_lcm(*f) << "\n";
      return 2;
    }
    if (g.has_value() != f.has_value()) {
      out += "brute=disagree\n";
      std::cout << out;
      std::cerr << "internal error: exhaustive search and telescoped division "
                   "disagree on existence\n";
      return 3;
    }
    if (g && !(morphism_defect(*g) == c))
      throw std::logic_error("exhaustive candidate fails to refine");
    out += "brute=agree\n";
  }

  out += std::string("refinable=") + yn(f.has_value()) + "\n";
  if (!f) {
    out += "reason=" + reason + "\n";
    std::cout << out;
    return 1;
  }
  if (!(morphism_defect(*f) == c))
    throw std::logic_error("refinement certificate fails to verify");
  const std::string cert = textio::fmt_refinement(*f);
  if (!out_path.empty()) {
    spill(out_path, cert);
    out += "certificate=" + out_path + "\n";
  } else {
    out += cert;
  }
  std::cout << out;
  return 0;
}

int cmd_build(const std::string& file, bool check, unsigned long long seed,
              const std::string& out_path) {
  const Cocycle c = textio::parse_heisenberg_file(slurp(file));
  const CocycleCheck chk = verify_cocycle(c);
  if (!chk.ok()) {
    std::cerr << "error: " << file << " is not a cocycle: " << witness_line(chk)
              << "\n";
    return 2;
  }
  const HeisenbergGroup h{c};

  std::string out;
  out += "group=" + textio::fmt_group(h.group()) + "\n";
  out += "coeff=" + textio::fmt_context(h.context()) + "\n";
  out += "order=" + (h.finite() ? std::to_string(h.order())
                                : std::string("infinite")) + "\n";
  out += "class=" + std::to_string(nilpotency_class(h)) + "\n";

  const CenterInfo ci = center(h);
  out += std::string("center_whole=") + yn(ci.whole_group) + "\n";
  out += "center_radical_order=" + std::to_string(ci.radical.size()) + "\n";
  if (ci.elements)
    out += "center_order=" + std::to_string(ci.elements->size()) + "\n";
  out += "commutator_order=" + std::to_string(commutator_subgroup(h).size()) +
         "\n";
  out += std::string("omega_nondegenerate=") +
         yn(is_nondegenerate(h.omega().pairing())) + "\n";

  if (check) {
    if (!h.finite()) {
      std::cerr << "error: --check needs a finite coefficient group\n";
      return 2;
    }
    if (h.order() <= 512) {
      // The table constructor re-runs the full associativity scan.
      (void)cayley_table(h);
      out += "associativity=exhaustive\n";
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::uint64_t> pick(0, h.order() - 1);
      constexpr int kSamples = 10000;
      for (int s = 0; s < kSamples; ++s) {
        const HElem x = h.at(pick(rng)), y = h.at(pick(rng)),
                    z = h.at(pick(rng));
        if (!(h.mul(h.mul(x, y), z) == h.mul(x, h.mul(y, z)))) {
          std::cerr << "check failed: associativity violated\n";
          return 3;
        }
      }
      out += "associativity=sampled\n";
      out += "samples=" + std::to_string(kSamples) + "\n";
      out += "seed=" + std::to_string(seed) + "\n";
    }
    out += "check=pass\n";
  }

  if (!out_path.empty()) {
    if (!h.finite() || h.order() > 4096) {
      std::cerr << "error: --out needs a finite group of order at most 4096\n";
      return 2;
    }
    spill(out_path, textio::fmt_cayley_file(cayley_table(h)));
    out += "out=" + out_path + "\n";
  }
  std::cout << out;
  return 0;
}

int cmd_recognize(const std::string& input, const std::string& subspec,
                  bool check, const std::string& out_path) {
  FiniteGroup g = [&] {
    if (input.rfind("builtin:", 0) == 0) {
      std::string name = input.substr(8);
      if (name == "d4") name = "dihedral(4)";
      if (name == "q8") name = "quaternion8";
      if (name == "s3") name = "symmetric3";
      return builtin_group(name);
    }
    return textio::parse_cayley_file(slurp(input));
  }();

  std::vector<std::uint32_t> sub;
  if (subspec == "center")
    sub = center(g);
  else if (subspec == "trivial")
    sub = {g.identity()};
  else
    sub = textio::parse_subgroup_line(slurp(subspec));

  HeisenbergPresentation p = [&] {
    try {
      return recognize(g, std::move(sub));
    } catch (const std::invalid_argument& e) {
      throw Hypothesis{e.what()};
    } catch (const std::domain_error& e) {
      throw Hypothesis{e.what()};
    }
  }();

  std::string out;
  out += "group_order=" + std::to_string(g.order()) + "\n";
  out += "central_order=" + std::to_string(p.ext.central.size()) + "\n";
  out += "class=" + std::to_string(*lower_central_class(g)) + "\n";
  out += "A=" + textio::fmt_group(p.ext.a) + "\n";
  out += "C=" + textio::fmt_context(p.ext.context) + "\n";
  const std::size_t r = p.ext.a.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      out += "beta(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             ")=" + textio::fmt_value(p.beta.entry(i, j)) + "\n";
  const Pairing& om = p.model.omega().pairing();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      out += "omega(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             ")=" + textio::fmt_value(om.entry(i, j)) + "\n";
  out += std::string("omega_nondegenerate=") + yn(is_nondegenerate(om)) + "\n";
  out += std::string("quotient_pairing_ok=") + yn(p.quotient_pairing.ok()) +
         "\n";
  out += std::string("original_equivalence=") + yn(p.refinable_in_original) +
         "\n";
  out += "divisible_equivalence=yes\n";
  for (std::size_t i = 0; i < p.iso.size(); ++i)
    out += "iso[" + std::to_string(i) + "]=(" + textio::fmt_value(p.iso[i].t) +
           " | " + coords(p.iso[i].x) + ")\n";

  if (check) {
    const bool omega_ok = verify_omega_factorization(p);
    out += std::string("check_omega_factorization=") + yn(omega_ok) + "\n";
    bool hom_ok = true;
    for (std::uint32_t i = 0; i < g.order() && hom_ok; ++i)
      for (std::uint32_t j = 0; j < g.order() && hom_ok; ++j)
        hom_ok = p.iso[g.mul(i, j)] == p.model.mul(p.iso[i], p.iso[j]);
    out += std::string("check_iso_homomorphism=") + yn(hom_ok) + "\n";
    const bool cocycle_ok = verify_cocycle(p.cocycle).ok();
    out += std::string("check_cocycle=") + yn(cocycle_ok) + "\n";
    const bool all_ok = omega_ok && hom_ok && cocycle_ok;
    out += std::string("check=") + (all_ok ? "pass" : "fail") + "\n";
    if (!all_ok) {
      std::cout << out;
      return 3;
    }
  }

  if (!out_path.empty()) {
    spill(out_path, textio::fmt_pairing_file(p.beta));
    out += "out=" + out_path + "\n";
  }
  std::cout << out;
  return 0;
}

int cmd_enumerate(const std::string& gspec, const std::string& cspec,
                  const std::string& out_path) {
  const FinAbGroup a = textio::parse_group(gspec);
  const CoeffContext ctx = textio::parse_context(cspec);
  if (ctx.is_divisible()) {
    std::cerr << "error: enumeration needs a finite coefficient group\n";
    return 2;
  }
  const std::vector<Cocycle> all = enumerate_cocycles(a, ctx);
  const unsigned long long distinct = distinct_omega(all);
  const unsigned long long h2 = h2_order(a, ctx);

  std::string out;
  out += "group=" + textio::fmt_group(a) + "\n";
  out += "coeff=" + textio::fmt_context(ctx) + "\n";
  out += "cocycles=" + std::to_string(all.size()) + "\n";
  out += "distinct_omega=" + std::to_string(distinct) + "\n";
  out += "H2_order=" + std::to_string(h2) + "\n";
  out += std::string("formula=") + (distinct == h2 ? "agree" : "disagree") +
         "\n";
  if (!out_path.empty()) {
    std::string listing;
    for (const Cocycle& c : all) listing += textio::fmt_cocycle_file(c) + "\n";
    spill(out_path, listing);
    out += "out=" + out_path + "\n";
  }
  std::cout << out;
  return distinct == h2 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Central extensions of finite abelian groups: classify cocycles up to "
      "equivalence, refine symmetric ones, build and recognize the twisted "
      "products"};
  app.require_subcommand(1);

  std::string gspec, cspec, file_a, file_b, input, subspec, out_path;
  bool brute = false, check = false;
  long long brute_bound = 0;
  unsigned long long seed = 0;

  CLI::App* classify =
      app.add_subcommand("classify", "Count extension classes for a group");
  classify->add_option("--group", gspec, "Quotient group, e.g. \"Z/2 x Z/4\"")
      ->required();
  classify->add_option("--coeff", cspec, "Coefficients: QZ, QZ^k, or a group")
      ->required();
  classify->add_flag("--brute", brute,
                     "Cross-check the count by explicit enumeration");

  CLI::App* equiv = app.add_subcommand(
      "equiv", "Decide whether two cocycle files are cohomologous");
  equiv->add_option("a", file_a, "First cocycle or pairing file")->required();
  equiv->add_option("b", file_b, "Second cocycle or pairing file")->required();
  equiv->add_option("--out", out_path, "Write the certificate here");

  CLI::App* refine = app.add_subcommand(
      "refine", "Find f with f(x+y) - f(x) - f(y) matching a symmetric cocycle");
  refine->add_option("file", file_a, "Cocycle or pairing file")->required();
  refine->add_flag("--brute", brute, "Cross-check by exhaustive search");
  refine->add_option("--brute-bound", brute_bound,
                     "Denominator bound for the exhaustive search");
  refine->add_option("--out", out_path, "Write the refinement here");

  CLI::App* build = app.add_subcommand(
      "build", "Build a twisted product from a description file");
  build->add_option("file", file_a, "Extension description file")->required();
  build->add_flag("--check", check, "Re-verify the group laws");
  build->add_option("--seed", seed, "Seed for sampled associativity probes");
  build->add_option("--out", out_path, "Write the multiplication table here");

  CLI::App* recog = app.add_subcommand(
      "recognize",
      "Present a finite group as a twisted product over a central subgroup");
  recog
      ->add_option("input", input,
                   "Multiplication table file, or builtin:<name>")
      ->required();
  recog
      ->add_option("subgroup", subspec,
                   "center, trivial, or a file with element indices")
      ->required();
  recog->add_flag("--check", check, "Re-run the factorization verifications");
  recog->add_option("--out", out_path, "Write the recognized pairing here");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List every cocycle table for a group");
  enumerate->add_option("--group", gspec, "Quotient group")->required();
  enumerate->add_option("--coeff", cspec, "Finite coefficient group")
      ->required();
  enumerate->add_option("--out", out_path, "Write the cocycle listing here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(gspec, cspec, brute);
    if (equiv->parsed()) return cmd_equiv(file_a, file_b, out_path);
    if (refine->parsed())
      return cmd_refine(file_a, brute, brute_bound, out_path);
    if (build->parsed()) return cmd_build(file_a, check, seed, out_path);
    if (recog->parsed()) return cmd_recognize(input, subspec, check, out_path);
    if (enumerate->parsed()) return cmd_enumerate(gspec, cspec, out_path);
  } catch (const Hypothesis& e) {
    std::cerr << "hypothesis failure: " << e.what << "\n";
    return 3;
  } catch (const textio::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "refusing: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
