// Spawns the command line binary and checks outputs, exit codes, and
// that emitted certificates re-verify through the library.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "heis/cocycle.hpp"
#include "heis/finite_group.hpp"
#include "heis/textio.hpp"

using namespace heis;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HEIS_TOOL) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  return std::string(std::istreambuf_iterator<char>(f),
                     std::istreambuf_iterator<char>());
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

// Everything after the first "equivalent=yes" line.
std::string tail_after(const std::string& out, const std::string& line) {
  const std::string key = line + "\n";
  const auto pos = out.find(key);
  REQUIRE(pos != std::string::npos);
  return out.substr(pos + key.size());
}

const char* kD4 = "pairing on Z/2 x Z/2 coeff QZ\n(1,2) = 1/2\n";
const char* kQ8 =
    "pairing on Z/2 x Z/2 coeff QZ\n(1,1) = 1/2\n(1,2) = 1/2\n(2,2) = 1/2\n";

}  // namespace

TEST_CASE("classify reports the class count") {
  RunResult r = run("classify --group Z/6 --coeff QZ");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "H2_order=1"));

  r = run("classify --group Z/2xZ/4 --coeff QZ --brute");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "H2_order=2"));
  CHECK(has_line(r.out, "brute_distinct_omega=2"));
  CHECK(has_line(r.out, "brute=agree"));

  r = run("classify --group \"Z/3 x Z/3 x Z/3\" --coeff QZ");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "H2_order=27"));
  CHECK(has_line(r.out, "basis(2,3)=3"));

  // Finite coefficients cap the count at their own torsion.
  r = run("classify --group \"Z/2 x Z/2\" --coeff Z/4 --brute");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "H2_order=2"));
  CHECK(has_line(r.out, "brute=agree"));
}

TEST_CASE("equiv separates and certifies") {
  write_file("cli_d4.pairing", kD4);
  write_file("cli_q8.pairing", kQ8);

  RunResult r = run("equiv cli_d4.pairing cli_q8.pairing");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "omega_equal=yes"));
  CHECK(has_line(r.out, "equivalent=yes"));

  // The inline certificate refines the difference of the two cocycles.
  const Cocycle ca = textio::parse_cocycle_file(kD4);
  const Cocycle cb = textio::parse_cocycle_file(kQ8);
  const CochainFunction f = textio::parse_refinement(
      tail_after(r.out, "equivalent=yes"), ca.group(), ca.context());
  CHECK(morphism_defect(f) == cocycle_sub(ca, cb));

  // Same certificate through --out.
  r = run("equiv cli_d4.pairing cli_q8.pairing --out cli_cert.txt");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "certificate=cli_cert.txt"));
  const CochainFunction g = textio::parse_refinement(
      read_file("cli_cert.txt"), ca.group(), ca.context());
  CHECK(g == f);

  // Over Z/2 the same pair stays omega-equal but inequivalent.
  write_file("cli_d4z2.pairing",
             "pairing on Z/2 x Z/2 coeff Z/2\n(1,2) = 1/2\n");
  write_file("cli_q8z2.pairing",
             "pairing on Z/2 x Z/2 coeff Z/2\n(1,1) = 1/2\n(1,2) = 1/2\n"
             "(2,2) = 1/2\n");
  r = run("equiv cli_d4z2.pairing cli_q8z2.pairing");
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "omega_equal=yes"));
  CHECK(has_line(r.out, "refinable_in_context=no"));
  CHECK(has_line(r.out, "equivalent=no"));

  // A file against itself carries the zero certificate.
  r = run("equiv cli_d4.pairing cli_d4.pairing");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "equivalent=yes"));
  CHECK(has_line(r.out, "f(1,1) = 0/1"));

  // Different omega: separator pair named, exit 1.
  write_file("cli_zero.pairing", "pairing on Z/2 x Z/2 coeff QZ\n");
  r = run("equiv cli_d4.pairing cli_zero.pairing");
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "omega_equal=no"));
  CHECK(r.out.find("separator=(") != std::string::npos);
  CHECK(has_line(r.out, "equivalent=no"));

  // Mismatched groups are an input error.
  write_file("cli_z4.pairing", "pairing on Z/4 coeff QZ\n");
  r = run("equiv cli_d4.pairing cli_z4.pairing");
  CHECK(r.code == 2);
  CHECK(r.out.find("group mismatch") != std::string::npos);
}

TEST_CASE("refine certifies or explains") {
  write_file("cli_z4.sym", "pairing on Z/4 coeff QZ\n(1,1) = 1/4\n");
  RunResult r = run("refine cli_z4.sym --brute");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "refinable=yes"));
  CHECK(has_line(r.out, "brute=agree"));
  CHECK(has_line(r.out, "f(1) = 1/8"));

  const Cocycle c = textio::parse_cocycle_file(read_file("cli_z4.sym"));
  const CochainFunction f = textio::parse_refinement(
      tail_after(r.out, "refinable=yes"), c.group(), c.context());
  CHECK(morphism_defect(f) == Cocycle::table(c.group(), c.context(), c.dense()));

  // The same entries over Z/4 coefficients have no refinement.
  write_file("cli_z4f.sym", "pairing on Z/4 coeff Z/4\n(1,1) = 1/4\n");
  r = run("refine cli_z4f.sym --brute");
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "refinable=no"));
  CHECK(has_line(r.out, "brute=agree"));
  CHECK(r.out.find("no refinement in this coefficient group") !=
        std::string::npos);

  // Asymmetric input is a hypothesis failure, not a negative answer.
  write_file("cli_asym.cocycle",
             "cocycle bimult on Z/2 x Z/2 coeff QZ\n(1,2) = 1/2\n");
  r = run("refine cli_asym.cocycle");
  CHECK(r.code == 3);
  CHECK(has_line(r.out, "symmetric=no"));

  // A user bound that cannot hold the certificate is a scope error, not a
  // disagreement between the two searches.
  r = run("refine cli_z4.sym --brute --brute-bound 4");
  CHECK(r.code == 2);
  CHECK(has_line(r.out, "brute_bound=4"));
  CHECK(has_line(r.out, "brute=bound_excludes_certificate"));
  CHECK(r.out.find("denominators need 8") != std::string::npos);

  // An explicit bound that does hold it still agrees.
  r = run("refine cli_z4.sym --brute --brute-bound 8");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "brute=agree"));
  CHECK(has_line(r.out, "f(1) = 1/8"));
}

TEST_CASE("build checks laws and exports the table") {
  write_file("cli_d4.heis",
             "heisenberg\ngroup Z/2 x Z/2\ncoeff Z/2\ncocycle bimult\n"
             "(1,2) = 1/2\n");
  RunResult r = run("build cli_d4.heis --check --out cli_d4.cayley");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "order=8"));
  CHECK(has_line(r.out, "class=2"));
  CHECK(has_line(r.out, "center_order=2"));
  CHECK(has_line(r.out, "commutator_order=2"));
  CHECK(has_line(r.out, "omega_nondegenerate=yes"));
  CHECK(has_line(r.out, "associativity=exhaustive"));
  CHECK(has_line(r.out, "check=pass"));

  // The exported table parses back to a well-formed group of order 8
  // whose standard coordinates recover the pairing exactly.
  const FiniteGroup g = textio::parse_cayley_file(read_file("cli_d4.cayley"));
  CHECK(g.order() == 8);
  r = run("recognize cli_d4.cayley center");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "beta(1,2)=1/2"));
  CHECK(has_line(r.out, "original_equivalence=yes"));

  // A table entry that breaks the cocycle laws is an input error.
  write_file("cli_junk.heis",
             "heisenberg\ngroup Z/2\ncoeff QZ\ncocycle table\n"
             "(1 | 0) = 1/2\n");
  r = run("build cli_junk.heis");
  CHECK(r.code == 2);
  CHECK(r.out.find("not a cocycle") != std::string::npos);
  CHECK(r.out.find("normalization fails at (1 | 0)") != std::string::npos);

  // Divisible coefficients build an infinite group; --check refuses.
  write_file("cli_inf.heis",
             "heisenberg\ngroup Z/2\ncoeff QZ\ncocycle bimult\n(1,1) = 1/2\n");
  r = run("build cli_inf.heis");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "order=infinite"));
  r = run("build cli_inf.heis --check");
  CHECK(r.code == 2);
}

TEST_CASE("recognize presents the builtin groups") {
  RunResult r = run("recognize builtin:d4 center --check");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "group_order=8"));
  CHECK(has_line(r.out, "class=2"));
  CHECK(has_line(r.out, "A=Z/2 x Z/2"));
  CHECK(has_line(r.out, "C=Z/2"));
  CHECK(has_line(r.out, "beta(1,2)=1/2"));
  CHECK(has_line(r.out, "omega(1,2)=1/2"));
  CHECK(has_line(r.out, "omega(2,1)=1/2"));
  CHECK(has_line(r.out, "omega_nondegenerate=yes"));
  CHECK(has_line(r.out, "original_equivalence=no"));
  CHECK(has_line(r.out, "divisible_equivalence=yes"));
  CHECK(has_line(r.out, "check=pass"));

  // The rotation and quaternion groups share omega but part ways over
  // their own coefficients only through the chosen coordinates.
  r = run("recognize builtin:q8 center");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "omega(1,2)=1/2"));
  CHECK(has_line(r.out, "original_equivalence=no"));
  CHECK(has_line(r.out, "divisible_equivalence=yes"));

  r = run("recognize builtin:s3 trivial");
  CHECK(r.code == 3);
  CHECK(r.out.find("[G,G]") != std::string::npos);

  // The emitted pairing re-parses and stays alternating-compatible.
  r = run("recognize builtin:q8 center --out cli_q8beta.txt");
  CHECK(r.code == 0);
  const Pairing beta = textio::parse_pairing_file(read_file("cli_q8beta.txt"));
  CHECK(beta.entry(0, 1) == CoeffVec{{QZ(1, 2)}});
  CHECK(beta.entry(1, 0).is_zero());

  // A subgroup list from a file: the center of d4, spelled out.
  write_file("cli_sub.txt",
             textio::fmt_subgroup_line(center(builtin_group("dihedral(4)"))));
  RunResult byfile = run("recognize builtin:d4 cli_sub.txt");
  RunResult bykey = run("recognize builtin:d4 center");
  CHECK(byfile.code == 0);
  CHECK(byfile.out == bykey.out);

  // A non-central subgroup is a hypothesis failure.
  write_file("cli_bad.txt", "0 1\n");
  r = run("recognize builtin:d4 cli_bad.txt");
  CHECK(r.code == 3);
  CHECK(r.out.find("hypothesis failure") != std::string::npos);
}

TEST_CASE("enumerate lists cocycle tables") {
  RunResult r = run("enumerate --group \"Z/2 x Z/2\" --coeff Z/2");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "cocycles=16"));
  CHECK(has_line(r.out, "distinct_omega=2"));
  CHECK(has_line(r.out, "H2_order=2"));
  CHECK(has_line(r.out, "formula=agree"));

  r = run("enumerate --group Z/2 --coeff QZ");
  CHECK(r.code == 2);

  // Over an infeasibly large space the command refuses up front.
  r = run("enumerate --group \"Z/2 x Z/4\" --coeff Z/8");
  CHECK(r.code == 2);
  CHECK(r.out.find("refusing") != std::string::npos);
}

TEST_CASE("runs are deterministic") {
  const RunResult a = run("recognize builtin:d4 center --check");
  const RunResult b = run("recognize builtin:d4 center --check");
  CHECK(a.out == b.out);
  const RunResult c = run("classify --group \"Z/2 x Z/4\" --coeff QZ --brute");
  const RunResult d = run("classify --group \"Z/2 x Z/4\" --coeff QZ --brute");
  CHECK(c.out == d.out);
}

TEST_CASE("parse errors name their position") {
  write_file("cli_bad.pairing", "pairing on Z/2 coeff QZ\n(1,1) = oops\n");
  RunResult r = run("equiv cli_bad.pairing cli_bad.pairing");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);
  CHECK(r.out.find("column 9") != std::string::npos);

  r = run("build cli_missing.heis");
  CHECK(r.code == 2);
  CHECK(r.out.find("cannot open") != std::string::npos);

  r = run("classify --group Z/6");
  CHECK(r.code == 2);
}
