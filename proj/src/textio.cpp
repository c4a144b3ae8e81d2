#include "heis/textio.hpp"

#include <cctype>
#include <numeric>
#include <utility>

namespace heis::textio {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& text) : s(text) {}

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line, col);
  }

  void advance() {
    if (eof()) return;
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
      advance();
  }

  void skip_blank() {
    while (!eof() &&
           (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
      advance();
  }

  void expect(char c, const char* where) {
    skip_space();
    if (peek() != c)
      fail(std::string("expected '") + c + "' " + where);
    advance();
  }

  long long integer(const char* what) {
    skip_space();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected an integer (") + what + ")");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 1000000000000000LL) fail("integer too large");
      v = v * 10 + (peek() - '0');
      advance();
    }
    return neg ? -v : v;
  }

  std::string word() {
    skip_space();
    std::string w;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_')) {
      w += peek();
      advance();
    }
    return w;
  }

  void expect_word(const char* w) {
    skip_space();
    const int l = line, c = col;
    const std::string got = word();
    if (got != w)
      throw ParseError("expected '" + std::string(w) + "', found '" + got + "'",
                       l, c);
  }

  void end_line(const char* where) {
    skip_space();
    if (eof()) return;
    if (peek() != '\n')
      fail(std::string("unexpected trailing text ") + where);
    advance();
  }

  void end_of_input(const char* what) {
    skip_blank();
    if (!eof()) fail(std::string("unexpected trailing text after ") + what);
  }
};

std::vector<long long> group_moduli(Cursor& c) {
  std::vector<long long> m;
  for (;;) {
    c.skip_space();
    if (c.peek() != 'Z') c.fail("expected a cyclic factor 'Z/n'");
    c.advance();
    c.expect('/', "after 'Z'");
    const int l = c.line, cc = c.col;
    const long long n = c.integer("modulus");
    if (n < 1) throw ParseError("modulus must be positive", l, cc);
    if (n > 1000000) throw ParseError("modulus too large", l, cc);
    m.push_back(n);
    c.skip_space();
    if (c.peek() == 'x') {
      c.advance();
      continue;
    }
    break;
  }
  return m;
}

CoeffContext context_c(Cursor& c) {
  c.skip_space();
  if (c.peek() == 'Q') {
    c.advance();
    if (c.peek() != 'Z') c.fail("expected 'QZ'");
    c.advance();
    long long k = 1;
    if (c.peek() == '^') {
      c.advance();
      const int l = c.line, cc = c.col;
      k = c.integer("rank");
      if (k < 1 || k > 64) throw ParseError("rank out of range 1..64", l, cc);
    }
    return CoeffContext::divisible(static_cast<std::size_t>(k));
  }
  return CoeffContext::finite(group_moduli(c));
}

QZ scalar_c(Cursor& c) {
  const long long p = c.integer("numerator");
  c.skip_space();
  if (c.peek() == '/') {
    c.advance();
    const int l = c.line, cc = c.col;
    const long long q = c.integer("denominator");
    if (q < 1) throw ParseError("denominator must be positive", l, cc);
    return QZ(p, q);
  }
  return QZ(p, 1);
}

CoeffVec value_c(Cursor& c, const CoeffContext& ctx) {
  c.skip_space();
  const int l = c.line, cc = c.col;
  CoeffVec v;
  if (c.peek() == '(') {
    c.advance();
    c.skip_space();
    if (c.peek() != ')') {
      v.coords.push_back(scalar_c(c));
      while (c.skip_space(), c.peek() == ',') {
        c.advance();
        v.coords.push_back(scalar_c(c));
      }
    }
    c.expect(')', "after the value coordinates");
  } else {
    if (ctx.rank() != 1)
      c.fail("expected a vector of " + std::to_string(ctx.rank()) +
             " coordinates");
    v.coords.push_back(scalar_c(c));
  }
  if (v.coords.size() != ctx.rank())
    throw ParseError("expected " + std::to_string(ctx.rank()) +
                         " coordinates, found " + std::to_string(v.coords.size()),
                     l, cc);
  if (!ctx.contains(v))
    throw ParseError("value lies outside the coefficient group", l, cc);
  return v;
}

Pairing pairing_entries(Cursor& c, const FinAbGroup& a, const CoeffContext& ctx) {
  const std::size_t r = a.rank();
  std::vector<CoeffVec> b(r * r, ctx.zero());
  std::vector<bool> seen(r * r, false);
  for (;;) {
    c.skip_blank();
    if (c.eof()) break;
    const int l = c.line, cc = c.col;
    c.expect('(', "to open an entry");
    const long long i = c.integer("row generator index");
    c.expect(',', "between the generator indices");
    const long long j = c.integer("column generator index");
    c.expect(')', "after the generator indices");
    if (i < 1 || i > static_cast<long long>(r) || j < 1 ||
        j > static_cast<long long>(r))
      throw ParseError("generator index out of range 1.." + std::to_string(r),
                       l, cc);
    c.expect('=', "after the entry position");
    const CoeffVec v = value_c(c, ctx);
    c.end_line("after the entry value");
    const std::size_t idx =
        static_cast<std::size_t>(i - 1) * r + static_cast<std::size_t>(j - 1);
    if (seen[idx])
      throw ParseError("duplicate entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ")",
                       l, cc);
    const long long g = std::gcd(a.moduli()[i - 1], a.moduli()[j - 1]);
    if (!v.is_zero() && g % v.order() != 0)
      throw ParseError("entry order " + std::to_string(v.order()) +
                           " does not divide gcd(n_" + std::to_string(i) +
                           ", n_" + std::to_string(j) +
                           ") = " + std::to_string(g),
                       l, cc);
    b[idx] = v;
    seen[idx] = true;
  }
  return Pairing(a, ctx, std::move(b));
}

GroupElement element_c(Cursor& c, const FinAbGroup& a) {
  std::vector<long long> coords;
  coords.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) c.expect(',', "between coordinates");
    const int l = c.line, cc = c.col;
    const long long v = c.integer("coordinate");
    if (v < 0 || v >= a.moduli()[i])
      throw ParseError("coordinate " + std::to_string(v) +
                           " out of range 0.." + std::to_string(a.moduli()[i] - 1),
                       l, cc);
    coords.push_back(v);
  }
  return a.element(std::move(coords));
}

Cocycle table_entries(Cursor& c, const FinAbGroup& a, const CoeffContext& ctx) {
  const std::uint64_t n = a.order();
  std::vector<CoeffVec> vals(n * n, ctx.zero());
  std::vector<bool> seen(n * n, false);
  for (;;) {
    c.skip_blank();
    if (c.eof()) break;
    const int l = c.line, cc = c.col;
    c.expect('(', "to open an entry");
    const GroupElement x = element_c(c, a);
    c.expect('|', "between the two arguments");
    const GroupElement y = element_c(c, a);
    c.expect(')', "after the arguments");
    c.expect('=', "after the argument pair");
    const CoeffVec v = value_c(c, ctx);
    c.end_line("after the entry value");
    const std::uint64_t idx = a.index_of(x) * n + a.index_of(y);
    if (seen[idx]) throw ParseError("duplicate entry", l, cc);
    vals[idx] = v;
    seen[idx] = true;
  }
  return Cocycle::table(a, ctx, std::move(vals));
}

std::string join_coords(const GroupElement& x) {
  std::string s;
  for (std::size_t i = 0; i < x.x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.x[i]);
  }
  return s;
}

}  // namespace

FinAbGroup parse_group(const std::string& text) {
  Cursor c(text);
  std::vector<long long> m = group_moduli(c);
  c.end_of_input("the group description");
  return FinAbGroup(std::move(m));
}

std::string fmt_group(const FinAbGroup& a) {
  if (a.rank() == 0) return "Z/1";
  std::string s;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(a.moduli()[i]);
  }
  return s;
}

CoeffContext parse_context(const std::string& text) {
  Cursor c(text);
  CoeffContext ctx = context_c(c);
  c.end_of_input("the coefficient description");
  return ctx;
}

std::string fmt_context(const CoeffContext& ctx) {
  if (ctx.is_divisible())
    return ctx.rank() == 1 ? "QZ" : "QZ^" + std::to_string(ctx.rank());
  std::string s;
  for (std::size_t i = 0; i < ctx.moduli().size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(ctx.moduli()[i]);
  }
  return s;
}

QZ parse_scalar(const std::string& text) {
  Cursor c(text);
  QZ q = scalar_c(c);
  c.end_of_input("the scalar");
  return q;
}

CoeffVec parse_vector(const std::string& text) {
  Cursor c(text);
  c.expect('(', "to open the vector");
  CoeffVec v;
  c.skip_space();
  if (c.peek() != ')') {
    v.coords.push_back(scalar_c(c));
    while (c.skip_space(), c.peek() == ',') {
      c.advance();
      v.coords.push_back(scalar_c(c));
    }
  }
  c.expect(')', "after the vector coordinates");
  c.end_of_input("the vector");
  return v;
}

std::string fmt_scalar(const QZ& q) { return q.str(); }

std::string fmt_value(const CoeffVec& v) {
  if (v.coords.size() == 1) return v.coords[0].str();
  std::string s = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) s += ", ";
    s += v.coords[i].str();
  }
  return s + ")";
}

Pairing parse_pairing_file(const std::string& text) {
  Cursor c(text);
  c.expect_word("pairing");
  c.expect_word("on");
  FinAbGroup a(group_moduli(c));
  c.expect_word("coeff");
  CoeffContext ctx = context_c(c);
  c.end_line("after the header");
  return pairing_entries(c, a, ctx);
}

std::string fmt_pairing_file(const Pairing& p) {
  std::string s =
      "pairing on " + fmt_group(p.group()) + " coeff " + fmt_context(p.context()) + "\n";
  const std::size_t r = p.group().rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!p.entry(i, j).is_zero())
        s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             ") = " + fmt_value(p.entry(i, j)) + "\n";
  return s;
}

Cocycle parse_cocycle_file(const std::string& text) {
  Cursor c(text);
  c.skip_blank();
  const int l = c.line, cc = c.col;
  const std::string head = c.word();
  if (head == "pairing") {
    c.expect_word("on");
    FinAbGroup a(group_moduli(c));
    c.expect_word("coeff");
    CoeffContext ctx = context_c(c);
    c.end_line("after the header");
    return Cocycle::bimult(pairing_entries(c, a, ctx));
  }
  if (head != "cocycle")
    throw ParseError("expected 'cocycle' or 'pairing', found '" + head + "'", l,
                     cc);
  c.skip_space();
  const int kl = c.line, kc = c.col;
  const std::string kind = c.word();
  c.expect_word("on");
  FinAbGroup a(group_moduli(c));
  c.expect_word("coeff");
  CoeffContext ctx = context_c(c);
  c.end_line("after the header");
  if (kind == "bimult") return Cocycle::bimult(pairing_entries(c, a, ctx));
  if (kind == "table") return table_entries(c, a, ctx);
  throw ParseError("expected 'table' or 'bimult', found '" + kind + "'", kl, kc);
}

std::string fmt_cocycle_file(const Cocycle& c) {
  const FinAbGroup& a = c.group();
  if (c.is_bimult()) {
    std::string s = "cocycle bimult on " + fmt_group(a) + " coeff " +
                    fmt_context(c.context()) + "\n";
    const std::size_t r = a.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (!c.form().entry(i, j).is_zero())
          s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") = " + fmt_value(c.form().entry(i, j)) + "\n";
    return s;
  }
  std::string s =
      "cocycle table on " + fmt_group(a) + " coeff " + fmt_context(c.context()) + "\n";
  const std::uint64_t n = a.order();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      const CoeffVec& v = c.eval_idx(i, j);
      if (!v.is_zero())
        s += "(" + join_coords(a.at(i)) + " | " + join_coords(a.at(j)) +
             ") = " + fmt_value(v) + "\n";
    }
  return s;
}

Cocycle parse_heisenberg_file(const std::string& text) {
  Cursor c(text);
  c.skip_blank();
  c.expect_word("heisenberg");
  c.end_line("after 'heisenberg'");
  c.skip_blank();
  c.expect_word("group");
  FinAbGroup a(group_moduli(c));
  c.end_line("after the group");
  c.skip_blank();
  c.expect_word("coeff");
  CoeffContext ctx = context_c(c);
  c.end_line("after the coefficients");
  c.skip_blank();
  c.expect_word("cocycle");
  c.skip_space();
  const int kl = c.line, kc = c.col;
  const std::string kind = c.word();
  c.end_line("after the cocycle kind");
  if (kind == "bimult") return Cocycle::bimult(pairing_entries(c, a, ctx));
  if (kind == "table") return table_entries(c, a, ctx);
  throw ParseError("expected 'table' or 'bimult', found '" + kind + "'", kl, kc);
}

std::string fmt_refinement(const CochainFunction& f) {
  std::string s;
  for (std::uint64_t i = 0; i < f.a.order(); ++i)
    s += "f(" + join_coords(f.a.at(i)) + ") = " + fmt_value(f.values[i]) + "\n";
  return s;
}

CochainFunction parse_refinement(const std::string& text, const FinAbGroup& a,
                                 const CoeffContext& ctx) {
  Cursor c(text);
  std::vector<CoeffVec> vals(a.order(), ctx.zero());
  std::vector<bool> seen(a.order(), false);
  for (;;) {
    c.skip_blank();
    if (c.eof()) break;
    const int l = c.line, cc = c.col;
    c.expect_word("f");
    c.expect('(', "after 'f'");
    const GroupElement x = element_c(c, a);
    c.expect(')', "after the argument");
    c.expect('=', "after the argument");
    const CoeffVec v = value_c(c, ctx);
    c.end_line("after the value");
    const std::uint64_t idx = a.index_of(x);
    if (seen[idx]) throw ParseError("duplicate entry", l, cc);
    vals[idx] = v;
    seen[idx] = true;
  }
  return CochainFunction(a, ctx, std::move(vals));
}

FiniteGroup parse_cayley_file(const std::string& text) {
  Cursor c(text);
  c.skip_blank();
  const int nl = c.line, nc = c.col;
  const long long n = c.integer("group order");
  if (n < 1 || n > 4096)
    throw ParseError("group order out of range 1..4096", nl, nc);
  c.skip_blank();
  const int il = c.line, ic = c.col;
  const long long id = c.integer("identity index");
  if (id < 0 || id >= n)
    throw ParseError("identity index out of range 0.." + std::to_string(n - 1),
                     il, ic);
  std::vector<std::uint32_t> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (long long k = 0; k < n * n; ++k) {
    c.skip_blank();
    const int l = c.line, cc = c.col;
    const long long v = c.integer("product index");
    if (v < 0 || v >= n)
      throw ParseError("product index out of range 0.." + std::to_string(n - 1),
                       l, cc);
    table.push_back(static_cast<std::uint32_t>(v));
  }
  c.end_of_input("the multiplication table");
  return FiniteGroup(static_cast<std::size_t>(id), std::move(table));
}

std::string fmt_cayley_file(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::string s = std::to_string(n) + "\n" + std::to_string(g.identity()) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) s += " ";
      s += std::to_string(g.mul(static_cast<std::uint32_t>(i),
                                static_cast<std::uint32_t>(j)));
    }
    s += "\n";
  }
  return s;
}

std::vector<std::uint32_t> parse_subgroup_line(const std::string& text) {
  Cursor c(text);
  std::vector<std::uint32_t> idx;
  for (;;) {
    c.skip_blank();
    if (c.eof()) break;
    const int l = c.line, cc = c.col;
    const long long v = c.integer("element index");
    if (v < 0 || v > 0xffffffffLL)
      throw ParseError("element index out of range", l, cc);
    idx.push_back(static_cast<std::uint32_t>(v));
  }
  return idx;
}

std::string fmt_subgroup_line(const std::vector<std::uint32_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(idx[i]);
  }
  s += "\n";
  return s;
}

}  // namespace heis::textio
