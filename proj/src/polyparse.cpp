#include "sparseroot/polyparse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace sparseroot {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

std::string read_digits(Cursor& c) {
  std::string d;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    d += c.s[c.i++];
  return d;
}

Int pow10(std::size_t k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

// gmpxx auto-detects the base for string input, so "0125" would be octal;
// force base 10
Int int10(const std::string& s) {
  Int r;
  mpz_set_str(r.get_mpz_t(), s.c_str(), 10);
  return r;
}

// integer | p/q | decimal, optionally followed by E<int> (exact power of 10)
Rat read_rational(Cursor& c) {
  c.skip_ws();
  std::string ip = read_digits(c);
  if (ip.empty()) c.fail("expected number");
  Rat value{int10(ip)};
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    std::string q = read_digits(c);
    if (q.empty()) c.fail("expected denominator");
    Int den = int10(q);
    if (den == 0) c.fail("zero denominator");
    value = Rat(int10(ip), den);
  } else if (c.i < c.s.size() && c.s[c.i] == '.') {
    ++c.i;
    std::string fp = read_digits(c);
    if (fp.empty()) c.fail("expected fractional digits");
    value = Rat(int10(ip + fp), pow10(fp.size()));
  }
  if (c.i < c.s.size() && (c.s[c.i] == 'e' || c.s[c.i] == 'E')) {
    // only treat as exponent when followed by [sign]digits, so that a
    // variable named e.g. "e" still parses
    std::size_t save = c.i;
    ++c.i;
    bool neg = false;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) {
      neg = c.s[c.i] == '-';
      ++c.i;
    }
    std::string ex = read_digits(c);
    if (ex.empty()) {
      c.i = save;
    } else {
      if (ex.size() > 6) c.fail("exponent of 10 too large");
      Int scale = pow10(std::stoul(ex));
      if (neg)
        value /= Rat(scale);
      else
        value *= Rat(scale);
    }
  }
  value.canonicalize();
  return value;
}

}  // namespace

SparsePoly normalize_terms(std::vector<std::pair<long long, Rat>> raw,
                           const std::string& varname) {
  std::map<long long, Rat> merged;
  for (auto& [e, coef] : raw) {
    if (e < 0) throw ParseError("negative exponent", 0);
    merged[e] += coef;
  }
  for (auto it = merged.begin(); it != merged.end();)
    it = (sgn(it->second) == 0) ? merged.erase(it) : std::next(it);
  if (merged.empty()) throw ParseError("empty polynomial after merging", 0);

  SparsePoly p;
  p.varname = varname;
  p.zero_root_multiplicity = merged.begin()->first;
  for (auto& [e, coef] : merged) {
    Rat canon(coef);
    canon.canonicalize();
    p.terms.emplace_back(e - p.zero_root_multiplicity, canon);
  }
  return p;
}

SparsePoly parse(const std::string& text) {
  Cursor c{text};
  std::vector<std::pair<long long, Rat>> raw;
  std::string varname;

  if (c.done()) c.fail("empty input");
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.i;
      while (true) {  // collapse chained signs like "- -x"
        ch = c.peek();
        if (ch == '+' || ch == '-') {
          if (ch == '-') sign = -sign;
          ++c.i;
        } else {
          break;
        }
      }
    } else if (!raw.empty()) {
      c.fail("expected '+' or '-' between terms");
    }

    c.skip_ws();
    Rat coef = 1;
    bool have_coef = false;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      coef = read_rational(c);
      have_coef = true;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        c.skip_ws();
      }
    }

    long long expo = 0;
    if (c.i < c.s.size() && is_ident_start(c.s[c.i])) {
      std::string name;
      while (c.i < c.s.size() && is_ident_char(c.s[c.i])) name += c.s[c.i++];
      if (varname.empty())
        varname = name;
      else if (varname != name)
        c.fail("mixed variable names '" + varname + "' and '" + name + "'");
      expo = 1;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '-') c.fail("negative exponent");
        std::string d = read_digits(c);
        if (d.empty()) c.fail("expected exponent");
        if (d.size() > 18) c.fail("exponent too large");
        expo = std::stoll(d);
      }
    } else if (!have_coef) {
      c.fail("expected term");
    }

    raw.emplace_back(expo, sign < 0 ? Rat(-coef) : coef);
  }

  return normalize_terms(std::move(raw), varname.empty() ? "x" : varname);
}

std::string render(const SparsePoly& p) {
  std::ostringstream out;
  bool first = true;
  for (auto& [e, coef] : p.terms) {
    long long expo = e + p.zero_root_multiplicity;
    Rat a = abs_rat(coef);
    if (first) {
      if (sgn(coef) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(coef) < 0 ? " - " : " + ");
    }
    if (expo == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << p.varname;
      if (expo != 1) out << "^" << expo;
    }
  }
  return out.str();
}

ShapeTag classify(const SparsePoly& p) {
  int k = p.term_count();
  switch (k) {
    case 1: return {Shape::Monomial, k};
    case 2: return {Shape::Binomial, k};
    case 3: return {Shape::Trinomial, k};
    case 4: return {Shape::Tetranomial, k};
    default: return {Shape::Other, k};
  }
}

SparsePoly negate_variable(const SparsePoly& p) {
  SparsePoly q(p);
  for (auto& [e, coef] : q.terms)
    if (e % 2 != 0) coef = -coef;
  return q;
}

}  // namespace sparseroot
