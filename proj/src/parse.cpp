#include "imx/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace imx {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string text;
  size_t tok_pos = 0;

  explicit Lexer(const std::string& src) : s(src) { next(); }

  void next() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= s.size()) {
      tok = Tok::End;
      return;
    }
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      text = s.substr(start, pos - start);
      tok = Tok::Int;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      text = s.substr(start, pos - start);
      tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '/': tok = Tok::Slash; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", tok_pos);
    }
  }
};

struct Parser {
  Lexer lex;
  RingPtr ring;
  Rat one{1};

  Parser(const std::string& src, RingPtr r) : lex(src), ring(std::move(r)) {}

  Polynomial<Rat> expr() {
    bool negate = false;
    while (lex.tok == Tok::Minus || lex.tok == Tok::Plus) {
      if (lex.tok == Tok::Minus) negate = !negate;
      lex.next();
    }
    Polynomial<Rat> acc = term();
    if (negate) acc = neg(acc);
    while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
      bool minus = lex.tok == Tok::Minus;
      lex.next();
      Polynomial<Rat> t = term();
      acc = minus ? sub(acc, t) : add(acc, t);
    }
    return acc;
  }

  Polynomial<Rat> term() {
    Polynomial<Rat> acc = factor();
    while (lex.tok == Tok::Star) {
      lex.next();
      acc = mul(acc, factor());
    }
    return acc;
  }

  Polynomial<Rat> factor() {
    if (lex.tok == Tok::Minus) {
      lex.next();
      return neg(factor());
    }
    Polynomial<Rat> base = primary();
    if (lex.tok == Tok::Caret) {
      lex.next();
      if (lex.tok != Tok::Int) throw SyntaxError("expected integer exponent", lex.tok_pos);
      long e = std::stol(lex.text);
      lex.next();
      if (e == 0) return Polynomial<Rat>::constant(ring, one);
      return poly_pow(base, e);
    }
    return base;
  }

  Polynomial<Rat> primary() {
    switch (lex.tok) {
      case Tok::Int: {
        Rat c(BigInt(lex.text));
        lex.next();
        return Polynomial<Rat>::constant(ring, c);
      }
      case Tok::Ident: {
        int idx = ring->index_of(lex.text);
        if (idx < 0) throw UnknownIndeterminate(lex.text);
        lex.next();
        return Polynomial<Rat>::variable(ring, idx, one);
      }
      case Tok::LParen: {
        lex.next();
        Polynomial<Rat> inner = expr();
        if (lex.tok != Tok::RParen) throw SyntaxError("expected ')'", lex.tok_pos);
        lex.next();
        return inner;
      }
      default:
        throw SyntaxError("expected integer, indeterminate or '('", lex.tok_pos);
    }
  }
};

}  // namespace

Polynomial<Rat> parse_polynomial(const std::string& text, RingPtr ring) {
  Parser p(text, std::move(ring));
  Polynomial<Rat> f = p.expr();
  if (p.lex.tok != Tok::End) throw SyntaxError("trailing input", p.lex.tok_pos);
  return f;
}

std::pair<Polynomial<Rat>, Polynomial<Rat>> parse_fraction(const std::string& text, RingPtr ring) {
  Parser p(text, ring);
  Polynomial<Rat> num = p.expr();
  Polynomial<Rat> den = Polynomial<Rat>::constant(ring, Rat(1));
  if (p.lex.tok == Tok::Slash) {
    p.lex.next();
    den = p.expr();
  }
  if (p.lex.tok != Tok::End) throw SyntaxError("trailing input", p.lex.tok_pos);
  return {std::move(num), std::move(den)};
}

bool try_divide(const Polynomial<Rat>& f, const Polynomial<Rat>& g, Polynomial<Rat>& quot) {
  assert(!g.is_zero());
  Polynomial<Rat> r = f;
  std::vector<Term<Rat>> q;
  while (!r.is_zero()) {
    if (!r.lpp().divisible_by(g.lpp())) return false;
    PowerProduct pp = r.lpp() / g.lpp();
    Rat c = r.lc() / g.lc();
    q.push_back({pp, c});
    r = sub(r, mul_term(g, pp, c));
  }
  quot = Polynomial<Rat>::from_terms(f.ring(), std::move(q));
  return true;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

ParamSystem load_problem_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long long characteristic = 0;
  std::vector<std::string> params;
  std::vector<std::pair<std::string, std::string>> coords;  // (name, expr)
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("char:", 0) == 0) {
      characteristic = std::stoll(trim(line.substr(5)));
      continue;
    }
    if (line.rfind("params:", 0) == 0) {
      std::istringstream ps(line.substr(7));
      std::string name;
      while (ps >> name) params.push_back(name);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected '<name> = <expr>' line", 0);
    std::string name = trim(line.substr(0, eq));
    if (name.empty()) throw SyntaxError("missing coordinate name", 0);
    coords.emplace_back(name, trim(line.substr(eq + 1)));
  }
  if (params.empty()) throw InconsistentArity("no parameters declared");
  if (coords.empty()) throw InconsistentArity("no coordinates declared");

  ParamSystem sys;
  sys.characteristic = characteristic;
  sys.params = params;
  sys.tring = make_simple_ring(params, 0);

  std::vector<Polynomial<Rat>> nums, dens;
  for (auto& [name, expr] : coords) {
    auto [n, d] = parse_fraction(expr, sys.tring);
    if (d.is_zero()) throw ZeroDenominator();
    if (d.is_constant()) {
      // Fold constant denominators into the numerator.
      n = scale(n, inv(d.lc()));
      d = Polynomial<Rat>::constant(sys.tring, Rat(1));
    }
    nums.push_back(std::move(n));
    dens.push_back(std::move(d));
  }

  // Common denominator: dedupe the nonconstant denominators, absorbing any
  // that exactly divide another. A product of the survivors is a valid (if
  // occasionally non-minimal) common denominator.
  Polynomial<Rat> q = Polynomial<Rat>::constant(sys.tring, Rat(1));
  for (const auto& d : dens) {
    if (d.is_constant()) continue;
    Polynomial<Rat> quot(sys.tring);
    if (try_divide(q, d, quot)) continue;  // already a factor of q
    if (try_divide(d, q, quot))
      q = d;  // q divides d: replace
    else
      q = mul(q, d);
  }

  for (size_t i = 0; i < nums.size(); ++i) {
    Polynomial<Rat> cof(sys.tring);
    bool ok = try_divide(q, dens[i], cof);
    assert(ok);
    (void)ok;
    Polynomial<Rat> p = mul(nums[i], cof);
    // Cross-multiplication identity: p * d_i = e_i * q.
    assert(mul(p, dens[i]) == mul(nums[i], q));
    // Split off constant coordinates (p = c*q).
    Polynomial<Rat> ratio(sys.tring);
    if (p.is_zero() || (try_divide(p, q, ratio) && ratio.is_constant())) {
      Rat c = p.is_zero() ? Rat(0) : ratio.lc();
      sys.split_constants.emplace_back(coords[i].first, to_string(c));
      continue;
    }
    sys.targets.push_back(coords[i].first);
    sys.numer.push_back(std::move(p));
  }
  if (sys.targets.empty())
    throw InconsistentArity("every coordinate is constant; nothing to implicitize");
  sys.denom = q;
  return sys;
}

ParamSystem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_problem_text(ss.str());
}

SysView<Rat> view_q(const ParamSystem& sys) {
  SysView<Rat> v;
  v.tring = sys.tring;
  v.xnames = sys.targets;
  v.numer = sys.numer;
  v.denom = sys.denom;
  return v;
}

SysView<Fp> view_fp(const ParamSystem& sys, uint32_t p) {
  SysView<Fp> v;
  v.tring = make_ring(sys.tring->names, sys.tring->weights, sys.tring->order, p);
  v.xnames = sys.targets;
  Polynomial<Fp> q = reduce_mod_p(sys.denom, v.tring, p);
  if (q.is_zero() || q.total_degree() != sys.denom.total_degree())
    throw Error("characteristic " + std::to_string(p) + " is unsuitable for this input");
  for (const auto& n : sys.numer) {
    Polynomial<Fp> r = reduce_mod_p(n, v.tring, p);
    if (r.total_degree() != n.total_degree())
      throw Error("characteristic " + std::to_string(p) + " is unsuitable for this input");
    v.numer.push_back(std::move(r));
  }
  v.denom = std::move(q);
  return v;
}

}  // namespace imx
