#include "imx/polynomial.hpp"

#include <sstream>

namespace imx {

std::string render_pp(const PowerProduct& pp, const Ring& ring) {
  if (pp.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < pp.dim(); ++i) {
    if (!pp.exp(i)) continue;
    if (!first) os << "*";
    os << ring.names[i];
    if (pp.exp(i) > 1) os << "^" << pp.exp(i);
    first = false;
  }
  return os.str();
}

std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem) {
  std::string name = stem;
  auto clashes = [&](const std::string& n) {
    for (const auto& t : taken)
      if (t == n) return true;
    return false;
  };
  while (clashes(name)) name += "_";
  return name;
}

Polynomial<Fp> reduce_mod_p(const Polynomial<Rat>& f, RingPtr target, uint32_t p) {
  std::vector<Term<Fp>> out;
  out.reserve(f.terms().size());
  BigInt bp(static_cast<unsigned long>(p));
  for (const auto& t : f.terms()) {
    BigInt den = t.c.get_den() % bp;
    if (den == 0) throw Error("prime divides a coefficient denominator");
    BigInt num = t.c.get_num() % bp;
    Fp c = Fp(num.get_si(), p) * inv(Fp(den.get_si(), p));
    if (!is_zero(c)) out.push_back({t.pp, c});
  }
  return Polynomial<Fp>::from_terms(std::move(target), std::move(out));
}

Polynomial<Rat> integer_normal_form(const Polynomial<Rat>& f) {
  if (f.is_zero()) return f;
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
  }
  Rat scl = make_rat(den_lcm, num_gcd);
  if (sgn(f.lc()) < 0) scl = -scl;
  return scale(f, scl);
}

namespace {

// Sign-split rendering: |coeff| into `mag` (empty when |coeff| = 1 and the
// power-product is nontrivial), returns true when negative.
bool coeff_parts(Fp c, bool trivial_pp, std::string& mag) {
  uint32_t half = c.p / 2;
  bool negative = c.r > half;
  uint32_t m = negative ? c.p - c.r : c.r;
  if (m == 1 && !trivial_pp)
    mag.clear();
  else
    mag = std::to_string(m);
  return negative;
}

bool coeff_parts(const Rat& c, bool trivial_pp, std::string& mag) {
  bool negative = sgn(c) < 0;
  Rat m = negative ? Rat(-c) : c;
  if (m == 1 && !trivial_pp)
    mag.clear();
  else
    mag = to_string(m);
  return negative;
}

template <class K>
std::string render_terms(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string mag;
    bool negative = coeff_parts(t.c, t.pp.is_one(), mag);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (!mag.empty()) {
      os << mag;
      if (!t.pp.is_one()) os << "*";
    }
    if (!t.pp.is_one()) os << render_pp(t.pp, *f.ring());
  }
  return os.str();
}

}  // namespace

std::string render(const Polynomial<Fp>& f) { return render_terms(f); }

std::string render(const Polynomial<Rat>& f) {
  bool integral = true;
  for (const auto& t : f.terms())
    if (t.c.get_den() != 1) {
      integral = false;
      break;
    }
  if (integral) return render_terms(f);
  // Clear denominators to keep '/' at the top level of the rendered text.
  BigInt den_lcm = 1;
  for (const auto& t : f.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  Polynomial<Rat> cleared = scale(f, Rat(den_lcm));
  return "(" + render_terms(cleared) + ")/" + den_lcm.get_str();
}

}  // namespace imx
