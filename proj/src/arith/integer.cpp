#include "ikeda/arith/integer.hpp"

#include <algorithm>
#include <cctype>

#include "ikeda/errors.hpp"

namespace ikeda {

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int ipow(long base, unsigned long e) { return ipow(Int(base), e); }

Rat rpow(const Rat& base, long e) {
  if (e >= 0) {
    Rat r(ipow(base.get_num(), static_cast<unsigned long>(e)), ipow(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  if (sgn(base) == 0) throw InvalidInput("negative power of zero");
  Rat inv = 1 / base;
  return rpow(inv, -e);
}

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw InvalidInput("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

int valuation(const Int& n, unsigned long p) {
  if (sgn(n) == 0) throw InvalidInput("valuation of zero");
  Int m = n;
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rat& r, unsigned long p) {
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidInput("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InvalidInput("malformed rational: " + text);
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  return make_rat(Int(num), Int(den));
}

}  // namespace ikeda
