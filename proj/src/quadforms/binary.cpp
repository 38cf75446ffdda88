#include <algorithm>
#include <set>
#include <sstream>

#include "ikeda/errors.hpp"
#include "ikeda/quadforms.hpp"

namespace ikeda {

Mat2 mat2_identity() { return {Int(1), Int(0), Int(0), Int(1)}; }

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 mat2_inverse(const Mat2& x) {
  if (x[0] * x[3] - x[1] * x[2] != 1) throw InvalidInput("mat2_inverse expects determinant 1");
  return {x[3], -x[1], -x[2], x[0]};
}

i64 BinaryQF::content() const { return gcd(gcd(a, b), c); }

BinaryQF BinaryQF::act(const Mat2& m) const {
  Int na = eval(m[0], m[2]);
  Int nc = eval(m[1], m[3]);
  Int nb = 2 * Int(a) * m[0] * m[1] + Int(b) * (m[0] * m[3] + m[1] * m[2]) + 2 * Int(c) * m[2] * m[3];
  if (!na.fits_slong_p() || !nb.fits_slong_p() || !nc.fits_slong_p()) throw InvalidInput("form coefficients overflow");
  return {na.get_si(), nb.get_si(), nc.get_si()};
}

std::string BinaryQF::to_string() const {
  std::ostringstream o;
  o << '[' << a << ',' << b << ',' << c << ']';
  return o.str();
}

BinaryQF parse_binary_qf(const std::string& s) {
  std::vector<i64> v;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == ']' || ch == ' ') continue;
    if (ch == ',') {
      v.push_back(std::stoll(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      cur += ch;
    } else {
      throw InvalidInput("malformed binary form: " + s);
    }
  }
  if (!cur.empty()) v.push_back(std::stoll(cur));
  if (v.size() != 3) throw InvalidInput("binary form needs three entries: " + s);
  return {v[0], v[1], v[2]};
}

namespace {

const Mat2 kS{Int(0), Int(-1), Int(1), Int(0)};

Mat2 translation(i64 t) { return {Int(1), Int(t), Int(0), Int(1)}; }

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_disc(i64 D) {
  if (D == 0 || mod(D, 4) > 1) throw InvalidInput("not a discriminant: " + std::to_string(D));
  if (D > 0 && is_square(D)) throw Unsupported("square discriminant " + std::to_string(D) + " (degenerate forms) is not handled");
}

Reduction reduce_definite(BinaryQF q) {
  Mat2 m = mat2_identity();
  auto apply = [&](const Mat2& x) {
    q = q.act(x);
    m = mat2_mul(m, x);
  };
  for (;;) {
    if (q.b <= -q.a || q.b > q.a) apply(translation(floor_div(q.a - q.b, 2 * q.a)));
    if (q.c < q.a) {
      apply(kS);
      continue;
    }
    break;
  }
  if (q.a == q.c && q.b < 0) apply(kS);
  return {q, m};
}

bool is_reduced_indefinite(const BinaryQF& q) {
  i64 s = isqrt(q.disc());
  i64 a2 = 2 * (q.a < 0 ? -q.a : q.a);
  return q.b > 0 && q.b <= s && a2 + q.b >= s + 1 && a2 - q.b <= s;
}

// rho: q -> q o [[0,-1],[1,t]] with the new middle coefficient normalized.
std::pair<BinaryQF, Mat2> rho(const BinaryQF& q) {
  i64 D = q.disc(), s = isqrt(D);
  i64 c = q.c, ac = c < 0 ? -c : c;
  // b' = -b + 2 c t lies in (-|c|, |c|] if |c| > sqrt(D), else in [s - 2|c| + 1, s]
  i64 lo = ac > s ? -ac + 1 : s - 2 * ac + 1;
  // smallest b' >= lo with b' = -b mod 2|c|
  i64 r = mod(-q.b - lo, 2 * ac);
  i64 bp = lo + r;
  i64 t = (bp + q.b) / (2 * c);
  Mat2 m{Int(0), Int(-1), Int(1), Int(t)};
  return {q.act(m), m};
}

Reduction reduce_indefinite(BinaryQF q) {
  Mat2 m = mat2_identity();
  int guard = 0;
  while (!is_reduced_indefinite(q)) {
    auto [nq, x] = rho(q);
    q = nq;
    m = mat2_mul(m, x);
    if (++guard > 100000) throw InternalError("indefinite reduction did not terminate");
  }
  return {q, m};
}

// Reduced forms on the cycle of a reduced form r, with cumulative transforms (r o t_i = form_i).
std::vector<Reduction> cycle_of(const BinaryQF& r) {
  std::vector<Reduction> out{{r, mat2_identity()}};
  BinaryQF q = r;
  Mat2 m = mat2_identity();
  for (;;) {
    auto [nq, x] = rho(q);
    q = nq;
    m = mat2_mul(m, x);
    if (q == r) {
      out.push_back({q, m});  // last entry: the automorph
      return out;
    }
    out.push_back({q, m});
    if (out.size() > 100000) throw InternalError("cycle too long");
  }
}

BinaryQF negate(const BinaryQF& q) { return {-q.a, -q.b, -q.c}; }

// Canonical SL2 class key: the reduced form (definite) or the least form on the cycle.
BinaryQF class_key(const BinaryQF& q) {
  auto r = reduce_form(q);
  if (q.disc() < 0) return r.form;
  auto cyc = cycle_of(r.form);
  BinaryQF best = r.form;
  for (auto& e : cyc) best = std::min(best, e.form);
  return best;
}

bool in_gamma0(const Mat2& g, i64 p) {
  Int r = g[2] % p;
  return r == 0;
}

bool is_pm_identity_mod(const Mat2& g, i64 p) {
  auto m = [&](const Int& x) { return mod(Int(x % p).get_si(), p); };
  if (m(g[1]) != 0 || m(g[2]) != 0) return false;
  return (m(g[0]) == 1 && m(g[3]) == 1) || (m(g[0]) == p - 1 && m(g[3]) == p - 1);
}

}  // namespace

Reduction reduce_form(const BinaryQF& q) {
  i64 D = q.disc();
  check_disc(D);
  if (D < 0) {
    if (q.a < 0) {
      auto r = reduce_definite(negate(q));
      return {negate(r.form), r.transform};
    }
    return reduce_definite(q);
  }
  return reduce_indefinite(q);
}

std::vector<Mat2> stabilizer(const BinaryQF& q) {
  auto r = reduce_form(q);
  Mat2 h = r.transform, hi = mat2_inverse(h);
  Mat2 gen = mat2_identity();
  if (q.disc() < 0) {
    // definite: automorphs of a reduced form have entries in {-1,0,1}; pick one of maximal order
    int best = 1;
    for (int code = 0; code < 81; ++code) {
      Mat2 x;
      int c = code;
      for (int i = 0; i < 4; ++i, c /= 3) x[static_cast<std::size_t>(i)] = c % 3 - 1;
      if (x[0] * x[3] - x[1] * x[2] != 1 || !(r.form.act(x) == r.form)) continue;
      Mat2 y = x;
      int ord = 1;
      while (!(y == mat2_identity() || y == Mat2{Int(-1), Int(0), Int(0), Int(-1)})) {
        y = mat2_mul(y, x);
        ++ord;
      }
      if (ord > best) {
        best = ord;
        gen = x;
      }
    }
  } else {
    gen = cycle_of(r.form).back().transform;
  }
  return {mat2_mul(mat2_mul(h, gen), hi)};
}

std::optional<Mat2> sl2_equivalence(const BinaryQF& q, const BinaryQF& r) {
  if (q.disc() != r.disc()) return std::nullopt;
  auto rq = reduce_form(q), rr = reduce_form(r);
  Mat2 tail = mat2_inverse(rr.transform);
  if (q.disc() < 0) {
    if (!(rq.form == rr.form)) return std::nullopt;
    return mat2_mul(rq.transform, tail);
  }
  for (auto& e : cycle_of(rq.form))
    if (e.form == rr.form) return mat2_mul(mat2_mul(rq.transform, e.transform), tail);
  return std::nullopt;
}

std::optional<Mat2> gamma0_equivalence(const BinaryQF& q, const BinaryQF& r, i64 p) {
  auto g0 = sl2_equivalence(q, r);
  if (!g0) return std::nullopt;
  Mat2 gen = stabilizer(q)[0];
  Mat2 pw = mat2_identity();
  for (i64 j = 0; j <= p * p + 2; ++j) {
    Mat2 g = mat2_mul(pw, *g0);
    if (in_gamma0(g, p)) return g;
    pw = mat2_mul(pw, gen);
    if (is_pm_identity_mod(pw, p)) break;
  }
  return std::nullopt;
}

std::vector<BinaryQF> binary_class_set(i64 D, FormGroup group, i64 p, bool p_primitive) {
  check_disc(D);
  if ((group == FormGroup::Gamma0 || p_primitive) && (p < 2 || !is_prime(p))) throw InvalidInput("need a prime p");
  std::vector<BinaryQF> sl2;
  if (D < 0) {
    for (i64 a = 1; 3 * a * a <= -D; ++a)
      for (i64 b = -a + 1; b <= a; ++b) {
        i64 num = b * b - D;
        if (num % (4 * a)) continue;
        i64 c = num / (4 * a);
        if (c < a || (b < 0 && a == c)) continue;
        sl2.push_back({a, b, c});
      }
  } else {
    i64 s = isqrt(D);
    std::set<BinaryQF> seen;
    for (i64 b = 1; b <= s; ++b) {
      if (mod(b - D, 2)) continue;
      i64 N = (b * b - D) / 4;  // a c, negative
      for (i64 a0 : divisors(-N))
        for (i64 a : {a0, -a0}) {
          BinaryQF q{a, b, N / a};
          if (!is_reduced_indefinite(q) || seen.count(q)) continue;
          BinaryQF best = q;
          for (auto& e : cycle_of(q)) {
            seen.insert(e.form);
            best = std::min(best, e.form);
          }
          sl2.push_back(best);
        }
    }
  }
  if (p_primitive) sl2.erase(std::remove_if(sl2.begin(), sl2.end(), [&](const BinaryQF& q) { return q.content() % p == 0; }), sl2.end());
  std::sort(sl2.begin(), sl2.end());
  if (group == FormGroup::SL2) return sl2;

  std::vector<BinaryQF> out;
  for (auto& Q : sl2) {
    // points of P^1(F_p) where Q vanishes give forms of L_p in the orbit of Q
    std::vector<BinaryQF> reps;
    for (i64 x = 0; x <= p; ++x) {
      Mat2 g = x == p ? mat2_identity() : Mat2{Int(x), Int(-1), Int(1), Int(0)};
      BinaryQF c = Q.act(g);
      if (mod(c.a, p) != 0) continue;
      bool dup = false;
      for (auto& r : reps)
        if (gamma0_equivalence(r, c, p)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(c);
    }
    out.insert(out.end(), reps.begin(), reps.end());
  }
  return out;
}

int genus_character(const BinaryQF& q, i64 d, i64 search_bound) {
  i64 D = q.disc();
  if (!is_fundamental_discriminant(d)) throw InvalidInput("not a fundamental discriminant: " + std::to_string(d));
  if (D % d != 0 || mod(D / d, 4) > 1)
    throw InvalidInput("discriminant " + std::to_string(D) + " is not " + std::to_string(d) + " times a discriminant");
  if (gcd(q.content(), d) > 1) return 0;
  for (i64 r = 1; r <= search_bound; ++r)
    for (i64 x = -r; x <= r; ++x)
      for (i64 y = -r; y <= r; ++y) {
        if (std::max(x < 0 ? -x : x, y < 0 ? -y : y) != r) continue;
        if (gcd(x, y) != 1) continue;
        Int v = q.eval(Int(x), Int(y));
        if (v == 0 || !v.fits_slong_p()) continue;
        i64 n = v.get_si();
        if (gcd(n, d) != 1) continue;
        return kronecker(d, n);
      }
  throw Inconclusive("no represented value prime to " + std::to_string(d) + " found for " + q.to_string());
}

Lemma36Step lemma36_i(const BinaryQF& q, i64 p) {
  i64 D = q.disc();
  if (!is_prime(p) || D % p != 0) throw InvalidInput("lemma36_i needs p | D");
  Mat2 m = mat2_identity();
  BinaryQF cur = q;
  if (mod(cur.a, p) == 0) return {cur, m};
  if (mod(cur.b, p) != 0) {
    i64 beta = mod(-cur.b * invmod(mod(2 * cur.a, p), p), p);
    m = mat2_mul(m, translation(beta));
    cur = q.act(m);
  }
  if (mod(cur.a, p) != 0) {
    Mat2 w{Int(p), Int(p - 1), Int(1), Int(1)};
    m = mat2_mul(m, w);
    cur = q.act(m);
  }
  if (mod(cur.a, p) != 0) throw InternalError("lemma36_i recipe failed on " + q.to_string());
  return {cur, m};
}

Lemma36Step lemma36_ii(const BinaryQF& q, i64 p) {
  i64 D = q.disc();
  if (!is_prime(p) || p == 2) throw InvalidInput("lemma36_ii needs an odd prime");
  if (D % (p * p) != 0 || kronecker(D / (p * p), p) != 1)
    throw InvalidInput("lemma36_ii needs p^2 | D and (D/p^2 | p) = 1");
  if (mod(q.a, p) != 0) throw InvalidInput("lemma36_ii needs a form with p | a");
  if (q.content() % p == 0) throw InvalidInput("lemma36_ii needs a form with content prime to p");
  // a = 0 mod p^2, b = 0 mod p; solve Q''(1, r) = 0 mod p for Q'' = [a/p^2, b/p, c]
  i64 a2 = q.a / (p * p), b1 = q.b / p;
  for (i64 r = 0; r < p; ++r) {
    if (mod(a2 + b1 * r + q.c * r * r, p) != 0) continue;
    Mat2 m{Int(1), Int(0), Int(p * r), Int(1)};
    BinaryQF out = q.act(m);
    if (mod(out.a, p * p * p) != 0) throw InternalError("lemma36_ii recipe failed on " + q.to_string());
    return {out, m};
  }
  throw InternalError("lemma36_ii: no root mod p for " + q.to_string());
}

namespace {

Lemma36Report lemma36_match(const std::string& variant, i64 D, i64 p) {
  Lemma36Report rep;
  rep.variant = variant;
  rep.D = D;
  rep.p = p;
  auto g0 = binary_class_set(D, FormGroup::Gamma0, p, true);
  auto sl = binary_class_set(D, FormGroup::SL2, p, true);
  rep.gamma0_classes = g0.size();
  rep.sl2_classes = sl.size();
  std::set<BinaryQF> hit;
  bool injective = true;
  for (auto& q : g0) {
    BinaryQF img = variant == "iii" ? q : BinaryQF{q.a / p, q.b, q.c * p};
    BinaryQF key = class_key(img);
    if (!hit.insert(key).second) injective = false;
    rep.pairs.push_back({q, key});
  }
  std::set<BinaryQF> target(sl.begin(), sl.end());
  rep.bijective = injective && hit == target;
  return rep;
}

}  // namespace

Lemma36Report lemma36_iii(i64 D, i64 p) {
  if (!is_prime(p) || D % p != 0) throw InvalidInput("lemma36_iii needs p | D");
  return lemma36_match("iii", D, p);
}

Lemma36Report lemma36_iv(i64 D, i64 p) {
  if (!is_prime(p) || D % p != 0 || D % (p * p) == 0) throw InvalidInput("lemma36_iv needs p || D");
  return lemma36_match("iv", D, p);
}

}  // namespace ikeda
