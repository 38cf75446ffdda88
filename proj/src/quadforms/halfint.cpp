#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "ikeda/errors.hpp"
#include "ikeda/quadforms.hpp"

namespace ikeda {

namespace {

// Index pairs of the off-diagonal tuple entries.
const std::vector<std::pair<int, int>>& offdiag_order(int genus) {
  static const std::vector<std::pair<int, int>> g2{{0, 1}};
  static const std::vector<std::pair<int, int>> g4{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  if (genus == 2) return g2;
  if (genus == 4) return g4;
  throw InvalidInput("genus must be 2 or 4, got " + std::to_string(genus));
}

Int det_int(std::vector<Int> a, int n) {
  // Bareiss fraction-free elimination
  Int prev = 1;
  int sign = 1;
  auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

i64 to_i64(const Int& x) {
  if (!x.fits_slong_p()) throw InvalidInput("integer overflow in quadratic form arithmetic");
  return x.get_si();
}

i64 minor_det(const HalfIntMatrix& T, int k) {
  std::vector<Int> a;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.push_back(Int(T.m(i, j)));
  return to_i64(det_int(a, k));
}

i64 qeval(const HalfIntMatrix& T, const std::vector<i64>& v) {
  i64 s = 0;
  for (int i = 0; i < T.genus; ++i)
    for (int j = 0; j < T.genus; ++j) s += v[static_cast<std::size_t>(i)] * T.m(i, j) * v[static_cast<std::size_t>(j)];
  return s;
}

i64 bilinear(const HalfIntMatrix& T, const std::vector<i64>& u, const std::vector<i64>& v) {
  i64 s = 0;
  for (int i = 0; i < T.genus; ++i)
    for (int j = 0; j < T.genus; ++j) s += u[static_cast<std::size_t>(i)] * T.m(i, j) * v[static_cast<std::size_t>(j)];
  return s;
}

}  // namespace

HalfIntMatrix HalfIntMatrix::from_tuple(int genus, const std::vector<i64>& t) {
  const auto& off = offdiag_order(genus);
  if (t.size() != static_cast<std::size_t>(genus) + off.size())
    throw InvalidInput("expected " + std::to_string(genus + static_cast<int>(off.size())) + " entries for genus " +
                       std::to_string(genus));
  std::vector<i64> g(static_cast<std::size_t>(genus * genus), 0);
  for (int i = 0; i < genus; ++i) g[static_cast<std::size_t>(i * genus + i)] = 2 * t[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < off.size(); ++k) {
    auto [i, j] = off[k];
    g[static_cast<std::size_t>(i * genus + j)] = g[static_cast<std::size_t>(j * genus + i)] = t[static_cast<std::size_t>(genus) + k];
  }
  return HalfIntMatrix{genus, std::move(g)};
}

HalfIntMatrix HalfIntMatrix::from_gram(int genus, std::vector<i64> gram) {
  offdiag_order(genus);
  if (gram.size() != static_cast<std::size_t>(genus * genus)) throw InvalidInput("gram matrix has wrong size");
  for (int i = 0; i < genus; ++i) {
    if (gram[static_cast<std::size_t>(i * genus + i)] % 2) throw InvalidInput("2T must have even diagonal");
    for (int j = 0; j < genus; ++j)
      if (gram[static_cast<std::size_t>(i * genus + j)] != gram[static_cast<std::size_t>(j * genus + i)])
        throw InvalidInput("gram matrix not symmetric");
  }
  return HalfIntMatrix{genus, std::move(gram)};
}

std::vector<i64> HalfIntMatrix::tuple() const {
  std::vector<i64> t;
  for (int i = 0; i < genus; ++i) t.push_back(this->t(i));
  for (auto [i, j] : offdiag_order(genus)) t.push_back(m(i, j));
  return t;
}

i64 HalfIntMatrix::det2T() const { return minor_det(*this, genus); }

i64 HalfIntMatrix::disc() const {
  i64 d = det2T();
  return (genus / 2) % 2 ? -d : d;
}

bool HalfIntMatrix::positive_definite() const {
  for (int k = 1; k <= genus; ++k)
    if (minor_det(*this, k) <= 0) return false;
  return true;
}

HalfIntMatrix HalfIntMatrix::scaled(i64 s) const {
  HalfIntMatrix r = *this;
  for (auto& x : r.gram) x *= s;
  return r;
}

std::string HalfIntMatrix::to_string() const {
  std::ostringstream o;
  o << '[';
  auto t = tuple();
  for (std::size_t i = 0; i < t.size(); ++i) o << (i ? "," : "") << t[i];
  o << ']';
  return o.str();
}

HalfIntMatrix parse_half_int_matrix(const std::string& s) {
  std::vector<i64> v;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == ']' || ch == ' ') continue;
    if (ch == ',') {
      if (cur.empty()) throw InvalidInput("malformed matrix: " + s);
      v.push_back(std::stoll(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      cur += ch;
    } else {
      throw InvalidInput("malformed matrix: " + s);
    }
  }
  if (!cur.empty()) v.push_back(std::stoll(cur));
  if (v.size() == 3) return HalfIntMatrix::from_tuple(2, v);
  if (v.size() == 10) return HalfIntMatrix::from_tuple(4, v);
  throw InvalidInput("matrix tuple must have 3 or 10 entries: " + s);
}

DiscriminantData discriminant_data(const HalfIntMatrix& T) {
  DiscriminantData out;
  out.D = T.disc();
  if (out.D == 0) throw InvalidInput("singular matrix " + T.to_string());
  auto s = split_discriminant(out.D);
  out.d = s.fundamental;
  out.f = s.conductor;
  if (out.f > 1)
    for (auto [l, e] : factorize(out.f)) out.f_valuations[l] = e;
  return out;
}

i64 content(const HalfIntMatrix& T) {
  i64 g = 0;
  for (int i = 0; i < T.genus; ++i) {
    g = gcd(g, T.t(i));
    for (int j = i + 1; j < T.genus; ++j) g = gcd(g, T.m(i, j));
  }
  if (g == 0) throw InvalidInput("content of the zero matrix");
  return g;
}

HalfIntMatrix transform(const HalfIntMatrix& T, const std::vector<i64>& U) {
  int n = T.genus;
  std::vector<i64> g(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      i64 s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s += U[static_cast<std::size_t>(k * n + i)] * T.m(k, l) * U[static_cast<std::size_t>(l * n + j)];
      g[static_cast<std::size_t>(i * n + j)] = s;
    }
  return HalfIntMatrix{n, std::move(g)};
}

std::vector<std::vector<i64>> short_vectors(const HalfIntMatrix& T, i64 bound) {
  int n = T.genus;
  // x^T A x = sum_i d_i (x_i + sum_{j>i} L_ji x_j)^2
  std::vector<double> d(static_cast<std::size_t>(n));
  std::vector<std::vector<double>> L(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    double s = static_cast<double>(T.m(i, i));
    for (int k = 0; k < i; ++k) s -= L[i][k] * L[i][k] * d[k];
    if (s <= 0) throw InvalidInput("short_vectors needs a positive definite matrix");
    d[i] = s;
    for (int j = i + 1; j < n; ++j) {
      double t = static_cast<double>(T.m(j, i));
      for (int k = 0; k < i; ++k) t -= L[j][k] * L[i][k] * d[k];
      L[j][i] = t / d[i];
    }
  }
  std::vector<std::vector<i64>> out;
  std::vector<i64> x(static_cast<std::size_t>(n), 0);
  std::function<void(int, double)> rec = [&](int i, double budget) {
    if (i < 0) {
      bool nonzero = std::any_of(x.begin(), x.end(), [](i64 v) { return v != 0; });
      if (nonzero && qeval(T, x) <= bound) out.push_back(x);
      return;
    }
    double c = 0;
    for (int j = i + 1; j < n; ++j) c -= L[j][i] * static_cast<double>(x[j]);
    double r = std::sqrt(std::max(0.0, budget) / d[i]) + 1e-6;
    i64 lo = static_cast<i64>(std::ceil(c - r)), hi = static_cast<i64>(std::floor(c + r));
    for (i64 v = lo; v <= hi; ++v) {
      x[i] = v;
      double e = static_cast<double>(v) - c;
      rec(i - 1, budget - d[i] * e * e + 1e-6);
    }
    x[i] = 0;
  };
  rec(n - 1, static_cast<double>(bound) + 1e-6);
  return out;
}

IsometryResult isometric(const HalfIntMatrix& a, const HalfIntMatrix& b) {
  if (a.genus != b.genus) throw InvalidInput("isometry test across genera");
  if (!a.positive_definite() || !b.positive_definite()) throw InvalidInput("isometry test needs positive definite input");
  IsometryResult res;
  if (a.det2T() != b.det2T()) return res;
  int n = a.genus;
  i64 maxdiag = 0;
  for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, b.m(i, i));
  auto sv = short_vectors(a, maxdiag);
  std::vector<std::vector<const std::vector<i64>*>> cand(static_cast<std::size_t>(n));
  for (auto& v : sv) {
    i64 q = qeval(a, v);
    for (int i = 0; i < n; ++i)
      if (q == b.m(i, i)) cand[static_cast<std::size_t>(i)].push_back(&v);
  }
  std::vector<const std::vector<i64>*> chosen(static_cast<std::size_t>(n));
  std::function<bool(int)> rec = [&](int j) -> bool {
    if (j == n) {
      std::vector<Int> U;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) U.push_back(Int((*chosen[static_cast<std::size_t>(c)])[static_cast<std::size_t>(r)]));
      Int det = det_int(U, n);
      if (det != 1 && det != -1) return false;
      res.witness.clear();
      for (auto& x : U) res.witness.push_back(x.get_si());
      return true;
    }
    for (auto* v : cand[static_cast<std::size_t>(j)]) {
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) ok = bilinear(a, *chosen[static_cast<std::size_t>(i)], *v) == b.m(i, j);
      if (!ok) continue;
      chosen[static_cast<std::size_t>(j)] = v;
      if (rec(j + 1)) return true;
    }
    return false;
  };
  res.isometric = rec(0);
  return res;
}

namespace {

// Partially Minkowski-reduced candidates: sorted diagonal, |2t_ij| <= t_ii,
// 2t_1j >= 0, Q(v) >= t_jj for v in {-1,0,1}^n whose last nonzero entry is at j,
// prod t_ii <= max_abs_disc / 2.
std::vector<HalfIntMatrix> genus4_candidates(i64 max_abs_disc, std::optional<i64> exact) {
  std::vector<HalfIntMatrix> out;
  i64 prod_bound = max_abs_disc / 2;
  std::vector<std::vector<i64>> pm;
  for (int code = 0; code < 81; ++code) {
    std::vector<i64> v(4);
    int c = code;
    for (int i = 0; i < 4; ++i, c /= 3) v[static_cast<std::size_t>(i)] = c % 3 - 1;
    if (std::any_of(v.begin(), v.end(), [](i64 x) { return x != 0; })) pm.push_back(v);
  }
  HalfIntMatrix T{4, std::vector<i64>(16, 0)};
  auto set = [&](int i, int j, i64 v) {
    T.gram[static_cast<std::size_t>(i * 4 + j)] = v;
    T.gram[static_cast<std::size_t>(j * 4 + i)] = v;
  };
  for (i64 t1 = 1; t1 * t1 * t1 * t1 <= prod_bound; ++t1)
    for (i64 t2 = t1; t1 * t2 * t2 * t2 <= prod_bound; ++t2)
      for (i64 t3 = t2; t1 * t2 * t3 * t3 <= prod_bound; ++t3)
        for (i64 t4 = t3; t1 * t2 * t3 * t4 <= prod_bound; ++t4) {
          set(0, 0, 2 * t1);
          set(1, 1, 2 * t2);
          set(2, 2, 2 * t3);
          set(3, 3, 2 * t4);
          for (i64 m12 = 0; m12 <= t1; ++m12) {
            set(0, 1, m12);
            for (i64 m13 = 0; m13 <= t1; ++m13) {
              set(0, 2, m13);
              for (i64 m23 = -t2; m23 <= t2; ++m23) {
                set(1, 2, m23);
                if (minor_det(T, 3) <= 0) continue;
                for (i64 m14 = 0; m14 <= t1; ++m14) {
                  set(0, 3, m14);
                  for (i64 m24 = -t2; m24 <= t2; ++m24) {
                    set(1, 3, m24);
                    for (i64 m34 = -t3; m34 <= t3; ++m34) {
                      set(2, 3, m34);
                      i64 det = T.det2T();
                      if (det <= 0 || det > max_abs_disc) continue;
                      if (exact && det != *exact) continue;
                      bool ok = true;
                      for (auto& v : pm) {
                        int j = 3;
                        while (v[static_cast<std::size_t>(j)] == 0) --j;
                        if (qeval(T, v) < T.m(j, j)) {
                          ok = false;
                          break;
                        }
                      }
                      if (ok && T.positive_definite()) out.push_back(T);
                    }
                  }
                }
              }
            }
          }
        }
  return out;
}

std::vector<HalfIntMatrix> genus2_candidates(i64 max_abs_disc, std::optional<i64> exact) {
  std::vector<HalfIntMatrix> out;
  // 0 <= b <= a <= c, 4ac - b^2 = |D|
  for (i64 a = 1; 3 * a * a <= max_abs_disc; ++a)
    for (i64 b = 0; b <= a; ++b)
      for (i64 c = a; 4 * a * c - b * b <= max_abs_disc; ++c) {
        i64 det = 4 * a * c - b * b;
        if (exact && det != *exact) continue;
        out.push_back(HalfIntMatrix::from_tuple(2, {a, c, b}));
      }
  return out;
}

std::vector<i64> theta_invariant(const HalfIntMatrix& T, i64 bound) {
  std::vector<i64> counts(static_cast<std::size_t>(bound / 2 + 1), 0);
  for (auto& v : short_vectors(T, bound)) ++counts[static_cast<std::size_t>(qeval(T, v) / 2)];
  return counts;
}

std::map<i64, std::vector<HalfIntMatrix>> classify(int genus, std::vector<HalfIntMatrix> cands) {
  std::map<i64, std::vector<HalfIntMatrix>> out;
  std::sort(cands.begin(), cands.end());
  if (genus == 2) {
    for (auto& T : cands) out[T.disc()].push_back(T);
    return out;
  }
  // bucket by discriminant and a theta-series prefix, then dedupe by isometry
  std::map<std::pair<i64, std::vector<i64>>, std::vector<HalfIntMatrix>> buckets;
  for (auto& T : cands) {
    auto key = std::make_pair(T.disc(), theta_invariant(T, 8));
    auto& reps = buckets[key];
    bool seen = false;
    for (auto& R : reps)
      if (isometric(R, T).isometric) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(T);
  }
  for (auto& [key, reps] : buckets)
    for (auto& R : reps) out[key.first].push_back(R);
  for (auto& [D, reps] : out) std::sort(reps.begin(), reps.end());
  return out;
}

void check_enum_args(int genus, i64 max_abs, i64 bound) {
  offdiag_order(genus);
  if (max_abs > bound)
    throw InvalidInput("discriminant " + std::to_string(max_abs) + " exceeds the enumeration bound " + std::to_string(bound));
}

}  // namespace

std::vector<HalfIntMatrix> enumerate_classes(int genus, i64 D, i64 bound) {
  offdiag_order(genus);
  i64 sign = genus == 2 ? -1 : 1;
  if (D == 0 || (D > 0) != (sign > 0))
    throw InvalidInput("genus " + std::to_string(genus) + " positive definite matrices have " +
                       (sign > 0 ? "positive" : "negative") + " discriminant, got " + std::to_string(D));
  i64 a = D * sign;
  check_enum_args(genus, a, bound);
  auto cands = genus == 2 ? genus2_candidates(a, a) : genus4_candidates(a, a);
  auto m = classify(genus, std::move(cands));
  auto it = m.find(D);
  return it == m.end() ? std::vector<HalfIntMatrix>{} : it->second;
}

std::map<i64, std::vector<HalfIntMatrix>> enumerate_classes_upto(int genus, i64 max_abs_disc, i64 bound) {
  check_enum_args(genus, max_abs_disc, bound);
  if (max_abs_disc <= 0) return {};
  auto cands = genus == 2 ? genus2_candidates(max_abs_disc, std::nullopt) : genus4_candidates(max_abs_disc, std::nullopt);
  return classify(genus, std::move(cands));
}

}  // namespace ikeda
