// Command-line driver: eigenforms, half-integral forms, Siegel series, lifts,
// stabilizations, Eisenstein tables, congruence scans and Gamma_0(p) class bijection checks.
//
// Exit codes: 0 success, 1 invalid input, 2 unsupported case, 3 internal error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ikeda/serialize.hpp"

using namespace ikeda;

namespace {

constexpr const char* kConfigEnv = "IKEDA_CONFIG";

struct RunConfig {
  std::size_t precision = 200;
  int padic_precision = 30;
  i64 disc_bound = 200;
  std::string format = "json";
  int jobs = 1;

  void validate() const {
    if (precision == 0 || padic_precision <= 0 || disc_bound < 0 || jobs <= 0)
      throw InvalidInput("config bounds must be positive");
    if (format != "json" && format != "csv") throw InvalidInput("format must be json or csv, got " + format);
  }
};

RunConfig load_config(const std::string& path) {
  RunConfig c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("config " + path + ": " + e.what());
  }
  if (j.contains("precision")) c.precision = j["precision"].get<std::size_t>();
  if (j.contains("padic_precision")) c.padic_precision = j["padic_precision"].get<int>();
  if (j.contains("disc_bound")) c.disc_bound = j["disc_bound"].get<i64>();
  if (j.contains("format")) c.format = j["format"].get<std::string>();
  if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
  return c;
}

// Result of one class computation; unsupported classes carry the reason.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::string skipped;
};

// Runs fn(i) for i < n on `jobs` threads; output order is the index order.
// Unsupported errors become skips, anything else is rethrown after the join.
template <class T, class F>
std::vector<Outcome<T>> parallel_map(std::size_t n, int jobs, F fn) {
  std::vector<Outcome<T>> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i].value = fn(i);
      } catch (const Unsupported& e) {
        out[i].skipped = e.what();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

EigenformData pick_form(int weight, std::size_t precision, int index) {
  auto fs = eigenforms(weight, precision);
  if (fs.empty()) throw InvalidInput("no cusp forms of weight " + std::to_string(weight));
  if (index < 0) {
    if (fs.size() > 1)
      throw InvalidInput("weight " + std::to_string(weight) + " has " + std::to_string(fs.size()) +
                         " Galois orbits; choose one with --form");
    index = 0;
  }
  if (static_cast<std::size_t>(index) >= fs.size()) throw InvalidInput("--form out of range");
  return fs[static_cast<std::size_t>(index)];
}

std::vector<HalfIntMatrix> classes_upto(int genus, i64 bound) {
  std::vector<HalfIntMatrix> out;
  if (bound <= 0) return out;
  for (auto& [D, cs] : enumerate_classes_upto(genus, bound))
    for (auto& T : cs) out.push_back(T);
  return out;
}

void check_genus(int genus) {
  if (genus != 2 && genus != 4) throw InvalidInput("genus must be 2 or 4");
}

void check_lift_parity(int weight, int genus) {
  if (weight % 2) throw InvalidInput("elliptic weight must be even");
  int k = weight / 2, n = genus / 2;
  if ((k - n) % 2)
    throw InvalidInput("weight " + std::to_string(weight) + " does not lift to genus " + std::to_string(genus) +
                       " (need k = n mod 2)");
}

// Eigenform precision large enough for a_l with l | f_T and a_p.
std::size_t form_precision(const RunConfig& cfg, i64 bound, i64 p) {
  std::size_t need = static_cast<std::size_t>(std::max<i64>(isqrt(std::max<i64>(bound, 1)), p)) + 2;
  return std::max(cfg.precision, need);
}

// Ascending coefficient strings.
json poly_json(const Poly<SatakeRing>& P) {
  json a = json::array();
  for (const auto& c : P.coeffs()) a.push_back(satake_to_string(c));
  return a;
}

template <class T>
json skipped_json(const std::vector<HalfIntMatrix>& cls, const std::vector<Outcome<T>>& res) {
  json s = json::array();
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (!res[i].value) {
      std::cerr << "skip " << matrix_tuple_string(cls[i]) << ": " << res[i].skipped << "\n";
      s.push_back({{"matrix", cls[i].tuple()}, {"disc", cls[i].disc()}, {"reason", res[i].skipped}});
    }
  return s;
}

template <class T>
bool all_failed(const std::vector<Outcome<T>>& res) {
  if (res.empty()) return false;
  for (const auto& r : res)
    if (r.value) return false;
  return true;
}

std::string table_csv(const FourierTable& t) {
  std::ostringstream o;
  o << "disc,matrix,coeff\n";
  for (const auto& [T, c] : t.entries) o << T.disc() << "," << csv_quote(matrix_tuple_string(T)) << "," << csv_quote(satake_to_string(c)) << "\n";
  return o.str();
}

// Table output shared by lift, stabilize and eisenstein.
int finish_table(const RunConfig& cfg, const std::string& out, FourierTable t, const std::vector<HalfIntMatrix>& cls,
                 const std::vector<Outcome<SatakeRing>>& res, json extra = json::object()) {
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (res[i].value) t.entries.emplace_back(cls[i], *res[i].value);
  json skipped = skipped_json(cls, res);
  if (cfg.format == "csv") {
    emit(table_csv(t), out);
  } else {
    json j = table_to_json(t);
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["skipped"] = skipped;
    emit(dump(j), out);
  }
  return all_failed(res) ? 2 : 0;
}

int cmd_eigenform(const RunConfig& cfg, int weight, const std::string& out) {
  auto fs = eigenforms(weight, cfg.precision);
  if (cfg.format == "csv") {
    std::ostringstream o;
    o << "form,m,coeff\n";
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t m = 1; m < fs[i].precision(); ++m) o << i << "," << m << "," << csv_quote(to_string(fs[i].a(m))) << "\n";
    emit(o.str(), out);
    return 0;
  }
  if (fs.size() == 1) {
    emit(dump(eigenform_to_json(fs[0])), out);
  } else {
    json a = json::array();
    for (const auto& f : fs) a.push_back(eigenform_to_json(f));
    emit(dump(a), out);
  }
  return 0;
}

int cmd_halfint(const RunConfig& cfg, int k, bool cohen, int form, const std::string& out) {
  HalfIntegralForm h = cohen ? cohen_eisenstein(k, cfg.precision) : shimura_eigen_lift(pick_form(2 * k, cfg.precision, form), cfg.precision);
  if (cfg.format == "csv") {
    std::ostringstream o;
    o << "m,coeff\n";
    for (std::size_t m = 0; m < h.precision(); ++m)
      if (!h.c(m).is_zero()) o << m << "," << csv_quote(to_string(h.c(m))) << "\n";
    emit(o.str(), out);
  } else {
    emit(dump(halfint_to_json(h)), out);
  }
  return 0;
}

int cmd_siegel_series(const RunConfig& cfg, const std::string& matrix, i64 prime, const std::string& out) {
  HalfIntMatrix T = parse_half_int_matrix(matrix);
  SiegelSeriesPoly F = siegel_series(T, prime);
  std::cout << F.to_string() << "\n";
  if (!out.empty()) {
    if (cfg.format == "csv")
      emit("disc,matrix,prime,polynomial\n" + std::to_string(T.disc()) + "," + csv_quote(matrix_tuple_string(T)) + "," +
               std::to_string(prime) + "," + csv_quote(F.to_string()) + "\n",
           out);
    else
      emit(dump(siegel_series_to_json(T, F)), out);
  }
  return 0;
}

int cmd_lift(const RunConfig& cfg, int weight, int genus, int form, const std::string& out) {
  check_genus(genus);
  check_lift_parity(weight, genus);
  int n = genus / 2;
  auto cls = classes_upto(genus, cfg.disc_bound);
  FourierTable t{genus, weight / 2 + n, 1, {}};
  if (cls.empty()) return finish_table(cfg, out, t, cls, {});
  EigenformData f = pick_form(weight, form_precision(cfg, cfg.disc_bound, 2), form);
  HalfIntegralForm h = shimura_eigen_lift(f, static_cast<std::size_t>(cfg.disc_bound) + 1);
  auto res = parallel_map<SatakeRing>(cls.size(), cfg.jobs, [&](std::size_t i) { return SatakeRing(ikeda_coeff(f, h, cls[i], n)); });
  return finish_table(cfg, out, t, cls, res);
}

int cmd_stabilize(const RunConfig& cfg, int weight, int genus, i64 prime, const std::string& method, int form,
                  const std::string& out) {
  check_genus(genus);
  check_lift_parity(weight, genus);
  if (method != "closed" && method != "operator") throw InvalidInput("method must be closed or operator");
  if (method == "operator" && genus != 2) throw Unsupported("operator stabilization is implemented at genus 2 only");
  int n = genus / 2;
  EigenformData f = pick_form(weight, form_precision(cfg, cfg.disc_bound, prime), form);
  auto polys = hecke_stabilization_polys(f, prime, n);  // refuses non-ordinary primes
  auto cls = classes_upto(genus, cfg.disc_bound);
  FourierTable t{genus, weight / 2 + n, prime, {}};
  json extra;
  extra["method"] = method;
  extra["phi_star"] = poly_json(polys.phi_star);
  extra["psi_star"] = poly_json(polys.psi_star);
  if (cls.empty()) return finish_table(cfg, out, t, cls, {}, extra);
  HalfIntegralForm h = shimura_eigen_lift(f, static_cast<std::size_t>(cfg.disc_bound) + 1);
  auto res = parallel_map<SatakeRing>(cls.size(), cfg.jobs, [&](std::size_t i) {
    if (method == "closed") return semi_ordinary_coeff(f, h, cls[i], n, prime);
    return stabilize_via_operator(f, h, prime, {cls[i]}).entries.at(0).second;
  });
  return finish_table(cfg, out, t, cls, res, extra);
}

int cmd_eisenstein(const RunConfig& cfg, int k, int n, std::optional<i64> prime, const std::string& out) {
  if ((k - n) % 2 || k <= n + 1) throw InvalidInput("Eisenstein series needs k > n + 1 and k = n mod 2");
  int genus = 2 * n;
  check_genus(genus);
  auto cls = classes_upto(genus, cfg.disc_bound);
  FourierTable t{genus, k + n, prime.value_or(1), {}};
  json extra;
  auto zero = HalfIntMatrix::from_gram(genus, std::vector<i64>(static_cast<std::size_t>(genus * genus), 0));
  extra["constant_term"] = to_string(prime ? eisenstein_stabilized_coeff(k, n, zero, *prime) : eisenstein_constant_term(k, n));
  auto res = parallel_map<SatakeRing>(cls.size(), cfg.jobs, [&](std::size_t i) {
    Rat v = prime ? eisenstein_stabilized_coeff(k, n, cls[i], *prime) : eisenstein_siegel_coeff(k, n, cls[i]);
    return SatakeRing(NFElem(v));
  });
  return finish_table(cfg, out, t, cls, res, extra);
}

int cmd_congruence(const RunConfig& cfg, const std::vector<int>& weights, int genus, i64 prime, const std::string& out) {
  if (weights.size() != 2) throw InvalidInput("--weights takes exactly two weights");
  check_genus(genus);
  for (int w : weights) check_lift_parity(w, genus);
  int n = genus / 2;
  auto cls = classes_upto(genus, cfg.disc_bound);
  std::vector<EigenformData> fs;
  std::vector<HalfIntegralForm> hs;
  for (int w : weights) {
    fs.push_back(pick_form(w, form_precision(cfg, cfg.disc_bound, prime), -1));
    hs.push_back(shimura_eigen_lift(fs.back(), static_cast<std::size_t>(cfg.disc_bound) + 1));
  }
  auto res = parallel_map<std::pair<SatakeRing, SatakeRing>>(cls.size(), cfg.jobs, [&](std::size_t i) {
    return std::make_pair(SatakeRing(ikeda_coeff(fs[0], hs[0], cls[i], n)), SatakeRing(ikeda_coeff(fs[1], hs[1], cls[i], n)));
  });
  FourierTable a{genus, weights[0] / 2 + n, 1, {}}, b{genus, weights[1] / 2 + n, 1, {}};
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (res[i].value) {
      a.entries.emplace_back(cls[i], res[i].value->first);
      b.entries.emplace_back(cls[i], res[i].value->second);
    }
  json skipped = skipped_json(cls, res);
  CongruenceReport r = congruence_scan(a, b, prime, cfg.padic_precision);
  std::cerr << "congruence: " << r.entries.size() << " classes, " << skipped.size() << " skipped, verdict "
            << (r.norms_divisible() ? "all >= 1" : "violations") << "\n";
  if (cfg.format == "csv") {
    emit(congruence_to_csv(r), out);
  } else {
    json j;
    j["weights"] = weights;
    j["genus"] = genus;
    j["disc_bound"] = cfg.disc_bound;
    json body = congruence_to_json(r);
    for (auto& [k, v] : body.items()) j[k] = v;
    j["skipped"] = skipped;
    emit(dump(j), out);
  }
  return all_failed(res) ? 2 : 0;
}

int cmd_lemma36(const RunConfig& cfg, i64 D, i64 p, const std::string& out) {
  std::vector<Lemma36Report> reps{lemma36_iii(D, p)};
  if (D % p == 0 && D % (p * p) != 0) reps.push_back(lemma36_iv(D, p));
  if (cfg.format == "csv") {
    std::ostringstream o;
    o << "variant,D,p,bijective,gamma0_classes,sl2_classes\n";
    for (const auto& r : reps)
      o << r.variant << "," << r.D << "," << r.p << "," << (r.bijective ? "true" : "false") << "," << r.gamma0_classes << ","
        << r.sl2_classes << "\n";
    emit(o.str(), out);
  } else {
    json a = json::array();
    for (const auto& r : reps) a.push_back(lemma36_to_json(r));
    emit(dump(json{{"D", D}, {"p", p}, {"reports", a}}), out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ikeda lifts, p-stabilization and congruences"};
  app.require_subcommand(1);

  std::string config_path;
  if (const char* env = std::getenv(kConfigEnv)) config_path = env;
  std::optional<std::size_t> precision;
  std::optional<int> padic_precision, jobs;
  std::optional<i64> disc_bound;
  std::optional<std::string> format;
  std::string out;

  auto common = [&](CLI::App* c) {
    c->add_option("--config", config_path, std::string("JSON config (default from $") + kConfigEnv + ")");
    c->add_option("--precision", precision, "q-expansion terms");
    c->add_option("--padic-precision", padic_precision, "p-adic digits");
    c->add_option("--disc-bound", disc_bound, "largest |disc| of enumerated classes");
    c->add_option("--format", format, "json or csv");
    c->add_option("--jobs", jobs, "worker threads");
    c->add_option("--out", out, "output file (default stdout)");
  };

  int weight = 0, genus = 4, k = 0, n = 0, form = -1;
  i64 prime = 0, D = 0;
  std::optional<i64> opt_prime;
  std::string matrix, method = "closed";
  std::vector<int> weights;
  bool cohen = false;

  auto* eig = app.add_subcommand("eigenform", "Hecke eigenforms of level one");
  eig->add_option("--weight", weight)->required();
  common(eig);

  auto* hi = app.add_subcommand("halfint", "plus-space form of weight k + 1/2");
  hi->add_option("--k", k)->required();
  hi->add_flag("--cohen", cohen, "Cohen Eisenstein series instead of the Shimura lift");
  hi->add_option("--form", form, "Galois orbit index");
  common(hi);

  auto* ss = app.add_subcommand("siegel-series", "local Siegel series F_l(T; X)");
  ss->add_option("--matrix", matrix, "[t11,t22,2t12] or the genus 4 10-tuple")->required();
  ss->add_option("--prime", prime)->required();
  ss->add_option("--genus", genus, "checked against the tuple length");
  common(ss);

  auto* lift = app.add_subcommand("lift", "Fourier coefficients of the Ikeda lift");
  lift->add_option("--weight", weight)->required();
  lift->add_option("--genus", genus);
  lift->add_option("--form", form);
  common(lift);

  auto* stab = app.add_subcommand("stabilize", "semi-ordinary p-stabilization of the lift");
  stab->add_option("--weight", weight)->required();
  stab->add_option("--genus", genus);
  stab->add_option("--prime", prime)->required();
  stab->add_option("--method", method, "closed or operator (genus 2)");
  stab->add_option("--form", form);
  common(stab);

  auto* eis = app.add_subcommand("eisenstein", "Siegel Eisenstein series coefficients");
  eis->add_option("--k", k)->required();
  eis->add_option("--n", n)->required();
  eis->add_option("--prime", opt_prime, "p-stabilize at this prime");
  common(eis);

  auto* con = app.add_subcommand("congruence", "congruence scan between two lifts");
  con->add_option("--weights", weights)->required()->delimiter(',');
  con->add_option("--genus", genus);
  con->add_option("--prime", prime)->required();
  common(con);

  auto* lem = app.add_subcommand("lemma36", "Gamma_0(p) versus SL_2 class bijections");
  lem->add_option("--disc", D)->required();
  lem->add_option("--prime", prime)->required();
  common(lem);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const char* cmd = app.get_subcommands().at(0)->get_name().c_str();
  try {
    RunConfig cfg = load_config(config_path);
    if (precision) cfg.precision = *precision;
    if (padic_precision) cfg.padic_precision = *padic_precision;
    if (disc_bound) cfg.disc_bound = *disc_bound;
    if (format) cfg.format = *format;
    if (jobs) cfg.jobs = *jobs;
    cfg.validate();

    if (*eig) return cmd_eigenform(cfg, weight, out);
    if (*hi) return cmd_halfint(cfg, k, cohen, form, out);
    if (*ss) {
      HalfIntMatrix T = parse_half_int_matrix(matrix);
      if (ss->count("--genus") && T.genus != genus) throw InvalidInput("--genus does not match the matrix tuple");
      return cmd_siegel_series(cfg, matrix, prime, out);
    }
    if (*lift) return cmd_lift(cfg, weight, genus, form, out);
    if (*stab) return cmd_stabilize(cfg, weight, genus, prime, method, form, out);
    if (*eis) return cmd_eisenstein(cfg, k, n, opt_prime, out);
    if (*con) return cmd_congruence(cfg, weights, genus, prime, out);
    if (*lem) return cmd_lemma36(cfg, D, prime, out);
  } catch (const InvalidInput& e) {
    std::cerr << cmd << ": invalid input: " << e.what() << "\n";
    return 1;
  } catch (const Unsupported& e) {
    std::cerr << cmd << ": unsupported: " << e.what() << "\n";
    return 2;
  } catch (const Inconclusive& e) {
    std::cerr << cmd << ": inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << cmd << ": internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
