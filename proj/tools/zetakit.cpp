// zetakit command-line tool.
//
// Subcommands:
//   verify      run the full verification report (table/JSON/CSV)
//   eval        evaluate a single quantity (theta, psi, pi, big-pi, zeta,
//               zeta-deriv, xi, prime-zeta, prime-zeta-deriv, eta,
//               explicit-psi, product)
//   find-zeros  locate critical-line zeros and write a zero-table file
//   sieve-info  print prime-table statistics
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 I/O or parse error. Output is deterministic: identical flags produce
// byte-identical bytes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <zetakit/zetakit.hpp>

namespace {

struct Options {
  long long limit = 1000000;
  std::string zeros_file;
  long k = -1;  // -1: whole file, or first 100 when computing
  bool tail = true;
  double tol_scale = 1.0;
  bool json = false;
  bool csv = false;
  bool extended = false;
  std::string s_str;
  double x = 0.0;
  bool x_set = false;
  std::string route = "closed-form";
  double t_max = 100.0;
  std::string output = "-";
  std::string quantity;
  zetakit::PrecisionConfig cfg;
};

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

zetakit::Cplx parse_s(const std::string& str) {
  const char* p = str.c_str();
  char* end = nullptr;
  double re = std::strtod(p, &end);
  if (end == p) throw zetakit::DomainError("--s expects RE or RE,IM");
  double im = 0.0;
  if (*end == ',') {
    const char* q = end + 1;
    im = std::strtod(q, &end);
    if (end == q) throw zetakit::DomainError("--s expects RE or RE,IM");
  }
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') throw zetakit::DomainError("--s: trailing junk in argument");
  return zetakit::Cplx(re, im);
}

double require_x(const Options& o, const char* what) {
  if (!o.x_set) throw zetakit::DomainError(std::string("eval ") + what + ": --x is required");
  return o.x;
}

zetakit::Cplx require_s(const Options& o, const char* what) {
  if (o.s_str.empty()) {
    throw zetakit::DomainError(std::string("eval ") + what + ": --s is required");
  }
  return parse_s(o.s_str);
}

// key/value output in the selected format; values carry their own format
struct ValueList {
  std::vector<std::pair<std::string, nlohmann::json>> items;

  void add(const std::string& key, double v) { items.emplace_back(key, v); }
  void add(const std::string& key, long long v) { items.emplace_back(key, v); }
  void add(const std::string& key, const std::string& v) { items.emplace_back(key, v); }
  void add(const std::string& key, zetakit::Cplx v) {
    items.emplace_back(key, nlohmann::json{{"im", v.imag()}, {"re", v.real()}});
  }
};

std::string render_scalar(const nlohmann::json& v) {
  if (v.is_number_float()) return fmt12(v.get<double>());
  if (v.is_object()) {  // complex {re, im}
    double re = v.at("re").get<double>();
    double im = v.at("im").get<double>();
    if (im == 0.0) return fmt12(re);
    std::string out = fmt12(re);
    out += (im < 0.0) ? " - " : " + ";
    out += fmt12(std::abs(im));
    out += "i";
    return out;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Options& o, const ValueList& values) {
  if (o.json) {
    nlohmann::json obj;
    for (const auto& [k, v] : values.items) obj[k] = v;
    std::cout << obj.dump(2) << "\n";
  } else if (o.csv) {
    std::cout << "key,value\n";
    for (const auto& [k, v] : values.items) {
      std::cout << zetakit::detail::csv_escape(k) << ','
                << zetakit::detail::csv_escape(render_scalar(v)) << "\n";
    }
  } else {
    for (const auto& [k, v] : values.items) {
      std::cout << k << " = " << render_scalar(v) << "\n";
    }
  }
}

zetakit::ZeroTable obtain_zeros(const Options& o, const zetakit::ZetaEngine& engine) {
  if (!o.zeros_file.empty()) return zetakit::load_zeros(o.zeros_file);
  return zetakit::find_zeros(engine, 240.0, o.cfg);
}

long pick_k(const Options& o, const zetakit::ZeroTable& zeros) {
  long n = static_cast<long>(zeros.size());
  if (o.k > 0) {
    if (o.k > n) throw zetakit::DomainError("--k exceeds the number of available zeros");
    return o.k;
  }
  return o.zeros_file.empty() ? std::min<long>(100, n) : n;
}

int cmd_verify(const Options& o) {
  zetakit::VerifyOptions vo;
  vo.limit = o.limit;
  vo.zeros_file = o.zeros_file;
  vo.k_terms = o.k;
  vo.with_tail = o.tail;
  vo.tol_scale = o.tol_scale;
  vo.extended = o.extended;
  vo.cfg = o.cfg;
  zetakit::Report report = zetakit::build_verify_report(vo);
  if (o.json) {
    std::cout << zetakit::to_json(report).dump(2) << "\n";
  } else if (o.csv) {
    std::cout << zetakit::to_csv(report);
  } else {
    std::cout << zetakit::to_table(report);
  }
  return report.overall_pass ? 0 : 1;
}

int cmd_eval(const Options& o) {
  zetakit::ZetaEngine engine(o.cfg);
  ValueList out;
  const std::string& q = o.quantity;

  if (q == "theta" || q == "psi" || q == "pi" || q == "big-pi") {
    double x = require_x(o, q.c_str());
    zetakit::PrimeTable table = zetakit::build_prime_table(o.limit);
    if (q == "theta") out.add("theta", zetakit::theta(table, x));
    else if (q == "psi") out.add("psi", zetakit::psi(table, x));
    else if (q == "pi") out.add("pi", static_cast<long long>(zetakit::pi_count(table, x)));
    else out.add("big_pi", zetakit::big_pi(table, x));
  } else if (q == "zeta") {
    out.add("zeta", engine.zeta(require_s(o, "zeta")));
  } else if (q == "zeta-deriv") {
    out.add("zeta_deriv", engine.zeta_deriv(require_s(o, "zeta-deriv")));
  } else if (q == "xi") {
    out.add("xi", engine.xi(require_s(o, "xi")));
  } else if (q == "prime-zeta") {
    out.add("prime_zeta", zetakit::prime_zeta_mobius_auto(engine, require_s(o, "prime-zeta"), o.cfg));
  } else if (q == "prime-zeta-deriv") {
    zetakit::PrimeTable table = zetakit::build_prime_table(o.limit);
    out.add("prime_zeta_deriv",
            zetakit::prime_zeta_deriv(engine, table, require_s(o, "prime-zeta-deriv")));
  } else if (q == "eta") {
    if (!o.zeros_file.empty() || o.k > 0) {
      zetakit::ZeroTable zeros = obtain_zeros(o, engine);
      long k = pick_k(o, zeros);
      out.add("eta", zetakit::eta_from_zeros(zeros, k, o.tail, o.cfg));
      out.add("k", static_cast<long long>(k));
      out.add("tail", std::string(o.tail ? "on" : "off"));
    } else {
      out.add("eta", zetakit::eta_closed_form(engine));
    }
  } else if (q == "explicit-psi") {
    double x = require_x(o, "explicit-psi");
    zetakit::ZeroTable zeros = obtain_zeros(o, engine);
    long k = pick_k(o, zeros);
    double log2pi = (engine.zeta_deriv(zetakit::Cplx(0.0)) / engine.zeta(zetakit::Cplx(0.0))).real();
    out.add("explicit_psi", zetakit::explicit_psi(zeros, x, k, log2pi));
    out.add("k", static_cast<long long>(k));
  } else if (q == "product") {
    zetakit::ProductRoute route = zetakit::ProductRoute::closed_form;
    double eta = 0.0;
    if (o.route == "closed-form") {
      eta = zetakit::eta_closed_form(engine);
    } else if (o.route == "zero-sum") {
      route = zetakit::ProductRoute::zero_sum;
      zetakit::ZeroTable zeros = obtain_zeros(o, engine);
      eta = zetakit::eta_from_zeros(zeros, pick_k(o, zeros), o.tail, o.cfg);
    } else if (o.route == "pprime") {
      route = zetakit::ProductRoute::pprime_route;
    } else {
      throw zetakit::DomainError("--route must be closed-form, zero-sum, or pprime");
    }
    zetakit::RegularizedProductResult r = zetakit::regularized_prime_product(engine, eta, route);
    out.add("product", r.product_value);
    out.add("mu", r.mu_exponent);
    out.add("eta_used", r.eta_used);
    out.add("route", o.route);
  } else {
    throw zetakit::DomainError("eval: unknown quantity '" + q + "'");
  }
  emit(o, out);
  return 0;
}

int cmd_find_zeros(const Options& o) {
  zetakit::ZetaEngine engine(o.cfg);
  zetakit::ZeroTable zeros = zetakit::find_zeros(engine, o.t_max, o.cfg);
  std::string body;
  char line[64];
  for (double g : zeros.ordinates) {
    std::snprintf(line, sizeof line, "%.9f\n", g);
    body += line;
  }
  if (o.output == "-") {
    if (o.json) {
      nlohmann::json obj;
      obj["count"] = static_cast<long long>(zeros.size());
      obj["ordinates"] = zeros.ordinates;
      std::cout << obj.dump(2) << "\n";
    } else {
      std::cout << body;
    }
  } else {
    std::ofstream f(o.output);
    if (!f) throw zetakit::IoError("find-zeros: cannot open '" + o.output + "' for writing");
    f << body;
    f.close();
    if (!f) throw zetakit::IoError("find-zeros: write to '" + o.output + "' failed");
    ValueList out;
    out.add("count", static_cast<long long>(zeros.size()));
    out.add("path", o.output);
    emit(o, out);
  }
  return 0;
}

int cmd_sieve_info(const Options& o) {
  zetakit::PrimeTable table = zetakit::build_prime_table(o.limit);
  ValueList out;
  out.add("limit", static_cast<long long>(table.limit));
  out.add("prime_count", static_cast<long long>(table.primes.size()));
  out.add("largest_prime",
          static_cast<long long>(table.primes.empty() ? 0 : table.primes.back()));
  out.add("prime_power_count", static_cast<long long>(table.prime_powers.size()));
  double top = static_cast<double>(table.limit);
  out.add("theta_at_limit", zetakit::theta(table, top));
  out.add("psi_at_limit", zetakit::psi(table, top));
  emit(o, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"zeta-regularized prime product toolkit"};
  app.require_subcommand(1);

  app.add_option("--limit", o.limit, "sieve limit (default 10^6)")
      ->envname("ZETAKIT_LIMIT");
  app.add_option("--zeros-file", o.zeros_file, "zero-table file (ascending ordinates)")
      ->envname("ZETAKIT_ZEROS");
  app.add_option("--k", o.k, "number of zero ordinates to use");
  app.add_flag("--tail,!--no-tail", o.tail, "add the smooth density tail to zero sums");
  app.add_option("--tol-scale", o.tol_scale, "multiply every verification tolerance");
  app.add_flag("--json", o.json, "emit JSON");
  app.add_flag("--csv", o.csv, "emit CSV");
  app.add_option("--s", o.s_str, "complex argument RE or RE,IM");
  CLI::Option* x_opt = app.add_option("--x", o.x, "real argument");
  app.add_option("--em-cutoff", o.cfg.em_cutoff, "Euler-Maclaurin direct-sum cutoff")
      ->envname("ZETAKIT_EM_CUTOFF");
  app.add_option("--bernoulli-terms", o.cfg.bernoulli_terms,
                 "Euler-Maclaurin correction terms")
      ->envname("ZETAKIT_BERNOULLI_TERMS");
  app.add_option("--quad-rel-tol", o.cfg.quad_rel_tol, "quadrature relative tolerance")
      ->envname("ZETAKIT_QUAD_REL_TOL");
  app.add_option("--series-rel-tol", o.cfg.series_rel_tol, "series relative tolerance")
      ->envname("ZETAKIT_SERIES_REL_TOL");

  CLI::App* verify = app.add_subcommand("verify", "run the verification report");
  verify->add_flag("--extended", o.extended, "append the property-check suite");
  CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->add_option("quantity", o.quantity,
                   "one of: theta psi pi big-pi zeta zeta-deriv xi prime-zeta "
                   "prime-zeta-deriv eta explicit-psi product")
      ->required();
  eval->add_option("--route", o.route, "product route: closed-form, zero-sum, pprime");
  CLI::App* findz = app.add_subcommand("find-zeros", "locate critical-line zeros");
  findz->add_option("--t-max", o.t_max, "upper ordinate bound (14..500)");
  findz->add_option("--output", o.output, "output path ('-' for stdout)");
  CLI::App* info = app.add_subcommand("sieve-info", "print prime-table statistics");
  verify->fallthrough();
  eval->fallthrough();
  findz->fallthrough();
  info->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  o.x_set = x_opt->count() > 0;

  try {
    if (o.json && o.csv) throw zetakit::DomainError("--json and --csv are mutually exclusive");
    if (app.got_subcommand("verify")) return cmd_verify(o);
    if (app.got_subcommand("eval")) return cmd_eval(o);
    if (app.got_subcommand("find-zeros")) return cmd_find_zeros(o);
    if (app.got_subcommand("sieve-info")) return cmd_sieve_info(o);
    throw zetakit::DomainError("no subcommand given");
  } catch (const zetakit::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return 3;
  } catch (const zetakit::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const zetakit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
