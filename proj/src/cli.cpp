#include "mwz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mwz/errors.hpp"
#include "mwz/genfunc.hpp"
#include "mwz/params.hpp"
#include "mwz/rational.hpp"
#include "mwz/real.hpp"
#include "mwz/recurrence.hpp"
#include "mwz/report.hpp"
#include "mwz/series.hpp"
#include "mwz/sum.hpp"
#include "mwz/wz.hpp"
#include "mwz/zeta_ref.hpp"

namespace mwz::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr long kMaxDigits = 4000;
constexpr long kMaxForcedTerms = 200000;

struct ComputeOpts {
  std::string series;
  long digits = 30;
  long terms = 0;
  bool force = false;
  std::string x2 = "0", y4 = "0";
  std::string e1 = "0", e2 = "0";
  std::string a0 = "0", b0 = "1", c0 = "0";
  std::string format = "json";
  std::string output;
};

struct VerifyOpts {
  std::string identity;
  long digits = 30;
  long terms = 25;
  long nx = 1, ny = 1;
  std::string x2 = "0", y4 = "0";
  std::string e1 = "0", e2 = "0";
  std::string a0 = "0", b0 = "1", c0 = "0";
};

struct CertifyOpts {
  std::string mode = "symbolic";
  long nmax = 15, kmax = 15;
  std::string e1 = "0", e2 = "0";
  std::string a0 = "0", b0 = "1", c0 = "0";
};

struct BenchOpts {
  std::string series;
  long n = 40;
  std::string x2 = "0", y4 = "0";
  std::string e1 = "0", e2 = "0";
  std::string a0 = "0", b0 = "1", c0 = "0";
  std::string format = "csv";
  std::string output;
};

struct ExpandOpts {
  long nx = 1, ny = 1;
  long terms = 25;
  long digits = 20;
};

void check_digits(long d) {
  if (d < 1 || d > kMaxDigits)
    throw domain_error("digits must be between 1 and " + std::to_string(kMaxDigits));
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void emit_payload(const std::string& payload, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(output);
  if (!f) throw std::invalid_argument("cannot open output file: " + output);
  f << payload;
}

// The preset resolves to explicit parameters so the echoed config can be fed
// back verbatim and reproduce the run bit for bit.
void resolve_preset(ComputeOpts& o) {
  if (o.series != "markov-zeta4") return;
  o.a0 = "1";
  o.b0 = "0";
  o.c0 = "0";
  o.e1 = "0";
  o.e2 = "0";
}

ordered_json compute_config(const ComputeOpts& o) {
  ordered_json cfg;
  cfg["series"] = o.series;
  cfg["digits"] = o.digits;
  cfg["terms"] = o.terms;
  cfg["x2"] = o.x2;
  cfg["y4"] = o.y4;
  cfg["e1"] = o.e1;
  cfg["e2"] = o.e2;
  cfg["A0"] = o.a0;
  cfg["B0"] = o.b0;
  cfg["C0"] = o.c0;
  cfg["force"] = o.force;
  cfg["format"] = o.format;
  cfg["output"] = o.output;
  return cfg;
}

int do_compute(ComputeOpts o, std::ostream& out) {
  check_digits(o.digits);
  if (o.terms < 0 || o.terms > kMaxForcedTerms)
    throw budget_error("terms must be between 0 and " + std::to_string(kMaxForcedTerms));
  resolve_preset(o);

  Precision prec{o.digits};
  ParamsXY xy{parse_rational(o.x2), parse_rational(o.y4)};
  ParamsE pe{parse_rational(o.e1), parse_rational(o.e2)};
  InitCond init{parse_rational(o.a0), parse_rational(o.b0), parse_rational(o.c0)};

  EvalReport rep;
  if (o.series == "koecher") {
    rep = koecher_rhs(xy.x2, prec, o.terms);
  } else if (o.series == "ag") {
    rep = ag_rhs(xy.y4, prec, o.terms);
  } else if (o.series == "cb") {
    rep = cb_rhs(xy, prec, o.terms);
  } else if (o.series == "thm2") {
    rep = thm2_rhs(xy, prec, o.terms);
  } else if (o.series == "thm1" || o.series == "markov-zeta4") {
    rep = thm1_rhs(init, pe, prec, o.terms, !o.force);
  } else if (o.series == "zeta7") {
    rep = zeta7_series(prec, o.terms);
  } else if (o.series == "f0") {
    rep = sum_F0(init, pe, prec);
  } else if (o.series == "g0") {
    rep = sum_G_n0(init, pe, prec, o.terms, !o.force);
  } else if (o.series == "diagonal") {
    rep = sum_diagonal(init, pe, prec, o.terms);
  } else {
    throw std::invalid_argument("unknown series: " + o.series);
  }

  std::string value = rep.value.to_decimal(o.digits);
  std::string bound = rep.tail_bound.to_decimal(3);
  std::string payload;
  if (o.format == "text") {
    std::ostringstream os;
    os << o.series << " = " << value << "\n";
    os << "terms_used " << rep.terms_used << ", tail bound " << bound << "\n";
    payload = os.str();
  } else {
    ordered_json doc;
    doc["schema"] = "1";
    doc["command"] = "compute";
    doc["config"] = compute_config(o);
    ordered_json res;
    res["series"] = o.series;
    res["value"] = value;
    res["digits"] = o.digits;
    res["terms_used"] = rep.terms_used;
    res["tail_bound"] = bound;
    doc["result"] = res;
    payload = doc.dump(2) + "\n";
  }
  emit_payload(payload, o.output, out);
  return 0;
}

int do_verify(const VerifyOpts& o, std::ostream& out) {
  check_digits(o.digits);
  Precision prec{o.digits + 5};
  ParamsXY xy{parse_rational(o.x2), parse_rational(o.y4)};
  ParamsE pe{parse_rational(o.e1), parse_rational(o.e2)};
  InitCond init{parse_rational(o.a0), parse_rational(o.b0), parse_rational(o.c0)};

  ordered_json doc;
  doc["schema"] = "1";
  doc["command"] = "verify";
  ordered_json cfg;
  cfg["identity"] = o.identity;
  cfg["digits"] = o.digits;
  cfg["terms"] = o.terms;
  cfg["nx"] = o.nx;
  cfg["ny"] = o.ny;
  cfg["x2"] = o.x2;
  cfg["y4"] = o.y4;
  cfg["e1"] = o.e1;
  cfg["e2"] = o.e2;
  cfg["A0"] = o.a0;
  cfg["B0"] = o.b0;
  cfg["C0"] = o.c0;
  doc["config"] = cfg;

  Real tol = Real::pow10(-o.digits, Precision{o.digits + 5});
  ordered_json res;
  bool pass = false;

  if (o.identity == "genfunc") {
    if (o.nx < 0 || o.ny < 0) throw domain_error("nx and ny must be nonnegative");
    BiSeries bs = rhs_taylor(o.terms, o.nx, o.ny);
    Precision refp{o.digits + 10};
    ordered_json rows = ordered_json::array();
    Real max_diff(Rational(0), refp);
    bool all = true;
    for (long i = 0; i <= o.nx; ++i) {
      for (long j = 0; j <= o.ny; ++j) {
        Rational w = coeff_weight(i, j);
        Real ref = zeta_reference(2 * i + 4 * j + 3, refp);
        ref = real_mul_q(ref, w);
        Real got(bs.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], refp);
        Real diff = real_abs(got - ref);
        bool ok = diff < tol;
        all = all && ok;
        if (max_diff < diff) max_diff = diff;
        ordered_json row;
        row["n"] = i;
        row["m"] = j;
        row["weight"] = rat_string(w);
        row["extracted"] = got.to_decimal(o.digits + 5);
        row["reference"] = ref.to_decimal(o.digits + 5);
        row["abs_diff"] = diff.to_decimal(3);
        row["pass"] = ok;
        rows.push_back(row);
      }
    }
    pass = all;
    res["identity"] = o.identity;
    res["terms_used"] = bs.terms_used;
    res["rows"] = rows;
    res["max_abs_diff"] = max_diff.to_decimal(3);
  } else {
    EvalReport lhs, rhs;
    if (o.identity == "eq1") {
      lhs = bivariate_lhs(ParamsXY{xy.x2, Rational(0)}, prec);
      rhs = koecher_rhs(xy.x2, prec);
    } else if (o.identity == "eq2") {
      lhs = bivariate_lhs(ParamsXY{Rational(0), xy.y4}, prec);
      rhs = ag_rhs(xy.y4, prec);
    } else if (o.identity == "eq3") {
      lhs = bivariate_lhs(xy, prec);
      rhs = cb_rhs(xy, prec);
    } else if (o.identity == "thm2") {
      lhs = bivariate_lhs(xy, prec);
      rhs = thm2_rhs(xy, prec);
    } else if (o.identity == "thm1") {
      lhs = sum_F0(init, pe, prec);
      rhs = thm1_rhs(init, pe, prec);
    } else if (o.identity == "zeta7") {
      lhs = EvalReport{"zeta(7)", zeta_reference(7, prec), Real(Rational(0), prec), 0, o.digits};
      rhs = zeta7_series(prec);
    } else {
      throw std::invalid_argument("unknown identity: " + o.identity);
    }
    Real diff = real_abs(lhs.value - rhs.value);
    pass = diff < tol;
    res["identity"] = o.identity;
    res["lhs"] = lhs.value.to_decimal(o.digits + 5);
    res["rhs"] = rhs.value.to_decimal(o.digits + 5);
    res["lhs_terms"] = lhs.terms_used;
    res["rhs_terms"] = rhs.terms_used;
    res["abs_diff"] = diff.to_decimal(3);
  }

  res["tolerance"] = "1e-" + std::to_string(o.digits);
  res["pass"] = pass;
  doc["result"] = res;
  out << doc.dump(2) << "\n";
  return pass ? 0 : 4;
}

int do_certify(const CertifyOpts& o, std::ostream& out) {
  ParamsE pe{parse_rational(o.e1), parse_rational(o.e2)};
  InitCond init{parse_rational(o.a0), parse_rational(o.b0), parse_rational(o.c0)};

  ordered_json doc;
  doc["schema"] = "1";
  doc["command"] = "certify";
  ordered_json cfg;
  cfg["mode"] = o.mode;
  cfg["nmax"] = o.nmax;
  cfg["kmax"] = o.kmax;
  cfg["e1"] = o.e1;
  cfg["e2"] = o.e2;
  cfg["A0"] = o.a0;
  cfg["B0"] = o.b0;
  cfg["C0"] = o.c0;
  doc["config"] = cfg;

  ordered_json res;
  bool pass = false;
  if (o.mode == "symbolic") {
    CertReport rep = certify_symbolic();
    pass = rep.pass;
    res["mode"] = rep.mode;
    res["checked"] = rep.checked;
    res["residuals"] = rep.residuals;
  } else if (o.mode == "numeric") {
    if (o.nmax < 0 || o.kmax < 0 || o.nmax > 60 || o.kmax > 60)
      throw budget_error("nmax and kmax must be between 0 and 60");
    CertReport rep = certify_numeric(o.nmax, o.kmax, init, pe);
    pass = rep.pass;
    res["mode"] = rep.mode;
    res["checked"] = rep.checked;
    res["residuals"] = rep.residuals;
  } else if (o.mode == "derive") {
    DeriveResult dr = derive_l_recurrence();
    pass = dr.pass;
    res["mode"] = "derive";
    res["carrier_cancels"] = dr.carrier_cancels;
    res["alpha"] = dr.alpha.str();
    res["beta"] = dr.beta.str();
    res["gamma"] = dr.gamma.str();
    res["residuals"] = dr.residuals;
  } else {
    throw std::invalid_argument("unknown mode: " + o.mode);
  }
  res["pass"] = pass;
  doc["result"] = res;
  out << doc.dump(2) << "\n";
  return pass ? 0 : 4;
}

SeriesSpec bench_spec(const BenchOpts& o) {
  SeriesSpec spec;
  spec.xy = ParamsXY{parse_rational(o.x2), parse_rational(o.y4)};
  spec.pe = ParamsE{parse_rational(o.e1), parse_rational(o.e2)};
  spec.init = InitCond{parse_rational(o.a0), parse_rational(o.b0), parse_rational(o.c0)};
  if (o.series == "markov-zeta4") {
    spec.id = "thm1";
    spec.init = InitCond{Rational(1), Rational(0), Rational(0)};
    spec.pe = ParamsE{Rational(0), Rational(0)};
  } else {
    spec.id = o.series;
  }
  return spec;
}

std::string bench_csv(const ConvergenceProfile& prof) {
  std::ostringstream os;
  os << "n,partial_sum,abs_error,digits_gained,cumulative_digits\n";
  for (const auto& row : prof.rows) {
    os << row.n << "," << row.partial.to_decimal(40) << "," << row.abs_err.to_decimal(3)
       << "," << fixed4(row.digits_gained) << "," << fixed4(row.cum_digits) << "\n";
  }
  os << "# slope " << fixed4(prof.slope) << "\n";
  return os.str();
}

ordered_json bench_rows_json(const ConvergenceProfile& prof) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : prof.rows) {
    ordered_json r;
    r["n"] = row.n;
    r["partial_sum"] = row.partial.to_decimal(40);
    r["abs_error"] = row.abs_err.to_decimal(3);
    r["digits_gained"] = row.digits_gained;
    r["cumulative_digits"] = row.cum_digits;
    rows.push_back(r);
  }
  return rows;
}

int do_bench(const BenchOpts& o, std::ostream& out) {
  SeriesSpec spec = bench_spec(o);
  ConvergenceProfile prof = convergence_profile(spec, o.n);

  ordered_json cfg;
  cfg["series"] = o.series;
  cfg["n"] = o.n;
  cfg["x2"] = o.x2;
  cfg["y4"] = o.y4;
  cfg["e1"] = o.e1;
  cfg["e2"] = o.e2;
  cfg["A0"] = o.a0;
  cfg["B0"] = o.b0;
  cfg["C0"] = o.c0;
  cfg["format"] = o.format;
  cfg["output"] = o.output;

  if (!o.output.empty()) {
    emit_payload(bench_csv(prof), o.output, out);
    ordered_json doc;
    doc["schema"] = "1";
    doc["command"] = "bench";
    doc["config"] = cfg;
    ordered_json res;
    res["series"] = prof.series_id;
    res["n_max"] = prof.n_max;
    res["ref_digits"] = prof.ref_digits;
    res["slope"] = prof.slope;
    res["rows_written"] = prof.rows.size();
    res["output"] = o.output;
    doc["result"] = res;
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (o.format == "csv") {
    out << bench_csv(prof);
    return 0;
  }
  ordered_json doc;
  doc["schema"] = "1";
  doc["command"] = "bench";
  doc["config"] = cfg;
  ordered_json res;
  res["series"] = prof.series_id;
  res["n_max"] = prof.n_max;
  res["ref_digits"] = prof.ref_digits;
  res["slope"] = prof.slope;
  res["rows"] = bench_rows_json(prof);
  doc["result"] = res;
  out << doc.dump(2) << "\n";
  return 0;
}

int do_expand(const ExpandOpts& o, std::ostream& out) {
  check_digits(o.digits);
  BiSeries bs = rhs_taylor(o.terms, o.nx, o.ny);
  Precision refp{o.digits + 10};
  Real tol = Real::pow10(-o.digits, refp);

  ordered_json doc;
  doc["schema"] = "1";
  doc["command"] = "expand";
  ordered_json cfg;
  cfg["nx"] = o.nx;
  cfg["ny"] = o.ny;
  cfg["terms"] = o.terms;
  cfg["digits"] = o.digits;
  doc["config"] = cfg;

  ordered_json rows = ordered_json::array();
  bool all = true;
  for (long i = 0; i <= o.nx; ++i) {
    for (long j = 0; j <= o.ny; ++j) {
      Rational w = coeff_weight(i, j);
      Real ref = real_mul_q(zeta_reference(2 * i + 4 * j + 3, refp), w);
      Real got(bs.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], refp);
      Real diff = real_abs(got - ref);
      bool ok = diff < tol;
      all = all && ok;
      ordered_json row;
      row["n"] = i;
      row["m"] = j;
      row["weight"] = rat_string(w);
      row["zeta_arg"] = 2 * i + 4 * j + 3;
      row["extracted"] = got.to_decimal(o.digits + 5);
      row["reference"] = ref.to_decimal(o.digits + 5);
      row["abs_diff"] = diff.to_decimal(3);
      row["pass"] = ok;
      rows.push_back(row);
    }
  }
  ordered_json res;
  res["terms_used"] = bs.terms_used;
  res["tolerance"] = "1e-" + std::to_string(o.digits);
  res["rows"] = rows;
  res["pass"] = all;
  doc["result"] = res;
  out << doc.dump(2) << "\n";
  return all ? 0 : 4;
}

void add_param_options(CLI::App* sub, std::string* x2, std::string* y4, std::string* e1,
                       std::string* e2, std::string* a0, std::string* b0, std::string* c0) {
  if (x2) sub->add_option("--x2", *x2, "x^2 parameter, exact rational");
  if (y4) sub->add_option("--y4", *y4, "y^4 parameter, exact rational");
  if (e1) sub->add_option("--e1", *e1, "kernel coefficient e1, exact rational");
  if (e2) sub->add_option("--e2", *e2, "kernel coefficient e2, exact rational");
  if (a0) sub->add_option("--A0", *a0, "seed coefficient A(0)");
  if (b0) sub->add_option("--B0", *b0, "seed coefficient B(0)");
  if (c0) sub->add_option("--C0", *c0, "seed coefficient C(0)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"telescoping acceleration toolkit for zeta-like series"};
  app.name("mwzeta");
  app.require_subcommand(1);

  ComputeOpts co;
  CLI::App* compute = app.add_subcommand("compute", "evaluate one series to a digit target");
  compute->add_option("--series", co.series, "series to evaluate")
      ->required()
      ->check(CLI::IsMember({"koecher", "ag", "cb", "thm2", "thm1", "markov-zeta4", "zeta7",
                             "f0", "g0", "diagonal"}));
  compute->add_option("--digits", co.digits, "decimal digits requested");
  compute->add_option("--terms", co.terms, "force exactly this many terms (0 = automatic)");
  add_param_options(compute, &co.x2, &co.y4, &co.e1, &co.e2, &co.a0, &co.b0, &co.c0);
  compute->add_option("--format", co.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  compute->add_option("--output", co.output, "write the payload to this file");
  compute->add_flag("--force", co.force, "skip the admissibility gate")->group("");

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand("verify", "check one identity numerically");
  verify->add_option("--identity", vo.identity, "identity to check")
      ->required()
      ->check(CLI::IsMember({"eq1", "eq2", "eq3", "thm1", "thm2", "zeta7", "genfunc"}));
  verify->add_option("--digits", vo.digits, "agreement tolerance 10^-digits");
  verify->add_option("--terms", vo.terms, "expansion terms (genfunc only)");
  verify->add_option("--nx", vo.nx, "max x^2 order (genfunc only)");
  verify->add_option("--ny", vo.ny, "max y^4 order (genfunc only)");
  add_param_options(verify, &vo.x2, &vo.y4, &vo.e1, &vo.e2, &vo.a0, &vo.b0, &vo.c0);

  CertifyOpts eo;
  CLI::App* certify = app.add_subcommand("certify", "certify the pair relation");
  certify->add_option("--mode", eo.mode, "certification mode")
      ->check(CLI::IsMember({"symbolic", "numeric", "derive"}));
  certify->add_option("--nmax", eo.nmax, "grid bound in n (numeric mode)");
  certify->add_option("--kmax", eo.kmax, "grid bound in k (numeric mode)");
  add_param_options(certify, nullptr, nullptr, &eo.e1, &eo.e2, &eo.a0, &eo.b0, &eo.c0);

  BenchOpts bo;
  CLI::App* bench = app.add_subcommand("bench", "profile convergence of one series");
  bench->add_option("--series", bo.series, "series to profile")
      ->required()
      ->check(CLI::IsMember({"koecher", "ag", "cb", "thm2", "thm1", "markov-zeta4", "zeta7"}));
  bench->add_option("--n", bo.n, "number of partial sums");
  add_param_options(bench, &bo.x2, &bo.y4, &bo.e1, &bo.e2, &bo.a0, &bo.b0, &bo.c0);
  bench->add_option("--format", bo.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--output", bo.output, "write CSV here and a JSON summary to stdout");

  ExpandOpts xo;
  CLI::App* expand = app.add_subcommand("expand", "extract zeta values from the bivariate series");
  expand->add_option("--nx", xo.nx, "max x^2 order");
  expand->add_option("--ny", xo.ny, "max y^4 order");
  expand->add_option("--terms", xo.terms, "expansion terms");
  expand->add_option("--digits", xo.digits, "agreement tolerance 10^-digits");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mwzeta");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (compute->parsed()) return do_compute(co, out);
    if (verify->parsed()) return do_verify(vo, out);
    if (certify->parsed()) return do_certify(eo, out);
    if (bench->parsed()) return do_bench(bo, out);
    if (expand->parsed()) return do_expand(xo, out);
  } catch (const divergence_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace mwz::cli
