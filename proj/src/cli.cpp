#include "arakelov/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arakelov/arakelov_invariants.hpp"
#include "arakelov/birkhoff.hpp"
#include "arakelov/numerics_oracle.hpp"
#include "arakelov/verify.hpp"

namespace arakelov::cli {

namespace {

using nlohmann::json;

constexpr const char* kTorsionConvention =
    "T(E) = sum_q (-1)^q q zeta_q'(0); Weng's convention gives the opposite sign";

struct Options {
  bool as_json = false;
  int precision = 16;
  double abs_tol = 1e-10;
  std::int64_t max_subdivisions = 2000;

  std::string triple;
  std::int64_t twist = 0;
  std::vector<std::uint64_t> primes;
  std::string matrix;
  std::optional<std::uint64_t> roberts;
  std::optional<std::uint64_t> mod;
  bool deep = false;
};

// Error raised by an operation, tagged with its name.
class OperationError : public std::domain_error {
 public:
  OperationError(const std::string& op, const std::string& what)
      : std::domain_error(what.rfind(op + ":", 0) == 0 ? what : op + ": " + what) {}
};

template <class F>
auto call(const char* op, F&& f) {
  try {
    return f();
  } catch (const std::domain_error& e) {
    throw OperationError(op, e.what());
  } catch (const oracle::ConvergenceError& e) {
    throw OperationError(op, e.what());
  }
}

class Printer {
 public:
  Printer(std::ostream& out, const Options& o) : out_(out), opts_(o) {}

  void row(const std::string& key, const std::string& value) {
    out_ << std::left << std::setw(24) << key << value << '\n';
  }
  void number(const std::string& key, const ArakelovNumber& x) {
    row(key, x.to_string());
    row("", "~ " + format_decimal(numeric_value(x, opts_.precision), opts_.precision));
  }
  json number_json(const ArakelovNumber& x) const { return to_json(x, opts_.precision); }
  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

 private:
  std::ostream& out_;
  const Options& opts_;
};

std::string kind_name(H1Torsion::Kind k) {
  switch (k) {
    case H1Torsion::Kind::kZero:
      return "Zero";
    case H1Torsion::Kind::kExactLogOrder:
      return "ExactLogOrder";
    case H1Torsion::Kind::kUnknownDividing:
      return "UnknownDividing";
  }
  return "?";
}

std::string twist_label(const std::string& prefix, std::int64_t n) { return prefix + "(" + std::to_string(n) + ")"; }

int cmd_cohomology(const Options& o, Printer& pr) {
  const Triple t = call("parse_triple", [&] { return parse_triple(o.triple); });
  const std::int64_t n = o.twist;
  const auto line = call("line_cohomology", [&] { return line_cohomology(t.a() + n); });
  const auto ideal = call("ideal_cohomology", [&] { return ideal_cohomology(t.z(), t.b() + n); });
  const auto ranks = call("rank2_cohomology_ranks", [&] { return rank2_cohomology_ranks(t, n); });
  const std::string line_name = twist_label("O", t.a() + n), ideal_name = twist_label("I_Z", t.b() + n),
                    bundle_name = twist_label("E", n);
  if (o.as_json) {
    auto profile = [&](const std::string& sheaf, const CohomologyProfile& p) {
      return json{{"sheaf", sheaf},
                  {"h0_rank", p.h0_rank},
                  {"h1_rank", p.h1_rank},
                  {"h1_torsion", {{"kind", kind_name(p.h1_torsion.kind)}, {"log_order", pr.number_json(p.h1_torsion.log_order)}}}};
    };
    pr.emit({{"command", "cohomology"},
             {"triple", t.to_string()},
             {"twist", n},
             {"line", profile(line_name, line)},
             {"ideal", profile(ideal_name, ideal)},
             {"bundle", {{"sheaf", bundle_name}, {"h0_rank", ranks.h0_rank}, {"h1_rank", ranks.h1_rank}}}});
    return kOk;
  }
  auto describe = [](const CohomologyProfile& p) {
    return "h0 = " + std::to_string(p.h0_rank) + ", h1 = " + std::to_string(p.h1_rank) +
           ", H^1 torsion: " + p.h1_torsion.to_string();
  };
  pr.row("triple", t.to_string());
  pr.row(line_name, describe(line));
  pr.row(ideal_name, describe(ideal));
  pr.row(bundle_name, "h0 = " + std::to_string(ranks.h0_rank) + ", h1 = " + std::to_string(ranks.h1_rank) +
                          " (torsion not determined by the triple)");
  return kOk;
}

int cmd_splitting(const Options& o, Printer& pr) {
  const Triple t = call("parse_triple", [&] { return parse_triple(o.triple); });
  std::vector<std::pair<std::string, SplittingType>> rows;
  for (std::uint64_t p : o.primes)
    rows.emplace_back(std::to_string(p), call("fiber_splitting", [&] { return fiber_splitting(t, p); }));
  rows.emplace_back("generic", fiber_splitting(t, kGenericFiber));
  if (o.as_json) {
    json fibers = json::array();
    for (const auto& [f, s] : rows) fibers.push_back({{"fiber", f}, {"splitting", {s.d1, s.d2}}});
    pr.emit({{"command", "splitting"}, {"triple", t.to_string()}, {"fibers", fibers}});
    return kOk;
  }
  pr.row("triple", t.to_string());
  for (const auto& [f, s] : rows) pr.row(f + ":", s.to_string());
  return kOk;
}

int cmd_chern(const Options& o, Printer& pr) {
  const Triple t = call("parse_triple", [&] { return parse_triple(o.triple); });
  const auto c = call("chern_classes", [&] { return chern_classes(t); });
  const auto d = call("discriminant", [&] { return discriminant(t); });
  if (o.as_json) {
    pr.emit({{"command", "chern"},
             {"triple", t.to_string()},
             {"c1_twist", c.c1_twist},
             {"c2_degree", pr.number_json(c.c2_degree)},
             {"discriminant", pr.number_json(d)}});
    return kOk;
  }
  pr.row("triple", t.to_string());
  pr.row("c1", "c1(O(" + std::to_string(c.c1_twist) + "))");
  pr.number("deg c2", c.c2_degree);
  pr.number("discriminant", d);
  return kOk;
}

int cmd_chi(const Options& o, Printer& pr) {
  const Triple t = call("parse_triple", [&] { return parse_triple(o.triple); });
  const auto closed = call("chi_Q_rank2", [&] { return chi_Q_rank2(t); });
  const auto ahrr = call("ahrr_rhs", [&] { return ahrr_rhs(chern_classes(t), 2); });
  const bool agree = closed == ahrr;
  if (o.as_json) {
    pr.emit({{"command", "chi"},
             {"triple", t.to_string()},
             {"closed_form", pr.number_json(closed)},
             {"riemann_roch", pr.number_json(ahrr)},
             {"agree", agree}});
  } else {
    pr.row("triple", t.to_string());
    pr.number("chi_Q (closed form)", closed);
    pr.number("chi_Q (Riemann-Roch)", ahrr);
    pr.row("routes agree", agree ? "yes" : "NO");
  }
  return agree ? kOk : kVerificationFailure;
}

int cmd_torsion(const Options& o, Printer& pr) {
  const auto t = call("analytic_torsion", [&] { return analytic_torsion(o.twist); });
  if (o.as_json) {
    pr.emit({{"command", "torsion"}, {"twist", o.twist}, {"torsion", pr.number_json(t)}, {"convention", kTorsionConvention}});
    return kOk;
  }
  pr.number("T(O(" + std::to_string(o.twist) + "))", t);
  pr.row("convention", kTorsionConvention);
  return kOk;
}

int cmd_gram(const Options& o, Printer& pr) {
  const auto g = call("gram_matrix_h0", [&] { return gram_matrix_h0(o.twist); });
  const auto deg = call("degree_h0_line", [&] { return degree_h0_line(o.twist); });
  if (o.as_json) {
    json diag = json::array();
    for (const auto& d : g.diagonal) diag.push_back(d.to_string());
    pr.emit({{"command", "gram"},
             {"twist", o.twist},
             {"dimension", g.dimension},
             {"diagonal", diag},
             {"determinant", g.determinant().to_string()},
             {"degree_h0", pr.number_json(deg)}});
    return kOk;
  }
  pr.row("dimension", std::to_string(g.dimension));
  for (std::size_t i = 0; i < g.diagonal.size(); ++i) pr.row("h(s_" + std::to_string(i) + ", s_" + std::to_string(i) + ")", g.diagonal[i].to_string());
  pr.row("off-diagonal", "0");
  pr.row("det", g.determinant().to_string());
  pr.number("deg H^0 (L2)", deg);
  return kOk;
}

int cmd_birkhoff(const Options& o, Printer& pr) {
  if (!o.mod) throw OperationError("birkhoff", "--mod is required");
  if (o.roberts.has_value() == !o.matrix.empty())
    throw OperationError("birkhoff", "give exactly one of --matrix and --roberts");
  const IntegerTransitionMatrix2 m =
      o.roberts ? call("roberts_matrix", [&] { return roberts_matrix(*o.roberts); }) : parse_integer_matrix(o.matrix);
  const auto reduced = call("reduce_mod", [&] { return reduce_mod(m, *o.mod); });
  const auto det = call("det_unit", [&] { return det_unit(reduced); });
  const auto s = call("splitting_type", [&] { return splitting_type(reduced); });
  if (o.as_json) {
    pr.emit({{"command", "birkhoff"},
             {"matrix", m.to_string()},
             {"mod", *o.mod},
             {"reduced", reduced.to_string()},
             {"det", {{"c", det.c}, {"k", det.k}}},
             {"splitting", {s.d1, s.d2}}});
    return kOk;
  }
  pr.row("matrix", m.to_string());
  pr.row("reduced", reduced.to_string());
  pr.row("det", (det.c == 1 ? std::string() : std::to_string(det.c) + "*") + "t^" + std::to_string(det.k));
  pr.row("splitting type", s.to_string());
  return kOk;
}

int cmd_verify(const Options& o, Printer& pr, std::ostream& out) {
  const auto budget = oracle::PrecisionBudget::make(o.abs_tol, o.max_subdivisions);
  const auto results = run_checks(o.deep, budget);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  auto seconds = [](double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
  };
  if (o.as_json) {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", seconds(r.seconds)}});
    pr.emit({{"command", "verify"}, {"deep", o.deep}, {"passed", ok}, {"checks", checks}});
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(24) << r.id << r.name << "  [" << seconds(r.seconds)
          << " s]";
      if (!r.passed) out << "\n      " << r.detail;
      out << '\n';
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arithmetic invariants of rank-two bundles on P^1 over the integers", "arakelov_cli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.as_json, "Emit JSON instead of a table");
  app.add_option("--precision", o.precision, "Decimal places of numeric output")->check(CLI::Range(1, kMaxOutputPrecision));
  app.add_option("--abs-tol", o.abs_tol, "Absolute quadrature tolerance")->envname("ARAKELOV_ABS_TOL");
  app.add_option("--max-subdivisions", o.max_subdivisions, "Quadrature interval budget")
      ->envname("ARAKELOV_MAX_SUBDIVISIONS");

  auto triple_opt = [&](CLI::App* sub) {
    sub->add_option("--triple", o.triple, "Triple \"a,b;Z\", e.g. \"-1,-1;2:1\"")->required()->allow_extra_args(false);
  };
  auto* cohomology = app.add_subcommand("cohomology", "Cohomology of O(a), I_Z(b) and E(n)");
  triple_opt(cohomology);
  cohomology->add_option("--twist", o.twist, "Twist n");
  auto* splitting = app.add_subcommand("splitting", "Splitting type on the fibers over given primes");
  triple_opt(splitting);
  splitting->add_option("--primes", o.primes, "Comma-separated primes")->delimiter(',');
  auto* chern = app.add_subcommand("chern", "Arithmetic Chern data and discriminant");
  triple_opt(chern);
  auto* chi = app.add_subcommand("chi", "Quillen Euler characteristic by both routes");
  triple_opt(chi);
  auto* torsion = app.add_subcommand("torsion", "Analytic torsion of O(a)");
  torsion->add_option("--twist", o.twist, "Twist a")->required();
  auto* gram = app.add_subcommand("gram", "L2 Gram matrix of H^0(O(a)) and its degree");
  gram->add_option("--twist", o.twist, "Twist a")->required();
  auto* birkhoff = app.add_subcommand("birkhoff", "Splitting type of a transition matrix mod p");
  birkhoff->add_option("--matrix", o.matrix, "Matrix \"t^2, 2*t; 0, 1\"");
  birkhoff->add_option("--roberts", o.roberts, "Use [[t^2, p t], [0, 1]] for this p");
  birkhoff->add_option("--mod", o.mod, "Prime to reduce modulo");
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_flag("--deep", o.deep, "Include the exhaustive checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  Printer pr(out, o);
  try {
    if (*cohomology) return cmd_cohomology(o, pr);
    if (*splitting) return cmd_splitting(o, pr);
    if (*chern) return cmd_chern(o, pr);
    if (*chi) return cmd_chi(o, pr);
    if (*torsion) return cmd_torsion(o, pr);
    if (*gram) return cmd_gram(o, pr);
    if (*birkhoff) return cmd_birkhoff(o, pr);
    if (*verify) return cmd_verify(o, pr, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const OperationError& e) {
    err << "error in " << e.what() << '\n';
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kParseError;
}

}  // namespace arakelov::cli
