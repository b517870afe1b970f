#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gammaft/acceptance.hpp"
#include "gammaft/numbers.hpp"
#include "gammaft/oracle.hpp"
#include "gammaft/output.hpp"
#include "gammaft/parallel.hpp"
#include "gammaft/partitions.hpp"
#include "gammaft/physics.hpp"
#include "gammaft/transform.hpp"

namespace {

using namespace gammaft;

constexpr int kExitBadFlags = 2;
constexpr int kExitNumeric = 3;

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
  if (records.empty()) return;
  if (format == "csv") {
    std::cout << csv_header(records.front()) << "\n";
    for (const auto& r : records) std::cout << csv_row(r) << "\n";
  } else {
    for (const auto& r : records) std::cout << record_to_json(r).dump() << "\n";
  }
}

std::vector<double> parse_grid(const std::string& text) {
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
      step <= 0.0 || stop < start)
    throw CLI::ValidationError("--lambda-grid expects start:stop:step with step > 0");
  std::vector<double> grid;
  for (double v = start; v <= stop + 1e-12 * std::max(1.0, std::abs(stop));
       v += step)
    grid.push_back(v);
  return grid;
}

// Routes the boundary values of alpha/beta to their dedicated evaluators.
Complex evaluate_routed(double alpha, double beta, int m, double lambda,
                        std::string& method) {
  method = "closed_form";
  if (alpha > 0.0 && beta > 0.0)
    return eval_transform(TransformParams{alpha, beta, m, lambda});
  if (alpha == 0.0 && beta > 0.0) return eval_alpha_zero(beta, m, lambda);
  if (alpha == 0.0 && beta == 0.0) return eval_zero_zero(m, lambda);
  throw std::domain_error(
      "transform: needs alpha >= 0 and beta >= 0, with beta = 0 only when "
      "alpha = 0");
}

struct TransformArgs {
  double alpha = 1.0;
  double beta = 1.0;
  int m = 0;
  double lambda = 0.0;
  std::string lambda_grid;
  bool oracle = false;
  std::string format = "json";
};

int run_transform(const TransformArgs& args) {
  std::vector<double> lambdas;
  if (!args.lambda_grid.empty())
    lambdas = parse_grid(args.lambda_grid);
  else
    lambdas.push_back(args.lambda);

  std::vector<OutputRecord> records(lambdas.size());
  std::exception_ptr error;
  par::parallel_for(lambdas.size(), [&](std::size_t i) {
    try {
      OutputRecord rec;
      rec.add_input("alpha", args.alpha);
      rec.add_input("beta", args.beta);
      rec.add_input("m", args.m);
      rec.add_input("lambda", lambdas[i]);
      std::string method;
      const Complex v =
          evaluate_routed(args.alpha, args.beta, args.m, lambdas[i], method);
      rec.value_re = v.real();
      rec.value_im = v.imag();
      rec.method = method;
      if (args.oracle) {
        const QuadResult q = quad_transform(
            TransformParams{args.alpha, args.beta, args.m, lambdas[i]});
        rec.oracle_re = q.value.real();
        rec.oracle_im = q.value.imag();
        rec.achieved_tol = q.error_estimate;
      }
      records[i] = std::move(rec);
    } catch (...) {
      if (!error) error = std::current_exception();
    }
  });
  if (error) std::rethrow_exception(error);
  emit(records, args.format);
  return 0;
}

int run_partitions(int m, const std::string& format) {
  const auto parts = enumerate_partitions(m);
  if (format == "csv") {
    std::cout << "m,multiplicities,parts,weight_numerator,weight_denominator\n";
    for (const auto& p : parts) {
      std::string mult;
      for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
        if (i) mult += ';';
        mult += std::to_string(p.multiplicities[i]);
      }
      const Rational w = faa_weight(p);
      std::cout << m << ',' << mult << ',' << p.parts << ','
                << w.get_num().get_str() << ',' << w.get_den().get_str()
                << "\n";
    }
  } else {
    for (const auto& p : parts) {
      nlohmann::ordered_json j;
      j["inputs"] = {{"m", m}};
      j["multiplicities"] = p.multiplicities;
      j["parts"] = p.parts;
      const Rational w = faa_weight(p);
      j["weight_numerator"] = w.get_num().get_str();
      j["weight_denominator"] = w.get_den().get_str();
      j["method"] = "exact_rational";
      std::cout << j.dump() << "\n";
    }
  }
  std::cerr << "count " << partition_count(m) << "\n";
  return 0;
}

OutputRecord rational_record(
    std::vector<std::pair<std::string, nlohmann::ordered_json>> inputs,
    const Rational& value) {
  OutputRecord rec;
  rec.inputs = std::move(inputs);
  rec.method = "exact_rational";
  rec.numerator = value.get_num().get_str();
  rec.denominator = value.get_den().get_str();
  return rec;
}

struct PhysicsArgs {
  int n = 0;
  double l = 0.0;
  int q = 2;
  double a = 1.0;
  double x = 0.0;
  double p = 0.0;
  int l_max = -1;
  std::string observable = "mu";
  std::string format = "json";
};

int run_physics_expectation(const PhysicsArgs& args) {
  OutputRecord rec;
  rec.add_input("observable", args.observable);
  if (args.observable == "mu") rec.add_input("q", args.q);
  rec.add_input("n", args.n);
  rec.add_input("l", args.l);
  Complex v;
  if (args.observable == "mu")
    v = Complex(expectation_mu(args.q, args.n, args.l), 0.0);
  else if (args.observable == "pi")
    v = expectation_pi(args.n, args.l);
  else if (args.observable == "pi2")
    v = Complex(expectation_pi2(args.n, args.l), 0.0);
  else
    throw CLI::ValidationError("--observable must be mu, pi or pi2");
  rec.value_re = v.real();
  rec.value_im = v.imag();
  emit({rec}, args.format);
  return 0;
}

int run_physics_uncertainty(const PhysicsArgs& args) {
  std::vector<double> ls;
  if (args.l_max >= 0)
    for (int l = 0; l <= args.l_max; ++l) ls.push_back(l);
  else
    ls.push_back(args.l);
  std::vector<OutputRecord> records(ls.size());
  par::parallel_for(ls.size(), [&](std::size_t i) {
    OutputRecord rec;
    rec.add_input("n", args.n);
    rec.add_input("l", ls[i]);
    rec.value_re = uncertainty_product(args.n, ls[i]);
    rec.value_im = 0.0;
    records[i] = std::move(rec);
  });
  emit(records, args.format);
  return 0;
}

int run_physics_wigner(const PhysicsArgs& args) {
  OutputRecord rec;
  rec.add_input("n", args.n);
  rec.add_input("l", args.l);
  rec.add_input("a", args.a);
  rec.add_input("x", args.x);
  rec.add_input("p", args.p);
  rec.value_re = wigner(QuantumIndices{args.n, args.l, args.a}, args.x, args.p);
  rec.value_im = 0.0;
  emit({rec}, args.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gammaft: closed-form Fourier transforms of gamma-function pairs, "
      "exact partition-sum number theory, and phase-space expectation "
      "values, with built-in brute-force verification"};
  app.require_subcommand(1);

  // transform
  TransformArgs targs;
  auto* t = app.add_subcommand(
      "transform",
      "evaluate the transform of s^m Gamma(a-is) Gamma(b+is) at lambda");
  t->add_option("--alpha", targs.alpha, "alpha >= 0")->required();
  t->add_option("--beta", targs.beta, "beta >= 0")->required();
  t->add_option("--m", targs.m, "monomial power m >= 0");
  t->add_option("--lambda", targs.lambda, "phase parameter");
  t->add_option("--lambda-grid", targs.lambda_grid,
                "sweep lambda over start:stop:step");
  t->add_flag("--oracle", targs.oracle,
              "add direct-quadrature columns for cross-checking");
  t->add_option("--format", targs.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // partitions
  int pm = 0;
  std::string pformat = "json";
  auto* pa = app.add_subcommand("partitions",
                                "enumerate multiplicity vectors and weights");
  pa->add_option("--m", pm, "partitioned value")->required();
  pa->add_option("--format", pformat, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // numbers
  auto* nu = app.add_subcommand("numbers", "exact rational tables");
  nu->require_subcommand(1);
  int nmax = 8, nm = 0;
  std::string nvariant = "eq48", nbeta = "1/2", nformat = "json";
  auto* nb = nu->add_subcommand("bernoulli", "Bernoulli numbers");
  nb->add_option("--max", nmax, "table up to this index");
  nb->add_option("--variant", nvariant, "eq47|eq48")
      ->check(CLI::IsMember({"eq47", "eq48"}));
  nb->add_option("--format", nformat, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* ne = nu->add_subcommand("euler", "Euler numbers");
  ne->add_option("--max", nmax, "table up to this index");
  ne->add_option("--format", nformat, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* np = nu->add_subcommand("euler-poly", "Euler polynomial value");
  np->add_option("--m", nm, "degree")->required();
  np->add_option("--beta", nbeta, "argument in (0,1), as num/den")->required();
  np->add_option("--format", nformat, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* nr = nu->add_subcommand("residue", "gamma residue sum");
  nr->add_option("--m", nm, "order")->required();
  nr->add_option("--format", nformat, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // physics
  PhysicsArgs phargs;
  auto* ph = app.add_subcommand("physics", "phase-space quantities");
  ph->require_subcommand(1);
  auto* pe = ph->add_subcommand("expectation", "expectation values");
  pe->add_option("--q", phargs.q, "moment for mu (1 or 2)");
  pe->add_option("--n", phargs.n, "principal number")->required();
  pe->add_option("--l", phargs.l, "angular parameter")->required();
  pe->add_option("--observable", phargs.observable, "mu|pi|pi2");
  pe->add_option("--format", phargs.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* pu = ph->add_subcommand("uncertainty", "uncertainty products");
  pu->add_option("--n", phargs.n, "principal number")->required();
  pu->add_option("--l", phargs.l, "angular parameter");
  pu->add_option("--l-max", phargs.l_max, "scan l = 0..l_max");
  pu->add_option("--format", phargs.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* pw = ph->add_subcommand("wigner", "distribution values");
  pw->add_option("--n", phargs.n)->required();
  pw->add_option("--l", phargs.l)->required();
  pw->add_option("--a", phargs.a, "inverse well width");
  pw->add_option("--x", phargs.x)->required();
  pw->add_option("--p", phargs.p)->required();
  pw->add_option("--format", phargs.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // verify
  std::string suite = "fast";
  double tol_floor = 0.0;
  auto* ve = app.add_subcommand("verify", "run the verification checklist");
  ve->add_option("--suite", suite, "fast|slow|all")
      ->check(CLI::IsMember({"fast", "slow", "all"}));
  ve->add_option("--tol", tol_floor, "loosen every comparison to this floor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadFlags;
  }

  try {
    if (*t) return run_transform(targs);
    if (*pa) return run_partitions(pm, pformat);
    if (*nb) {
      std::vector<OutputRecord> rows;
      for (int m = 1; m <= nmax; ++m) {
        const auto variant = nvariant == "eq47" ? BernoulliVariant::eq47
                                                : BernoulliVariant::eq48;
        const int index = nvariant == "eq47" ? m + 1 : m;
        rows.push_back(rational_record({{"variant", nvariant},
                                        {"m", m},
                                        {"bernoulli_index", index}},
                                       bernoulli_number(m, variant)));
      }
      emit(rows, nformat);
      return 0;
    }
    if (*ne) {
      std::vector<OutputRecord> rows;
      for (int m = 0; m <= nmax; ++m)
        rows.push_back(rational_record({{"m", m}}, euler_number(m)));
      emit(rows, nformat);
      return 0;
    }
    if (*np) {
      const Rational beta = parse_rational(nbeta);
      emit({rational_record({{"m", nm}, {"beta", nbeta}},
                            euler_polynomial(nm, beta))},
           nformat);
      return 0;
    }
    if (*nr) {
      emit({rational_record({{"m", nm}}, gamma_residue(nm))}, nformat);
      return 0;
    }
    if (*pe) return run_physics_expectation(phargs);
    if (*pu) return run_physics_uncertainty(phargs);
    if (*pw) return run_physics_wigner(phargs);
    if (*ve) {
      using acceptance::Tier;
      const Tier tier = suite == "fast"  ? Tier::fast
                        : suite == "slow" ? Tier::slow
                                          : Tier::all;
      const auto results = acceptance::run(tier, tol_floor);
      return acceptance::report(results) == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
