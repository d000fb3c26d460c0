#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "nsw2v/balance.hpp"
#include "nsw2v/generate.hpp"
#include "nsw2v/io.hpp"
#include "nsw2v/oracle.hpp"
#include "nsw2v/reductions.hpp"

namespace nsw2v::cli {
namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string welfare_line(const NswValue& v) {
  return "product=" + v.product().str() + " nsw_scaled=" + fixed(v.scaled(), 6);
}

// Writes to `path`, or to `out` when the path is empty.
void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty())
    out << content;
  else
    write_file(path, content);
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string instance;
  std::string allocation;
  std::vector<std::string> instances;
  std::string out_path;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  bool summary = false;

  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  Value gen_p = 0;
  Value gen_q = 0;
  std::string big_prob;
  std::uint64_t seed = 0;

  std::string pdm_path;
  std::string mode;
  std::uint64_t mode_value = 0;

  std::string cert_path;
  std::string eps = "0";
};

int cmd_solve(const Options& o, std::ostream& out) {
  const Instance inst = parse_instance(read_file(o.instance));
  const Allocation a = two_value_approx(inst);
  out << welfare_line(nsw_product(inst, a)) << '\n';
  emit(out, o.out_path, serialize_allocation(a, inst.goods()));
  return kOk;
}

int cmd_exact(const Options& o, std::ostream& out) {
  const Instance inst = parse_instance(read_file(o.instance));
  OracleOptions opts;
  opts.budget = o.budget;
  opts.threads = o.threads;
  const Optimum best = exact_optimum(inst, opts);
  out << welfare_line(best.value) << '\n';
  emit(out, o.out_path, serialize_allocation(best.witness, inst.goods()));
  return kOk;
}

int cmd_ratio(const Options& o, std::ostream& out) {
  OracleOptions opts;
  opts.budget = o.budget;
  opts.threads = o.threads;
  std::vector<std::string> rows;
  double worst = 0;
  double sum = 0;
  for (const auto& path : o.instances) {
    const Instance inst = parse_instance(read_file(path));
    const RatioReport r = ratio(inst, opts);
    rows.push_back(ratio_csv_row(path, inst, r));
    worst = std::max(worst, r.ratio);
    sum += r.ratio;
  }

  if (o.out_path.empty()) {
    out << kRatioCsvHeader << '\n';
    for (const auto& row : rows) out << row << '\n';
  } else {
    const bool fresh = !std::filesystem::exists(o.out_path) || std::filesystem::file_size(o.out_path) == 0;
    std::ofstream csv(o.out_path, std::ios::app);
    if (!csv) throw Error("cannot write '" + o.out_path + "'");
    if (fresh) csv << kRatioCsvHeader << '\n';
    for (const auto& row : rows) csv << row << '\n';
  }
  if (o.summary && !rows.empty())
    out << "summary count=" << rows.size() << " max_ratio=" << fixed(worst, 6)
        << " mean_ratio=" << fixed(sum / static_cast<double>(rows.size()), 6) << '\n';
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Instance inst = parse_instance(read_file(o.instance));
  const AllocationFile file = parse_allocation(read_file(o.allocation));
  if (file.goods != inst.goods() || file.allocation.agents() != inst.agents())
    throw ParseError("allocation shape " + std::to_string(file.allocation.agents()) + "x" +
                     std::to_string(file.goods) + " does not match instance " +
                     std::to_string(inst.agents()) + "x" + std::to_string(inst.goods()));
  const AllocationReport rep = validate_allocation(inst, file.allocation);
  out << "complete=" << flag(rep.complete) << " disjoint=" << flag(rep.disjoint)
      << " nonwasteful=" << flag(rep.nonwasteful) << ' '
      << welfare_line(nsw_product(inst, file.allocation)) << '\n';
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Rational prob = parse_rational(o.big_prob);
  if (prob < 0 || prob > 1) throw ParseError("big probability must lie in [0, 1]");
  const BigInt num = boost::multiprecision::numerator(prob);
  const BigInt den = boost::multiprecision::denominator(prob);
  if (den > BigInt(UINT64_MAX)) throw ParseError("big probability denominator too large");
  try {
    const Instance inst = random_instance(o.gen_n, o.gen_m, o.gen_p, o.gen_q, num.convert_to<std::uint64_t>(),
                                          den.convert_to<std::uint64_t>(), o.seed);
    emit(out, o.out_path, serialize_instance(inst));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("gen: ") + e.what());
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const PdmInstance g = parse_pdm(read_file(o.pdm_path));
  Instance inst = o.mode == "np" ? reduce_pdm(g, static_cast<Value>(o.mode_value))
                                 : reduce_gap4dm(g, static_cast<std::size_t>(o.mode_value));
  emit(out, o.out_path, serialize_instance(inst));
  return kOk;
}

int cmd_verify_lp(const Options& o, std::ostream& out) {
  const LpCertificate cert = parse_certificate(read_file(o.cert_path));
  const LpReport rep = verify_apx_lp(cert, parse_rational(o.eps));
  out << (rep.feasible ? "feasible" : "infeasible") << " tight=" << rep.tight_inequalities()
      << " factor=" << fixed(rep.implied_factor(), 10) << '\n';
  for (const auto& c : rep.constraints)
    out << "slack " << c.name << '=' << format_rational(c.slack) << (c.satisfied ? "" : " violated")
        << '\n';
  out << "objective=" << fixed(rep.objective, 15) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nash social welfare for 2-value fair division"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Run the approximation algorithm");
  solve->add_option("instance", o.instance)->required();
  solve->add_option("--out", o.out_path, "Allocation output file");

  auto* exact = app.add_subcommand("exact", "Brute-force optimum");
  exact->add_option("instance", o.instance)->required();
  exact->add_option("--out", o.out_path, "Witness output file");
  exact->add_option("--budget", o.budget, "Maximum number of enumerated states");
  exact->add_option("--threads", o.threads, "Enumeration threads");

  auto* rat = app.add_subcommand("ratio", "Approximation ratio as CSV");
  rat->add_option("instances", o.instances)->required();
  rat->add_option("--out", o.out_path, "CSV file to append to");
  rat->add_option("--budget", o.budget, "Maximum number of enumerated states");
  rat->add_option("--threads", o.threads, "Enumeration threads");
  rat->add_flag("--summary", o.summary, "Print max and mean ratio");

  auto* check = app.add_subcommand("check", "Validate an allocation");
  check->add_option("instance", o.instance)->required();
  check->add_option("allocation", o.allocation)->required();

  auto* gen = app.add_subcommand("gen", "Seeded random instance");
  gen->add_option("n", o.gen_n)->required();
  gen->add_option("m", o.gen_m)->required();
  gen->add_option("p", o.gen_p)->required();
  gen->add_option("q", o.gen_q)->required();
  gen->add_option("big_prob", o.big_prob, "Probability as a/b or decimal")->required();
  gen->add_option("--seed", o.seed, "splitmix64 seed");
  gen->add_option("--out", o.out_path, "Instance output file");

  auto* red = app.add_subcommand("reduce", "Hardness reduction of a matching instance");
  red->add_option("pdm", o.pdm_path)->required();
  red->add_option("mode", o.mode)->required()->check(CLI::IsMember({"np", "gap4dm"}));
  red->add_option("value", o.mode_value, "q for np, target matching size k for gap4dm")->required();
  red->add_option("--out", o.out_path, "Instance output file");

  auto* lp = app.add_subcommand("verify-lp", "Check an LP certificate");
  lp->add_option("certificate", o.cert_path)->required();
  lp->add_option("--eps", o.eps, "Gap parameter as a/b or decimal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  try {
    if (*solve) return cmd_solve(o, out);
    if (*exact) return cmd_exact(o, out);
    if (*rat) return cmd_ratio(o, out);
    if (*check) return cmd_check(o, out);
    if (*gen) return cmd_gen(o, out);
    if (*red) return cmd_reduce(o, out);
    if (*lp) return cmd_verify_lp(o, out);
  } catch (const TooFewGoods& e) {
    err << "error: " << e.what() << '\n';
    return kTooFewGoods;
  } catch (const DichotomousInstance& e) {
    err << "error: " << e.what() << "; use `exact` for the optimum of a dichotomous instance\n";
    return kDichotomous;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ReductionError& e) {
    err << "error: " << e.what() << '\n';
    return kReductionError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace nsw2v::cli
