#include "cli.hpp"

#include "covering/bounds.hpp"
#include "covering/coverage.hpp"
#include "covering/examples.hpp"
#include "covering/search.hpp"
#include "covering/system_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <vector>

namespace covering::cli {

namespace {

struct Options {
  std::string input;
  std::string method = "auto";
  bool tsv = false;
  unsigned digits = 6;
  std::string at;

  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t r = 0;

  std::string variant = "squarefree";
  std::size_t first = 0;
  std::vector<std::string> primes;

  std::string pool_lcm;
  std::vector<std::string> pool;
  bool odd = false;
  bool distinct = false;
  std::size_t max_classes = 0;
  std::uint64_t budget = search::kDefaultNodeBudget;
  std::string engine = "auto";

  std::vector<std::string> n_values;
  bool squarefree_only = false;

  std::size_t points = 0;
  std::uint64_t seed = 1;

  std::string name;
  bool list = false;
};

// Usage problems detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<BigInt> parse_list(const std::vector<std::string>& items) {
  std::vector<BigInt> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_bigint(s));
  return out;
}

CoveringSystem load_system(const Options& opt, std::istream& in) {
  if (opt.input == "-") return read_system(in);
  std::ifstream file(opt.input);
  if (!file) throw UsageError("cannot open input file '" + opt.input + "'");
  return read_system(file);
}

std::optional<CoverageMethod> method_from(const std::string& s) {
  if (s == "scan") return CoverageMethod::scan;
  if (s == "ie") return CoverageMethod::inclusion_exclusion;
  if (s == "split") return CoverageMethod::split;
  return std::nullopt;
}

CoverageReport run_method(const CoveringSystem& system, const std::string& method) {
  if (auto m = method_from(method)) return covers_with(system, *m);
  return covers(system);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const auto system = load_system(opt, in);
  const auto report = run_method(system, opt.method);
  const auto flags = predicates(system);
  const std::string witness = report.witness ? to_string(*report.witness) : "-";
  if (opt.tsv) {
    fmt::print(out, "covers\tmethod\tlcm\tclasses\tdensity\twitness\n");
    fmt::print(out, "{}\t{}\t{}\t{}\t{}\t{}\n", yes_no(report.covers), method_name(report.method),
               to_string(system.lcm()), system.size(), report.density_covered.str(), witness);
    return report.covers ? kExitOk : kExitPropertyFalse;
  }
  fmt::print(out, "covers: {}, method: {}, lcm: {}\n", yes_no(report.covers), method_name(report.method),
             to_string(system.lcm()));
  fmt::print(out, "classes: {}\n", system.size());
  fmt::print(out, "density: {} ({})\n", report.density_covered.str(), report.density_covered.decimal(opt.digits));
  if (report.witness) fmt::print(out, "witness: {}\n", witness);
  fmt::print(out, "flags: distinct_moduli={} all_moduli_odd={} all_moduli_gt_one={} lcm_squarefree={}\n",
             yes_no(flags.distinct_moduli), yes_no(flags.all_moduli_odd), yes_no(flags.all_moduli_gt_one),
             yes_no(flags.lcm_squarefree));
  if (!opt.at.empty()) {
    const BigInt x = parse_bigint(opt.at);
    fmt::print(out, "multiplicity at {}: {}\n", opt.at, multiplicity(system, x));
  }
  return report.covers ? kExitOk : kExitPropertyFalse;
}

int cmd_density(const Options& opt, std::istream& in, std::ostream& out) {
  const auto system = load_system(opt, in);
  Rational density;
  std::string_view used;
  if (opt.method == "ie") {
    density = density_inclusion_exclusion(system);
    used = method_name(CoverageMethod::inclusion_exclusion);
  } else if (opt.method == "split") {
    density = density_split(system);
    used = method_name(CoverageMethod::split);
  } else {
    const auto report = run_method(system, opt.method);
    density = report.density_covered;
    used = method_name(report.method);
  }
  if (opt.tsv) {
    fmt::print(out, "density\tmethod\tlcm\n{}\t{}\t{}\n", density.str(), used, to_string(system.lcm()));
  } else {
    fmt::print(out, "density: {}\ndecimal: {}\nmethod: {}\n", density.str(), density.decimal(opt.digits), used);
  }
  return kExitOk;
}

int cmd_witness(const Options& opt, std::istream& in, std::ostream& out) {
  const auto system = load_system(opt, in);
  std::optional<BigInt> witness;
  std::string_view used;
  if (opt.method == "ie") {
    throw UsageError("inclusion-exclusion does not produce witnesses; use --method scan or split");
  }
  if (opt.method == "split" || (opt.method == "auto" && system.lcm() > from_u64(kDefaultScanThreshold))) {
    witness = find_witness_split(system);
    used = method_name(CoverageMethod::split);
  } else {
    witness = covers_scan(system).witness;
    used = method_name(CoverageMethod::scan);
  }
  if (!witness) {
    fmt::print(out, "witness: none\nmethod: {}\n", used);
    return kExitPropertyFalse;
  }
  fmt::print(out, "witness: {}\nmethod: {}\nmultiplicity: {}\n", to_string(*witness), used,
             multiplicity(system, *witness));
  return kExitOk;
}

int cmd_bound_table(const Options& opt, std::ostream& out) {
  if (opt.r != 0) {
    const auto profile = bounds::build_profile(opt.r);
    const auto value = bounds::eval_f(profile.x, profile.d);
    if (opt.tsv) {
      fmt::print(out, "t\tq_t\td_t\tx_t\n");
      for (std::size_t t = 1; t <= profile.r; ++t) {
        fmt::print(out, "{}\t{}\t{}\t{}\n", t, to_string(profile.q_at(t)), profile.d_at(t), profile.x_at(t).str());
      }
      fmt::print(out, "# f\t{}\t{}\n", value.str(), yes_no(value >= Rational(2)));
      return kExitOk;
    }
    fmt::print(out, "{:>3}  {:>5}  {:>4}  {:>8}\n", "t", "q_t", "d_t", "x'_t");
    for (std::size_t t = 1; t <= profile.r; ++t) {
      fmt::print(out, "{:>3}  {:>5}  {:>4}  {:>8}\n", t, to_string(profile.q_at(t)), profile.d_at(t),
                 profile.x_at(t).str());
    }
    fmt::print(out, "f(x') = {}\n", value.str());
    fmt::print(out, "decimal: {}\n", value.decimal(opt.digits));
    fmt::print(out, "meets_2: {}\n", yes_no(value >= Rational(2)));
    return kExitOk;
  }

  const std::size_t from = opt.from == 0 ? 1 : opt.from;
  const std::size_t to = opt.to == 0 ? from : opt.to;
  if (from > to) throw UsageError("--from must not exceed --to");
  const auto rows = bounds::bound_table(from, to);
  if (opt.tsv) {
    fmt::print(out, "r\tf\tdecimal\tmeets_2\n");
    for (const auto& row : rows) {
      fmt::print(out, "{}\t{}\t{}\t{}\n", row.r, row.value.str(), row.value.decimal(opt.digits), yes_no(row.meets_two));
    }
    return kExitOk;
  }
  std::size_t width = 4;
  for (const auto& row : rows) width = std::max(width, row.value.str().size());
  fmt::print(out, "{:>3}  {:>{}}  {:>{}}  {}\n", "r", "f(x')", width, "decimal", opt.digits + 2, "meets_2");
  for (const auto& row : rows) {
    fmt::print(out, "{:>3}  {:>{}}  {:>{}}  {}\n", row.r, row.value.str(), width, row.value.decimal(opt.digits),
               opt.digits + 2, yes_no(row.meets_two));
  }
  return kExitOk;
}

bounds::BffResult evaluate_bff(const std::string& variant, std::span<const BigInt> primes) {
  return variant == "odd" ? bounds::bff_odd(primes) : bounds::bff_squarefree(primes);
}

int cmd_bff(const Options& opt, std::ostream& out) {
  const char* relation = opt.variant == "odd" ? "> 2" : ">= 2";
  if (opt.from != 0 || opt.to != 0) {
    const std::size_t from = opt.from == 0 ? 1 : opt.from;
    const std::size_t to = opt.to == 0 ? from : opt.to;
    if (from > to) throw UsageError("--from must not exceed --to");
    const auto primes = odd_primes(to);
    std::optional<std::size_t> minimal;
    if (opt.tsv) fmt::print(out, "r\tvalue\tdecimal\tsatisfied\n");
    else fmt::print(out, "{:>3}  {:>12}  {}\n", "r", "decimal", "satisfied");
    for (std::size_t r = from; r <= to; ++r) {
      const auto res = evaluate_bff(opt.variant, std::span(primes).first(r));
      if (res.satisfied && !minimal) minimal = r;
      if (opt.tsv) {
        fmt::print(out, "{}\t{}\t{}\t{}\n", r, res.value.str(), res.value.decimal(opt.digits), yes_no(res.satisfied));
      } else {
        fmt::print(out, "{:>3}  {:>12}  {}\n", r, res.value.decimal(opt.digits), yes_no(res.satisfied));
      }
    }
    fmt::print(out, "# minimal r with value {}: {}\n", relation, minimal ? std::to_string(*minimal) : "none");
    return kExitOk;
  }

  std::vector<BigInt> primes;
  if (!opt.primes.empty()) {
    primes = parse_list(opt.primes);
  } else if (opt.first != 0) {
    primes = odd_primes(opt.first);
  } else {
    throw UsageError("bff needs --first R, --primes LIST or --from/--to");
  }
  const auto res = evaluate_bff(opt.variant, primes);
  if (opt.tsv) {
    fmt::print(out, "variant\tr\tvalue\tsatisfied\n{}\t{}\t{}\t{}\n", opt.variant, primes.size(), res.value.str(),
               yes_no(res.satisfied));
  } else {
    fmt::print(out, "variant: {}\nprimes: {}\nvalue: {} ({})\nsatisfied ({}): {}\n", opt.variant, primes.size(),
               res.value.str(), res.value.decimal(opt.digits), relation, yes_no(res.satisfied));
  }
  return res.satisfied ? kExitOk : kExitPropertyFalse;
}

int cmd_expand_check(const Options& opt, std::ostream& out) {
  std::size_t from = opt.r, to = opt.r;
  if (opt.r == 0) {
    from = opt.from == 0 ? 1 : opt.from;
    to = opt.to == 0 ? from : opt.to;
  }
  if (from > to) throw UsageError("--from must not exceed --to");
  bool all_ok = true;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t r = from; r <= to; ++r) {
    const auto profile = bounds::build_profile(r);
    const auto poly = bounds::expand_f(r, profile.d);
    const auto check = bounds::check_nonneg(poly);
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < opt.points; ++k) {
      std::vector<Rational> point;
      for (std::size_t t = 0; t < r; ++t) {
        const long den = std::uniform_int_distribution<long>(1, 64)(rng);
        const long num = std::uniform_int_distribution<long>(0, den)(rng);
        point.emplace_back(BigInt(num), BigInt(den));
      }
      if (poly.evaluate(point) != bounds::eval_f(point, profile.d)) ++mismatches;
    }
    const bool ok = check.nonnegative && mismatches == 0;
    all_ok = all_ok && ok;
    fmt::print(out, "r={} terms={} nonzero={} nonnegative={}", r, poly.term_slots(), poly.nonzero_terms(),
               yes_no(check.nonnegative));
    if (opt.points > 0) fmt::print(out, " eval_mismatches={}/{}", mismatches, opt.points);
    fmt::print(out, "\n");
    for (std::size_t i = 0; i < check.offenders.size() && i < 20; ++i) {
      fmt::print(out, "  negative coefficient {} on {}\n", poly.coefficient(check.offenders[i]).str(),
                 format_var_set(check.offenders[i]));
    }
  }
  return all_ok ? kExitOk : kExitPropertyFalse;
}

search::SearchEngine engine_from(const std::string& s) {
  if (s == "bitset") return search::SearchEngine::bitset;
  if (s == "split") return search::SearchEngine::split;
  return search::SearchEngine::automatic;
}

int cmd_search(const Options& opt, std::ostream& out) {
  search::SearchConfig config;
  if (!opt.pool.empty()) {
    config.modulus_pool = parse_list(opt.pool);
  } else if (!opt.pool_lcm.empty()) {
    config.modulus_pool = search::divisors_gt_one(parse_bigint(opt.pool_lcm));
  } else {
    throw UsageError("search needs --pool-lcm N or --pool LIST");
  }
  config.require_distinct = opt.distinct;
  config.require_odd = opt.odd;
  if (opt.max_classes != 0) config.max_classes = opt.max_classes;
  config.node_budget = opt.budget;
  config.engine = engine_from(opt.engine);
  const auto outcome = search::search_cover(config);
  search::write_outcome(out, outcome);
  return outcome.status == search::SearchStatus::found ? kExitOk : kExitPropertyFalse;
}

int cmd_scan_nonexistence(const Options& opt, std::ostream& out) {
  std::vector<BigInt> values;
  if (!opt.n_values.empty()) {
    values = parse_list(opt.n_values);
  } else {
    if (opt.to == 0) throw UsageError("scan-nonexistence needs --n LIST or --from A --to B");
    for (std::size_t n = std::max<std::size_t>(opt.from, 1); n <= opt.to; ++n) {
      if (n % 2 == 0) continue;
      const BigInt v = from_u64(n);
      if (opt.squarefree_only && !is_squarefree(v)) continue;
      values.push_back(v);
    }
  }
  const auto entries = search::nonexistence_scan(values, opt.budget);
  std::size_t found = 0, none = 0, exhausted = 0, not_squarefree = 0;
  if (opt.tsv) fmt::print(out, "n\tsquarefree\tstatus\tnodes\n");
  for (const auto& e : entries) {
    switch (e.outcome.status) {
      case search::SearchStatus::found: ++found; break;
      case search::SearchStatus::none: ++none; break;
      case search::SearchStatus::budget_exhausted: ++exhausted; break;
    }
    if (!e.squarefree) ++not_squarefree;
    if (opt.tsv) {
      fmt::print(out, "{}\t{}\t{}\t{}\n", to_string(e.n), yes_no(e.squarefree), search::status_name(e.outcome.status),
                 e.outcome.nodes_explored);
    } else if (e.outcome.status != search::SearchStatus::none || !opt.squarefree_only) {
      fmt::print(out, "n={} squarefree={} status={} nodes={}\n", to_string(e.n), yes_no(e.squarefree),
                 search::status_name(e.outcome.status), e.outcome.nodes_explored);
    }
    if (e.outcome.found) search::write_outcome(out, e.outcome);
  }
  fmt::print(out, "# scanned: {} (not square-free: {})\n", entries.size(), not_squarefree);
  fmt::print(out, "# no cover: {}  found: {}  budget exhausted: {}\n", none, found, exhausted);
  fmt::print(out, "# odd distinct moduli > 1 drawn from the divisors of each n; finite evidence only\n");
  return found == 0 ? kExitOk : kExitPropertyFalse;
}

int cmd_examples(const Options& opt, std::ostream& out) {
  if (opt.list || opt.name.empty()) {
    for (auto n : examples::names()) fmt::print(out, "{}\n", n);
    return kExitOk;
  }
  const auto system = examples::by_name(opt.name);
  if (!system) throw UsageError("unknown example '" + opt.name + "'");
  write_system(out, *system);
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"covsys: covering systems of congruences and odd-covering bounds"};
  app.require_subcommand(1, 1);
  const auto methods = CLI::IsMember({"auto", "scan", "ie", "split"});

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "System file, '-' for stdin")->required();
    sub->add_option("--method", opt.method, "auto|scan|ie|split")->check(methods);
    sub->add_flag("--tsv", opt.tsv, "Tab-separated output");
    sub->add_option("--digits", opt.digits, "Decimal digits (truncated)");
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--from", opt.from, "First value");
    sub->add_option("--to", opt.to, "Last value");
  };

  auto* verify = app.add_subcommand("verify", "Decide whether a system covers the integers");
  add_input(verify);
  verify->add_option("--at", opt.at, "Also report the multiplicity at this integer");

  auto* density = app.add_subcommand("density", "Exact density of the union of the classes");
  add_input(density);

  auto* witness = app.add_subcommand("witness", "Find an uncovered integer");
  add_input(witness);

  auto* table = app.add_subcommand("bound-table", "Evaluate f at the extremal point for a range of r");
  add_range(table);
  table->add_option("--r", opt.r, "Show the full profile for one r");
  table->add_option("--digits", opt.digits, "Decimal digits (truncated)");
  table->add_flag("--tsv", opt.tsv, "Tab-separated output");

  auto* bff = app.add_subcommand("bff", "Odd-moduli and square-free prime inequalities");
  bff->add_option("--variant", opt.variant, "odd|squarefree")->check(CLI::IsMember({"odd", "squarefree"}));
  bff->add_option("--first", opt.first, "Use the first R odd primes");
  bff->add_option("--primes", opt.primes, "Explicit comma-separated primes")->delimiter(',');
  add_range(bff);
  bff->add_option("--digits", opt.digits, "Decimal digits (truncated)");
  bff->add_flag("--tsv", opt.tsv, "Tab-separated output");

  auto* expand = app.add_subcommand("expand-check", "Expand f and check coefficient signs");
  expand->add_option("--r", opt.r, "Number of variables");
  add_range(expand);
  expand->add_option("--points", opt.points, "Random points at which to compare expansion and direct evaluation");
  expand->add_option("--seed", opt.seed, "RNG seed for --points");

  auto* search_cmd = app.add_subcommand("search", "Backtracking search for a covering system");
  search_cmd->add_option("--pool-lcm", opt.pool_lcm, "Pool = all divisors > 1 of N");
  search_cmd->add_option("--pool", opt.pool, "Explicit comma-separated moduli")->delimiter(',');
  search_cmd->add_flag("--odd", opt.odd, "Only odd moduli");
  search_cmd->add_flag("--distinct", opt.distinct, "Distinct moduli");
  search_cmd->add_option("--max-classes", opt.max_classes, "Class limit");
  search_cmd->add_option("--budget", opt.budget, "Node budget");
  search_cmd->add_option("--engine", opt.engine, "auto|bitset|split")
      ->check(CLI::IsMember({"auto", "bitset", "split"}));

  auto* scan = app.add_subcommand("scan-nonexistence", "Search every odd n in a range for an odd distinct cover");
  add_range(scan);
  scan->add_option("--n", opt.n_values, "Explicit comma-separated values")->delimiter(',');
  scan->add_flag("--squarefree", opt.squarefree_only, "Only square-free n (and print only notable rows)");
  scan->add_option("--budget", opt.budget, "Node budget per n");
  scan->add_flag("--tsv", opt.tsv, "Tab-separated output");

  auto* ex = app.add_subcommand("examples", "Print a built-in system");
  ex->add_option("--name", opt.name, "erdos5|erdos14");
  ex->add_flag("--list", opt.list, "List names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, in, out);
    if (density->parsed()) return cmd_density(opt, in, out);
    if (witness->parsed()) return cmd_witness(opt, in, out);
    if (table->parsed()) return cmd_bound_table(opt, out);
    if (bff->parsed()) return cmd_bff(opt, out);
    if (expand->parsed()) return cmd_expand_check(opt, out);
    if (search_cmd->parsed()) return cmd_search(opt, out);
    if (scan->parsed()) return cmd_scan_nonexistence(opt, out);
    if (ex->parsed()) return cmd_examples(opt, out);
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}: {}\n", opt.input == "-" ? "<stdin>" : opt.input, e.what());
    return kExitUsage;
  } catch (const CapacityError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace covering::cli
