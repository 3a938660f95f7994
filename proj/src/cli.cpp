#include "qident/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

#include "qident/expr_parser.hpp"
#include "qident/qfactorial.hpp"
#include "qident/truncated_series.hpp"

namespace qident {

namespace {

struct RawArgs {
  std::string format = "text";
  std::string mutate;
};

void add_common(CLI::App* sub, CommandConfig& cfg, RawArgs& raw) {
  sub->add_option("--format", raw.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", cfg.out_path, "write the report to this file");
  sub->add_flag("--no-timing", cfg.no_timing, "omit elapsed_ms from reports");
}

void add_mutate(CLI::App* sub, RawArgs& raw) {
  sub->add_option("--mutate", raw.mutate,
                  "inject a documented defect (negative control)");
}

std::vector<std::int64_t> points_or_range(const std::optional<std::int64_t>& single,
                                          std::int64_t upto) {
  if (single) return {*single};
  std::vector<std::int64_t> v;
  for (std::int64_t i = 0; i <= upto; ++i) v.push_back(i);
  return v;
}

}  // namespace

CommandConfig parse_args(const std::vector<std::string>& args) {
  CommandConfig cfg;
  RawArgs raw;

  CLI::App app{"exact verification of quintuple-product and q-Dixon identities"};
  app.name("qident");
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  auto* finite = verify->add_subcommand("finite", "finite quintuple identity");
  finite->add_option("--m", cfg.m, "single degree to check")
      ->check(CLI::NonNegativeNumber);
  finite->add_option("--m-max", cfg.m_max, "check m = 0..m-max")
      ->check(CLI::NonNegativeNumber);
  add_mutate(finite, raw);
  add_common(finite, cfg, raw);

  auto* bilateral = verify->add_subcommand("bilateral", "bilateral finite form");
  bilateral->add_option("--m", cfg.m, "left window size")
      ->check(CLI::NonNegativeNumber);
  bilateral->add_option("--n", cfg.n, "right window size")
      ->check(CLI::NonNegativeNumber);
  bilateral->add_option("--m-max", cfg.m_max, "grid bound for m")
      ->check(CLI::NonNegativeNumber);
  bilateral->add_option("--n-max", cfg.n_max, "grid bound for n")
      ->check(CLI::NonNegativeNumber);
  add_mutate(bilateral, raw);
  add_common(bilateral, cfg, raw);

  auto* subst = verify->add_subcommand(
      "substitution", "two-line factorial-fraction rewriting step");
  subst->add_option("--m", cfg.m, "left window size")->check(CLI::NonNegativeNumber);
  subst->add_option("--n", cfg.n, "right window size")->check(CLI::NonNegativeNumber);
  subst->add_option("--k", cfg.k, "summation index, -m <= k <= n");
  subst->add_option("--m-max", cfg.m_max, "grid bound for m")
      ->check(CLI::NonNegativeNumber);
  subst->add_option("--n-max", cfg.n_max, "grid bound for n")
      ->check(CLI::NonNegativeNumber);
  add_common(subst, cfg, raw);

  auto* quintuple =
      verify->add_subcommand("quintuple", "quintuple product as truncated series");
  quintuple->add_option("--order", cfg.order, "truncation order T")
      ->check(CLI::NonNegativeNumber);
  add_mutate(quintuple, raw);
  add_common(quintuple, cfg, raw);

  auto* relation = verify->add_subcommand(
      "relation", "five-factorial product rewritten through two brackets");
  relation->add_option("--order", cfg.order, "truncation order T")
      ->check(CLI::NonNegativeNumber);
  add_mutate(relation, raw);
  add_common(relation, cfg, raw);

  auto* qdixon = verify->add_subcommand("qdixon", "terminating q-Dixon summation");
  qdixon->add_option("--m", cfg.m, "single degree to check")
      ->check(CLI::NonNegativeNumber);
  qdixon->add_option("--m-max", cfg.m_max, "check m = 0..m-max")
      ->check(CLI::NonNegativeNumber);
  qdixon->add_option("--trials", cfg.trials, "sample points per degree")
      ->check(CLI::NonNegativeNumber);
  qdixon->add_option("--seed", cfg.seed, "sampling seed");
  add_common(qdixon, cfg, raw);

  auto* dlimit = verify->add_subcommand(
      "dixon-limit", "large-M limit of the q-Dixon sum, closed form");
  dlimit->add_option("--m", cfg.m, "single degree to check")
      ->check(CLI::NonNegativeNumber);
  dlimit->add_option("--m-max", cfg.m_max, "check m = 0..m-max")
      ->check(CLI::NonNegativeNumber);
  add_common(dlimit, cfg, raw);

  auto* dterm = verify->add_subcommand(
      "dixon-term-match", "termwise bridge between the limit sum and the finite form");
  dterm->add_option("--m", cfg.m, "degree")->check(CLI::NonNegativeNumber);
  dterm->add_option("--k", cfg.k, "term index, 0 <= k <= m");
  dterm->add_option("--m-max", cfg.m_max, "grid bound for m")
      ->check(CLI::NonNegativeNumber);
  add_common(dterm, cfg, raw);

  auto* expand = app.add_subcommand("expand", "expand a bracket product in q");
  expand->add_option("expr", cfg.expr, "bracket expression, e.g. \"[q,x,q/x;q]\"")
      ->required();
  expand->add_option("--order", cfg.order, "truncation order T")
      ->check(CLI::NonNegativeNumber);
  add_common(expand, cfg, raw);

  auto* coeff = app.add_subcommand("coeff", "single coefficient of a bracket product");
  coeff->add_option("expr", cfg.expr, "bracket expression")->required();
  coeff->add_option("--q", cfg.coeff_q, "q exponent")->required();
  coeff->add_option("--x", cfg.coeff_x, "x exponent");
  coeff->add_option("--order", cfg.order, "truncation order T")
      ->check(CLI::NonNegativeNumber);
  add_common(coeff, cfg, raw);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* deepest = &app;
    while (!deepest->get_subcommands().empty())
      deepest = deepest->get_subcommands().front();
    throw HelpRequested{deepest->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string("usage error: ") + e.what());
  }

  const std::pair<const CLI::App*, Command> leaves[] = {
      {finite, Command::verify_finite},
      {bilateral, Command::verify_bilateral},
      {subst, Command::verify_substitution},
      {quintuple, Command::verify_quintuple},
      {relation, Command::verify_relation},
      {qdixon, Command::verify_qdixon},
      {dlimit, Command::verify_dixon_limit},
      {dterm, Command::verify_dixon_term_match},
      {expand, Command::expand},
      {coeff, Command::coeff},
  };
  for (const auto& [sub, cmd] : leaves)
    if (sub->parsed()) cfg.command = cmd;

  if (!output_format_from_name(raw.format, cfg.format))
    throw UsageError("usage error: unknown format '" + raw.format + "'");
  if (cfg.format == OutputFormat::csv && cfg.command != Command::expand &&
      cfg.command != Command::coeff)
    throw UsageError("usage error: csv output is only available for expand and coeff");

  if (!raw.mutate.empty()) {
    const auto mut = mutation_from_name(raw.mutate);
    if (!mut) throw UsageError("usage error: unknown mutation '" + raw.mutate + "'");
    cfg.mutation = *mut;
  }

  if (cfg.command == Command::verify_substitution && cfg.k && (!cfg.m || !cfg.n))
    throw UsageError("usage error: --k needs --m and --n");
  if (cfg.command == Command::verify_dixon_term_match && cfg.k && !cfg.m)
    throw UsageError("usage error: --k needs --m");

  return cfg;
}

namespace {

// Streams one report per check in sorted parameter order; returns the exit code.
class ReportSink {
 public:
  ReportSink(std::ostream& os, const CommandConfig& cfg) : os_(os), cfg_(cfg) {}

  void operator()(const VerificationReport& rep) {
    write_report(os_, rep, cfg_.format, !cfg_.no_timing);
    if (!rep.pass) failed_ = true;
  }

  int exit_code() const { return failed_ ? 1 : 0; }

 private:
  std::ostream& os_;
  const CommandConfig& cfg_;
  bool failed_ = false;
};

int run_verify(const CommandConfig& cfg, std::ostream& os) {
  ReportSink sink(os, cfg);
  switch (cfg.command) {
    case Command::verify_finite:
      for (std::int64_t m : points_or_range(cfg.m, cfg.m_max))
        sink(verify_finite_quintuple(m, cfg.mutation));
      break;
    case Command::verify_bilateral:
      for (std::int64_t m : points_or_range(cfg.m, cfg.m_max))
        for (std::int64_t n : points_or_range(cfg.n, cfg.n_max))
          sink(verify_bilateral(m, n, cfg.mutation));
      break;
    case Command::verify_substitution:
      for (std::int64_t m : points_or_range(cfg.m, cfg.m_max))
        for (std::int64_t n : points_or_range(cfg.n, cfg.n_max)) {
          if (cfg.k) {
            sink(verify_substitution_relation(m, n, *cfg.k));
            continue;
          }
          for (std::int64_t k = -m; k <= n; ++k)
            sink(verify_substitution_relation(m, n, k));
        }
      break;
    case Command::verify_quintuple:
      sink(verify_quintuple(cfg.order, cfg.mutation));
      break;
    case Command::verify_relation:
      sink(verify_product_relation(cfg.order, cfg.mutation));
      break;
    case Command::verify_qdixon:
      for (std::int64_t m : points_or_range(cfg.m, cfg.m_max))
        sink(verify_qdixon_sampled(m, cfg.trials, cfg.seed));
      break;
    case Command::verify_dixon_limit:
      for (std::int64_t m : points_or_range(cfg.m, cfg.m_max))
        sink(verify_dixon_limit(m));
      break;
    case Command::verify_dixon_term_match:
      for (std::int64_t m : points_or_range(cfg.m, cfg.m_max)) {
        if (cfg.k) {
          sink(verify_dixon_term_match(m, *cfg.k));
          continue;
        }
        for (std::int64_t k = 0; k <= m; ++k) sink(verify_dixon_term_match(m, k));
      }
      break;
    default:
      break;
  }
  return sink.exit_code();
}

TruncatedSeries expand_expr(const std::string& expr, std::int64_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (const ProductSpec& spec : parse_product_expr(expr)) s *= bracket_inf(spec, order);
  return s;
}

}  // namespace

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.out_path) {
    file.open(*cfg.out_path);
    if (!file) {
      err << "config error: cannot open '" << *cfg.out_path << "' for writing\n";
      return 2;
    }
    sink = &file;
  }
  try {
    switch (cfg.command) {
      case Command::expand:
        write_expansion(*sink, expand_expr(cfg.expr, cfg.order).terms(), cfg.format);
        return 0;
      case Command::coeff: {
        // the requested exponent may sit beyond the default order; widen
        const std::int64_t order = std::max(cfg.order, cfg.coeff_q);
        const TruncatedSeries s = expand_expr(cfg.expr, order);
        write_coeff(*sink, cfg.coeff_q, cfg.coeff_x,
                    s.coeff(cfg.coeff_q, cfg.coeff_x), cfg.format);
        return 0;
      }
      default:
        return run_verify(cfg, *sink);
    }
  } catch (const ParseError& e) {
    err << "expression error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    const CommandConfig cfg = parse_args(args);
    return run(cfg, out, err);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace qident
