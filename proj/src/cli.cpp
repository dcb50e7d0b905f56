#include "hooklab/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hooklab/budget.hpp"
#include "hooklab/hookformula.hpp"
#include "hooklab/kerov.hpp"
#include "hooklab/recurrences.hpp"
#include "hooklab/tree_io.hpp"

namespace hooklab {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

enum class SizeFlag { R, N, MaxSize };

struct CheckFamily {
  std::string name;
  std::size_t min;
  std::size_t default_max;
  std::size_t quick_max;
  std::size_t ceiling;
  SizeFlag flag;
  std::function<void(std::size_t, const VerifyOptions&, std::vector<VerdictReport>&)> run;
};

nlohmann::json trace_json(const std::vector<TraceEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) arr.push_back({{"index", e.index}, {"summand", to_string(e.summand)}});
  return arr;
}

VerdictReport identity_report(const std::string& check, nlohmann::json params, const Identity& id) {
  VerdictReport r;
  r.check = check;
  r.params = std::move(params);
  r.pass = id.equal;
  r.lhs = summarize(id.lhs);
  r.rhs = summarize(id.rhs);
  return r;
}

void run_theorem1(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  VerdictReport rep = identity_report("theorem1", {{"r", r}}, hook_formula(r, o.threads));
  rep.detail["trees"] = increasing_tree_count(r);
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void run_postnikov(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  VerdictReport rep = identity_report("postnikov", {{"r", r}}, postnikov_analogue(r, o.threads));
  const SpecializationChain chain = postnikov_specialization(r, o.threads);
  rep.detail["chain_tree_side"] = chain.tree_side.equal;
  rep.detail["chain_closed_side"] = chain.closed_side.equal;
  rep.pass = rep.pass && chain.tree_side.equal && chain.closed_side.equal;
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void run_binary_hooks(std::size_t n, const VerifyOptions&, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  VerdictReport rep = identity_report("binary-hooks", {{"n", n}}, postnikov_binary(n));
  std::size_t mismatches = 0;
  std::uint64_t shapes = 0;
  for_each_increasing(label_range(1, static_cast<Label>(n)), [&](const IncreasingTree& t) {
    ++shapes;
    if (!knuth_hook_check(shape_of(t)).equal) ++mismatches;
  });
  const Rational hook_sum = hook_sum_binary(n);
  rep.detail["rooted_trees_checked"] = shapes;
  rep.detail["knuth_mismatches"] = mismatches;
  rep.detail["hook_sum_binary"] = to_string(hook_sum);
  rep.detail["binary_shapes"] = catalan(n);
  rep.pass = rep.pass && mismatches == 0 && hook_sum == 1;
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void run_cayley(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  const CayleyCheck c = cayley_identity(r, o.threads);
  VerdictReport rep = identity_report("cayley", {{"r", r}}, make_identity(c.lhs, c.rhs));
  rep.detail["cayley_trees"] = cayley_count(r);
  rep.detail["via_doubleprime"] = c.via_doubleprime == c.rhs;
  rep.pass = c.equal;
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void run_fibers(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  const FiberCheck f = fiber_check(r, o.threads);
  VerdictReport rep =
      identity_report("fibers", {{"r", r}}, make_identity(f.fiber_total, f.doubleprime_total));
  rep.detail["trees"] = f.trees;
  rep.detail["cayley_trees"] = f.cayley_trees;
  rep.detail["mismatches"] = f.mismatches;
  rep.detail["surjective"] = f.surjective;
  rep.detail["partition"] = f.partition;
  rep.pass = rep.pass && f.ok();
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void run_pq(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  std::vector<TraceEntry> trace;
  MultiPoly p = p_polynomial(r, o.trace ? &trace : nullptr);
  VerdictReport rep = identity_report("pq", {{"r", r}}, make_identity(std::move(p), q_polynomial(r)));
  bool all = rep.pass;
  for (Family f : {Family::P, Family::Q}) {
    const bool ct = constant_term(f, r).equal;
    const bool fd = finite_difference(f, r).equal;
    rep.detail[std::string("constant_term_") + family_name(f)] = ct;
    rep.detail[std::string("finite_difference_") + family_name(f)] = fd;
    all = all && ct && fd;
  }
  rep.pass = all;
  if (o.trace) rep.trace = trace_json(trace);
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void push_recurrence(const std::string& name, const char* aux_name, std::size_t r,
                     const RecurrenceCheck& c, const VerifyOptions& o, Clock::time_point start,
                     std::vector<VerdictReport>& out) {
  VerdictReport rep = identity_report(name, {{"r", r}}, c.identity);
  rep.detail[aux_name] = c.auxiliary;
  rep.detail["closed_form_match"] = c.identity.rhs == c.closed_form;
  rep.pass = c.ok();
  if (o.trace) rep.trace = trace_json(c.trace);
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void run_grafting(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  push_recurrence("grafting", "weight_law", r, grafting_recurrence(r, o.threads, o.trace), o, start,
                  out);
}

void run_root_recurrence(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  push_recurrence("root-recurrence", "induction_step", r,
                  root_degree_recurrence(r, o.threads, o.trace), o, start, out);
}

void run_mvl(std::size_t r, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  const auto start = Clock::now();
  std::vector<TraceEntry> trace;
  VerdictReport rep = identity_report("mvl", {{"r", r}}, mvl_identity(r, o.trace ? &trace : nullptr));
  std::vector<long> kvals;
  for (std::size_t i = 1; i <= r; ++i) kvals.push_back(static_cast<long>(i));
  const SeriesOracle series = lagrange_series_oracle(kvals);
  const std::vector<Label> subset = label_range(2, static_cast<Label>(r));
  const LogOracle log = log_coefficient_oracle(kvals, subset);
  rep.detail["series_oracle"] = {{"k", kvals},
                                 {"series", to_string(series.series)},
                                 {"closed_form", to_string(series.closed_form)},
                                 {"equal", series.equal}};
  rep.detail["log_oracle"] = {{"subset", subset},
                              {"series", to_string(log.series)},
                              {"closed_form", to_string(log.closed_form)},
                              {"equal", log.equal}};
  rep.pass = rep.pass && series.equal && log.equal;
  if (o.trace) rep.trace = trace_json(trace);
  rep.elapsed_ms = millis_since(start);
  out.push_back(std::move(rep));
}

void run_kerov(std::size_t size, const VerifyOptions& o, std::vector<VerdictReport>& out) {
  for (const auto& mu : partitions_of(static_cast<int>(size))) {
    const auto start = Clock::now();
    const KerovRow row = kerov_row(mu, o.threads);
    VerdictReport rep;
    rep.check = "kerov";
    rep.params = {{"mu", mu.to_string()}};
    rep.pass = row.ok();
    rep.lhs = summarize(Rational(row.brute_count));
    rep.rhs = summarize(Rational(row.tree_value));
    rep.detail = {{"j", row.j},
                  {"brute_count", to_string(row.brute_count)},
                  {"bedard_goupil_sum", to_string(row.bedard_goupil_sum)},
                  {"prop2", to_string(row.prop2)},
                  {"closed_form", to_string(row.closed_form)},
                  {"rhs_at_mu", to_string(row.rhs_value)},
                  {"tree_side", to_string(row.tree_value)},
                  {"by_cycle_type", row.by_type_ok},
                  {"cycle_counts", row.cycle_counts_ok},
                  {"binomial", row.binomial_ok},
                  {"bridge", row.bridge_ok}};
    rep.elapsed_ms = millis_since(start);
    out.push_back(std::move(rep));
  }
}

const std::vector<CheckFamily>& families() {
  static const std::vector<CheckFamily> table = {
      {"theorem1", 1, 8, 6, kMaxIncreasingSize, SizeFlag::R, run_theorem1},
      {"postnikov", 1, 8, 6, kMaxIncreasingSize, SizeFlag::R, run_postnikov},
      {"binary-hooks", 1, 8, 6, kMaxLinearExtensionSize, SizeFlag::N, run_binary_hooks},
      {"cayley", 2, 6, 5, kMaxCayleySize, SizeFlag::R, run_cayley},
      {"fibers", 1, 6, 5, kMaxCayleySize, SizeFlag::R, run_fibers},
      {"pq", 2, 7, 6, kMaxRecurrenceSize, SizeFlag::R, run_pq},
      {"grafting", 2, 7, 6, kMaxRecurrenceSize, SizeFlag::R, run_grafting},
      {"root-recurrence", 2, 7, 6, kMaxRecurrenceSize, SizeFlag::R, run_root_recurrence},
      {"mvl", 2, 7, 6, kMaxRecurrenceSize, SizeFlag::R, run_mvl},
      {"kerov", 1, 8, 6, kMaxFactorizationSize, SizeFlag::MaxSize, run_kerov},
  };
  return table;
}

const char* flag_name(SizeFlag f) {
  switch (f) {
    case SizeFlag::R: return "--r";
    case SizeFlag::N: return "--n";
    case SizeFlag::MaxSize: return "--max-size";
  }
  return "";
}

std::size_t upper_bound_for(const CheckFamily& fam, const VerifyOptions& o) {
  const std::optional<std::size_t>& requested =
      fam.flag == SizeFlag::R ? o.r : fam.flag == SizeFlag::N ? o.n : o.max_size;
  const std::size_t upper =
      requested ? *requested : (o.budget == "quick" ? fam.quick_max : fam.default_max);
  const std::size_t ceiling = budget_ceiling(fam.ceiling);
  if (upper > ceiling) {
    throw BudgetError("refusing " + fam.name + " with " + flag_name(fam.flag) + " " +
                      std::to_string(upper) + ": the ceiling is " + std::to_string(ceiling) +
                      " (HOOKLAB_BUDGET_CEILING raises it)");
  }
  if (upper < fam.min) {
    throw std::invalid_argument(fam.name + " needs " + flag_name(fam.flag) + " of at least " +
                                std::to_string(fam.min));
  }
  return upper;
}

// Sizes of enumerate runs, same ceiling mechanism as verify.
std::size_t enumeration_ceiling(const std::string& family) {
  if (family == "increasing") return budget_ceiling(kMaxIncreasingSize);
  if (family == "cayley") return budget_ceiling(kMaxCayleySize);
  return budget_ceiling(kMaxBinarySize);
}

void emit_enumeration(const std::string& family, std::size_t size, bool dot, std::ostream& os) {
  std::uint64_t index = 0;
  auto emit = [&](const auto& tree) {
    if (dot) {
      os << to_dot(tree, "T" + std::to_string(index)) << '\n';
    } else {
      os << to_json(tree).dump() << '\n';
    }
    ++index;
  };
  if (family == "increasing") {
    for_each_increasing(label_range(1, static_cast<Label>(size)),
                        [&](const IncreasingTree& t) { emit(t); });
  } else if (family == "cayley") {
    for_each_cayley(size, 0, cayley_count(size), [&](const CayleyTree& t) { emit(t); });
  } else {
    for (const auto& t : enumerate_binary(static_cast<int>(size))) emit(t);
  }
}

void print_kerov_table(const std::vector<VerdictReport>& reports, std::ostream& os) {
  os << "mu            j  brute  bedard-goupil  prop2  tree-side  verdict\n";
  for (const auto& r : reports) {
    if (r.check != "kerov") continue;
    const auto& d = r.detail;
    std::ostringstream line;
    line << std::left << std::setw(14) << r.params["mu"].get<std::string>() << std::setw(3)
         << d["j"].get<int>() << std::setw(7) << d["brute_count"].get<std::string>() << std::setw(15)
         << d["bedard_goupil_sum"].get<std::string>() << std::setw(7) << d["prop2"].get<std::string>()
         << std::setw(11) << d["tree_side"].get<std::string>() << (r.pass ? "PASS" : "FAIL");
    os << line.str() << '\n';
  }
}

}  // namespace

const std::vector<std::string>& verify_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : families()) v.push_back(f.name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<VerdictReport> run_verify(const VerifyOptions& options) {
  if (options.budget != "default" && options.budget != "quick") {
    throw std::invalid_argument("unknown budget '" + options.budget + "'");
  }
  if (options.threads == 0) throw std::invalid_argument("--threads must be positive");
  std::vector<const CheckFamily*> selected;
  for (const auto& f : families()) {
    if (options.check == "all" || options.check == f.name) selected.push_back(&f);
  }
  if (selected.empty()) throw std::invalid_argument("unknown check '" + options.check + "'");

  // Validate every bound before any work starts.
  std::vector<std::size_t> uppers;
  for (const auto* f : selected) uppers.push_back(upper_bound_for(*f, options));

  std::vector<VerdictReport> reports;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (std::size_t size = selected[i]->min; size <= uppers[i]; ++size) {
      selected[i]->run(size, options, reports);
    }
  }
  return reports;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hooklab: exact checks of hook length identities for trees"};
  app.name(args.empty() ? "hooklab" : args.front());
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "Stream every tree of one family and size");
  std::string family;
  std::size_t size_arg = 0;
  std::string format_arg;
  std::size_t enum_r = 0;
  std::size_t enum_n = 0;
  std::string format_opt;
  bool as_json = false;
  bool as_dot = false;
  std::string enum_out;
  enumerate->add_option("FAMILY", family, "increasing, cayley or binary")
      ->required()
      ->check(CLI::IsMember({"increasing", "cayley", "binary"}));
  enumerate->add_option("SIZE", size_arg, "Number of vertices (binary: internal nodes)");
  enumerate->add_option("FORMAT", format_arg, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  enumerate->add_option("--r", enum_r, "Size for increasing and cayley");
  enumerate->add_option("--n", enum_n, "Size for binary");
  enumerate->add_option("--format", format_opt, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  enumerate->add_flag("--json", as_json, "JSON lines, one tree per line");
  enumerate->add_flag("--dot", as_dot, "Graphviz, one graph per tree");
  enumerate->add_option("--out", enum_out, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check identities exactly and report verdicts");
  VerifyOptions vo;
  bool verify_json = false;
  std::string verify_out;
  verify->add_option("CHECK", vo.check, "Check family or 'all'")
      ->check(CLI::IsMember(verify_checks()));
  verify->add_option("--r", vo.r, "Largest r in r sweeps");
  verify->add_option("--n", vo.n, "Largest n for binary-hooks");
  verify->add_option("--max-size", vo.max_size, "Largest |mu| for kerov");
  verify->add_flag("--json", verify_json, "JSON lines: one record per verdict, then a summary");
  verify->add_flag("--trace", vo.trace, "Attach per-summand traces to recurrence checks");
  verify->add_option("--threads", vo.threads, "Worker threads for enumerations")
      ->check(CLI::Range(1u, 256u));
  verify->add_option("--out", verify_out, "Write the report to this file instead of stdout");
  verify->add_option("--budget", vo.budget, "default or quick")
      ->check(CLI::IsMember({"default", "quick"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  auto open_sink = [&](const std::string& path, std::ofstream& file) -> std::ostream* {
    if (path.empty()) return &out;
    file.open(path);
    if (!file) {
      err << "hooklab: cannot open '" << path << "' for writing\n";
      return nullptr;
    }
    return &file;
  };

  try {
    if (enumerate->parsed()) {
      std::set<std::string> formats;
      for (const auto& f : {format_arg, format_opt}) {
        if (!f.empty()) formats.insert(f);
      }
      if (as_json) formats.insert("json");
      if (as_dot) formats.insert("dot");
      if (formats.size() > 1) {
        err << "hooklab: conflicting output formats\n";
        return 2;
      }
      const std::string format = formats.empty() ? "json" : *formats.begin();
      std::vector<std::size_t> sizes;
      if (enumerate->count("SIZE") > 0) sizes.push_back(size_arg);
      if (enumerate->count("--r") > 0) sizes.push_back(enum_r);
      if (enumerate->count("--n") > 0) sizes.push_back(enum_n);
      if (sizes.size() != 1) {
        err << "hooklab: give the size exactly once (positional, --r or --n)\n";
        return 2;
      }
      const std::size_t size = sizes.front();
      const std::size_t min = family == "binary" ? 0 : 1;
      if (size < min) {
        err << "hooklab: " << family << " trees need size at least " << min << "\n";
        return 2;
      }
      if (size > enumeration_ceiling(family)) {
        err << "hooklab: refusing to enumerate " << family << " trees of size " << size
            << ": the ceiling is " << enumeration_ceiling(family)
            << " (HOOKLAB_BUDGET_CEILING raises it)\n";
        return 2;
      }
      std::ofstream file;
      std::ostream* sink = open_sink(enum_out, file);
      if (sink == nullptr) return 2;
      emit_enumeration(family, size, format == "dot", *sink);
      return 0;
    }

    const std::vector<VerdictReport> reports = run_verify(vo);
    const Summary summary = summarize(reports);
    std::ofstream file;
    std::ostream* sink = open_sink(verify_out, file);
    if (sink == nullptr) return 2;
    if (verify_json) {
      for (const auto& r : reports) *sink << to_json(r).dump() << '\n';
      *sink << to_json(summary).dump() << '\n';
    } else {
      for (const auto& r : reports) {
        if (r.check != "kerov") *sink << format_line(r) << '\n';
      }
      if (vo.check == "kerov" || vo.check == "all") print_kerov_table(reports, *sink);
      *sink << "summary: " << summary.passed << "/" << summary.total << " passed across "
            << summary.families.size() << " families\n";
    }
    return summary.pass() ? 0 : 1;
  } catch (const BudgetError& e) {
    err << "hooklab: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "hooklab: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "hooklab: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace hooklab
