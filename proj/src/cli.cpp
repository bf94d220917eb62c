#include <umbral/cli.hpp>

#include <umbral/identities.hpp>
#include <umbral/lacasse.hpp>
#include <umbral/report_json.hpp>
#include <umbral/sequences.hpp>
#include <umbral/umbra.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace umbral::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Command> kCommands{
    {"compute", Command::Compute},
    {"verify", Command::Verify},
    {"table", Command::Table},
    {"bench", Command::Bench},
};

const std::map<std::string, Format> kFormats{
    {"text", Format::Text},
    {"csv", Format::Csv},
    {"json", Format::Json},
    {"markdown", Format::Markdown},
};

const std::vector<std::string> kComputeTargets{"xi", "xi2", "derangement", "factorial", "dpoly",
                                               "chain"};

// Verify targets in the order `all` runs them.
const std::vector<std::pair<std::string, IdentityId>> kVerifyTargets{
    {"eq22", IdentityId::EQ22},
    {"eq23", IdentityId::EQ23},
    {"eq24", IdentityId::EQ24},
    {"umbral", IdentityId::UMBRAL_PROPERTY},
    {"conjecture", IdentityId::CONJECTURE},
    {"rewrites", IdentityId::XI_REWRITES},
    {"chain", IdentityId::PROOF_CHAIN},
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line;
}

std::string join_markdown(const std::vector<std::string>& fields) {
  std::string line = "|";
  for (const auto& f : fields) line += " " + f + " |";
  return line;
}

// Writes a header plus rows as text (tab separated), csv or markdown.
void emit_rows(std::ostream& out, Format format, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  switch (format) {
    case Format::Csv:
      out << join_csv(header) << '\n';
      for (const auto& r : rows) out << join_csv(r) << '\n';
      break;
    case Format::Markdown: {
      out << join_markdown(header) << '\n';
      out << join_markdown(std::vector<std::string>(header.size(), "---")) << '\n';
      for (const auto& r : rows) out << join_markdown(r) << '\n';
      break;
    }
    case Format::Text:
    case Format::Json: {
      auto tabbed = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
        out << '\n';
      };
      tabbed(header);
      for (const auto& r : rows) tabbed(r);
      break;
    }
  }
}

CliConfig parse(const std::vector<std::string>& args, std::ostream& out, bool& help_shown) {
  CLI::App app{"Exact derangement-polynomial and xi(n) laboratory", "umbral-lab"};
  CliConfig cfg;
  unsigned n = 0, max_n = 0, approx = 0, perturb = 0;

  std::string command;
  app.add_option("command", command, "compute | verify | table | bench")->required();
  app.add_option("target", cfg.target,
                 "compute: xi xi2 derangement factorial dpoly chain; "
                 "verify: eq22 eq23 eq24 umbral conjecture rewrites chain all; "
                 "table: xi; bench: xi2")
      ->required();
  auto* n_opt = app.add_option("--n", n, "Single n");
  auto* max_opt = app.add_option("--max-n", max_n, "Upper end of an n sweep");
  n_opt->excludes(max_opt);
  app.add_option("--format", cfg.format, "text | csv | json | markdown")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  app.add_option("--jobs", cfg.jobs, "Worker threads for verify")->check(CLI::Range(1u, 1024u));
  auto* approx_opt = app.add_option("--approx", approx, "Also print decimal approximations");
  auto* perturb_opt = app.add_option("--perturb", perturb, "Fault injection: use D_K + 1 for D_K")
                          ->group("Testing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    help_shown = true;
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  auto cmd = kCommands.find(command);
  if (cmd == kCommands.end()) throw UsageError("unknown command '" + command + "'");
  cfg.command = cmd->second;
  if (*n_opt) cfg.n = n;
  if (*max_opt) cfg.max_n = max_n;
  if (*approx_opt) cfg.approx_digits = approx;
  if (*perturb_opt) cfg.perturb = perturb;
  return cfg;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void validate(const CliConfig& cfg) {
  switch (cfg.command) {
    case Command::Compute: {
      if (!contains(kComputeTargets, cfg.target)) {
        throw UsageError("unknown compute target '" + cfg.target + "'");
      }
      if (!cfg.n) throw UsageError("compute requires --n");
      bool positive_only = cfg.target == "xi" || cfg.target == "xi2" || cfg.target == "chain";
      if (positive_only && *cfg.n == 0) {
        throw UsageError(cfg.target + " is defined for n >= 1");
      }
      if (cfg.approx_digits && cfg.target != "xi" && cfg.target != "xi2") {
        throw UsageError("--approx applies to xi, xi2 and table only");
      }
      break;
    }
    case Command::Verify: {
      bool known = cfg.target == "all";
      for (const auto& [name, id] : kVerifyTargets) known = known || name == cfg.target;
      if (!known) throw UsageError("unknown verify target '" + cfg.target + "'");
      if (!cfg.max_n) throw UsageError("verify requires --max-n");
      if (*cfg.max_n < 1) throw UsageError("--max-n must be at least 1");
      if (cfg.approx_digits) throw UsageError("--approx does not apply to verify");
      break;
    }
    case Command::Table:
      if (cfg.target != "xi") throw UsageError("table target must be 'xi'");
      if (!cfg.max_n || *cfg.max_n < 1) throw UsageError("table requires --max-n >= 1");
      break;
    case Command::Bench:
      if (cfg.target != "xi2") throw UsageError("bench target must be 'xi2'");
      if (!cfg.n && !cfg.max_n) throw UsageError("bench requires --n or --max-n");
      if ((cfg.n && *cfg.n < 1) || (cfg.max_n && *cfg.max_n < 1)) {
        throw UsageError("bench requires n >= 1");
      }
      if (cfg.approx_digits) throw UsageError("--approx does not apply to bench");
      break;
  }
}

// compute ----------------------------------------------------------------

int run_compute(const CliConfig& cfg, std::ostream& out) {
  const unsigned n = *cfg.n;
  std::string value;
  std::optional<Rat> rational;
  ProofTrace trace;

  if (cfg.target == "xi") {
    rational = xi(n);
  } else if (cfg.target == "xi2") {
    rational = xi2(n);
  } else if (cfg.target == "derangement") {
    value = to_string(derangement(n));
  } else if (cfg.target == "factorial") {
    value = to_string(factorial(n));
  } else if (cfg.target == "dpoly") {
    value = to_string(derangement_poly(n), "lambda");
  } else if (cfg.target == "chain") {
    trace = replay_proof(n);
  }
  if (rational) value = to_string(*rational);
  std::optional<std::string> approx;
  if (rational && cfg.approx_digits) approx = to_decimal(*rational, *cfg.approx_digits);

  if (cfg.target == "chain") {
    switch (cfg.format) {
      case Format::Json: {
        nlohmann::json lines = nlohmann::json::array();
        for (const auto& l : trace.lines) lines.push_back({{"label", l.label}, {"value", to_string(l.value)}});
        out << nlohmann::json{{"n", n}, {"lines", lines}, {"consistent", trace.consistent()}}.dump(2)
            << '\n';
        break;
      }
      default: {
        std::vector<std::vector<std::string>> rows;
        for (const auto& l : trace.lines) rows.push_back({l.label, to_string(l.value)});
        emit_rows(out, cfg.format, {"line", "value"}, rows);
        if (cfg.format == Format::Text) {
          out << (trace.consistent() ? "all lines equal" : "lines differ") << '\n';
        }
      }
    }
    return trace.consistent() ? kExitOk : kExitVerifyFailed;
  }

  switch (cfg.format) {
    case Format::Text:
      out << value << '\n';
      if (approx) out << *approx << " (approximate)\n";
      break;
    case Format::Json: {
      nlohmann::json doc{{"target", cfg.target}, {"n", n}, {"value", value}};
      if (approx) doc["approx"] = *approx;
      out << doc.dump() << '\n';
      break;
    }
    case Format::Csv:
    case Format::Markdown: {
      std::vector<std::string> header{"target", "n", "value"};
      std::vector<std::string> row{cfg.target, std::to_string(n), value};
      if (approx) {
        header.push_back("approx");
        row.push_back(*approx);
      }
      emit_rows(out, cfg.format, header, {row});
      break;
    }
  }
  return kExitOk;
}

// verify -----------------------------------------------------------------

struct VerifyTask {
  std::string target;
  IdentityId id;
  unsigned n;
};

std::vector<VerifyReport> run_tasks(const std::vector<VerifyTask>& tasks, unsigned jobs,
                                    const Sequences* fork) {
  std::vector<VerifyReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    std::optional<ScopedSequences> scope;
    if (fork) scope.emplace(*fork);
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = verify(tasks[i].id, tasks[i].n);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

int run_verify(const CliConfig& cfg, std::ostream& out, const Sequences* fork) {
  std::vector<std::pair<std::string, IdentityId>> selected;
  for (const auto& entry : kVerifyTargets) {
    if (cfg.target == "all" || cfg.target == entry.first) selected.push_back(entry);
  }
  std::vector<VerifyTask> tasks;
  for (const auto& [name, id] : selected) {
    for (unsigned n = min_n(id); n <= *cfg.max_n; ++n) tasks.push_back({name, id, n});
  }
  auto reports = run_tasks(tasks, cfg.jobs, fork);
  bool all_passed = std::all_of(reports.begin(), reports.end(),
                                [](const VerifyReport& r) { return r.passed; });

  switch (cfg.format) {
    case Format::Json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : reports) doc.push_back(to_json(r));
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "identity,n,passed,point,lhs,rhs\n";
      for (const auto& r : reports) {
        std::string id(identity_name(r.identity));
        if (r.witnesses.empty()) {
          out << join_csv({id, std::to_string(r.n), r.passed ? "true" : "false", "", "", ""}) << '\n';
        }
        for (const auto& w : r.witnesses) {
          out << join_csv({id, std::to_string(r.n), "false", w.point, to_string(w.lhs),
                           to_string(w.rhs)})
              << '\n';
        }
      }
      break;
    }
    case Format::Text:
    case Format::Markdown: {
      const bool md = cfg.format == Format::Markdown;
      if (md) out << "| identity | passed | checked |\n| --- | --- | --- |\n";
      std::size_t pos = 0;
      std::vector<std::string> failures;
      for (const auto& [name, id] : selected) {
        std::size_t total = 0, passed = 0;
        for (; pos < tasks.size() && tasks[pos].target == name; ++pos) {
          ++total;
          const auto& r = reports[pos];
          if (r.passed) {
            ++passed;
            continue;
          }
          for (const auto& w : r.witnesses) {
            failures.push_back(name + " FAIL n=" + std::to_string(r.n) + " at " + w.point +
                               ": lhs=" + to_string(w.lhs) + " rhs=" + to_string(w.rhs));
          }
        }
        if (md) {
          out << "| " << name << " | " << passed << " | " << total << " |\n";
        } else {
          out << name << ": " << passed << "/" << total << " pass\n";
        }
      }
      if (md && !failures.empty()) out << '\n';
      for (const auto& f : failures) out << (md ? "- " : "  ") << f << '\n';
      break;
    }
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

// table ------------------------------------------------------------------

int run_table(const CliConfig& cfg, std::ostream& out) {
  std::vector<std::string> header{"n", "D_n", "n^n*xi", "n^n*xi2", "xi", "xi2", "xi2-xi"};
  if (cfg.approx_digits) {
    header.push_back("xi_approx");
    header.push_back("xi2_approx");
  }
  std::vector<std::vector<std::string>> rows;
  for (unsigned n = 1; n <= *cfg.max_n; ++n) {
    XiValue x1 = xi_value(n);
    XiValue x2 = xi2_value(n);
    Rat diff = x2.value - x1.value;
    std::vector<std::string> row{std::to_string(n),     to_string(derangement(n)),
                                 to_string(x1.scaled),  to_string(x2.scaled),
                                 to_string(x1.value),   to_string(x2.value),
                                 to_string(diff)};
    if (cfg.approx_digits) {
      row.push_back(to_decimal(x1.value, *cfg.approx_digits));
      row.push_back(to_decimal(x2.value, *cfg.approx_digits));
    }
    rows.push_back(std::move(row));
  }
  if (cfg.format == Format::Json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
      obj["n"] = std::stoul(r[0]);
      doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
  } else {
    emit_rows(out, cfg.format, header, rows);
  }
  return kExitOk;
}

// bench ------------------------------------------------------------------

template <typename F>
double median_ms(F&& f, int runs = 3) {
  std::vector<double> times;
  for (int i = 0; i < runs; ++i) {
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    auto stop = std::chrono::steady_clock::now();
    // keep the call observable
    if (result < 0) throw std::logic_error("negative xi2");
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

std::string fixed3(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << v;
  return s.str();
}

int run_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  unsigned lo = cfg.n ? *cfg.n : 1;
  unsigned hi = cfg.n ? *cfg.n : *cfg.max_n;
  std::vector<std::string> header{"n", "double_sum_ms", "derangement_ms", "closed_ms"};
  std::vector<std::vector<std::string>> rows;
  for (unsigned n = lo; n <= hi; ++n) {
    // Agreement first; this run also warms the caches.
    Int a = xi2_scaled(n);
    Int b = xi2_via_derangement_scaled(n);
    Int c = xi2_closed_scaled(n);
    if (a != b || b != c) {
      err << "error: xi2 algorithms disagree at n=" << n << "; no timings reported\n";
      return kExitVerifyFailed;
    }
    rows.push_back({std::to_string(n), fixed3(median_ms([n] { return xi2_scaled(n); })),
                    fixed3(median_ms([n] { return xi2_via_derangement_scaled(n); })),
                    fixed3(median_ms([n] { return xi2_closed_scaled(n); }))});
  }
  if (cfg.format == Format::Json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
      doc.push_back({{"n", std::stoul(r[0])},
                     {"double_sum_ms", std::stod(r[1])},
                     {"derangement_ms", std::stod(r[2])},
                     {"closed_ms", std::stod(r[3])}});
    }
    out << doc.dump(2) << '\n';
  } else {
    emit_rows(out, cfg.format, header, rows);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    bool help_shown = false;
    cfg = parse(args, out, help_shown);
    if (help_shown) return kExitOk;
    validate(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n"
        << "usage: umbral-lab <compute|verify|table|bench> <target> [--n N | --max-n N] "
           "[--format text|csv|json|markdown] [--jobs J] [--approx D]\n";
    return kExitUsage;
  }

  std::optional<Sequences> fork;
  std::optional<ScopedSequences> scope;
  if (cfg.perturb) {
    const auto& base = global_sequences();
    fork.emplace(base.fork_with_derangement(*cfg.perturb, base.derangement(*cfg.perturb) + 1));
    scope.emplace(*fork);
  }

  try {
    switch (cfg.command) {
      case Command::Compute: return run_compute(cfg, out);
      case Command::Verify: return run_verify(cfg, out, fork ? &*fork : nullptr);
      case Command::Table: return run_table(cfg, out);
      case Command::Bench: return run_bench(cfg, out, err);
    }
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace umbral::cli
