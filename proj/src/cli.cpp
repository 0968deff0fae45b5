#include "sumset/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sumset/bounds.hpp"
#include "sumset/decomposition.hpp"
#include "sumset/errors.hpp"
#include "sumset/report_io.hpp"
#include "sumset/scan.hpp"
#include "sumset/sumset.hpp"
#include "sumset/verify.hpp"

namespace sumset::cli {
namespace {

class Dispatcher {
 public:
  Dispatcher(const CliConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err) {}

  int dispatch() {
    if (cfg_.command == "compute") return compute();
    if (cfg_.command == "bound") return bound();
    if (cfg_.command == "verify") {
      if (cfg_.mode == "direct") return verify_direct();
      if (cfg_.mode == "lemma1") return verify_lemma1_cmd();
      if (cfg_.mode == "complement") return verify_complement();
      if (cfg_.mode == "inclusions") return verify_inclusions();
    }
    if (cfg_.command == "decompose") return decompose();
    if (cfg_.command == "scan") return scan();
    throw ParseError("no command given; expected compute, bound, verify, decompose, or scan");
  }

 private:
  bool records() const { return cfg_.format == Format::kRecords; }

  void emit(const nlohmann::json& record) { out_ << record.dump() << '\n'; }

  GroundSet ground_set() {
    if (cfg_.set_literal.empty()) throw ParseError("--set is required");
    ParsedSet parsed = parse_set_literal(cfg_.set_literal, cfg_.p);
    for (const auto& w : parsed.warnings) err_ << "warning: " << w << '\n';
    return parsed.set;
  }

  std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw ParseError(std::string(flag) + " is required");
    return *v;
  }

  SumParams params() { return SumParams(need(cfg_.h, "--h"), need(cfg_.r, "--r")); }

  int compute() {
    const GroundSet a = ground_set();
    const SumParams prm = params();
    const SumsetResult s = generalized_sumset(a, prm);
    if (records()) {
      emit(to_record(a, prm, s));
    } else {
      out_ << "sumset: " << format_values(s.values()) << '\n';
      out_ << "cardinality: " << s.cardinality() << '\n';
      if (s.min_value()) out_ << "min: " << *s.min_value() << "  max: " << *s.max_value() << '\n';
    }
    return kOk;
  }

  int bound() {
    const auto k = need(cfg_.k, "--k");
    const auto h = need(cfg_.h, "--h");
    std::int64_t value = 0;
    const std::string& kind = cfg_.bound_kind;
    auto need_p = [&] {
      if (!cfg_.p) throw ParseError("--p is required for --kind " + kind);
      return *cfg_.p;
    };
    if (kind == "direct") {
      const SumParams prm(h, need(cfg_.r, "--r"));
      value = cfg_.p ? bound_direct_mod_p(prm, k, *cfg_.p) : bound_direct_integers(prm, k);
    } else if (kind == "sumset") {
      value = bound_sumset_integers(h, k);
    } else if (kind == "restricted") {
      value = bound_restricted_integers(h, k);
    } else if (kind == "cauchy-davenport") {
      value = bound_cauchy_davenport(h, k, need_p());
    } else {
      value = bound_erdos_heilbronn(h, k, need_p());
    }
    if (records()) {
      nlohmann::json j = {{"command", "bound"}, {"kind", kind}, {"k", k}, {"h", h}, {"bound", value}};
      if (cfg_.r) j["r"] = *cfg_.r;
      if (cfg_.p) j["p"] = *cfg_.p;
      emit(j);
    } else {
      out_ << value << '\n';
    }
    return kOk;
  }

  int verify_direct() {
    const BoundReport rep = check_direct_bound(ground_set(), params());
    if (records()) emit(to_record(rep));
    else out_ << format_table({rep});
    return exit_code(rep);
  }

  int verify_lemma1_cmd() {
    const GroundSet a = ground_set();
    const auto r = need(cfg_.r, "--r");
    std::int64_t m;
    if (cfg_.m) {
      m = *cfg_.m;
    } else {
      const SumParams prm(need(cfg_.h, "--h"), r);
      if (prm.epsilon() != 0)
        throw DomainError("h = m*r violated (h = " + std::to_string(prm.h()) + ", r = " +
                          std::to_string(r) + ")");
      m = prm.m();
    }
    const Lemma1Report rep = verify_lemma1(a, m, r);
    if (records()) {
      emit(to_record(rep, a));
    } else {
      out_ << "|(" << m * r << ")^(" << r << ")A| = " << rep.generalized_cardinality << ", |" << r
           << "(" << m << "^A)| = " << rep.iterated_cardinality << '\n';
      out_ << (rep.equal ? "equal" : "DIFFER: " + format_values(rep.symmetric_difference)) << '\n';
    }
    return exit_code(rep);
  }

  int verify_complement() {
    const GroundSet a = ground_set();
    const ComplementReport rep = check_complement_identity(a, params());
    if (records()) {
      emit(to_record(rep, a));
    } else {
      out_ << "|" << rep.params.h() << "^(" << rep.params.r() << ")A| = " << rep.cardinality
           << ", |" << rep.complement_h << "^(" << rep.params.r()
           << ")A| = " << rep.complement_cardinality << '\n';
      out_ << (rep.holds() ? "holds" : "FAILS") << '\n';
    }
    return exit_code(rep);
  }

  int verify_inclusions() {
    const GroundSet a = ground_set();
    const WitnessReport rep = check_inclusions_and_witnesses(a, params());
    if (records()) {
      emit(to_record(rep, a));
    } else {
      out_ << "case: " << rep.proof_case << '\n';
      for (const auto* c : {&rep.prefix_inclusion, &rep.b_inclusion}) {
        out_ << c->name << " subset of h^(r)A: " << to_string(c->status);
        if (!c->note.empty()) out_ << " (" << c->note << ")";
        out_ << '\n';
      }
      if (rep.complement) {
        out_ << "complement |" << rep.complement->complement_h
             << "^(r)A| = " << rep.complement->complement_cardinality << " vs "
             << rep.complement->cardinality << '\n';
      }
      for (const auto& f : rep.families) {
        out_ << f.family << " witnesses (" << f.side << ", h=" << f.sumset_h
             << "): " << to_string(f.status) << ", " << f.witnesses.size()
             << " generated, interval count " << f.gap_count << " >= " << f.required_gap_count
             << '\n';
        if (cfg_.verbosity > 0) out_ << "  " << format_values(f.witnesses) << '\n';
      }
      out_ << (rep.failed() ? "FAILED" : "passed") << '\n';
    }
    return exit_code(rep);
  }

  int decompose() {
    const GroundSet a = ground_set();
    if (cfg_.counts.empty()) throw ParseError("--counts is required");
    std::vector<std::int64_t> counts;
    std::stringstream ss(cfg_.counts);
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        std::size_t used = 0;
        counts.push_back(std::stoll(tok, &used));
        if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw ParseError("bad token '" + tok + "' in --counts; expected comma-separated integers");
      }
    }
    const MultiplicityVector mult(counts, need(cfg_.r, "--r"));
    const Decomposition d = greedy_decompose(a, mult);
    if (records()) {
      emit(to_record(d, a, mult));
    } else {
      out_ << "element " << d.total << " = ";
      for (std::size_t j = 0; j < d.parts.size(); ++j) {
        std::vector<Element> vals;
        for (auto i : d.parts[j]) vals.push_back(a[i]);
        out_ << (j ? " + " : "") << format_values(vals);
      }
      out_ << '\n' << "part sums: " << format_values(d.part_sums) << '\n';
      if (cfg_.verbosity > 0) {
        for (const auto& s : d.trace) {
          out_ << "  step " << s.step << ": positive " << s.positive_before << " >= " << d.m
               << ", max after " << s.max_after << " <= " << d.r - s.step << '\n';
        }
      }
    }
    return kOk;
  }

  void print_scan(const ScanReport& rep) {
    if (records()) {
      emit(to_record(rep));
      return;
    }
    out_ << "scan " << rep.kind << " k=" << rep.k << " h=" << rep.h << " r=" << rep.r;
    if (rep.kind == "extremal") out_ << " max_diameter=" << rep.max_diameter;
    else out_ << " p=" << rep.p;
    out_ << (rep.within_hypothesis ? " [within hypothesis]" : " [outside hypothesis]")
         << " target=" << rep.target << " candidates=" << rep.candidates << '\n';
    for (std::size_t i = 0; i < rep.equality_sets.size(); ++i) {
      out_ << "  " << rep.equality_sets[i].to_string()
           << (rep.ap_verdicts[i] ? "  (AP)" : "  (not AP)") << '\n';
    }
    for (const auto& v : rep.bound_violations) out_ << "  BOUND VIOLATED: " << v.to_string() << '\n';
    out_ << "  verdict: " << (rep.failed() ? "FAILED" : "passed") << '\n';
  }

  int scan() {
    ScanOptions opts;
    opts.cap = cfg_.cap;
    opts.jobs = cfg_.jobs;
    opts.normalize = !cfg_.all_subsets;
    std::vector<ScanReport> reports;

    if (!cfg_.manifest_path.empty()) {
      std::ifstream in(cfg_.manifest_path);
      if (!in) throw ParseError("cannot read manifest '" + cfg_.manifest_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const ScanManifest man = parse_manifest(buf.str());
      opts.cap = man.cap;
      if (!cfg_.mode.empty() && cfg_.mode != man.kind)
        throw ParseError("manifest kind '" + man.kind + "' does not match 'scan " + cfg_.mode + "'");
      int status = kOk;
      for (auto k : man.k) {
        for (auto h : man.h) {
          if (man.kind == "extremal") {
            for (auto r : man.r) {
              if (h > r * k) {
                if (cfg_.verbosity > 0) err_ << "skip k=" << k << " h=" << h << " r=" << r << ": h > rk\n";
                continue;
              }
              for (auto d : man.max_diameter) {
                const ScanReport rep = scan_extremal_integers(static_cast<std::size_t>(k), h, r, d, opts);
                print_scan(rep);
                status = std::max(status, exit_code(rep));
              }
            }
          } else {
            for (auto p : man.p) {
              if (h > k) continue;
              const ScanReport rep =
                  scan_inverse_eh_mod_p(static_cast<std::uint64_t>(p), static_cast<std::size_t>(k), h, opts);
              print_scan(rep);
              status = std::max(status, exit_code(rep));
            }
          }
        }
      }
      return status;
    }

    ScanReport rep;
    if (cfg_.mode == "extremal") {
      rep = scan_extremal_integers(static_cast<std::size_t>(need(cfg_.k, "--k")), need(cfg_.h, "--h"),
                                   need(cfg_.r, "--r"), need(cfg_.max_diameter, "--max-diameter"),
                                   opts);
    } else {
      if (!cfg_.p) throw ParseError("--p is required for scan inverse-eh");
      rep = scan_inverse_eh_mod_p(*cfg_.p, static_cast<std::size_t>(need(cfg_.k, "--k")),
                                  cfg_.h.value_or(2), opts);
    }
    print_scan(rep);
    return exit_code(rep);
  }

  const CliConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

// Options are declared unbound and read back from the selected subcommand:
// CLI11 resets variables shared between sibling subcommands.
void add_common(CLI::App* app) {
  app->add_option("--format", "Output format")->check(CLI::IsMember({"plain", "records"}));
  app->add_flag("-v,--verbose", "Print traces and skipped instances");
}

void add_set_params(CLI::App* app) {
  app->add_option("--set", "Set literal, e.g. \"0,1,3,7 mod 11\"");
  app->add_option("--h", "Number of summands");
  app->add_option("--r", "Per-element repetition cap");
  app->add_option("--p", "Prime modulus (alternative to 'mod p' in --set)");
  add_common(app);
}

template <typename T>
void read(const CLI::App* app, const std::string& name, std::optional<T>& into) {
  const auto* opt = app->get_option_no_throw(name);
  if (opt && opt->count() > 0) into = opt->as<T>();
}

template <typename T>
void read(const CLI::App* app, const std::string& name, T& into) {
  const auto* opt = app->get_option_no_throw(name);
  if (opt && opt->count() > 0) into = opt->as<T>();
}

CliConfig collect(const CLI::App* leaf, std::string command, std::string mode) {
  CliConfig cfg;
  cfg.command = std::move(command);
  cfg.mode = std::move(mode);
  read(leaf, "--set", cfg.set_literal);
  read(leaf, "--manifest", cfg.manifest_path);
  read(leaf, "--h", cfg.h);
  read(leaf, "--r", cfg.r);
  read(leaf, "--m", cfg.m);
  read(leaf, "--p", cfg.p);
  read(leaf, "--k", cfg.k);
  read(leaf, "--max-diameter", cfg.max_diameter);
  read(leaf, "--counts", cfg.counts);
  read(leaf, "--kind", cfg.bound_kind);
  read(leaf, "--jobs", cfg.jobs);
  read(leaf, "--cap", cfg.cap);
  if (const auto* all = leaf->get_option_no_throw("--all-subsets")) cfg.all_subsets = all->count() > 0;
  std::string format = "plain";
  read(leaf, "--format", format);
  cfg.format = format == "records" ? Format::kRecords : Format::kPlain;
  cfg.verbosity = static_cast<int>(leaf->count("--verbose"));
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized sumsets h^(r)A: computation, bounds, verification, scans"};
  app.name(args.empty() ? "sumset" : args.front());
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);

  auto* compute = app.add_subcommand("compute", "Compute h^(r)A");
  add_set_params(compute);

  auto* bound = app.add_subcommand("bound", "Evaluate a lower-bound formula");
  bound->add_option("--k", "Set size")->required();
  bound->add_option("--h", "Number of summands")->required();
  bound->add_option("--r", "Per-element repetition cap");
  bound->add_option("--p", "Prime modulus");
  bound->add_option("--kind", "Which bound (default direct)")
      ->check(CLI::IsMember({"direct", "sumset", "restricted", "cauchy-davenport", "erdos-heilbronn"}));
  add_common(bound);

  auto* verify = app.add_subcommand("verify", "Check a bound or identity on one instance");
  verify->require_subcommand(1, 1);
  for (const char* mode : {"direct", "lemma1", "complement", "inclusions"}) {
    auto* sub = verify->add_subcommand(mode);
    add_set_params(sub);
    if (std::string(mode) == "lemma1") sub->add_option("--m", "Summands per part (h = m*r)");
  }

  auto* decompose = app.add_subcommand("decompose", "Split an element of (mr)^(r)A into r parts of m^A");
  decompose->add_option("--set", "Set literal")->required();
  decompose->add_option("--counts", "Multiplicities r_1,...,r_k")->required();
  decompose->add_option("--r", "Repetition cap (number of parts)")->required();
  decompose->add_option("--p", "Prime modulus");
  add_common(decompose);

  auto* scan = app.add_subcommand("scan", "Exhaustive search for bound-attaining sets");
  scan->require_subcommand(1, 1);
  for (const char* mode : {"extremal", "inverse-eh"}) {
    auto* sub = scan->add_subcommand(mode);
    sub->add_option("--k", "Set size");
    sub->add_option("--h", "Number of summands");
    sub->add_option("--manifest", "Grid manifest file")->check(CLI::ExistingFile);
    sub->add_option("--jobs", "Worker threads (0: all cores)");
    sub->add_option("--cap", "Maximum candidates per scan");
    if (std::string(mode) == "extremal") {
      sub->add_option("--r", "Repetition cap");
      sub->add_option("--max-diameter", "Largest element of normalized sets");
    } else {
      sub->add_option("--p", "Prime modulus");
      sub->add_flag("--all-subsets", "Enumerate every k-subset, not only those containing 0");
    }
    add_common(sub);
  }

  // CLI11 consumes arguments from the back, without the program name.
  std::vector<std::string> rev;
  if (!args.empty()) rev.assign(args.rbegin(), args.rend() - 1);
  CliConfig cfg;
  try {
    app.parse(rev);
    const CLI::App* sub = app.get_subcommands().front();
    const CLI::App* leaf = sub->get_subcommands().empty() ? sub : sub->get_subcommands().front();
    cfg = collect(leaf, sub->get_name(), leaf == sub ? "" : leaf->get_name());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n' << "usage:\n" << app.help();
    return kDomainError;
  }

  try {
    return Dispatcher(cfg, out, err).dispatch();
  } catch (const std::exception& e) {
    const int code = exit_code(e);
    if (code < 0) throw;
    err << (code == kResourceCap ? "resource cap: " : code == kVerificationFailed ? "invariant violated: " : "error: ")
        << e.what() << '\n';
    return code;
  }
}

int exit_code(const BoundReport& rep) { return rep.violated() ? kVerificationFailed : kOk; }
int exit_code(const ComplementReport& rep) { return rep.holds() ? kOk : kVerificationFailed; }
int exit_code(const Lemma1Report& rep) { return rep.equal ? kOk : kVerificationFailed; }
int exit_code(const WitnessReport& rep) { return rep.failed() ? kVerificationFailed : kOk; }
int exit_code(const ScanReport& rep) { return rep.failed() ? kVerificationFailed : kOk; }

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ResourceCapExceeded*>(&e)) return kResourceCap;
  if (dynamic_cast<const InvariantViolation*>(&e)) return kVerificationFailed;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DomainError*>(&e)) return kDomainError;
  return -1;
}

}  // namespace sumset::cli
