#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/extend.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/instance.hpp"
#include "ringlab/report.hpp"

namespace ringlab::cli {

namespace {

struct VerifyOptions {
  std::vector<std::string> files;
  bool all = false;
  std::vector<std::string> checks;
  std::string report;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timings = false;
  bool json = false;
};

struct ExploreOptions {
  std::string ring;
  std::string base;
  std::string subring;
  std::vector<std::string> actions;
  bool list_intermediate = false;
  bool spec = false;
  bool max = false;
  bool conductor = false;
  bool critical = false;
  bool classify = false;
};

std::string set_text(const FiniteRing& T, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ",";
    out += T.label(e);
    first = false;
  });
  return out + "}";
}

// Greedy generators: repeatedly add the least element outside the span.
std::string generator_text(const Ideal& I) {
  const FiniteRing& T = I.ring.ring();
  std::vector<Elem> gens;
  Ideal span = zero_ideal(I.ring);
  I.members.for_each([&](Elem e) {
    if (span.contains(e)) return;
    gens.push_back(e);
    span = ideal_generated(I.ring, gens);
  });
  if (gens.empty()) gens.push_back(T.zero());
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + T.label(gens[i]);
  return out + ")";
}

// Ordered by least nonzero member, so (2) precedes (3) in zmod(12).
void print_ideals(std::ostream& out, const std::string& title, std::vector<Ideal> ideals) {
  auto key = [](const Ideal& I) {
    std::vector<Elem> m;
    I.members.for_each([&](Elem e) { m.push_back(e); });
    return m;
  };
  std::sort(ideals.begin(), ideals.end(), [&](const Ideal& a, const Ideal& b) { return key(a) < key(b); });
  out << title << ": " << ideals.size() << "\n";
  for (const auto& I : ideals) {
    out << "  " << generator_text(I) << "  " << set_text(I.ring.ring(), I.members) << "\n";
  }
}

std::string fixed_suffix(const FiniteContext& ctx) {
  if (ctx.G.is_trivial()) return "";
  if (!ctx.invariant) return " → fixed: undefined (R is not G-invariant)";
  return " → fixed: " + to_string(classify_extension(ctx.RG, ctx.TG).kind);
}

int cmd_classify(const std::string& file, const Limits& limits, std::ostream& out) {
  const Instance inst = load_instance_file(file);
  if (inst.setting() != Setting::Finite) {
    throw PreconditionError("classify needs a finite instance; " + inst.id + " is a funcfield instance");
  }
  const FiniteContext ctx = resolve_finite(inst, limits);
  const ExtensionReport base = classify_extension(ctx.R, ctx.whole, limits);
  out << to_string(base.kind) << fixed_suffix(ctx) << "\n";

  nlohmann::json j{{"instance", inst.id}, {"extension", to_json(base)}, {"invariant", ctx.invariant}};
  if (!ctx.G.is_trivial() && ctx.invariant) {
    j["fixed"] = to_json(classify_extension(ctx.RG, ctx.TG, limits));
  } else {
    j["fixed"] = nullptr;
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const VerifyOptions& opt, const Limits& limits, std::ostream& out) {
  if (!opt.all && opt.files.empty()) throw CLI::ValidationError("verify", "give instance files or --all");
  for (const auto& id : opt.checks) {
    if (!is_theorem_id(id)) throw PreconditionError("unknown theorem id '" + id + "'");
  }
  std::vector<Instance> instances;
  if (opt.all) {
    for (auto inst : catalog()) {
      if (!opt.checks.empty()) {
        inst.checks.clear();
        for (const auto& id : opt.checks) {
          if (supports(id, inst.setting())) inst.checks.push_back(id);
        }
        if (inst.checks.empty()) continue;
      }
      instances.push_back(std::move(inst));
    }
  }
  for (const auto& f : opt.files) {
    Instance inst = load_instance_file(f);
    if (!opt.checks.empty()) inst.checks = opt.checks;
    // Surface incompatible pairings before any work starts.
    for (const auto& id : inst.checks) {
      if (!supports(id, inst.setting())) {
        throw PreconditionError("theorem " + id + " does not apply to the " + to_string(inst.setting()) +
                                " instance " + inst.id);
      }
    }
    instances.push_back(std::move(inst));
  }

  const auto verdicts = verify_all(instances, opt.seed, opt.jobs, limits);
  const nlohmann::json report = report_json(verdicts, opt.seed, opt.timings);
  if (!opt.report.empty()) {
    std::ofstream f(opt.report);
    if (!f) throw PreconditionError("cannot write report to " + opt.report);
    f << report.dump(2) << "\n";
  }
  if (opt.json) {
    out << report.dump(2) << "\n";
  } else {
    out << summary_table(verdicts);
  }
  const bool failed =
      std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::Fail; });
  return failed ? kFailures : kOk;
}

SubringHandle explore_subring(const RingPtr& T, const ExploreOptions& opt, const Limits& limits) {
  if (!opt.base.empty() && !opt.subring.empty()) throw CLI::ValidationError("explore", "--base and --subring conflict");
  if (!opt.base.empty()) {
    const RingPtr B = build_ring(opt.base, limits);
    const auto emb = find_embedding(*B, *T);
    if (!emb) throw PreconditionError(B->construction() + " does not embed in " + T->construction());
    return subring_closure(T, *emb);
  }
  if (!opt.subring.empty()) {
    const Expr e = Expr::parse(opt.subring);
    if (e.kind == Expr::Kind::List) return generated_subring(T, e.items);
    return named_subring(T, e);
  }
  return named_subring(T, Expr::parse("prime"));
}

int cmd_explore(const ExploreOptions& opt, const Limits& limits, std::ostream& out) {
  const RingPtr T = build_ring(opt.ring, limits);
  const SubringHandle whole = SubringHandle::whole(T);
  const SubringHandle R = explore_subring(T, opt, limits);
  out << "T = " << T->construction() << ", |T| = " << T->order() << ", char " << T->characteristic() << "\n";
  out << "R: |R| = " << R.size() << (R.size() <= 32 ? " " + set_text(*T, R.members()) : "") << "\n";

  if (opt.list_intermediate) {
    const auto rings = intermediate_rings(R, whole, limits);
    out << "intermediate rings: " << rings.size() << "\n";
    for (const auto& A : rings) {
      out << "  |A| = " << A.size();
      if (A.size() <= 16) out << "  " << set_text(*T, A.members());
      out << "\n";
    }
  }
  if (opt.spec) print_ideals(out, "Spec(T)", spec(whole, limits));
  if (opt.max) print_ideals(out, "Max(T)", max_ideals(whole, limits));
  if (opt.conductor) {
    const Ideal C = conductor(R, whole);
    out << "conductor (R :_R T) = " << set_text(*T, C.members) << "\n";
  }
  if (opt.critical) {
    const auto P = critical_ideal(R, whole);
    out << "critical ideal: " << (P ? set_text(*T, P->members) : std::string("none")) << "\n";
  }
  if (opt.classify || !opt.actions.empty()) {
    std::vector<Automorphism> gens;
    for (const auto& a : opt.actions) gens.push_back(parse_automorphism(T, Expr::parse(a)));
    const ActionGroup G = close_group(T, std::move(gens), limits);
    out << "R ⊆ T: " << to_string(classify_extension(R, whole, limits).kind) << "\n";
    if (!G.is_trivial()) {
      const SubringHandle TG = fixed_subring(whole, G);
      out << "|G| = " << G.order() << ", |T^G| = " << TG.size() << "\n";
      if (is_invariant_subring(R, G)) {
        const SubringHandle RG = fixed_subring(R, G);
        out << "|R^G| = " << RG.size() << ", R^G ⊆ T^G: " << to_string(classify_extension(RG, TG, limits).kind)
            << "\n";
      } else {
        out << "R is not G-invariant\n";
      }
    }
  }
  return kOk;
}

int cmd_catalog(const std::string& dir, std::ostream& out) {
  for (const auto& inst : catalog()) {
    out << inst.id << "  " << inst.ring;
    if (inst.expected) out << "  " << *inst.expected;
    out << "\n";
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      std::ofstream f(std::filesystem::path(dir) / (inst.id + ".json"));
      if (!f) throw PreconditionError("cannot write to " + dir);
      f << to_json(inst).dump(2) << "\n";
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ring extensions, fixed rings and invariance checks", "ringlab"};
  app.require_subcommand(1);
  std::size_t max_order = Limits{}.max_ring_order;
  app.add_option("--max-order", max_order, "Largest ring order to tabulate")->check(CLI::PositiveNumber);

  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "Classify R ⊆ T (and R^G ⊆ T^G) for an instance file");
  classify->add_option("file", classify_file, "Instance JSON")->required();

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem checkers");
  verify_cmd->add_option("files", vopt.files, "Instance JSON files");
  verify_cmd->add_flag("--all", vopt.all, "Run the shipped catalog");
  verify_cmd->add_option("--check", vopt.checks, "Restrict to these theorem ids (repeat or comma-separate)")
      ->delimiter(',')
      ->allow_extra_args(false);
  verify_cmd->add_option("--report", vopt.report, "Write the JSON report here");
  verify_cmd->add_option("--seed", vopt.seed, "Sampling seed");
  verify_cmd->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timings", vopt.timings, "Include runtimes in the report");
  verify_cmd->add_flag("--json", vopt.json, "Print the report instead of the table");

  ExploreOptions eopt;
  auto* explore = app.add_subcommand("explore", "Inspect a ring and a subring");
  explore->add_option("--ring", eopt.ring, "Construction expression for T")->required();
  explore->add_option("--base", eopt.base, "Ring embedded in T as R");
  explore->add_option("--subring", eopt.subring, "Named subring or a list of generator labels");
  explore->add_option("--action", eopt.actions, "Automorphism generators")->allow_extra_args(false);
  explore->add_flag("--list-intermediate", eopt.list_intermediate, "Rings between R and T");
  explore->add_flag("--spec", eopt.spec, "Prime ideals of T");
  explore->add_flag("--max", eopt.max, "Maximal ideals of T");
  explore->add_flag("--conductor", eopt.conductor, "(R :_R T)");
  explore->add_flag("--critical", eopt.critical, "Critical ideal of R ⊆ T");
  explore->add_flag("--classify", eopt.classify, "Classify R ⊆ T");

  std::string catalog_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "List the shipped instances");
  catalog_cmd->add_option("--write", catalog_dir, "Also write each instance as JSON into this directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Limits limits;
  limits.max_ring_order = max_order;
  try {
    if (*classify) return cmd_classify(classify_file, limits, out);
    if (*verify_cmd) return cmd_verify(vopt, limits, out);
    if (*explore) return cmd_explore(eopt, limits, out);
    if (*catalog_cmd) return cmd_catalog(catalog_dir, out);
  } catch (const CapExceeded& e) {
    err << "ringlab: cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "ringlab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "ringlab: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ringlab::cli
