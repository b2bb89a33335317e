#include "oafd_cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oafd/errors.hpp"
#include "oafd/io.hpp"
#include "oafd/leximin.hpp"
#include "oafd/oracle.hpp"
#include "oafd/properties.hpp"
#include "oafd_cli/report.hpp"

namespace oafd::cli {

namespace {

using nlohmann::ordered_json;

// Maps exceptions onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

Instance load(const std::string& path) {
  Instance instance = read_instance_file(path);
  try {
    require_valid(instance);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  return instance;
}

ordered_json report_json(const PropertyReport& r) {
  ordered_json node = {{"property", r.property}, {"pass", r.pass}};
  if (!r.note.empty()) node["note"] = r.note;
  if (r.witness) {
    node["witness"] = {{"detail", r.witness->detail},
                       {"lhs", to_string(r.witness->lhs)},
                       {"relation", relation_symbol(r.witness->relation)},
                       {"rhs", to_string(r.witness->rhs)}};
  }
  return node;
}

}  // namespace

const std::vector<std::string>& audit_property_names() {
  static const std::vector<std::string> names = {"frugal", "nw",        "ef",          "si",
                                                 "lorenz", "structure", "substructure"};
  return names;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("OAFD_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("OAFD_SEED must be a nonnegative integer");
    }
  }
  return 1;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      grid.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--grid: ") + e.what());
    }
    if (sgn(grid.back()) < 0) throw InputError("--grid: multipliers must be nonnegative");
  }
  if (grid.empty()) throw InputError("--grid: at least one multiplier required");
  return grid;
}

int cmd_allocate(const AllocateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = load(options.path);
    const auto run = lexicographic_allocation(instance);
    const AllocationReport report = make_allocation_report(instance, run);
    out << (options.format == OutputFormat::kJson ? to_json(report) : to_table(report));
    return kExitOk;
  });
}

int cmd_audit(const AuditOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> selected = options.properties;
    if (selected.empty()) selected = audit_property_names();
    for (const auto& p : selected) {
      const auto& known = audit_property_names();
      if (std::find(known.begin(), known.end(), p) == known.end()) {
        throw InputError("unknown property '" + p + "'");
      }
    }
    const Instance instance = load(options.path);
    auto run = lexicographic_allocation(instance);
    if (options.tamper) options.tamper(instance, run.allocation);
    const Allocation& mu = run.allocation;

    std::vector<PropertyReport> reports;
    for (const auto& p : selected) {
      if (p == "frugal") {
        reports.push_back(is_frugal(instance, mu));
      } else if (p == "nw") {
        if (is_frugal(instance, mu).pass) {
          reports.push_back(is_nw(instance, mu));
        } else {
          PropertyReport r = PropertyReport::failed(
              "nw", {"allocation is not frugal; nw is defined on frugal allocations", {}, {},
                     Rational(0), Rational(0), Relation::kEqual});
          r.witness->rhs = 1;
          reports.push_back(std::move(r));
        }
      } else if (p == "ef") {
        reports.push_back(envy_report(instance, mu));
      } else if (p == "si") {
        reports.push_back(si_report(instance, mu, make_rational(1, 2)));
      } else if (p == "lorenz") {
        if (options.samples == 0) {
          reports.push_back(PropertyReport::passed("lorenz", "skipped: --samples 0"));
          continue;
        }
        // Endowment-weighted curves; identical to the plain prefix-sum test
        // when all endowments are equal.
        const UtilityVector mine = utility_vector(instance, mu);
        PropertyReport r = PropertyReport::passed(
            "lorenz", std::to_string(options.samples) + " samples, seed " +
                          std::to_string(options.seed) + ", endowment-weighted");
        for (std::size_t i = 0; i < options.samples; ++i) {
          const Allocation sample = random_frugal_allocation(instance, options.seed + i);
          const auto gap = weighted_lorenz_gap(instance, mine, utility_vector(instance, sample));
          if (gap) {
            r = PropertyReport::failed(
                "lorenz", {"sample " + std::to_string(i) + " (seed " +
                               std::to_string(options.seed + i) +
                               ") is not Lorenz dominated at endowment mass " + to_string(gap->mass),
                           {}, {}, gap->v_area, gap->w_area, Relation::kGreaterEqual});
            break;
          }
        }
        reports.push_back(std::move(r));
      } else if (p == "structure") {
        reports.push_back(structure_check(instance, mu, run.profile));
      } else if (p == "substructure") {
        if (instance.num_agents() > 12) {
          reports.push_back(PropertyReport::passed("substructure", "skipped: more than 12 agents"));
        } else {
          reports.push_back(check_substructure(instance, options.substructure_trials, options.seed));
        }
      }
    }

    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    if (options.format == OutputFormat::kJson) {
      ordered_json root = {{"format", "oafd-audit-report"}, {"version", 1}, {"pass", all_pass}};
      ordered_json items = ordered_json::array();
      for (const auto& r : reports) items.push_back(report_json(r));
      root["properties"] = std::move(items);
      out << root.dump(2) << '\n';
    } else {
      for (const auto& r : reports) out << describe(r) << '\n';
      out << (all_pass ? "audit: all selected properties hold\n" : "audit: FAILED\n");
    }
    return all_pass ? kExitOk : kExitFailure;
  });
}

int cmd_manipulate(const ManipulateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = load(options.path);
    const SearchResult result = search_manipulation(instance, options.search);
    const char* mechanism = options.search.mechanism == MechanismKind::kLeximin ? "lmmf" : "mmf-si";
    if (options.format == OutputFormat::kJson) {
      ordered_json root = {{"format", "oafd-manipulation-report"},
                           {"version", 1},
                           {"mechanism", mechanism},
                           {"coalition_size", options.search.coalition_size},
                           {"seed", options.seed},
                           {"coalitions", result.coalitions},
                           {"runs", result.runs},
                           {"skipped", result.skipped},
                           {"space_size", result.space_size},
                           {"complete", result.complete},
                           {"max_changed_entries_covered", result.max_changed_entries}};
      if (result.counterexample) {
        ordered_json members = ordered_json::array();
        const auto& ce = *result.counterexample;
        for (std::size_t i = 0; i < ce.members.size(); ++i) {
          ordered_json told = ordered_json::array();
          for (const auto& d : ce.reported_demands[i]) told.push_back(to_string(d));
          members.push_back({{"agent", instance.agent_id(ce.members[i].agent)},
                             {"reported_demands", std::move(told)},
                             {"truthful_utility", to_string(ce.members[i].truthful_utility)},
                             {"misreport_utility", to_string(ce.members[i].misreport_utility)}});
        }
        root["counterexample"] = std::move(members);
      } else {
        root["counterexample"] = nullptr;
      }
      out << root.dump(2) << '\n';
    } else {
      out << "mechanism " << mechanism << ", coalition size " << options.search.coalition_size
          << ", seed " << options.seed << '\n'
          << "coalitions: " << result.coalitions << ", misreports evaluated: " << result.runs
          << " of " << result.space_size << ", skipped: " << result.skipped << '\n'
          << "coverage: "
          << (result.complete ? std::string("complete grid")
                              : "partial; every misreport altering at most " +
                                    std::to_string(result.max_changed_entries) +
                                    " demand entries was evaluated")
          << '\n';
      if (result.counterexample) {
        out << "COUNTEREXAMPLE: " << describe(instance, *result.counterexample);
      } else {
        out << "no counterexample found (finite grid: evidence, not proof)\n";
      }
    }
    return result.counterexample ? kExitFailure : kExitOk;
  });
}

Instance generate_instance(const GenerateOptions& options) {
  if (options.family == "si-limit") return si_limit_instance(options.n);
  if (options.family == "mmf-si-manipulation") return mmf_si_manipulation_instance();
  if (options.family == "rounds") return rounds_instance(options.n);
  if (options.family == "random") return random_instance(options.random, options.seed);
  throw InputError("unknown family '" + options.family + "' (si-limit, mmf-si-manipulation, rounds, random)");
}

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = generate_instance(options);
    if (options.out_path.empty()) {
      out << serialize_instance(instance);
    } else {
      write_instance_file(options.out_path, instance);
    }
    return kExitOk;
  });
}

int cmd_reproduce(const ReproduceOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.family == "si-limit") {
      const auto report = reproduce_si_limit(options.n);
      out << describe(report) << '\n';
      return report.matches ? kExitOk : kExitFailure;
    }
    if (options.family == "mmf-si-manipulation") {
      const auto report = reproduce_mmf_si_manipulation();
      out << describe(report) << '\n';
      const bool as_expected = report.mmf_si_manipulable && !report.leximin_manipulable;
      return as_expected ? kExitOk : kExitFailure;
    }
    throw InputError("unknown family '" + options.family + "' (si-limit, mmf-si-manipulation)");
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact leximin (lexicographic max-min fair) allocation with fractional demands"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 property failure or counterexample, 2 input error, 3 internal "
      "error.\nEnvironment: OAFD_SEED sets the default --seed.");

  const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::kTable},
                                                    {"json", OutputFormat::kJson}};
  std::uint64_t seed = 1;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
           "--seed", [&](const std::uint64_t& v) { seed = v; seed_given = true; },
           "Random seed (default: $OAFD_SEED or 1)");
  };

  AllocateOptions allocate;
  auto* allocate_cmd = app.add_subcommand("allocate", "Compute the leximin allocation of an instance");
  allocate_cmd->add_option("instance", allocate.path, "Instance file")->required();
  allocate_cmd->add_option("--output", allocate.format, "Output format: table or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  AuditOptions audit;
  std::string audit_list;
  auto* audit_cmd = app.add_subcommand("audit", "Audit the allocation against fairness properties");
  audit_cmd->add_option("instance", audit.path, "Instance file")->required();
  audit_cmd->add_option("--properties", audit_list,
                        "Comma-separated subset of frugal,nw,ef,si,lorenz,structure,substructure");
  audit_cmd->add_option("--samples", audit.samples, "Random frugal allocations for lorenz (0 skips)");
  audit_cmd->add_option("--trials", audit.substructure_trials, "Random subsets for substructure");
  audit_cmd->add_option("--output", audit.format, "Output format: table or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  add_seed(audit_cmd);

  ManipulateOptions manipulate;
  std::string grid_text = "0,1/2,1,2";
  std::string mechanism = "lmmf";
  std::string resolution_text = "1/4";
  auto* manipulate_cmd =
      app.add_subcommand("manipulate", "Search for profitable coalition misreports");
  manipulate_cmd->add_option("instance", manipulate.path, "Instance file")->required();
  manipulate_cmd->add_option("--coalition", manipulate.search.coalition_size, "Coalition size");
  manipulate_cmd->add_option("--grid", grid_text, "Demand multipliers, e.g. \"0,1/2,1,2\"");
  manipulate_cmd->add_option("--budget", manipulate.search.budget, "Maximum mechanism runs");
  manipulate_cmd->add_option("--mechanism", mechanism, "lmmf or mmf-si")
      ->check(CLI::IsMember({"lmmf", "mmf-si"}));
  manipulate_cmd->add_option("--resolution", resolution_text, "Grid step of the mmf-si search");
  manipulate_cmd->add_option("--output", manipulate.format, "Output format: table or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  add_seed(manipulate_cmd);

  GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write an instance from a named family");
  generate_cmd->add_option("family", generate.family, "si-limit, mmf-si-manipulation, rounds or random")
      ->required()
      ->check(CLI::IsMember({"si-limit", "mmf-si-manipulation", "rounds", "random"}));
  generate_cmd->add_option("--n", generate.n, "Family size parameter (si-limit, rounds)");
  generate_cmd->add_option("--agents", generate.random.agents, "random: number of agents");
  generate_cmd->add_option("--objects", generate.random.objects, "random: number of objects");
  generate_cmd->add_option("--density", generate.random.density, "random: demand density in [0,1]");
  generate_cmd->add_option("--max-denominator", generate.random.max_denominator,
                           "random: largest denominator");
  generate_cmd->add_option("--max-value", generate.random.max_value, "random: largest demand");
  generate_cmd->add_flag("--equal-endowments", generate.random.equal_endowments,
                         "random: give every agent endowment 1");
  generate_cmd->add_option("-o,--out", generate.out_path, "Output path (default stdout)");
  add_seed(generate_cmd);

  ReproduceOptions reproduce;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "Reproduce the impossibility constructions");
  reproduce_cmd->add_option("family", reproduce.family, "si-limit or mmf-si-manipulation")
      ->required()
      ->check(CLI::IsMember({"si-limit", "mmf-si-manipulation"}));
  reproduce_cmd->add_option("--n", reproduce.n, "si-limit size parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  return guarded(err, [&]() -> int {
    const std::uint64_t effective_seed = seed_given ? seed : default_seed();
    if (*allocate_cmd) return cmd_allocate(allocate, out, err);
    if (*audit_cmd) {
      audit.seed = effective_seed;
      if (!audit_list.empty()) {
        std::stringstream in(audit_list);
        std::string item;
        while (std::getline(in, item, ',')) audit.properties.push_back(item);
      }
      return cmd_audit(audit, out, err);
    }
    if (*manipulate_cmd) {
      manipulate.seed = effective_seed;
      manipulate.search.grid = parse_grid(grid_text);
      manipulate.search.mechanism =
          mechanism == "lmmf" ? MechanismKind::kLeximin : MechanismKind::kMmfSi;
      try {
        manipulate.search.mmf_si_resolution = parse_rational(resolution_text);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--resolution: ") + e.what());
      }
      return cmd_manipulate(manipulate, out, err);
    }
    if (*generate_cmd) {
      generate.seed = effective_seed;
      return cmd_generate(generate, out, err);
    }
    if (*reproduce_cmd) return cmd_reproduce(reproduce, out, err);
    return kExitInput;
  });
}

}  // namespace oafd::cli
