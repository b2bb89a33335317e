#include "oafd_cli/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "oafd/errors.hpp"
#include "oafd/properties.hpp"

namespace oafd::cli {

namespace {

using nlohmann::ordered_json;

Rational rational_at(const ordered_json& node, const char* key) {
  if (!node.contains(key) || !node.at(key).is_string()) {
    throw InputError(std::string("report: missing fraction field '") + key + "'");
  }
  try {
    return parse_rational(node.at(key).get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("report: field '") + key + "': " + e.what());
  }
}

}  // namespace

AllocationReport make_allocation_report(const Instance& instance, const LexicographicResult& run) {
  AllocationReport report;
  const SiResult si = si_ratio(instance, run.allocation);
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) report.objects.push_back(instance.object_id(b));
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    AgentRow row;
    row.id = instance.agent_id(a);
    row.endowment = instance.endowment(a);
    row.utility = utility(run.allocation, instance, a);
    row.normalized = row.utility / row.endowment;
    row.breakpoint = run.profile.agent_breakpoint[a];
    row.tier = run.profile.agent_tier[a] + 1;
    row.si_share = si.rows[a].share;
    report.agents.push_back(std::move(row));
    std::vector<Rational> amounts(instance.num_objects());
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) amounts[b] = run.allocation(a, b);
    report.amounts.push_back(std::move(amounts));
  }
  report.breakpoints = run.profile.lambdas;
  report.si_ratio = si.ratio;
  report.flow_value = run.flow_value;
  const bool frugal = is_frugal(instance, run.allocation).pass;
  report.properties = {
      {"frugal", frugal},
      {"nw", frugal && is_nw(instance, run.allocation).pass},
      {"ef", envy_report(instance, run.allocation).pass},
      {"si_half", si_report(instance, run.allocation, make_rational(1, 2)).pass},
      {"structure", structure_check(instance, run.allocation, run.profile).pass},
  };
  return report;
}

std::string to_json(const AllocationReport& report) {
  ordered_json root = ordered_json::object();
  root["format"] = "oafd-allocation-report";
  root["version"] = 1;
  root["objects"] = report.objects;
  ordered_json agents = ordered_json::array();
  for (const auto& row : report.agents) {
    agents.push_back({{"id", row.id},
                      {"endowment", to_string(row.endowment)},
                      {"utility", to_string(row.utility)},
                      {"normalized_utility", to_string(row.normalized)},
                      {"breakpoint", to_string(row.breakpoint)},
                      {"tier", row.tier},
                      {"si_share", to_string(row.si_share)}});
  }
  root["agents"] = std::move(agents);
  ordered_json allocation = ordered_json::array();
  for (std::size_t a = 0; a < report.amounts.size(); ++a) {
    for (std::size_t b = 0; b < report.objects.size(); ++b) {
      if (sgn(report.amounts[a][b]) == 0) continue;
      allocation.push_back({{"agent", report.agents[a].id},
                            {"object", report.objects[b]},
                            {"amount", to_string(report.amounts[a][b])}});
    }
  }
  root["allocation"] = std::move(allocation);
  ordered_json lambdas = ordered_json::array();
  for (const auto& l : report.breakpoints) lambdas.push_back(to_string(l));
  root["breakpoints"] = std::move(lambdas);
  root["si_ratio"] = report.si_ratio ? to_string(*report.si_ratio) : "unconstrained";
  root["flow_value"] = to_string(report.flow_value);
  ordered_json properties = ordered_json::object();
  for (const auto& p : report.properties) properties[p.name] = p.pass;
  root["properties"] = std::move(properties);
  return root.dump(2) + "\n";
}

AllocationReport parse_allocation_report(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("report: malformed JSON: ") + e.what());
  }
  AllocationReport report;
  try {
    report.objects = root.at("objects").get<std::vector<std::string>>();
    for (const auto& node : root.at("agents")) {
      AgentRow row;
      row.id = node.at("id").get<std::string>();
      row.endowment = rational_at(node, "endowment");
      row.utility = rational_at(node, "utility");
      row.normalized = rational_at(node, "normalized_utility");
      row.breakpoint = rational_at(node, "breakpoint");
      row.tier = node.at("tier").get<std::size_t>();
      row.si_share = rational_at(node, "si_share");
      report.agents.push_back(std::move(row));
    }
    report.amounts.assign(report.agents.size(), std::vector<Rational>(report.objects.size()));
    for (const auto& node : root.at("allocation")) {
      const auto agent = node.at("agent").get<std::string>();
      const auto object = node.at("object").get<std::string>();
      std::size_t a = 0;
      while (a < report.agents.size() && report.agents[a].id != agent) ++a;
      std::size_t b = 0;
      while (b < report.objects.size() && report.objects[b] != object) ++b;
      if (a == report.agents.size() || b == report.objects.size()) {
        throw InputError("report: allocation entry names an unknown agent or object");
      }
      report.amounts[a][b] = rational_at(node, "amount");
    }
    for (const auto& l : root.at("breakpoints")) report.breakpoints.push_back(parse_rational(l.get<std::string>()));
    const auto si = root.at("si_ratio").get<std::string>();
    if (si != "unconstrained") report.si_ratio = parse_rational(si);
    report.flow_value = rational_at(root, "flow_value");
    for (const auto& [name, pass] : root.at("properties").items()) {
      report.properties.push_back({name, pass.get<bool>()});
    }
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  return report;
}

std::string to_table(const AllocationReport& report) {
  std::ostringstream out;
  out << "breakpoints:";
  for (const auto& l : report.breakpoints) out << ' ' << to_string(l);
  out << "\n\n";
  out << std::left << std::setw(12) << "agent" << std::setw(12) << "endowment" << std::setw(12)
      << "utility" << std::setw(12) << "u/e" << std::setw(6) << "tier" << std::setw(12) << "si share"
      << '\n';
  for (const auto& row : report.agents) {
    out << std::setw(12) << row.id << std::setw(12) << to_string(row.endowment) << std::setw(12)
        << to_string(row.utility) << std::setw(12) << to_string(row.normalized) << std::setw(6)
        << row.tier << std::setw(12) << to_string(row.si_share) << '\n';
  }
  out << "\nallocation:\n" << std::setw(12) << "";
  for (const auto& id : report.objects) out << std::setw(10) << id;
  out << '\n';
  for (std::size_t a = 0; a < report.agents.size(); ++a) {
    out << std::setw(12) << report.agents[a].id;
    for (const auto& x : report.amounts[a]) out << std::setw(10) << to_string(x);
    out << '\n';
  }
  out << "\nsi ratio: " << (report.si_ratio ? to_string(*report.si_ratio) : "unconstrained") << '\n';
  out << "flow value: " << to_string(report.flow_value) << '\n';
  out << "properties:";
  for (const auto& p : report.properties) out << ' ' << p.name << '=' << (p.pass ? "pass" : "FAIL");
  out << '\n';
  return out.str();
}

}  // namespace oafd::cli
