#include "oafd/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace oafd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) fail(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Rational number_field(const json& object, const char* key, const std::string& where) {
  const json& value = field(object, key, where);
  const std::string path = where + "." + key;
  if (value.is_number_integer()) return Rational(mpz_class(value.dump(), 10));
  if (value.is_number()) fail(path, "floating-point numbers are not allowed; use \"p/q\"");
  if (!value.is_string()) fail(path, "expected an integer or a fraction string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::string string_field(const json& object, const char* key, const std::string& where) {
  const json& value = field(object, key, where);
  if (!value.is_string()) fail(where + "." + key, "expected a string");
  return value.get<std::string>();
}

const json& array_field(const json& root, const char* key) {
  const json& value = field(root, key, "instance");
  if (!value.is_array()) fail(std::string("instance.") + key, "expected an array");
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!root.is_object()) fail("instance", "expected a JSON object");
  if (auto it = root.find("format"); it != root.end() && *it != "oafd-instance") {
    fail("instance.format", "expected \"oafd-instance\"");
  }
  const json& version = field(root, "version", "instance");
  if (!version.is_number_integer() || version.get<long>() != kInstanceFormatVersion) {
    fail("instance.version", "unsupported format version (expected " +
                                 std::to_string(kInstanceFormatVersion) + ")");
  }

  Instance instance;
  const json& agents = array_field(root, "agents");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    instance.add_agent(string_field(agents[i], "id", where),
                       number_field(agents[i], "endowment", where));
  }
  const json& objects = array_field(root, "objects");
  for (std::size_t j = 0; j < objects.size(); ++j) {
    const std::string where = "objects[" + std::to_string(j) + "]";
    instance.add_object(string_field(objects[j], "id", where),
                        number_field(objects[j], "supply", where));
  }
  if (root.contains("demands")) {
    const json& demands = array_field(root, "demands");
    std::set<std::pair<AgentIndex, ObjectIndex>> seen;
    for (std::size_t i = 0; i < demands.size(); ++i) {
      const std::string where = "demands[" + std::to_string(i) + "]";
      const std::string agent = string_field(demands[i], "agent", where);
      const std::string object = string_field(demands[i], "object", where);
      const auto a = instance.find_agent(agent);
      if (!a) fail(where + ".agent", "unknown agent id '" + agent + "'");
      const auto b = instance.find_object(object);
      if (!b) fail(where + ".object", "unknown object id '" + object + "'");
      if (!seen.emplace(*a, *b).second) {
        fail(where, "duplicate demand for ('" + agent + "', '" + object + "')");
      }
      instance.set_demand(*a, *b, number_field(demands[i], "demand", where));
    }
  }
  return instance;
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  using ordered = nlohmann::ordered_json;
  ordered root = ordered::object();
  root["format"] = "oafd-instance";
  root["version"] = kInstanceFormatVersion;
  ordered agents = ordered::array();
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    agents.push_back({{"id", instance.agent_id(a)}, {"endowment", to_string(instance.endowment(a))}});
  }
  ordered objects = ordered::array();
  for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
    objects.push_back({{"id", instance.object_id(b)}, {"supply", to_string(instance.supply(b))}});
  }
  ordered demands = ordered::array();
  for (AgentIndex a = 0; a < instance.num_agents(); ++a) {
    for (ObjectIndex b = 0; b < instance.num_objects(); ++b) {
      if (sgn(instance.demand(a, b)) == 0) continue;
      demands.push_back({{"agent", instance.agent_id(a)},
                         {"object", instance.object_id(b)},
                         {"demand", to_string(instance.demand(a, b))}});
    }
  }
  root["agents"] = std::move(agents);
  root["objects"] = std::move(objects);
  root["demands"] = std::move(demands);
  return root.dump(2) + "\n";
}

void write_instance_file(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << serialize_instance(instance);
}

}  // namespace oafd
