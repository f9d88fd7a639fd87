#include "stir/witness.hpp"

#include "json.hpp"

#include <sstream>

namespace stir {

namespace {

using Json = nlohmann::ordered_json;

std::string literal_str(const Literal& l) { return l.str(); }

std::optional<Literal> literal_from_str(const std::string& s) {
  constexpr std::string_view kNot = "not ";
  if (s.rfind(kNot, 0) == 0) {
    std::string name = s.substr(kNot.size());
    if (name.empty()) return std::nullopt;
    return Literal{std::move(name), false};
  }
  if (s.empty()) return std::nullopt;
  return Literal{s, true};
}

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ", ";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::string emit_witness_text(const Witness& w) {
  std::ostringstream os;
  for (const std::string& c : w.concepts) {
    const auto& [b, e] = w.endpoints.at(c);
    os << c << " = (" << rat_str(b) << ", " << rat_str(e) << ")\n";
  }
  for (const std::string& c : w.concepts) {
    std::vector<std::string> lits;
    for (const Literal& l : w.literals.at(c)) lits.push_back(literal_str(l));
    os << "literals " << c << " = " << braces(lits) << "\n";
  }
  for (const WitnessClass& cls : w.classes)
    os << "class " << cls.rep << " = " << braces(cls.members) << "\n";
  for (const WitnessScenarioAtom& s : w.scenario) {
    os << "scenario " << s.atom << "(";
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
      if (i != 0) os << ", ";
      os << s.vars[i];
    }
    os << ")\n";
  }
  for (const WitnessPartition& p : w.partitions)
    os << "partition " << p.first << "/" << p.second << " = "
       << partition_name(p.relation) << "\n";
  for (const std::string& c : w.concepts)
    os << "disjunct " << c << " = " << w.disjuncts.at(c) << "\n";
  return os.str();
}

std::string emit_witness_json(const Witness& w) {
  Json j;
  j["domain"] = w.domain;

  Json endpoints = Json::object();
  for (const std::string& c : w.concepts) {
    const auto& [b, e] = w.endpoints.at(c);
    endpoints[c] = Json::array({rat_str(b), rat_str(e)});
  }
  j["endpoints"] = std::move(endpoints);

  Json literals = Json::object();
  for (const std::string& c : w.concepts) {
    Json arr = Json::array();
    for (const Literal& l : w.literals.at(c)) arr.push_back(literal_str(l));
    literals[c] = std::move(arr);
  }
  j["literals"] = std::move(literals);

  Json classes = Json::object();
  for (const WitnessClass& cls : w.classes) classes[cls.rep] = cls.members;
  Json atoms = Json::array();
  for (const WitnessScenarioAtom& s : w.scenario)
    atoms.push_back(Json{{"vars", s.vars}, {"atom", s.atom}});
  j["scenario"] = Json{{"classes", std::move(classes)}, {"atoms", std::move(atoms)}};

  Json disjuncts = Json::object();
  for (const std::string& c : w.concepts) disjuncts[c] = w.disjuncts.at(c);
  j["disjuncts"] = std::move(disjuncts);

  Json partitions = Json::array();
  for (const WitnessPartition& p : w.partitions)
    partitions.push_back(Json{{"pair", Json::array({p.first, p.second})},
                              {"relation", partition_name(p.relation)}});
  j["partitions"] = std::move(partitions);

  return j.dump(2) + "\n";
}

std::optional<Witness> parse_witness_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  for (const char* key : {"domain", "endpoints", "literals", "scenario",
                          "disjuncts", "partitions"})
    if (!j.contains(key)) return std::nullopt;

  Witness w;
  if (!j["domain"].is_string()) return std::nullopt;
  w.domain = j["domain"].get<std::string>();

  const Json& endpoints = j["endpoints"];
  if (!endpoints.is_object()) return std::nullopt;
  for (const auto& [name, val] : endpoints.items()) {
    if (!val.is_array() || val.size() != 2 || !val[0].is_string() ||
        !val[1].is_string())
      return std::nullopt;
    std::optional<Rat> b = parse_rat(val[0].get<std::string>());
    std::optional<Rat> e = parse_rat(val[1].get<std::string>());
    if (!b || !e) return std::nullopt;
    w.concepts.push_back(name);
    w.endpoints[name] = {*b, *e};
  }

  const Json& literals = j["literals"];
  if (!literals.is_object()) return std::nullopt;
  for (const auto& [name, arr] : literals.items()) {
    if (!arr.is_array()) return std::nullopt;
    std::vector<Literal>& out = w.literals[name];
    for (const Json& item : arr) {
      if (!item.is_string()) return std::nullopt;
      std::optional<Literal> l = literal_from_str(item.get<std::string>());
      if (!l) return std::nullopt;
      out.push_back(std::move(*l));
    }
  }

  const Json& scenario = j["scenario"];
  if (!scenario.is_object() || !scenario.contains("classes") ||
      !scenario.contains("atoms"))
    return std::nullopt;
  if (!scenario["classes"].is_object() || !scenario["atoms"].is_array())
    return std::nullopt;
  for (const auto& [rep, members] : scenario["classes"].items()) {
    if (!members.is_array()) return std::nullopt;
    WitnessClass cls;
    cls.rep = rep;
    for (const Json& m : members) {
      if (!m.is_string()) return std::nullopt;
      cls.members.push_back(m.get<std::string>());
    }
    w.classes.push_back(std::move(cls));
  }
  for (const Json& item : scenario["atoms"]) {
    if (!item.is_object() || !item.contains("vars") || !item.contains("atom"))
      return std::nullopt;
    if (!item["vars"].is_array() || !item["atom"].is_string()) return std::nullopt;
    WitnessScenarioAtom s;
    for (const Json& v : item["vars"]) {
      if (!v.is_string()) return std::nullopt;
      s.vars.push_back(v.get<std::string>());
    }
    s.atom = item["atom"].get<std::string>();
    w.scenario.push_back(std::move(s));
  }

  const Json& disjuncts = j["disjuncts"];
  if (!disjuncts.is_object()) return std::nullopt;
  for (const auto& [name, idx] : disjuncts.items()) {
    if (!idx.is_number_integer()) return std::nullopt;
    w.disjuncts[name] = idx.get<int>();
  }

  const Json& partitions = j["partitions"];
  if (!partitions.is_array()) return std::nullopt;
  for (const Json& item : partitions) {
    if (!item.is_object() || !item.contains("pair") || !item.contains("relation"))
      return std::nullopt;
    const Json& pair = item["pair"];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string() || !item["relation"].is_string())
      return std::nullopt;
    std::optional<PartitionRelation> rel =
        partition_from_name(item["relation"].get<std::string>());
    if (!rel) return std::nullopt;
    w.partitions.push_back(
        {pair[0].get<std::string>(), pair[1].get<std::string>(), *rel});
  }
  return w;
}

}  // namespace stir
