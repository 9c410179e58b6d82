#include "groupfn/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace groupfn {

namespace {

AtomSpec constant_atom(const AtomId& id, const std::string& name) {
  if (name == "sqrt2")
    return {id, {mpz_class(-2), mpz_class(0), mpz_class(1)}, QInterval(Rat(1), Rat(2)), name};
  if (name == "sqrt3")
    return {id, {mpz_class(-3), mpz_class(0), mpz_class(1)}, QInterval(Rat(1), Rat(2)), name};
  if (name == "sqrt5")
    return {id, {mpz_class(-5), mpz_class(0), mpz_class(1)}, QInterval(Rat(2), Rat(3)), name};
  throw std::invalid_argument("unknown atom constant '" + name +
                              "' (expected sqrt2, sqrt3 or sqrt5)");
}

}  // namespace

RegistryPtr registry_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("registry: expected a JSON list of atoms");
  std::vector<AtomSpec> atoms;
  for (const auto& entry : j) {
    const AtomId id = entry.at("id").get<std::string>();
    if (entry.contains("constant")) {
      atoms.push_back(constant_atom(id, entry.at("constant").get<std::string>()));
    } else {
      AtomSpec a;
      a.id = id;
      a.source = "minpoly";
      for (const auto& c : entry.at("minpoly")) {
        if (!c.is_number_integer())
          throw std::invalid_argument("registry: minpoly coefficients must be integers");
        a.minpoly.emplace_back(static_cast<long>(c.get<std::int64_t>()));
      }
      const auto& iv = entry.at("root_interval");
      if (!iv.is_array() || iv.size() != 2)
        throw std::invalid_argument("registry: root_interval must be [lo, hi]");
      a.bracket = QInterval(rat_from_json(iv[0]), rat_from_json(iv[1]));
      atoms.push_back(std::move(a));
    }
  }
  return AtomRegistry::make(std::move(atoms));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

RegistryPtr load_registry_file(const std::string& path) {
  return registry_from_json(load_json_file(path));
}

AdditiveSpec theta_from_json(const Json& j, const RegistryPtr& reg) {
  if (!j.is_object()) throw std::invalid_argument("theta: expected a JSON object");
  AdditiveSpec t;
  t.c_b = Rat(0);
  for (const auto& [key, val] : j.items()) {
    if (key == "c_b") {
      t.c_b = rat_from_json(val);
      continue;
    }
    if (!reg || !reg->has(key))
      throw std::invalid_argument("theta: atom '" + key + "' is not in the registry");
    const Rat c = rat_from_json(val);
    if (!c.is_zero()) t.c.emplace(key, c);
  }
  return t;
}

AdditiveSpec load_theta_file(const std::string& path, const RegistryPtr& reg) {
  return theta_from_json(load_json_file(path), reg);
}

GroupFunction parse_function_spec(const std::string& spec, const RegistryPtr& reg) {
  if (spec == "pi") return GroupFunction::pi();
  if (spec == "gmi") return GroupFunction::gmi_fn();
  const auto with_theta = [&](const GroupFunction& base, const std::string& path) {
    return fn_sum({base, GroupFunction::additive(load_theta_file(path, reg))});
  };
  if (spec.rfind("pi+theta:", 0) == 0) return with_theta(GroupFunction::pi(), spec.substr(9));
  if (spec.rfind("gmi+theta:", 0) == 0) return with_theta(GroupFunction::gmi_fn(), spec.substr(10));
  throw std::invalid_argument("unknown function spec '" + spec +
                              "' (expected pi, gmi, pi+theta:<file> or gmi+theta:<file>)");
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << body;
}

Json report_header(const std::string& command, const Json& config, const RegistryPtr& reg) {
  Json atoms = Json::array();
  if (reg)
    for (const auto& a : reg->atoms()) atoms.push_back(a.id);
  return Json{
      {"schema", 1},
      {"command", command},
      {"config", config},
      {"registry",
       Json{{"fingerprint", reg ? reg->fingerprint() : "none"},
            {"atoms", std::move(atoms)},
            {"independence_assumption", AtomRegistry::independence_note()},
            {"theta_sampling_note",
             "affine-hull equations are exercised for finitely many additive functions over "
             "the declared atoms only"}}}};
}

}  // namespace groupfn
