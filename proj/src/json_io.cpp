#include "li/json_io.hpp"

#include <cmath>

namespace li {

using nlohmann::json;

Lattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw DomainError("lattice document needs an \"atoms\" array");
  }
  std::vector<std::string> labels;
  for (const auto& a : j["atoms"]) {
    if (!a.is_string()) throw DomainError("atom labels must be strings");
    labels.push_back(a.get<std::string>());
  }
  return Lattice(std::move(labels));
}

json lattice_to_json(const Lattice& lattice) {
  return json{{"atoms", lattice.atom_labels()}};
}

Element element_from_json(const Lattice& lattice, const json& j) {
  if (!j.is_array()) throw DomainError("element must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& a : j) {
    if (!a.is_string()) throw DomainError("element labels must be strings");
    labels.push_back(a.get<std::string>());
  }
  return lattice.element_from_labels(labels);
}

json element_to_json(const Lattice& lattice, const Element& e) {
  json out = json::array();
  for (std::size_t i : e.atoms()) out.push_back(lattice.atom_labels()[i]);
  return out;
}

Measure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lattice")) {
    throw DomainError("measure document needs a \"lattice\" object");
  }
  Lattice lattice = lattice_from_json(j["lattice"]);
  if (!j.contains("values") || !j["values"].is_object()) {
    throw DomainError("measure document needs a \"values\" object");
  }
  const auto& values = j["values"];
  std::vector<double> atom_values(lattice.atom_count());
  for (std::size_t i = 0; i < lattice.atom_count(); ++i) {
    const std::string& label = lattice.atom_labels()[i];
    if (!values.contains(label)) {
      throw DomainError("missing value for atom '" + label + "'");
    }
    const auto& v = values[label];
    if (!v.is_number()) {
      throw DomainError("value for atom '" + label + "' must be a number");
    }
    atom_values[i] = v.get<double>();
  }
  return Measure(std::move(lattice), std::move(atom_values));
}

json measure_to_json(const Measure& m) {
  json values = json::object();
  for (std::size_t i = 0; i < m.lattice().atom_count(); ++i) {
    values[m.lattice().atom_labels()[i]] = m.atom_values()[i];
  }
  return json{{"lattice", lattice_to_json(m.lattice())}, {"values", values}};
}

std::vector<double> double_vector_from_json(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw DomainError(std::string("missing numeric array \"") + field + "\"");
  }
  std::vector<double> out;
  for (const auto& v : j[field]) {
    if (!v.is_number()) {
      throw DomainError(std::string("\"") + field + "\" must contain numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace li
