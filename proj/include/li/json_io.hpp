#pragma once

#include <json.hpp>

#include "li/measure.hpp"

namespace li {

/// Lattice wire form: {"atoms": ["a1", "a2", ...]}.
Lattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const Lattice& lattice);

/// Elements travel as label arrays in atom order, e.g. ["a1", "a3"].
Element element_from_json(const Lattice& lattice, const nlohmann::json& j);
nlohmann::json element_to_json(const Lattice& lattice, const Element& e);

/// Measure wire form: {"lattice": {...}, "values": {"a1": 1.0, ...}};
/// every atom must be present with a finite positive value.
Measure measure_from_json(const nlohmann::json& j);
nlohmann::json measure_to_json(const Measure& m);

std::vector<double> double_vector_from_json(const nlohmann::json& j,
                                            const char* field);

}  // namespace li
