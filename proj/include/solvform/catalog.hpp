#pragma once

#include <optional>

#include "solvform/characters.hpp"
#include "solvform/group_action.hpp"

namespace solvform {

/// A built-in geometry: either a Lie algebra with a preferred orthonormal
/// coframe (route "ce") or a character system with symbolic weights (route
/// "characters"), together with the expected Betti table and formality
/// verdict that the engine must reproduce.
struct CatalogEntry {
    std::string name;
    std::string description;
    std::string annotation;
    int dimension = 0;
    std::string route; // "ce" or "characters"
    std::optional<LieAlgebra> algebra;
    std::optional<MetricFrame> frame;
    std::optional<CharacterSystem> characters;
    std::vector<Eigen::Index> expected_betti;
    bool expected_formal = false;
};

const std::vector<CatalogEntry>& catalog();

std::vector<std::string> catalog_names();

/// Throws InputError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

} // namespace solvform
