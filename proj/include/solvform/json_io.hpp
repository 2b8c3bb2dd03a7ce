#pragma once

#include <optional>

#include <json.hpp>

#include "solvform/catalog.hpp"

namespace solvform {

using Json = nlohmann::ordered_json;

/// Parsed form of the canonical JSON input document. Rationals travel as
/// strings ("3/2"); unknown fields are rejected.
///
/// Top-level fields: name (string), dim (int), optional labels (array of
/// strings), optional brackets (array of {i, j, k, c}), optional
/// metric.coframe (n x n rational strings, rows = orthonormal covectors),
/// optional action.generators (list of n x n rational-string matrices),
/// optional characters {symbols, relations, generators}. A document must
/// carry brackets or characters (or both); a document without brackets is a
/// pure character-system description.
struct InputDocument {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;
    std::optional<std::vector<BracketTerm>> brackets;
    std::optional<MatrixS> metric_coframe;
    std::optional<std::vector<MatrixS>> action_generators;

    struct CharacterBlock {
        std::vector<std::string> symbols;
        std::vector<VectorQ> relations;
        std::vector<std::vector<WeightValue>> generator_rows;
    };
    std::optional<CharacterBlock> characters;

    bool has_algebra() const { return brackets.has_value(); }
    bool has_characters() const { return characters.has_value(); }
};

/// Strict parse; throws InputError on malformed documents.
InputDocument parse_document(const Json& j);
InputDocument load_document(const std::string& path);

LieAlgebra build_algebra(const InputDocument& doc);
/// Identity frame when the document has no metric block.
MetricFrame build_frame(const InputDocument& doc);
std::optional<FiniteAction> build_action(const InputDocument& doc, std::size_t cap = 100000);
CharacterSystem build_characters(const InputDocument& doc);

/// Canonical JSON document for a catalog entry; re-ingesting it reproduces
/// the entry's results.
Json entry_to_document_json(const CatalogEntry& entry);

} // namespace solvform
