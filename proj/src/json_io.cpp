#include "solvform/json_io.hpp"

#include <fstream>
#include <set>

namespace solvform {

namespace {

void require_fields(const Json& j, const std::string& where,
                    const std::set<std::string>& allowed) {
    if (!j.is_object()) throw InputError(where + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key)) throw InputError("unknown field \"" + key + "\" in " + where);
    }
}

Rational parse_rational_field(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + " must be a rational string such as \"3/2\"");
    return parse_rational(j.get<std::string>());
}

int parse_int_field(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + " must be an integer");
    return j.get<int>();
}

MatrixS parse_matrix(const Json& j, int n, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw InputError(where + " must be an array of " + std::to_string(n) + " rows");
    MatrixS out(n, n);
    for (int r = 0; r < n; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError(where + " row " + std::to_string(r + 1) + " must have " +
                             std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c)
            out(r, c) = Scalar(parse_rational_field(row[static_cast<std::size_t>(c)],
                                                    where + " entry"));
    }
    return out;
}

std::vector<BracketTerm> parse_brackets(const Json& j) {
    if (!j.is_array()) throw InputError("brackets must be an array");
    std::vector<BracketTerm> out;
    for (const Json& item : j) {
        require_fields(item, "bracket term", {"i", "j", "k", "c"});
        for (const char* field : {"i", "j", "k", "c"}) {
            if (!item.contains(field))
                throw InputError(std::string("bracket term missing field \"") + field + "\"");
        }
        BracketTerm t;
        t.i = parse_int_field(item["i"], "bracket field i");
        t.j = parse_int_field(item["j"], "bracket field j");
        t.k = parse_int_field(item["k"], "bracket field k");
        t.c = parse_rational_field(item["c"], "bracket field c");
        out.push_back(std::move(t));
    }
    return out;
}

InputDocument::CharacterBlock parse_character_block(const Json& j, int dim) {
    require_fields(j, "characters", {"symbols", "relations", "generators"});
    InputDocument::CharacterBlock block;
    if (j.contains("symbols")) {
        if (!j["symbols"].is_array()) throw InputError("characters.symbols must be an array");
        for (const Json& s : j["symbols"]) {
            if (!s.is_string()) throw InputError("characters.symbols entries must be strings");
            block.symbols.push_back(s.get<std::string>());
        }
    }
    auto symbol_index = [&block](const std::string& name) {
        for (std::size_t i = 0; i < block.symbols.size(); ++i) {
            if (block.symbols[i] == name) return static_cast<int>(i);
        }
        return -1;
    };
    const Eigen::Index s = static_cast<Eigen::Index>(block.symbols.size());
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) throw InputError("characters.relations must be an array");
        for (const Json& rel : j["relations"]) {
            if (!rel.is_object())
                throw InputError("characters.relations entries must map symbols to rationals");
            VectorQ row = VectorQ::Zero(s);
            for (const auto& [key, value] : rel.items()) {
                int idx = symbol_index(key);
                if (idx < 0) throw InputError("relation references unknown symbol \"" + key + "\"");
                row(idx) = parse_rational_field(value, "relation coefficient");
            }
            block.relations.push_back(std::move(row));
        }
    }
    if (!j.contains("generators")) throw InputError("characters.generators is required");
    if (!j["generators"].is_array()) throw InputError("characters.generators must be an array");
    for (const Json& row_json : j["generators"]) {
        if (!row_json.is_array() || static_cast<int>(row_json.size()) != dim)
            throw InputError("each characters.generators row must list one weight per covector");
        std::vector<WeightValue> row;
        for (const Json& w : row_json) {
            require_fields(w, "weight", {"re", "im2pi"});
            WeightValue value = WeightValue::zero(static_cast<int>(s));
            if (w.contains("re")) {
                if (!w["re"].is_object())
                    throw InputError("weight field re must map symbols (and \"const\") to rationals");
                for (const auto& [key, coeff] : w["re"].items()) {
                    Rational r = parse_rational_field(coeff, "weight coefficient");
                    if (key == "const") {
                        value.cst = std::move(r);
                        continue;
                    }
                    int idx = symbol_index(key);
                    if (idx < 0)
                        throw InputError("weight references unknown symbol \"" + key + "\"");
                    value.sym(idx) = std::move(r);
                }
            }
            if (w.contains("im2pi")) value.im2pi = parse_rational_field(w["im2pi"], "weight field im2pi");
            row.push_back(std::move(value));
        }
        block.generator_rows.push_back(std::move(row));
    }
    return block;
}

} // namespace

InputDocument parse_document(const Json& j) {
    require_fields(j, "document",
                   {"name", "dim", "labels", "brackets", "metric", "action", "characters"});
    InputDocument doc;
    if (!j.contains("name") || !j["name"].is_string())
        throw InputError("document field name (string) is required");
    doc.name = j["name"].get<std::string>();
    if (!j.contains("dim")) throw InputError("document field dim (integer) is required");
    doc.dim = parse_int_field(j["dim"], "dim");
    if (doc.dim < 1 || doc.dim > kMaxDim)
        throw InputError("dim out of range: " + std::to_string(doc.dim));
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != doc.dim)
            throw InputError("labels must be an array of dim strings");
        for (const Json& s : j["labels"]) {
            if (!s.is_string()) throw InputError("labels entries must be strings");
            doc.labels.push_back(s.get<std::string>());
        }
    }
    if (j.contains("brackets")) doc.brackets = parse_brackets(j["brackets"]);
    if (j.contains("metric")) {
        require_fields(j["metric"], "metric", {"coframe"});
        if (!j["metric"].contains("coframe")) throw InputError("metric.coframe is required");
        doc.metric_coframe = parse_matrix(j["metric"]["coframe"], doc.dim, "metric.coframe");
    }
    if (j.contains("action")) {
        require_fields(j["action"], "action", {"generators"});
        if (!j["action"].contains("generators") || !j["action"]["generators"].is_array())
            throw InputError("action.generators must be an array of matrices");
        std::vector<MatrixS> generators;
        for (const Json& g : j["action"]["generators"])
            generators.push_back(parse_matrix(g, doc.dim, "action generator"));
        doc.action_generators = std::move(generators);
    }
    if (j.contains("characters")) doc.characters = parse_character_block(j["characters"], doc.dim);
    if (!doc.brackets && !doc.characters)
        throw InputError("document must contain brackets or characters");
    return doc;
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("JSON parse error in " + path + ": " + e.what());
    }
    return parse_document(j);
}

LieAlgebra build_algebra(const InputDocument& doc) {
    if (!doc.brackets)
        throw InputError("document \"" + doc.name + "\" has no brackets; it only describes a "
                         "character system");
    return LieAlgebra(doc.dim, *doc.brackets, doc.labels);
}

MetricFrame build_frame(const InputDocument& doc) {
    if (doc.metric_coframe) return MetricFrame(*doc.metric_coframe);
    return MetricFrame::identity(doc.dim);
}

std::optional<FiniteAction> build_action(const InputDocument& doc, std::size_t cap) {
    if (!doc.action_generators) return std::nullopt;
    return FiniteAction::generate(doc.dim, *doc.action_generators, cap);
}

CharacterSystem build_characters(const InputDocument& doc) {
    if (!doc.characters)
        throw InputError("document \"" + doc.name + "\" has no characters block");
    SymbolBasis basis(doc.characters->symbols, doc.characters->relations);
    return CharacterSystem(std::move(basis), doc.dim, doc.characters->generator_rows, doc.labels);
}

namespace {

Json matrix_to_json(const MatrixS& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const Scalar& v = m(r, c);
            row.push_back(to_string(v.re));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json entry_to_document_json(const CatalogEntry& entry) {
    Json doc;
    doc["name"] = entry.name;
    doc["dim"] = entry.dimension;
    if (entry.route == "ce") {
        const LieAlgebra& l = *entry.algebra;
        doc["labels"] = l.labels();
        Json brackets = Json::array();
        for (int i = 1; i <= l.dim(); ++i) {
            for (int j = i + 1; j <= l.dim(); ++j) {
                for (int k = 1; k <= l.dim(); ++k) {
                    Rational c = l.structure_constant(i, j, k);
                    if (c == 0) continue;
                    Json term;
                    term["i"] = i;
                    term["j"] = j;
                    term["k"] = k;
                    term["c"] = to_string(c);
                    brackets.push_back(std::move(term));
                }
            }
        }
        doc["brackets"] = std::move(brackets);
        doc["metric"] = Json{{"coframe", matrix_to_json(entry.frame->coframe())}};
    } else {
        const CharacterSystem& s = *entry.characters;
        doc["labels"] = s.labels();
        Json block;
        block["symbols"] = s.symbol_basis().names();
        Json relations = Json::array();
        for (const VectorQ& rel : s.symbol_basis().relations()) {
            Json r = Json::object();
            for (Eigen::Index i = 0; i < rel.size(); ++i) {
                if (rel(i) != 0) r[s.symbol_basis().names()[static_cast<std::size_t>(i)]] = to_string(rel(i));
            }
            relations.push_back(std::move(r));
        }
        block["relations"] = std::move(relations);
        Json generators = Json::array();
        for (const auto& row : s.generator_rows()) {
            Json row_json = Json::array();
            for (const WeightValue& w : row) {
                Json weight;
                Json re = Json::object();
                for (Eigen::Index i = 0; i < w.sym.size(); ++i) {
                    if (w.sym(i) != 0)
                        re[s.symbol_basis().names()[static_cast<std::size_t>(i)]] = to_string(w.sym(i));
                }
                if (w.cst != 0) re["const"] = to_string(w.cst);
                weight["re"] = std::move(re);
                weight["im2pi"] = to_string(w.im2pi);
                row_json.push_back(std::move(weight));
            }
            generators.push_back(std::move(row_json));
        }
        block["generators"] = std::move(generators);
        doc["characters"] = std::move(block);
    }
    return doc;
}

} // namespace solvform
