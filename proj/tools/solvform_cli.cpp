#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>

#include "solvform/json_io.hpp"

namespace solvform {
namespace {

struct Options {
    std::string input;
    std::string catalog_name;
    int degree = -1;
    std::string format = "text";
    unsigned long seed = 1;
};

// ---------------------------------------------------------------------------
// Output rendering

bool is_scalar_array(const Json& j) {
    for (const Json& item : j) {
        if (item.is_structured()) return false;
    }
    return true;
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured() && !(value.is_array() && is_scalar_array(value))) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 2);
            } else if (value.is_array()) {
                os << pad << key << ":";
                for (const Json& item : value) os << " " << scalar_text(item);
                os << "\n";
            } else {
                os << pad << key << ": " << scalar_text(value) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const Json& item : j) {
            if (item.is_array() && is_scalar_array(item)) {
                os << pad << "-";
                for (const Json& inner : item) os << " " << scalar_text(inner);
                os << "\n";
            } else if (item.is_structured()) {
                os << pad << "-\n";
                render_text(item, os, indent + 2);
            } else {
                os << pad << "- " << scalar_text(item) << "\n";
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

void emit(const Json& payload, const std::string& format) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else {
        render_text(payload, std::cout, 0);
    }
}

void emit_error(const std::string& type, const std::string& message, const std::string& format) {
    Json payload;
    payload["error"] = Json{{"type", type}, {"message", message}};
    emit(payload, format);
}

// ---------------------------------------------------------------------------
// Input resolution

struct Source {
    std::string name;
    std::string route; // "ce", "characters", or "both"
    std::optional<LieAlgebra> algebra;
    std::optional<MetricFrame> frame;
    std::optional<CharacterSystem> characters;
    std::optional<FiniteAction> action;

    const LieAlgebra& require_algebra() const {
        if (!algebra)
            throw InputError("\"" + name + "\" carries no Lie algebra data; use the "
                             "characters command for character systems");
        return *algebra;
    }
    const MetricFrame& require_frame() const {
        if (!frame) throw InputError("\"" + name + "\" carries no metric frame");
        return *frame;
    }
    const CharacterSystem& require_characters() const {
        if (!characters)
            throw InputError("\"" + name + "\" carries no characters block");
        return *characters;
    }
};

Source resolve(const Options& opt) {
    if (!opt.input.empty() && !opt.catalog_name.empty())
        throw InputError("give either --input or --catalog, not both");
    Source s;
    if (!opt.catalog_name.empty()) {
        const CatalogEntry& e = catalog_entry(opt.catalog_name);
        s.name = e.name;
        s.route = e.route;
        s.algebra = e.algebra;
        s.frame = e.frame;
        s.characters = e.characters;
        return s;
    }
    if (opt.input.empty()) throw InputError("one of --input or --catalog is required");
    InputDocument doc = load_document(opt.input);
    s.name = doc.name;
    if (doc.has_algebra()) {
        s.algebra = build_algebra(doc);
        s.frame = build_frame(doc);
        s.route = doc.has_characters() ? "both" : "ce";
    } else {
        s.route = "characters";
    }
    if (doc.has_characters()) s.characters = build_characters(doc);
    s.action = build_action(doc);
    return s;
}

bool use_characters_route(const Source& s) { return s.route == "characters"; }

// ---------------------------------------------------------------------------
// Payload helpers

Json betti_json(const std::vector<Eigen::Index>& betti) {
    Json out = Json::array();
    for (Eigen::Index b : betti) out.push_back(static_cast<long long>(b));
    return out;
}

Json basis_json(const std::vector<Multivector>& basis, const std::vector<std::string>& labels) {
    Json out = Json::array();
    for (const Multivector& v : basis) out.push_back(to_string(v, labels));
    return out;
}

Json certificate_json(const CharacterSystem::Certificate& cert) {
    Json out;
    out["verdict"] = cert.verdict;
    out["betti"] = betti_json(cert.betti);
    out["unimodular"] = cert.unimodular;
    out["duality"] = cert.duality_ok ? "ok" : "failed";
    out["differential_vanishes"] = cert.differential_vanishes;
    out["star_closed"] = cert.star_closed;
    Json subsets = Json::array();
    for (const auto& subset : cert.trivial_subsets) {
        Json indices = Json::array();
        for (int i : subset) indices.push_back(i);
        subsets.push_back(std::move(indices));
    }
    out["trivial_subsets"] = std::move(subsets);
    return out;
}

Json formality_json(const FormalityVerdict& verdict, const std::vector<std::string>& labels) {
    Json out;
    if (verdict.formal) {
        out["verdict"] = "formal";
        return out;
    }
    const FormalityWitness& w = *verdict.witness;
    out["verdict"] = "not_formal";
    out["witness"] = Json::array({to_string(w.left, labels), to_string(w.right, labels)});
    out["witness_grades"] = Json::array({w.left_grade, w.right_grade});
    out["product"] = to_string(w.product, labels);
    out["failure"] = w.failure;
    return out;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_validate(const Options& opt) {
    Source s = resolve(opt);
    Json payload;
    payload["name"] = s.name;
    bool valid = true;
    if (s.algebra) {
        const LieAlgebra& l = *s.algebra;
        Json algebra;
        algebra["dim"] = l.dim();
        const JacobiReport& jacobi = l.jacobi();
        algebra["jacobi_ok"] = jacobi.ok;
        if (!jacobi.ok) {
            valid = false;
            algebra["violating_triple"] = Json::array({jacobi.i, jacobi.j, jacobi.k});
            Json defect = Json::array();
            for (Eigen::Index m = 0; m < jacobi.defect.size(); ++m)
                defect.push_back(to_string(jacobi.defect(m)));
            algebra["defect"] = std::move(defect);
        } else {
            algebra["unimodular"] = l.is_unimodular();
        }
        payload["algebra"] = std::move(algebra);
    }
    if (s.frame && s.algebra) {
        payload["metric"] = Json{{"coframe_invertible", true}};
    }
    if (s.action && s.algebra) {
        Json action;
        action["order"] = static_cast<long long>(s.action->order());
        bool all_auto = true;
        for (const MatrixS& g : s.action->generators()) {
            if (!is_algebra_automorphism(g, *s.algebra)) {
                all_auto = false;
                break;
            }
        }
        action["automorphisms"] = all_auto;
        if (!all_auto) valid = false;
        payload["action"] = std::move(action);
    }
    if (s.characters) {
        CharacterSystem::Validation v = s.characters->validate();
        Json block;
        block["covectors"] = s.characters->covector_count();
        block["generators"] = s.characters->generator_count();
        block["unimodular"] = v.unimodular;
        block["zero_weight_covectors"] = v.zero_weight_covectors;
        block["notes"] = v.notes;
        payload["characters"] = std::move(block);
    }
    payload["valid"] = valid;
    emit(payload, opt.format);
    return valid ? 0 : 3;
}

int cmd_betti(const Options& opt) {
    Source s = resolve(opt);
    Json payload;
    payload["name"] = s.name;
    std::vector<Eigen::Index> betti;
    if (use_characters_route(s)) {
        payload["route"] = "characters";
        betti = s.require_characters().betti_table();
    } else {
        payload["route"] = "ce";
        betti = s.require_algebra().betti_vector();
    }
    if (opt.degree >= 0) {
        if (opt.degree >= static_cast<int>(betti.size()))
            throw InputError("degree out of range: " + std::to_string(opt.degree));
        payload["degree"] = opt.degree;
        payload["betti"] = static_cast<long long>(betti[static_cast<std::size_t>(opt.degree)]);
    } else {
        payload["betti"] = betti_json(betti);
    }
    emit(payload, opt.format);
    return 0;
}

int cmd_harmonic(const Options& opt) {
    Source s = resolve(opt);
    const LieAlgebra& l = s.require_algebra();
    const MetricFrame& f = s.require_frame();
    Json payload;
    payload["name"] = s.name;
    Json degrees = Json::array();
    int lo = 0, hi = l.dim();
    if (opt.degree >= 0) {
        if (opt.degree > l.dim()) throw InputError("degree out of range: " + std::to_string(opt.degree));
        lo = hi = opt.degree;
    }
    for (int p = lo; p <= hi; ++p) {
        std::vector<Multivector> basis = harmonic_basis(l, f, p);
        Json block;
        block["degree"] = p;
        block["dim"] = static_cast<long long>(basis.size());
        block["basis"] = basis_json(basis, l.labels());
        degrees.push_back(std::move(block));
    }
    payload["degrees"] = std::move(degrees);
    emit(payload, opt.format);
    return 0;
}

int cmd_formality(const Options& opt) {
    Source s = resolve(opt);
    Json payload;
    payload["name"] = s.name;
    if (use_characters_route(s)) {
        payload["route"] = "characters";
        CharacterSystem::Certificate cert = s.require_characters().formality_certificate();
        payload["verdict"] = cert.verdict;
        payload["certificate"] = certificate_json(cert);
    } else {
        const LieAlgebra& l = s.require_algebra();
        payload["route"] = "ce";
        FormalityVerdict verdict = formality_check(l, s.require_frame());
        Json v = formality_json(verdict, l.labels());
        for (auto& [key, value] : v.items()) payload[key] = value;
    }
    emit(payload, opt.format);
    return 0;
}

int cmd_characters(const Options& opt) {
    Source s = resolve(opt);
    const CharacterSystem& system = s.require_characters();
    Json payload;
    payload["name"] = s.name;
    payload["covectors"] = system.covector_count();
    payload["generators"] = system.generator_count();
    payload["symbols"] = system.symbol_basis().names();
    CharacterSystem::Validation v = system.validate();
    payload["unimodular"] = v.unimodular;
    payload["zero_weight_covectors"] = v.zero_weight_covectors;
    payload["notes"] = v.notes;
    payload["betti"] = betti_json(system.betti_table());
    if (v.unimodular) {
        payload["certificate"] = certificate_json(system.formality_certificate());
    }
    emit(payload, opt.format);
    return 0;
}

// ---------------------------------------------------------------------------
// Randomized self-checks for the invariants command

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(unsigned long seed) : engine(seed) {}
    int below(int n) { return static_cast<int>(engine() % static_cast<unsigned long>(n)); }
    Rational rational() {
        int num = below(7) - 3;
        int den = below(3) + 1;
        return Rational(num) / Rational(den);
    }
    Multivector form(int dim, int grade) {
        std::vector<Monomial> basis = monomials(dim, grade);
        Multivector out(dim);
        for (int t = 0; t < 3; ++t) {
            Monomial m = basis[static_cast<std::size_t>(below(static_cast<int>(basis.size())))];
            out.add_term(m, Scalar(rational()));
        }
        return out;
    }
};

Json property_result(const std::string& name, int cases, bool passed) {
    return Json{{"name", name}, {"cases", cases}, {"passed", passed}};
}

int cmd_invariants(const Options& opt) {
    Source s = resolve(opt);
    Json payload;
    payload["name"] = s.name;
    payload["seed"] = static_cast<long long>(opt.seed);
    int exit_code = 0;

    if (s.action && s.algebra) {
        Json action;
        action["order"] = static_cast<long long>(s.action->order());
        action["invariant_betti"] = betti_json(invariant_cohomology_dims(*s.algebra, *s.action));
        InvariantFormality inv = invariant_formality_check(*s.algebra, s.require_frame(), *s.action);
        action["invariant_harmonic_dims"] = betti_json(inv.harmonic_dims);
        Json verdict = formality_json(inv.verdict, s.algebra->labels());
        for (auto& [key, value] : verdict.items()) action[key] = value;
        payload["action"] = std::move(action);
    }

    Rng rng(opt.seed);
    const int cases = 50;
    Json properties = Json::array();
    bool all = true;
    auto record = [&properties, &all](const std::string& name, int n, bool ok) {
        properties.push_back(property_result(name, n, ok));
        if (!ok) all = false;
    };

    if (s.algebra && s.algebra->is_valid()) {
        const LieAlgebra& l = *s.algebra;
        const MetricFrame& f = s.require_frame();
        const int n = l.dim();
        {
            bool ok = true;
            for (int c = 0; c < cases && ok; ++c) {
                int p = rng.below(n);
                int q = rng.below(n);
                Multivector a = rng.form(n, p), b = rng.form(n, q);
                int sign = (p * q % 2 == 0) ? 1 : -1;
                ok = wedge(a, b) == Scalar(sign) * wedge(b, a);
            }
            record("wedge_graded_commutativity", cases, ok);
        }
        {
            bool ok = true;
            for (int c = 0; c < cases && ok; ++c) {
                Multivector a = rng.form(n, rng.below(n + 1));
                ok = l.differential(l.differential(a)).is_zero();
            }
            record("differential_squares_to_zero", cases, ok);
        }
        {
            bool ok = true;
            for (int c = 0; c < cases && ok; ++c) {
                int p = rng.below(n + 1);
                Multivector a = rng.form(n, p);
                int sign = (p * (n - p) % 2 == 0) ? 1 : -1;
                ok = hodge_star(hodge_star(a, f), f) == Scalar(sign) * a;
            }
            record("star_involution", cases, ok);
        }
        if (l.is_unimodular()) {
            bool ok = true;
            for (int c = 0; c < cases && ok; ++c) {
                int p = rng.below(n);
                Multivector a = rng.form(n, p), b = rng.form(n, p + 1);
                ok = metric_inner(l.differential(a), b, f) ==
                     conj(metric_inner(codifferential(b, l, f), a, f));
            }
            record("codifferential_adjointness", cases, ok);
            record("harmonic_dims_equal_betti", 1,
                   harmonic_dims(l, f) == l.betti_vector());
        }
    }

    if (s.characters) {
        const CharacterSystem& system = *s.characters;
        if (system.is_unimodular()) {
            record("complement_duality", 1, system.complement_duality().ok);
            std::vector<Eigen::Index> betti = system.betti_table();
            bool symmetric = true;
            for (std::size_t p = 0; p < betti.size(); ++p) {
                if (betti[p] != betti[betti.size() - 1 - p]) symmetric = false;
            }
            record("betti_complement_symmetry", 1, symmetric);
        }
        {
            bool ok = true;
            std::vector<Eigen::Index> before = system.betti_table();
            for (int c = 0; c < 10 && ok; ++c) {
                std::vector<WeightValue> row;
                for (int i = 0; i < system.covector_count(); ++i) {
                    WeightValue w = WeightValue::zero(system.symbol_basis().count());
                    w.cst = rng.rational();
                    row.push_back(std::move(w));
                }
                std::vector<Eigen::Index> after = system.with_generator(row).betti_table();
                for (std::size_t p = 0; p < before.size(); ++p) {
                    if (after[p] > before[p]) ok = false;
                }
            }
            record("betti_monotone_under_new_generator", 10, ok);
        }
    }

    payload["properties"] = std::move(properties);
    payload["all_passed"] = all;
    emit(payload, opt.format);
    return exit_code;
}

int cmd_catalog(const Options& opt) {
    Json payload;
    if (!opt.catalog_name.empty()) {
        const CatalogEntry& e = catalog_entry(opt.catalog_name);
        Json entry;
        entry["name"] = e.name;
        entry["description"] = e.description;
        entry["annotation"] = e.annotation;
        entry["dim"] = e.dimension;
        entry["route"] = e.route;
        entry["betti"] = betti_json(e.expected_betti);
        entry["formal"] = e.expected_formal;
        payload["entry"] = std::move(entry);
        payload["input"] = entry_to_document_json(e);
    } else {
        Json entries = Json::array();
        for (const CatalogEntry& e : catalog()) {
            Json entry;
            entry["name"] = e.name;
            entry["description"] = e.description;
            entry["dim"] = e.dimension;
            entry["route"] = e.route;
            entry["betti"] = betti_json(e.expected_betti);
            entry["formal"] = e.expected_formal;
            entries.push_back(std::move(entry));
        }
        payload["entries"] = std::move(entries);
    }
    emit(payload, opt.format);
    return 0;
}

int dispatch(const std::string& command, const Options& opt) {
    if (command == "validate") return cmd_validate(opt);
    if (command == "betti") return cmd_betti(opt);
    if (command == "harmonic") return cmd_harmonic(opt);
    if (command == "formality") return cmd_formality(opt);
    if (command == "characters") return cmd_characters(opt);
    if (command == "invariants") return cmd_invariants(opt);
    if (command == "catalog") return cmd_catalog(opt);
    throw InputError("unknown command: " + command);
}

} // namespace
} // namespace solvform

int main(int argc, char** argv) {
    using namespace solvform;
    CLI::App app{"Exact invariant cohomology, harmonic forms, and formality "
                 "verdicts for solvable Lie algebras"};
    app.require_subcommand(1);
    Options opt;

    std::vector<std::string> commands = {"validate", "betti", "harmonic", "formality",
                                         "characters", "invariants", "catalog"};
    std::vector<std::string> descriptions = {
        "Check Jacobi identity, unimodularity, and action consistency",
        "Betti numbers (cohomology dimensions, or trivial-subset counts)",
        "Harmonic form bases per degree for the given metric",
        "Geometric formality verdict with witness on failure",
        "Character-system report: triviality, duality, certificate",
        "Action-invariant dimensions and randomized self-checks",
        "List built-in geometries or export one as an input document"};
    for (std::size_t i = 0; i < commands.size(); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
        if (commands[i] != "catalog") {
            sub->add_option("--input", opt.input, "JSON input document");
        }
        sub->add_option("--catalog", opt.catalog_name, "built-in catalog entry name");
        if (commands[i] == "betti" || commands[i] == "harmonic") {
            sub->add_option("--degree", opt.degree, "restrict to one degree");
        }
        sub->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (commands[i] == "invariants") {
            sub->add_option("--seed", opt.seed, "seed for randomized self-checks");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, opt);
    } catch (const InputError& e) {
        emit_error("input", e.what(), opt.format);
        return 2;
    } catch (const ValidationError& e) {
        emit_error("validation", e.what(), opt.format);
        return 3;
    } catch (const Error& e) {
        emit_error("internal", e.what(), opt.format);
        return 1;
    }
}
