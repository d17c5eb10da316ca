#include "stackchow/commands.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stackchow {

namespace {

using nlohmann::ordered_json;

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

struct PipelineResult {
    StackyFan sf;
    Presentation chow;
};

// Raw presentation for either document mode.  Fantastack requires a finite
// cokernel; the stacky mode splits off free factors as needed.
PipelineResult run_pipeline(const InputDocument& doc, bool check_fan) {
    StackyFan sf = document_stacky_fan(doc, check_fan);
    if (doc.fantastack) {
        if (!cokernel_is_finite(sf))
            throw std::domain_error("fantastack: cokernel is not finite");
        Presentation chow = stanley_reisner(sf, check_fan);
        return {std::move(sf), std::move(chow)};
    }
    Presentation chow = chow_ring(sf, check_fan);
    return {std::move(sf), std::move(chow)};
}

std::string group_text(const FgAbelianGroup& g) {
    return GradedRow{g.rank, g.torsion}.to_string();
}

// Torsion rows reduced into [0, a_j); free rows unchanged.
IntMatrix normalized_lift(const StackyFan& sf) {
    IntMatrix lift = sf.lift;
    const int d = sf.target.rank;
    for (size_t j = 0; j < sf.target.torsion.size(); ++j) {
        const mpz_class& a = sf.target.torsion[j];
        for (int c = 0; c < lift.cols(); ++c) {
            mpz_class& e = lift.at(d + static_cast<int>(j), c);
            e %= a;
            if (e < 0) e += a;
        }
    }
    return lift;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json torsion_json(const std::vector<mpz_class>& torsion) {
    ordered_json out = ordered_json::array();
    for (const mpz_class& a : torsion) out.push_back(a.get_str());
    return out;
}

int render_result(const InputDocument& doc, const RenderOptions& options, std::ostream& out) {
    const PipelineResult result = run_pipeline(doc, !options.skip_fan_check);
    const Presentation pres = options.simplify ? simplify(result.chow) : result.chow;
    const CoxQuotientReport cox = assemble_block_matrix(result.sf);

    if (options.format == RenderFormat::json_doc) {
        ordered_json root = ordered_json::parse(render(pres, RenderFormat::json_doc));
        if (options.graded_degree >= 0) {
            const GradedTable table = graded_invariants(pres, options.graded_degree);
            ordered_json rows = ordered_json::array();
            for (size_t k = 0; k < table.rows.size(); ++k)
                rows.push_back({{"degree", k},
                                {"free_rank", table.rows[k].free_rank},
                                {"torsion", torsion_json(table.rows[k].torsion)}});
            root["graded"] = std::move(rows);
        }
        root["cox"] = {{"matrix", matrix_json(cox.matrix)},
                       {"character_group",
                        {{"rank", cox.character_group.rank},
                         {"torsion", torsion_json(cox.character_group.torsion)}}},
                       {"weights", matrix_json(cox.weights)}};
        out << root.dump(2) << "\n";
        return 0;
    }

    if (options.verbose) out << "lift (normalized):\n" << normalized_lift(result.sf).to_string();
    out << render(pres, options.format) << "\n";
    if (options.graded_degree >= 0) {
        const GradedTable table = graded_invariants(pres, options.graded_degree);
        for (size_t k = 0; k < table.rows.size(); ++k)
            out << "deg " << k << ": " << table.rows[k].to_string() << "\n";
    }
    out << "cox matrix:\n" << cox.matrix.to_string();
    out << "character group: " << group_text(cox.character_group) << "\n";
    out << "weights:\n" << cox.weights.to_string();
    return 0;
}

// Variable names in order of first appearance, using the relation grammar's
// identifier rule.
std::vector<std::string> scan_names(const std::string& text) {
    std::vector<std::string> names;
    size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
            std::string name;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                name.push_back(text[i++]);
            bool seen = false;
            for (const std::string& n : names) seen = seen || n == name;
            if (!seen) names.push_back(name);
        } else {
            ++i;
        }
    }
    return names;
}

Presentation target_presentation(const std::vector<std::string>& names,
                                 const std::string& relations) {
    std::vector<Variable> variables;
    for (const std::string& n : names) variables.push_back(Variable{n, 1});
    return Presentation(std::move(variables), {}, parse_relations(relations, names));
}

// A readable file is parsed as {"variables": [...], "relations": "..."};
// anything else is taken as an inline relation list with variable names
// inferred from first appearance.
Presentation parse_target(const std::string& value) {
    std::ifstream in(value, std::ios::binary);
    if (!in) return target_presentation(scan_names(value), value);

    std::ostringstream buffer;
    buffer << in.rdbuf();
    ordered_json doc;
    try {
        doc = ordered_json::parse(buffer.str());
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("target: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("target: document must be a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "variables" && it.key() != "relations")
            throw std::invalid_argument("target: unknown field '" + it.key() + "'");
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw std::invalid_argument("target: variables must be an array of names");
    if (!doc.contains("relations") || !doc["relations"].is_string())
        throw std::invalid_argument("target: relations must be a string");
    std::vector<std::string> names;
    for (const ordered_json& entry : doc["variables"]) {
        if (!entry.is_string())
            throw std::invalid_argument("target: variables must be an array of names");
        names.push_back(entry.get<std::string>());
    }
    return target_presentation(names, doc["relations"].get<std::string>());
}

}  // namespace

int cmd_check(const std::string& path, bool skip_fan_check, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&]() -> int {
        const InputDocument doc = load_input(path);
        const StackyFan sf = document_stacky_fan(doc, !skip_fan_check);
        bool fan_ok = true;
        if (skip_fan_check) {
            out << "fan: skipped\n";
        } else {
            const ValidationReport report = validate_fan(sf.fan);
            fan_ok = report.ok();
            if (fan_ok) {
                out << "fan: ok\n";
            } else {
                out << "fan: invalid (";
                for (size_t i = 0; i < report.violations.size(); ++i) {
                    if (i) out << "; ";
                    out << report.violations[i];
                }
                out << ")\n";
            }
        }
        const bool smooth = is_smooth(sf.fan);
        const bool torus = has_torus_factor(sf.fan);
        out << "smooth: " << (smooth ? "yes" : "no") << "\n";
        out << "torus factor: " << (torus ? "yes" : "no") << "\n";
        out << "cokernel finite: " << (cokernel_is_finite(sf) ? "yes" : "no") << "\n";
        const bool ok = fan_ok && smooth && !torus;
        out << "hypotheses: " << (ok ? "ok" : "violated") << "\n";
        return ok ? 0 : 1;
    });
}

int cmd_chow(const std::string& path, const RenderOptions& options, std::ostream& out,
             std::ostream& err) {
    return guarded(err, [&] { return render_result(load_input(path), options, out); });
}

int cmd_fantastack(const std::string& path, const RenderOptions& options, std::ostream& out,
                   std::ostream& err) {
    return guarded(err, [&] {
        const InputDocument doc = load_input(path);
        if (!doc.fantastack)
            throw std::invalid_argument("input: not a fantastack mode document");
        return render_result(doc, options, out);
    });
}

int cmd_compare(const std::string& path, const std::string& target, int max_degree,
                bool skip_fan_check, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const InputDocument doc = load_input(path);
        const PipelineResult left = run_pipeline(doc, !skip_fan_check);
        const Presentation right = parse_target(target);
        const GradedTable left_table = graded_invariants(left.chow, max_degree);
        const GradedTable right_table = graded_invariants(right, max_degree);
        int mismatch = -1;
        for (size_t k = 0; k < left_table.rows.size(); ++k) {
            out << "deg " << k << ": " << left_table.rows[k].to_string() << " | "
                << right_table.rows[k].to_string() << "\n";
            if (mismatch < 0 && !(left_table.rows[k] == right_table.rows[k]))
                mismatch = static_cast<int>(k);
        }
        if (mismatch < 0) {
            out << "PASS\n";
            return 0;
        }
        out << "FAIL at degree " << mismatch << "\n";
        return 1;
    });
}

int cmd_examples(const std::string& name, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&]() -> int {
        const std::string text = example_json(name);
        if (out_path.empty()) {
            out << text;
            return 0;
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("examples: cannot write '" + out_path + "'");
        file << text;
        return 0;
    });
}

}  // namespace stackchow
