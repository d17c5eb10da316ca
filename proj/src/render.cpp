#include <json.hpp>

#include <cctype>

#include "stackchow/presentation.hpp"

namespace stackchow {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Trailing digits become a subscript: x12 -> x_{12}.
std::string latex_name(const std::string& name) {
    size_t cut = name.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
    if (cut == name.size() || cut == 0) return name;
    const std::string digits = name.substr(cut);
    const std::string head = name.substr(0, cut);
    if (digits.size() == 1) return head + "_" + digits;
    return head + "_{" + digits + "}";
}

std::string power_text(const std::string& var, int e, bool latex) {
    if (e == 1) return var;
    const std::string exp = std::to_string(e);
    if (latex && exp.size() > 1) return var + "^{" + exp + "}";
    return var + "^" + exp;
}

std::string term_body(const Exponents& e, const mpz_class& abs_coeff,
                      const std::vector<std::string>& names, bool latex) {
    std::vector<std::string> factors;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0)
            factors.push_back(power_text(latex ? latex_name(names[i]) : names[i], e[i], latex));
    if (factors.empty()) return abs_coeff.get_str();
    const std::string vars = join(factors, latex ? "" : "*");
    if (abs_coeff == 1) return vars;
    return abs_coeff.get_str() + (latex ? "" : "*") + vars;
}

std::string polynomial_string(const Polynomial& p, const std::vector<std::string>& names,
                              bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? "-" : "+";
        }
        out += term_body(e, abs(c), names, latex);
    }
    return out;
}

std::vector<std::string> relation_strings(const Presentation& p, bool latex) {
    const std::vector<std::string> names = p.variable_names();
    std::vector<std::string> rels;
    for (const auto& q : p.polynomial_relations)
        rels.push_back(polynomial_string(q, names, latex));
    for (const auto& m : p.monomial_relations) {
        std::vector<std::string> factors;
        for (int idx : m) factors.push_back(latex ? latex_name(names[idx]) : names[idx]);
        rels.push_back(join(factors, latex ? "" : "*"));
    }
    return rels;
}

std::string ring_string(const Presentation& p, bool latex) {
    const std::string z = latex ? "\\mathbb{Z}" : "Z";
    if (p.variables.empty()) return z;
    std::vector<std::string> names = p.variable_names();
    if (latex)
        for (auto& n : names) n = latex_name(n);
    std::string out = z + "[" + join(names, ",") + "]";
    const std::vector<std::string> rels = relation_strings(p, latex);
    if (rels.empty()) return out + "/(0)";
    return out + "/(" + join(rels, ", ") + ")";
}

}  // namespace

std::string polynomial_text(const Polynomial& p, const std::vector<std::string>& names) {
    return polynomial_string(p, names, false);
}

std::string polynomial_latex(const Polynomial& p, const std::vector<std::string>& names) {
    return polynomial_string(p, names, true);
}

std::string monomial_text(const std::vector<int>& indices,
                          const std::vector<std::string>& names) {
    std::vector<std::string> factors;
    for (int idx : indices) factors.push_back(names[idx]);
    return join(factors, "*");
}

std::string render(const Presentation& p, RenderFormat format) {
    if (format == RenderFormat::text || format == RenderFormat::latex)
        return ring_string(p, format == RenderFormat::latex);

    nlohmann::ordered_json doc;
    doc["variables"] = nlohmann::ordered_json::array();
    for (const auto& v : p.variables)
        doc["variables"].push_back({{"name", v.name}, {"degree", v.degree}});
    doc["monomial_relations"] = p.monomial_relations;
    doc["polynomial_relations"] = nlohmann::ordered_json::array();
    const std::vector<std::string> names = p.variable_names();
    for (const auto& q : p.polynomial_relations)
        doc["polynomial_relations"].push_back(polynomial_string(q, names, false));
    return doc.dump(2);
}

}  // namespace stackchow
