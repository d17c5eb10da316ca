#include <algorithm>
#include <string>

#include "stackchow/intmat.hpp"
#include "stackchow/presentation.hpp"

namespace stackchow {

namespace {

// The variable is eliminable through this relation when its entire
// occurrence is the single term +-1 * v.  Homogeneity then forces the
// relation to be linear.
bool eliminable(const Polynomial& rel, int v, mpz_class& unit) {
    const Polynomial::TermMap& terms = rel.terms();
    int hits = 0;
    for (const auto& [e, c] : terms) {
        if (e[v] == 0) continue;
        ++hits;
        if (hits > 1 || e[v] != 1) return false;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != v && e[i] != 0) return false;
        if (c != 1 && c != -1) return false;
        unit = c;
    }
    return hits == 1;
}

Polynomial monomial_product(int var_count, const std::vector<int>& indices) {
    Exponents e(var_count, 0);
    for (int idx : indices) e[idx] = 1;
    return Polynomial::monomial(var_count, e, 1);
}

bool single_variable_term(const Polynomial& rel, int& var) {
    if (rel.terms().size() != 1) return false;
    const Exponents& e = rel.terms().begin()->first;
    var = -1;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] != 1 || var >= 0) return false;
        var = static_cast<int>(i);
    }
    return var >= 0;
}

// Relations already of the shape d_i * (distinct variables) are the fixpoint
// of the diagonalization step and are left untouched.
bool already_diagonal(const std::vector<Polynomial>& rels) {
    std::vector<char> used;
    for (const auto& rel : rels) {
        if (rel.is_zero()) continue;
        int var = -1;
        if (!single_variable_term(rel, var)) return false;
        used.resize(std::max(used.size(), static_cast<size_t>(var) + 1), 0);
        if (used[var]) return false;
        used[var] = 1;
    }
    return true;
}

void eliminate(Presentation& p, size_t rel_idx, int v, const mpz_class& unit) {
    // unit * v + rest = 0, so v = -unit * rest.
    Polynomial rest = p.polynomial_relations[rel_idx];
    Exponents ev(p.var_count(), 0);
    ev[v] = 1;
    rest.add_term(ev, -unit);
    Polynomial value = unit == 1 ? -rest : std::move(rest);

    for (size_t i = 0; i < p.polynomial_relations.size(); ++i) {
        if (i == rel_idx) continue;
        p.polynomial_relations[i] = p.polynomial_relations[i].substituted(v, value);
    }
    p.polynomial_relations.erase(p.polynomial_relations.begin() + rel_idx);

    std::vector<std::vector<int>> kept_monomials;
    for (const auto& m : p.monomial_relations) {
        if (std::find(m.begin(), m.end(), v) == m.end()) {
            kept_monomials.push_back(m);
            continue;
        }
        p.polynomial_relations.push_back(
            monomial_product(p.var_count(), m).substituted(v, value));
    }
    p.monomial_relations = std::move(kept_monomials);

    for (auto& q : p.polynomial_relations) q = q.without_variable(v);
    for (auto& m : p.monomial_relations)
        for (auto& idx : m)
            if (idx > v) --idx;
    p.variables.erase(p.variables.begin() + v);
}

// Linear relations with no unit coefficient and no monomial relations left:
// the quotient in degree 1 is the cokernel of the coefficient matrix, and
// the ring is its symmetric algebra.  Diagonalize by Smith normal form and
// name the surviving coordinates s (free) and t (torsion).
Presentation diagonalize_linear(const Presentation& p) {
    std::vector<const Polynomial*> rels;
    for (const auto& q : p.polynomial_relations)
        if (!q.is_zero()) rels.push_back(&q);

    IntMatrix m(static_cast<int>(rels.size()), p.var_count());
    for (size_t i = 0; i < rels.size(); ++i) {
        for (const auto& [e, c] : rels[i]->terms()) {
            for (int j = 0; j < p.var_count(); ++j)
                if (e[j] == 1) m.at(static_cast<int>(i), j) = c;
        }
    }
    const SnfResult s = smith_normal_form(m);

    std::vector<mpz_class> torsion;
    for (const auto& d : s.invariant_factors)
        if (d > 1) torsion.push_back(d);
    const int free_count = p.var_count() - static_cast<int>(s.invariant_factors.size());
    const int tors_count = static_cast<int>(torsion.size());

    auto name_block = [](const std::string& stem, int count, int k) {
        return count == 1 ? stem : stem + std::to_string(k + 1);
    };
    std::vector<Variable> vars;
    for (int k = 0; k < free_count; ++k) vars.push_back({name_block("s", free_count, k), 1});
    for (int k = 0; k < tors_count; ++k) vars.push_back({name_block("t", tors_count, k), 1});

    std::vector<Polynomial> out;
    for (int k = 0; k < tors_count; ++k) {
        Exponents e(free_count + tors_count, 0);
        e[free_count + k] = 1;
        out.push_back(Polynomial::monomial(free_count + tors_count, e, torsion[k]));
    }
    return Presentation(std::move(vars), {}, std::move(out));
}

}  // namespace

Presentation simplify(const Presentation& input) {
    Presentation p = input;
    for (;;) {
        bool eliminated = false;
        for (size_t i = 0; i < p.polynomial_relations.size() && !eliminated; ++i) {
            for (int v = 0; v < p.var_count() && !eliminated; ++v) {
                mpz_class unit;
                if (eliminable(p.polynomial_relations[i], v, unit)) {
                    eliminate(p, i, v, unit);
                    eliminated = true;
                }
            }
        }
        if (!eliminated) break;
    }

    bool all_linear = false;
    if (p.monomial_relations.empty()) {
        all_linear = true;
        bool any = false;
        for (const auto& q : p.polynomial_relations) {
            if (q.is_zero()) continue;
            any = true;
            if (q.degree() != 1) all_linear = false;
        }
        all_linear = all_linear && any;
    }
    if (all_linear && !already_diagonal(p.polynomial_relations)) return diagonalize_linear(p);

    std::vector<Polynomial> cleaned;
    for (const auto& q : p.polynomial_relations)
        if (!q.is_zero()) cleaned.push_back(q.sign_normalized());
    p.polynomial_relations = std::move(cleaned);
    return p;
}

}  // namespace stackchow
