#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stackchow/intmat.hpp"
#include "stackchow/presentation.hpp"

namespace stackchow {

namespace {

constexpr int kMaxDegree = 12;
constexpr int kMaxVariables = 32;
constexpr long kMaxBasis = 50000;

mpz_class monomial_count(int vars, int degree) {
    if (vars == 0) return degree == 0 ? 1 : 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), vars + degree - 1, degree);
    return out;
}

// All exponent vectors of total degree k, lexicographically descending.
void enumerate(int vars, int remaining, Exponents& prefix, std::vector<Exponents>& out) {
    if (static_cast<int>(prefix.size()) == vars) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == vars - 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        prefix.push_back(e);
        enumerate(vars, remaining - e, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Exponents> degree_basis(int vars, int degree) {
    std::vector<Exponents> out;
    Exponents prefix;
    if (vars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    enumerate(vars, degree, prefix, out);
    return out;
}

Exponents exponent_sum(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

GradedRow degree_component(const Presentation& p, int k) {
    if (monomial_count(p.var_count(), k) > kMaxBasis)
        throw std::invalid_argument("graded: monomial basis exceeds 50000 elements in degree " +
                                    std::to_string(k));
    const std::vector<Exponents> basis = degree_basis(p.var_count(), k);
    std::map<Exponents, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::vector<std::vector<mpz_class>> rows;
    for (const auto& m : p.monomial_relations) {
        const int e = static_cast<int>(m.size());
        if (e > k) continue;
        Exponents me(p.var_count(), 0);
        for (int idx : m) me[idx] = 1;
        for (const auto& cofactor : degree_basis(p.var_count(), k - e)) {
            std::vector<mpz_class> row(basis.size(), 0);
            row[index.at(exponent_sum(me, cofactor))] = 1;
            rows.push_back(std::move(row));
        }
    }
    for (const auto& q : p.polynomial_relations) {
        const int e = q.degree();
        if (q.is_zero() || e > k) continue;
        for (const auto& cofactor : degree_basis(p.var_count(), k - e)) {
            std::vector<mpz_class> row(basis.size(), 0);
            for (const auto& [te, c] : q.terms()) row[index.at(exponent_sum(te, cofactor))] += c;
            rows.push_back(std::move(row));
        }
    }

    IntMatrix rel(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (size_t i = 0; i < rows.size(); ++i) rel.set_row(static_cast<int>(i), rows[i]);

    // Quotient of the free group on the basis by the relation rows; the
    // invariant factors are transpose-invariant, so no transposition needed.
    const std::vector<mpz_class> factors = invariant_factors(rel);
    GradedRow out;
    out.free_rank = static_cast<int>(basis.size()) - static_cast<int>(factors.size());
    for (const mpz_class& f : factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

}  // namespace

GradedTable graded_invariants(const Presentation& p, int max_degree) {
    if (max_degree < 0 || max_degree > kMaxDegree)
        throw std::invalid_argument("graded: max_degree must be between 0 and 12");
    if (p.var_count() > kMaxVariables)
        throw std::invalid_argument("graded: more than 32 variables");

    GradedTable table;
    table.max_degree = max_degree;
    for (int k = 0; k <= max_degree; ++k) table.rows.push_back(degree_component(p, k));
    return table;
}

bool graded_equal(const Presentation& p, const Presentation& q, int max_degree) {
    return graded_invariants(p, max_degree) == graded_invariants(q, max_degree);
}

}  // namespace stackchow
