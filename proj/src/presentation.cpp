#include "stackchow/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stackchow/abelian.hpp"

namespace stackchow {

Presentation::Presentation(std::vector<Variable> vars, std::vector<std::vector<int>> mono,
                           std::vector<Polynomial> poly)
    : variables(std::move(vars)),
      monomial_relations(std::move(mono)),
      polynomial_relations(std::move(poly)) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.degree != 1)
            throw std::invalid_argument("presentation: variable " + v.name +
                                        " must have degree 1");
        if (!seen.insert(v.name).second)
            throw std::invalid_argument("presentation: duplicate variable name " + v.name);
    }
    for (auto& m : monomial_relations) {
        std::sort(m.begin(), m.end());
        if (m.empty())
            throw std::invalid_argument("presentation: empty monomial relation");
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw std::invalid_argument("presentation: monomial relation is not squarefree");
        for (int idx : m)
            if (idx < 0 || idx >= var_count())
                throw std::invalid_argument("presentation: monomial relation index out of range");
    }
    for (const auto& p : polynomial_relations) {
        if (p.var_count() != var_count())
            throw std::invalid_argument("presentation: relation over wrong variable list");
        if (!p.is_homogeneous())
            throw std::invalid_argument("presentation: relation is not homogeneous");
        if (!p.is_zero() && p.degree() == 0)
            throw std::invalid_argument("presentation: relation is a nonzero constant");
    }
}

std::vector<std::string> Presentation::variable_names() const {
    std::vector<std::string> names;
    names.reserve(variables.size());
    for (const auto& v : variables) names.push_back(v.name);
    return names;
}

std::string GradedRow::to_string() const {
    return FgAbelianGroup(free_rank, torsion).to_string();
}

}  // namespace stackchow
