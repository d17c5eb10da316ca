#pragma once

#include <string>
#include <vector>

#include "stackchow/polynomial.hpp"

namespace stackchow {

struct Variable {
    std::string name;
    int degree = 1;

    bool operator==(const Variable& rhs) const {
        return name == rhs.name && degree == rhs.degree;
    }
};

// Z[variables] / (monomial relations + polynomial relations).  Monomial
// relations are squarefree monomials given as sorted variable-index sets;
// polynomial relations are homogeneous of degree >= 1 (the zero polynomial
// is allowed and carries no content).  All variables have degree 1.
struct Presentation {
    std::vector<Variable> variables;
    std::vector<std::vector<int>> monomial_relations;
    std::vector<Polynomial> polynomial_relations;

    Presentation() = default;
    Presentation(std::vector<Variable> vars, std::vector<std::vector<int>> mono,
                 std::vector<Polynomial> poly);

    int var_count() const { return static_cast<int>(variables.size()); }
    std::vector<std::string> variable_names() const;
};

// Degree-k component of the quotient ring as an abelian group.
struct GradedRow {
    int free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors >= 2

    bool operator==(const GradedRow& rhs) const {
        return free_rank == rhs.free_rank && torsion == rhs.torsion;
    }
    std::string to_string() const;
};

struct GradedTable {
    int max_degree = 0;
    std::vector<GradedRow> rows;  // rows[k] describes degree k

    bool operator==(const GradedTable& rhs) const {
        return max_degree == rhs.max_degree && rows == rhs.rows;
    }
    bool operator!=(const GradedTable& rhs) const { return !(*this == rhs); }
};

// Unit-coefficient linear elimination to fixpoint, scanning relations in
// stored order and eliminating the lowest-index variable whose entire
// occurrence in the relation is a single term with coefficient +-1.  When no
// elimination applies, all relations are linear, there are no monomial
// relations and the shape is not already diagonal, a Smith normal form
// change of degree-1 coordinates diagonalizes the relations (variables are
// renamed s.. for free and t.. for torsion coordinates).  Output relations
// are sign-normalized and zero relations dropped.
Presentation simplify(const Presentation& p);

// Degree-by-degree invariant factors of the quotient, degrees 0..max_degree.
// Caps: max_degree <= 12, at most 32 variables, and a guard on the monomial
// basis size per degree.
GradedTable graded_invariants(const Presentation& p, int max_degree);

bool graded_equal(const Presentation& p, const Presentation& q, int max_degree);

// Relation expressions: integer literals, variable names, + - * ^ with
// positive integer powers, parentheses; relations separated by commas or
// newlines; whitespace otherwise ignored.  Every relation must expand to a
// homogeneous polynomial.  Errors carry the 1-based text position.
std::vector<Polynomial> parse_relations(const std::string& text,
                                        const std::vector<std::string>& variable_names);

enum class RenderFormat { text, latex, json_doc };

// Deterministic rendering of the quotient ring.  text: Z[x1,y1]/(...) with
// explicit * and ^; latex: the same ring in \mathbb{Z}[x_1,y_1]/(...) form;
// json_doc: object with variables, monomial_relations and polynomial
// relation strings that re-parse to the identical polynomials.
std::string render(const Presentation& p, RenderFormat format);

std::string polynomial_text(const Polynomial& p, const std::vector<std::string>& names);
std::string polynomial_latex(const Polynomial& p, const std::vector<std::string>& names);
std::string monomial_text(const std::vector<int>& indices,
                          const std::vector<std::string>& names);

}  // namespace stackchow
