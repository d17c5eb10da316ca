#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace stackchow {

using Exponents = std::vector<int>;

// Graded lexicographic order, descending: higher total degree first, then
// the lexicographically larger exponent vector.  The leading term of a
// polynomial is therefore the first stored term.
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Polynomial over Z in a fixed number of variables, identified by index.
// Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, mpz_class, GrlexDesc>;

    explicit Polynomial(int var_count) : var_count_(var_count) {}

    static Polynomial constant(int var_count, const mpz_class& c);
    static Polynomial variable(int var_count, int index);
    static Polynomial monomial(int var_count, const Exponents& e, const mpz_class& c);

    int var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const mpz_class& c);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // The zero polynomial is homogeneous; its degree is -1.
    bool is_homogeneous() const;
    int degree() const;

    Polynomial power(int k) const;  // k >= 0

    // Replaces one variable by a polynomial over the same variable list.
    Polynomial substituted(int index, const Polynomial& value) const;

    // Drops a variable occurring in no term; higher indices shift down.
    Polynomial without_variable(int index) const;

    // Leading coefficient made positive.
    Polynomial sign_normalized() const;

private:
    int var_count_ = 0;
    TermMap terms_;
};

}  // namespace stackchow
