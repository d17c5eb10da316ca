#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stackchow/polynomial.hpp"

using stackchow::Exponents;
using stackchow::GrlexDesc;
using stackchow::Polynomial;

namespace {

Polynomial random_polynomial(std::mt19937& gen) {
    std::uniform_int_distribution<int> term_count(0, 4);
    std::uniform_int_distribution<int> exponent(0, 3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    Polynomial p(3);
    const int n = term_count(gen);
    for (int t = 0; t < n; ++t) {
        Exponents e = {exponent(gen), exponent(gen), exponent(gen)};
        p.add_term(e, coeff(gen));
    }
    return p;
}

}  // namespace

TEST_CASE("grlex order: degree first, then lexicographic, descending") {
    GrlexDesc less;
    CHECK(less({0, 2}, {1, 0}));   // degree 2 before degree 1
    CHECK(less({3, 0}, {2, 1}));   // same degree, lex larger first
    CHECK(less({2, 1}, {1, 2}));
    CHECK(less({1, 1, 1}, {0, 3, 0}));
    CHECK_FALSE(less({1, 0}, {0, 2}));
    CHECK_FALSE(less({2, 0}, {2, 0}));

    Polynomial p(2);
    p.add_term({0, 1}, 5);
    p.add_term({2, 0}, 1);
    p.add_term({1, 1}, -3);
    std::vector<Exponents> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    CHECK(order == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("add_term fuses and drops zero coefficients") {
    Polynomial p(2);
    p.add_term({1, 0}, 4);
    p.add_term({1, 0}, -1);
    CHECK(p.terms().size() == 1);
    CHECK(p.terms().begin()->second == 3);
    p.add_term({1, 0}, -3);
    CHECK(p.is_zero());

    CHECK_THROWS_AS(p.add_term({1, 0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term({-1, 0}, 1), std::invalid_argument);
}

TEST_CASE("cubic product expands to the known form") {
    // (x + 2y)(x + 6y)(x + 8y) = x^3 + 16x^2y + 76xy^2 + 96y^3
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);
    const Polynomial two = Polynomial::constant(2, 2);
    const Polynomial six = Polynomial::constant(2, 6);
    const Polynomial eight = Polynomial::constant(2, 8);
    const Polynomial product = (x + two * y) * (x + six * y) * (x + eight * y);

    Polynomial expected(2);
    expected.add_term({3, 0}, 1);
    expected.add_term({2, 1}, 16);
    expected.add_term({1, 2}, 76);
    expected.add_term({0, 3}, 96);
    CHECK(product == expected);
    CHECK(product.is_homogeneous());
    CHECK(product.degree() == 3);
}

TEST_CASE("multiplication by one is the identity") {
    std::mt19937 gen(7);
    const Polynomial one = Polynomial::constant(3, 1);
    for (int i = 0; i < 20; ++i) {
        const Polynomial p = random_polynomial(gen);
        CHECK(p * one == p);
        CHECK(one * p == p);
    }
}

TEST_CASE("substitution x1 -> x2 - 2*y1 sends 2x1 - 3x2 to -x2 - 4y1") {
    // Variables indexed x1, x2, y1.
    Polynomial value(3);
    value.add_term({0, 1, 0}, 1);
    value.add_term({0, 0, 1}, -2);
    Polynomial rel(3);
    rel.add_term({1, 0, 0}, 2);
    rel.add_term({0, 1, 0}, -3);

    Polynomial expected(3);
    expected.add_term({0, 1, 0}, -1);
    expected.add_term({0, 0, 1}, -4);
    CHECK(rel.substituted(0, value) == expected);
}

TEST_CASE("substitution leaves untouched variables alone") {
    Polynomial p(2);
    p.add_term({0, 2}, 5);
    const Polynomial value = Polynomial::variable(2, 1);
    CHECK(p.substituted(0, value) == p);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 gen(20260817);
    for (int i = 0; i < 60; ++i) {
        const Polynomial a = random_polynomial(gen);
        const Polynomial b = random_polynomial(gen);
        const Polynomial c = random_polynomial(gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - b == a + (-b));
        CHECK(a - a == Polynomial(3));
    }
}

TEST_CASE("operands must share the variable list") {
    const Polynomial a = Polynomial::variable(2, 0);
    const Polynomial b = Polynomial::variable(3, 0);
    CHECK_THROWS_WITH_AS(a + b, "polynomial: operands have different variable lists",
                         std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a - b, std::invalid_argument);
}

TEST_CASE("homogeneity and degree") {
    const Polynomial zero(2);
    CHECK(zero.is_homogeneous());
    CHECK(zero.degree() == -1);

    Polynomial quad(2);
    quad.add_term({2, 0}, 1);
    quad.add_term({1, 1}, -7);
    CHECK(quad.is_homogeneous());
    CHECK(quad.degree() == 2);

    Polynomial mixed(2);
    mixed.add_term({2, 0}, 1);
    mixed.add_term({1, 0}, 1);
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(mixed.degree() == 2);

    CHECK(Polynomial::constant(2, 5).degree() == 0);
    CHECK(Polynomial::constant(2, 5).is_homogeneous());
}

TEST_CASE("powers") {
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);
    const Polynomial s = x + y;
    CHECK(s.power(0) == Polynomial::constant(2, 1));
    CHECK(s.power(1) == s);

    Polynomial square(2);
    square.add_term({2, 0}, 1);
    square.add_term({1, 1}, 2);
    square.add_term({0, 2}, 1);
    CHECK(s.power(2) == square);
    CHECK(s.power(3) == square * s);
    CHECK_THROWS_AS(s.power(-1), std::invalid_argument);
}

TEST_CASE("dropping an absent variable reindexes the rest") {
    Polynomial p(3);
    p.add_term({1, 0, 2}, 3);
    p.add_term({0, 0, 1}, -1);
    const Polynomial q = p.without_variable(1);
    CHECK(q.var_count() == 2);

    Polynomial expected(2);
    expected.add_term({1, 2}, 3);
    expected.add_term({0, 1}, -1);
    CHECK(q == expected);

    CHECK_THROWS_WITH_AS(p.without_variable(0), "polynomial: dropped variable still occurs",
                         std::logic_error);
}

TEST_CASE("sign normalization flips a negative leading coefficient") {
    Polynomial p(2);
    p.add_term({2, 0}, -1);
    p.add_term({0, 2}, 4);
    const Polynomial n = p.sign_normalized();
    CHECK(n.terms().begin()->second == 1);
    CHECK(n == -p);

    Polynomial q(2);
    q.add_term({2, 0}, 3);
    CHECK(q.sign_normalized() == q);
    CHECK(Polynomial(2).sign_normalized() == Polynomial(2));
}
