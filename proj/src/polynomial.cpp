#include "stackchow/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace stackchow {

namespace {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void check_same_variables(const Polynomial& a, const Polynomial& b) {
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("polynomial: operands have different variable lists");
}

}  // namespace

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Polynomial Polynomial::constant(int var_count, const mpz_class& c) {
    Polynomial p(var_count);
    p.add_term(Exponents(var_count, 0), c);
    return p;
}

Polynomial Polynomial::variable(int var_count, int index) {
    Exponents e(var_count, 0);
    e.at(index) = 1;
    return monomial(var_count, e, 1);
}

Polynomial Polynomial::monomial(int var_count, const Exponents& e, const mpz_class& c) {
    Polynomial p(var_count);
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponents& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != var_count_)
        throw std::invalid_argument("polynomial: exponent vector has wrong length");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("polynomial: negative exponent");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_same_variables(*this, rhs);
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(var_count_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same_variables(*this, rhs);
    Polynomial out(var_count_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(var_count_);
            for (int i = 0; i < var_count_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return var_count_ == rhs.var_count_ && terms_ == rhs.terms_;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

Polynomial Polynomial::power(int k) const {
    if (k < 0) throw std::invalid_argument("polynomial: negative power");
    Polynomial out = constant(var_count_, 1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

Polynomial Polynomial::substituted(int index, const Polynomial& value) const {
    check_same_variables(*this, value);
    Polynomial out(var_count_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) {
            out.add_term(e, c);
            continue;
        }
        Exponents rest = e;
        rest[index] = 0;
        out = out + monomial(var_count_, rest, c) * value.power(e[index]);
    }
    return out;
}

Polynomial Polynomial::without_variable(int index) const {
    Polynomial out(var_count_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[index] != 0)
            throw std::logic_error("polynomial: dropped variable still occurs");
        Exponents shrunk;
        shrunk.reserve(e.size() - 1);
        for (int i = 0; i < var_count_; ++i)
            if (i != index) shrunk.push_back(e[i]);
        out.terms_.emplace(std::move(shrunk), c);
    }
    return out;
}

Polynomial Polynomial::sign_normalized() const {
    if (terms_.empty() || terms_.begin()->second > 0) return *this;
    return -*this;
}

}  // namespace stackchow
