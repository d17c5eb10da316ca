#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stackchow/stacky.hpp"

namespace stackchow {

namespace {

int torsion_count(const StackyFan& sf) {
    return static_cast<int>(sf.target.torsion.size());
}

IntMatrix free_rows(const StackyFan& sf) {
    std::vector<int> idx(sf.target.rank);
    for (int i = 0; i < sf.target.rank; ++i) idx[i] = i;
    return sf.lift.select_rows(idx);
}

IntMatrix torsion_rows(const StackyFan& sf) {
    std::vector<int> idx(torsion_count(sf));
    for (int j = 0; j < torsion_count(sf); ++j) idx[j] = sf.target.rank + j;
    return sf.lift.select_rows(idx);
}

// (F B^T; Q^T): n rows of ray-weighted lift columns, then s torsion rows.
IntMatrix block_matrix(const StackyFan& sf) {
    const int d = sf.target.rank;
    const int s = torsion_count(sf);
    const IntMatrix top = sf.fan.ray_matrix() * sf.lift.transposed();
    IntMatrix qt(s, d + s);
    for (int j = 0; j < s; ++j) qt.at(j, d + j) = sf.target.torsion[j];
    return top.stacked(qt);
}

void require_hypotheses(const StackyFan& sf, bool check_fan) {
    const ValidationReport report = validate_hypotheses(sf, check_fan);
    if (!report.ok())
        throw std::domain_error("stacky fan hypotheses violated: " + report.violations.front());
}

// Variables x1..xn, y1..ys; relations read off the block matrix columns.
Presentation stanley_reisner_impl(const StackyFan& sf) {
    const int n = sf.fan.ray_count();
    const int d = sf.target.rank;
    const int s = torsion_count(sf);
    const IntMatrix block = block_matrix(sf);

    std::vector<Variable> vars;
    for (int i = 0; i < n; ++i) vars.push_back({"x" + std::to_string(i + 1), 1});
    for (int j = 0; j < s; ++j) vars.push_back({"y" + std::to_string(j + 1), 1});

    std::vector<Polynomial> relations;
    for (int c = 0; c < d + s; ++c) {
        Polynomial rel(n + s);
        for (int i = 0; i < n + s; ++i) {
            if (block.at(i, c) == 0) continue;
            Exponents e(n + s, 0);
            e[i] = 1;
            rel.add_term(e, block.at(i, c));
        }
        relations.push_back(std::move(rel));
    }
    return Presentation(std::move(vars), minimal_nonfaces(sf.fan), std::move(relations));
}

}  // namespace

StackyFan::StackyFan(Fan fan_in, FgAbelianGroup target_in, IntMatrix lift_in)
    : fan(std::move(fan_in)), target(std::move(target_in)), lift(std::move(lift_in)) {
    const int expected_rows = target.rank + static_cast<int>(target.torsion.size());
    if (lift.rows() != expected_rows)
        throw std::invalid_argument("stacky fan: lift has " + std::to_string(lift.rows()) +
                                    " rows, expected " + std::to_string(expected_rows));
    if (lift.cols() != fan.lattice_rank())
        throw std::invalid_argument("stacky fan: lift has " + std::to_string(lift.cols()) +
                                    " columns, expected " +
                                    std::to_string(fan.lattice_rank()));
}

ValidationReport validate_hypotheses(const StackyFan& sf, bool check_fan) {
    ValidationReport report;
    if (check_fan) report = validate_fan(sf.fan);
    if (!is_smooth(sf.fan)) report.violations.push_back("fan is not smooth");
    if (has_torus_factor(sf.fan)) report.violations.push_back("fan has a torus factor");
    return report;
}

bool cokernel_is_finite(const StackyFan& sf) {
    return rank(free_rows(sf)) == sf.target.rank;
}

SplitResult split_infinite(const StackyFan& sf) {
    const int d = sf.target.rank;
    const IntMatrix b_free = free_rows(sf);
    const IntMatrix sat = saturation(b_free);  // d x k, columns a basis of N1's free part
    const int k = sat.cols();

    // Rewrite the free rows in the saturation basis: solve sat * c = b_free.
    const SnfResult s = smith_normal_form(sat);
    IntMatrix c(k, b_free.cols());
    for (int col = 0; col < b_free.cols(); ++col) {
        std::vector<mpz_class> w(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) w[i] += s.u.at(i, j) * b_free.at(j, col);
        std::vector<mpz_class> z(k);
        for (int i = 0; i < d; ++i) {
            if (i < k) {
                if (w[i] % s.d.at(i, i) != 0)
                    throw std::logic_error("split_infinite: lift escapes its saturation");
                z[i] = w[i] / s.d.at(i, i);
            } else if (w[i] != 0) {
                throw std::logic_error("split_infinite: lift escapes its saturation");
            }
        }
        for (int i = 0; i < k; ++i) {
            mpz_class y;
            for (int j = 0; j < k; ++j) y += s.v.at(i, j) * z[j];
            c.at(i, col) = y;
        }
    }

    StackyFan reduced(sf.fan, FgAbelianGroup(k, sf.target.torsion),
                      c.stacked(torsion_rows(sf)));
    return SplitResult{d - k, std::move(reduced)};
}

CoxQuotientReport assemble_block_matrix(const StackyFan& sf) {
    const IntMatrix block = block_matrix(sf);
    CokernelResult cok = cokernel(block);
    return CoxQuotientReport{block, std::move(cok.group), std::move(cok.projection)};
}

Presentation stanley_reisner(const StackyFan& sf, bool check_fan) {
    require_hypotheses(sf, check_fan);
    if (!cokernel_is_finite(sf))
        throw std::domain_error("stanley_reisner: cokernel is not finite");
    return stanley_reisner_impl(sf);
}

Presentation chow_ring(const StackyFan& sf, bool check_fan) {
    require_hypotheses(sf, check_fan);
    if (cokernel_is_finite(sf)) return stanley_reisner_impl(sf);

    const SplitResult split = split_infinite(sf);
    const Presentation inner = stanley_reisner_impl(split.reduced);

    const int n = sf.fan.ray_count();
    const int s = torsion_count(sf);
    const int z = split.n0_rank;

    std::vector<Variable> vars;
    for (int i = 0; i < n; ++i) vars.push_back({"x" + std::to_string(i + 1), 1});
    for (int i = 0; i < z; ++i) vars.push_back({"z" + std::to_string(i + 1), 1});
    for (int j = 0; j < s; ++j) vars.push_back({"y" + std::to_string(j + 1), 1});

    // Re-embed the reduced relations: x indices keep, y indices shift past z.
    std::vector<Polynomial> relations;
    for (const auto& rel : inner.polynomial_relations) {
        Polynomial widened(n + z + s);
        for (const auto& [e, coeff] : rel.terms()) {
            Exponents we(n + z + s, 0);
            for (int i = 0; i < n; ++i) we[i] = e[i];
            for (int j = 0; j < s; ++j) we[n + z + j] = e[n + j];
            widened.add_term(we, coeff);
        }
        relations.push_back(std::move(widened));
    }
    return Presentation(std::move(vars), inner.monomial_relations, std::move(relations));
}

StackyFan fantastack_stacky_fan(const Fan& target_fan,
                                const std::vector<std::vector<mpz_class>>& images,
                                bool check_fan) {
    if (check_fan) {
        const ValidationReport report = validate_fan(target_fan);
        if (!report.ok())
            throw std::domain_error("fantastack: target fan invalid: " +
                                    report.violations.front());
    }

    Fan hat = hat_fan(target_fan, images);
    const int d = target_fan.lattice_rank();
    const int n = static_cast<int>(images.size());
    IntMatrix lift(d, n);
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < d; ++row) lift.at(row, col) = images[col][row];
    return StackyFan(std::move(hat), FgAbelianGroup(d, {}), std::move(lift));
}

Presentation fantastack_chow(const Fan& target_fan,
                             const std::vector<std::vector<mpz_class>>& images,
                             bool check_fan) {
    const StackyFan induced = fantastack_stacky_fan(target_fan, images, check_fan);
    require_hypotheses(induced, true);
    if (!cokernel_is_finite(induced))
        throw std::domain_error("fantastack: cokernel is not finite");
    return stanley_reisner_impl(induced);
}

}  // namespace stackchow
