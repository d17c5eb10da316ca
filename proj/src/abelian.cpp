#include "stackchow/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace stackchow {

FgAbelianGroup::FgAbelianGroup(int rank_in, std::vector<mpz_class> torsion_in) : rank(rank_in) {
    if (rank < 0) throw std::invalid_argument("FgAbelianGroup: negative rank");
    for (mpz_class& d : torsion_in) {
        if (d <= 0) throw std::invalid_argument("FgAbelianGroup: torsion coefficient must be positive");
        if (d == 1) {
            ++stripped_trivial;
            continue;
        }
        torsion.push_back(std::move(d));
    }
}

std::string FgAbelianGroup::to_string() const {
    if (rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const mpz_class& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

mpz_class floor_quot(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Canonical representative of row t modulo the row lattice of hnf, which must
// be of full rank (a pivot in every column).
std::vector<mpz_class> reduce_row(std::vector<mpz_class> t, const IntMatrix& hnf) {
    for (int i = 0; i < hnf.rows(); ++i) {
        int c = -1;
        for (int j = 0; j < hnf.cols(); ++j)
            if (hnf.at(i, j) != 0) {
                c = j;
                break;
            }
        if (c < 0) break;
        mpz_class q = floor_quot(t[c], hnf.at(i, c));
        if (q == 0) continue;
        for (int j = 0; j < hnf.cols(); ++j) t[j] -= q * hnf.at(i, j);
    }
    return t;
}

}  // namespace

CokernelResult cokernel(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    const int R = m.rows();
    const int n = std::min(R, m.cols());

    std::vector<int> free_idx, tors_idx;
    std::vector<mpz_class> tors;
    for (int i = 0; i < R; ++i) {
        const mpz_class d = i < n ? s.d.at(i, i) : mpz_class(0);
        if (d == 0) {
            free_idx.push_back(i);
        } else if (d > 1) {
            tors_idx.push_back(i);
            tors.push_back(d);
        }
    }

    // The free quotient map is canonical up to GL_k(Z) on the left, so its
    // row Hermite form is canonical.
    IntMatrix free_rows = row_hermite(s.u.select_rows(free_idx));

    // A torsion coordinate of modulus d may be shifted by d*Z^R, by the free
    // coordinates, and by earlier torsion coordinates scaled by d/d_j; reduce
    // against that lattice for a stable representative.
    IntMatrix proj(free_rows.rows() + static_cast<int>(tors_idx.size()), R);
    for (int i = 0; i < free_rows.rows(); ++i) proj.set_row(i, free_rows.row(i));
    std::vector<std::vector<mpz_class>> reduced_tors;
    for (size_t k = 0; k < tors_idx.size(); ++k) {
        const mpz_class& d = tors[k];
        IntMatrix shifts(0, R);
        IntMatrix scaled_id(R, R);
        for (int i = 0; i < R; ++i) scaled_id.at(i, i) = d;
        shifts = scaled_id.stacked(free_rows);
        for (size_t j = 0; j < k; ++j) {
            IntMatrix one(1, R);
            mpz_class f = d / tors[j];
            for (int c = 0; c < R; ++c) one.at(0, c) = f * reduced_tors[j][c];
            shifts = shifts.stacked(one);
        }
        std::vector<mpz_class> t = reduce_row(s.u.row(tors_idx[k]), row_hermite(shifts));
        reduced_tors.push_back(t);
        proj.set_row(free_rows.rows() + static_cast<int>(k), t);
    }

    return CokernelResult{FgAbelianGroup(static_cast<int>(free_idx.size()), tors), proj};
}

IntMatrix saturation(const IntMatrix& m) {
    return kernel(kernel(m.transposed()).transposed());
}

IntMatrix complement(const IntMatrix& sublattice_basis, int ambient_rank) {
    const IntMatrix& s = sublattice_basis;
    if (s.rows() != ambient_rank)
        throw std::invalid_argument("complement: basis does not live in the ambient lattice");
    if (s.cols() > ambient_rank)
        throw std::invalid_argument("complement: more basis vectors than the ambient rank");
    SnfResult snf = smith_normal_form(s);
    if (static_cast<int>(snf.invariant_factors.size()) < s.cols())
        throw std::invalid_argument("complement: basis vectors are not linearly independent");
    for (const mpz_class& d : snf.invariant_factors)
        if (d != 1) throw std::invalid_argument("complement: sublattice is not saturated");
    IntMatrix uinv = inverse_unimodular(snf.u);
    std::vector<int> idx;
    for (int j = s.cols(); j < ambient_rank; ++j) idx.push_back(j);
    return column_hermite(uinv.select_cols(idx));
}

}  // namespace stackchow
