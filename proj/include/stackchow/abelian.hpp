#pragma once

#include <string>
#include <vector>

#include "stackchow/intmat.hpp"

namespace stackchow {

// Finitely generated abelian group Z^rank + Z/torsion[0] + ...  Torsion
// coefficients are kept in the order given; trivial Z/1 factors are stripped
// at construction and counted in stripped_trivial.  Coefficients <= 0 are
// rejected.
struct FgAbelianGroup {
    int rank = 0;
    std::vector<mpz_class> torsion;
    int stripped_trivial = 0;

    FgAbelianGroup() = default;
    FgAbelianGroup(int rank_in, std::vector<mpz_class> torsion_in);

    bool is_finite() const { return rank == 0; }
    bool operator==(const FgAbelianGroup& rhs) const {
        return rank == rhs.rank && torsion == rhs.torsion;
    }
    bool operator!=(const FgAbelianGroup& rhs) const { return !(*this == rhs); }

    // "0", "Z", "Z^2 + Z/2 + Z/4", ...
    std::string to_string() const;
};

struct CokernelResult {
    FgAbelianGroup group;
    // Quotient map Z^m.rows -> Z^rank + torsion coordinates: one row per free
    // coordinate (the row Hermite basis of the free quotient, which is
    // canonical), then one row per torsion coordinate with entries reduced
    // into [0, d).
    IntMatrix projection;
};

// Cokernel Z^m.rows / column-span(m).
CokernelResult cokernel(const IntMatrix& m);

// Basis (as columns, column Hermite form) of the saturation of the column
// span of m inside Z^m.rows.
IntMatrix saturation(const IntMatrix& m);

// Basis (as columns, column Hermite form) of a direct complement of the
// saturated sublattice spanned by the columns of sublattice_basis.  Rejects
// bases that are not linearly independent or not saturated.
IntMatrix complement(const IntMatrix& sublattice_basis, int ambient_rank);

}  // namespace stackchow
