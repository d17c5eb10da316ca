#pragma once

#include <vector>

#include "stackchow/abelian.hpp"
#include "stackchow/fan.hpp"
#include "stackchow/intmat.hpp"
#include "stackchow/presentation.hpp"

namespace stackchow {

// Non-strict stacky fan: a fan on Z^r together with a chosen lift B of a
// morphism beta into target = Z^d + Z/a_1 + ... + Z/a_s.  The lift is
// (d+s) x r; rows 0..d-1 are free coordinates, row d+j is read modulo
// a_{j+1}.  Torsion rows are kept exactly as given, never normalized.
struct StackyFan {
    Fan fan;
    FgAbelianGroup target;
    IntMatrix lift;

    StackyFan(Fan fan_in, FgAbelianGroup target_in, IntMatrix lift_in);
};

// The block matrix (F B^T; Q^T) together with its cokernel M and the quotient
// projection Z^{n+s} -> M, whose rows give the weight of each coordinate.
// Informational output; the ring computation does not consume it.
struct CoxQuotientReport {
    IntMatrix matrix;
    FgAbelianGroup character_group;
    IntMatrix weights;
};

// Theorem hypotheses: the fan is valid, smooth and has no torus factor.
// check_fan = false skips the fan validity phase (smoothness and torus
// checks still run).
ValidationReport validate_hypotheses(const StackyFan& sf, bool check_fan = true);

// Whether cok(beta) is finite: the free rows of the lift have rank d.
bool cokernel_is_finite(const StackyFan& sf);

struct SplitResult {
    int n0_rank;
    StackyFan reduced;
};

// Splits the target as N0 + N1 where N1 is the saturation of the free-part
// image plus all torsion.  The reduced stacky fan maps onto N1 (free rows
// rewritten in the saturation basis, torsion rows unchanged) and always has
// finite cokernel; n0_rank = d - rank(free rows).  Legal on finite-cokernel
// input, where n0_rank = 0 and reduced is equivalent to the input.
SplitResult split_infinite(const StackyFan& sf);

// Builds the block matrix and its cokernel report.
// pre: validate_hypotheses passed.
CoxQuotientReport assemble_block_matrix(const StackyFan& sf);

// Stanley-Reisner presentation: variables x_1..x_n (one per ray, input
// order) and y_1..y_s (one per torsion factor), all degree 1; monomial
// relations from the minimal non-faces; one linear relation per column of
// the block matrix (J1 from the first d columns, J2 from the last s).
// Requires the hypotheses and a finite cokernel.
Presentation stanley_reisner(const StackyFan& sf, bool check_fan = true);

// Chow ring presentation.  Finite cokernel: stanley_reisner.  Infinite:
// split_infinite, the reduced Stanley-Reisner ring, and n0_rank fresh free
// variables z_1.. inserted between the x and y blocks.
Presentation chow_ring(const StackyFan& sf, bool check_fan = true);

// The stacky fan induced by a fantastack datum: hat fan of the images on
// Z^n, target Z^d free, lift columns = images.  check_fan governs only the
// validity phase on the target fan.
StackyFan fantastack_stacky_fan(const Fan& target_fan,
                                const std::vector<std::vector<mpz_class>>& images,
                                bool check_fan = true);

// Chow ring of the fantastack: chow_ring of the induced stacky fan, which
// must have finite cokernel.
Presentation fantastack_chow(const Fan& target_fan,
                             const std::vector<std::vector<mpz_class>>& images,
                             bool check_fan = true);

}  // namespace stackchow
