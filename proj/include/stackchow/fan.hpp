#pragma once

#include <string>
#include <vector>

#include "stackchow/intmat.hpp"

namespace stackchow {

// Ray-index set of one cone, kept sorted ascending.
using ConeSet = std::vector<int>;

// Rational simplicial fan, given by primitive ray generators and the index
// sets of its maximal cones.  The zero cone is implicit; the trivial fan has
// no rays and max_cones = {{}}.  Construction checks shapes only (ray vector
// lengths, index range, repeated indices inside one cone); the mathematical
// requirements are the business of validate_fan.
class Fan {
public:
    Fan(int lattice_rank, std::vector<std::vector<mpz_class>> rays,
        std::vector<ConeSet> max_cones);

    int lattice_rank() const { return lattice_rank_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    const std::vector<mpz_class>& ray(int i) const { return rays_.at(i); }
    const std::vector<std::vector<mpz_class>>& rays() const { return rays_; }
    const std::vector<ConeSet>& max_cones() const { return max_cones_; }

    // Rows are the rays in input order; ray_count() x lattice_rank().
    IntMatrix ray_matrix() const;

private:
    int lattice_rank_;
    std::vector<std::vector<mpz_class>> rays_;
    std::vector<ConeSet> max_cones_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks primitivity, duplicate rays, containment among maximal cones, ray
// coverage, simpliciality, and pairwise compatibility: cone(s) meet cone(t)
// must equal the cone on their common rays.  All geometry is decided in
// exact rational arithmetic.
ValidationReport validate_fan(const Fan& f);

// Every maximal cone's rays extend to a basis of the lattice.
// pre: validate_fan(f) passed.
bool is_smooth(const Fan& f);

// The rays fail to span the ambient lattice over Q.
// pre: validate_fan(f) passed.
bool has_torus_factor(const Fan& f);

// All inclusion-minimal ray-index sets contained in no maximal cone, in
// lexicographic order.  Rejects fans with more than 32 rays.
// pre: validate_fan(f) passed.
std::vector<ConeSet> minimal_nonfaces(const Fan& f);

// Fan on Z^n, n = images.size(), whose rays are the standard basis vectors
// and whose maximal cones are the maximal sets among {i : images[i] lies in
// cone(s)} for maximal cones s of target.  Every image must lie in the
// support of target and every ray of target must contain a nonzero image;
// violations throw std::domain_error naming the offending image or ray.
// pre: validate_fan(target) passed.
Fan hat_fan(const Fan& target, const std::vector<std::vector<mpz_class>>& images);

}  // namespace stackchow
