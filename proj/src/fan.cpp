#include "stackchow/fan.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>

namespace stackchow {

namespace {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// One rational solution of a x = b, free variables pinned to zero.  Returns
// false when the system is inconsistent.
bool solve_rational(QMat a, QVec b, int cols, QVec& out) {
    const int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const mpq_class piv = a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] /= piv;
        b[r] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class factor = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
            b[i] -= factor * b[r];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return false;
    out.assign(cols, mpq_class(0));
    for (int i = 0; i < r; ++i) out[pivot_col[i]] = b[i];
    return true;
}

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] * b[i];
    return d;
}

bool all_zero(const std::vector<mpz_class>& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

std::vector<mpz_class> clear_denominators(const QVec& v) {
    mpz_class l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(v.size());
    for (const auto& q : v) {
        const mpq_class scaled = q * mpq_class(l);
        out.push_back(scaled.get_num());
    }
    return out;
}

// Membership of g in the cone spanned by the rows of rays; the rows must be
// linearly independent, so the coefficient solution is unique.
bool in_simplicial_cone(const IntMatrix& rays, const std::vector<mpz_class>& g) {
    const int k = rays.rows();
    if (k == 0) return all_zero(g);
    const int r = rays.cols();
    QMat a(r, QVec(k));
    QVec b(r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = mpq_class(rays.at(j, i));
        b[i] = mpq_class(g[i]);
    }
    QVec coeff;
    if (!solve_rational(a, b, k, coeff)) return false;
    for (const auto& c : coeff)
        if (c < 0) return false;
    return true;
}

// Half-space description of a simplicial cone: equality rows cut out its
// linear span, inequality rows recover the (unique) nonnegative coordinates
// inside the span.
struct HRep {
    IntMatrix equalities;
    std::vector<std::vector<mpz_class>> inequalities;
};

HRep simplicial_hrep(const IntMatrix& rays) {
    const int k = rays.rows();
    const int r = rays.cols();
    HRep h;
    h.equalities = kernel(rays).transposed();
    QMat a(k, QVec(r));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = mpq_class(rays.at(i, j));
    for (int i = 0; i < k; ++i) {
        QVec rhs(k, mpq_class(0));
        rhs[i] = 1;
        QVec w;
        if (!solve_rational(a, rhs, r, w))
            throw std::invalid_argument("simplicial_hrep: rays are dependent");
        h.inequalities.push_back(clear_denominators(w));
    }
    return h;
}

// Generators of the intersection of two simplicial cones, by the naive
// double description run over the joint equality subspace.  The output may
// list redundant generators; every listed vector is primitive.
std::vector<std::vector<mpz_class>> intersection_generators(const HRep& a, const HRep& b) {
    const IntMatrix joint = a.equalities.stacked(b.equalities);
    const IntMatrix basis = kernel(joint);
    std::vector<std::vector<mpz_class>> gens;
    for (int j = 0; j < basis.cols(); ++j) {
        std::vector<mpz_class> v = basis.col(j);
        gens.push_back(v);
        for (auto& e : v) e = -e;
        gens.push_back(v);
    }
    auto cut = [&gens](const std::vector<mpz_class>& w) {
        std::vector<std::vector<mpz_class>> pos, neg;
        std::set<std::vector<mpz_class>> next;
        for (const auto& g : gens) {
            const int s = sgn(dot(w, g));
            if (s > 0) pos.push_back(g);
            else if (s < 0) neg.push_back(g);
            else next.insert(g);
        }
        for (const auto& p : pos) next.insert(p);
        for (const auto& p : pos) {
            const mpz_class wp = dot(w, p);
            for (const auto& n : neg) {
                const mpz_class wn = dot(w, n);
                std::vector<mpz_class> comb(p.size());
                for (size_t i = 0; i < p.size(); ++i) comb[i] = wp * n[i] - wn * p[i];
                if (!all_zero(comb)) next.insert(primitive(comb));
            }
        }
        gens.assign(next.begin(), next.end());
    };
    for (const auto& w : a.inequalities) cut(w);
    for (const auto& w : b.inequalities) cut(w);
    return gens;
}

bool is_face_of_some(const std::vector<ConeSet>& max_cones, const ConeSet& r) {
    for (const auto& c : max_cones)
        if (std::includes(c.begin(), c.end(), r.begin(), r.end())) return true;
    return false;
}

}  // namespace

Fan::Fan(int lattice_rank, std::vector<std::vector<mpz_class>> rays,
         std::vector<ConeSet> max_cones)
    : lattice_rank_(lattice_rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (lattice_rank_ < 0) throw std::invalid_argument("fan: negative lattice rank");
    for (size_t i = 0; i < rays_.size(); ++i) {
        if (static_cast<int>(rays_[i].size()) != lattice_rank_)
            throw std::invalid_argument("fan: ray " + std::to_string(i) + " has length " +
                                        std::to_string(rays_[i].size()) + ", expected " +
                                        std::to_string(lattice_rank_));
    }
    for (size_t c = 0; c < max_cones_.size(); ++c) {
        auto& cone = max_cones_[c];
        std::sort(cone.begin(), cone.end());
        for (int idx : cone) {
            if (idx < 0 || idx >= ray_count())
                throw std::invalid_argument("fan: max cone " + std::to_string(c) +
                                            " mentions ray " + std::to_string(idx) +
                                            ", but there are " + std::to_string(ray_count()) +
                                            " rays");
        }
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
            throw std::invalid_argument("fan: max cone " + std::to_string(c) +
                                        " repeats a ray index");
    }
}

IntMatrix Fan::ray_matrix() const {
    IntMatrix m(ray_count(), lattice_rank_);
    for (int i = 0; i < ray_count(); ++i) m.set_row(i, rays_[i]);
    return m;
}

ValidationReport validate_fan(const Fan& f) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

    const int n = f.ray_count();
    for (int i = 0; i < n; ++i) {
        if (all_zero(f.ray(i))) flag("ray " + std::to_string(i) + " is zero");
        else if (primitive(f.ray(i)) != f.ray(i))
            flag("ray " + std::to_string(i) + " is not primitive");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (f.ray(i) == f.ray(j))
                flag("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    const auto& cones = f.max_cones();
    const int m = static_cast<int>(cones.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (cones[a] == cones[b])
                flag("max cones " + std::to_string(a) + " and " + std::to_string(b) +
                     " coincide");
            else if (std::includes(cones[b].begin(), cones[b].end(), cones[a].begin(),
                                   cones[a].end()))
                flag("max cone " + std::to_string(a) + " is contained in max cone " +
                     std::to_string(b));
            else if (std::includes(cones[a].begin(), cones[a].end(), cones[b].begin(),
                                   cones[b].end()))
                flag("max cone " + std::to_string(b) + " is contained in max cone " +
                     std::to_string(a));
        }
    }

    std::vector<char> covered(n, 0);
    for (const auto& c : cones)
        for (int idx : c) covered[idx] = 1;
    for (int i = 0; i < n; ++i)
        if (!covered[i]) flag("ray " + std::to_string(i) + " lies in no max cone");

    const IntMatrix rays = f.ray_matrix();
    std::vector<char> simplicial(m, 1);
    for (int a = 0; a < m; ++a) {
        const IntMatrix sel = rays.select_rows(cones[a]);
        if (rank(sel) != sel.rows()) {
            simplicial[a] = 0;
            flag("max cone " + std::to_string(a) + " is not simplicial");
        }
    }

    for (int a = 0; a < m; ++a) {
        if (!simplicial[a]) continue;
        const HRep ha = simplicial_hrep(rays.select_rows(cones[a]));
        for (int b = a + 1; b < m; ++b) {
            if (!simplicial[b]) continue;
            const HRep hb = simplicial_hrep(rays.select_rows(cones[b]));
            ConeSet common;
            std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(),
                                  cones[b].end(), std::back_inserter(common));
            const IntMatrix common_rays = rays.select_rows(common);
            for (const auto& g : intersection_generators(ha, hb)) {
                if (!in_simplicial_cone(common_rays, g)) {
                    flag("max cones " + std::to_string(a) + " and " + std::to_string(b) +
                         " do not intersect in a common face");
                    break;
                }
            }
        }
    }
    return rep;
}

bool is_smooth(const Fan& f) {
    const IntMatrix rays = f.ray_matrix();
    for (const auto& cone : f.max_cones()) {
        if (cone.empty()) continue;
        const SnfResult s = smith_normal_form(rays.select_rows(cone));
        if (s.invariant_factors.size() != cone.size()) return false;
        for (const auto& d : s.invariant_factors)
            if (d != 1) return false;
    }
    return true;
}

bool has_torus_factor(const Fan& f) {
    return rank(f.ray_matrix()) < f.lattice_rank();
}

// Breadth-first over subset size.  A set can be a minimal non-face only if
// all its facets are faces, so candidates are grown from the previous level
// of faces; this also prunes every superset of a found non-face.
std::vector<ConeSet> minimal_nonfaces(const Fan& f) {
    const int n = f.ray_count();
    if (n > 32) throw std::invalid_argument("minimal_nonfaces: more than 32 rays");
    std::set<ConeSet> faces = {ConeSet{}};
    std::vector<ConeSet> found;
    while (!faces.empty()) {
        std::set<ConeSet> next_faces;
        std::set<ConeSet> candidates;
        for (const auto& face : faces) {
            const int start = face.empty() ? 0 : face.back() + 1;
            for (int j = start; j < n; ++j) {
                ConeSet r = face;
                r.push_back(j);
                bool ok = true;
                for (size_t drop = 0; ok && drop + 1 < r.size(); ++drop) {
                    ConeSet sub;
                    for (size_t i = 0; i < r.size(); ++i)
                        if (i != drop) sub.push_back(r[i]);
                    ok = faces.count(sub) != 0;
                }
                if (ok) candidates.insert(r);
            }
        }
        for (const auto& r : candidates) {
            if (is_face_of_some(f.max_cones(), r)) next_faces.insert(r);
            else found.push_back(r);
        }
        faces = std::move(next_faces);
    }
    std::sort(found.begin(), found.end());
    return found;
}

Fan hat_fan(const Fan& target, const std::vector<std::vector<mpz_class>>& images) {
    const int n = static_cast<int>(images.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(images[i].size()) != target.lattice_rank())
            throw std::invalid_argument("hat_fan: image " + std::to_string(i) +
                                        " has length " + std::to_string(images[i].size()) +
                                        ", expected " + std::to_string(target.lattice_rank()));
    }
    const IntMatrix rays = target.ray_matrix();
    std::vector<ConeSet> hat;
    std::vector<char> in_support(n, 0);
    for (const auto& cone : target.max_cones()) {
        const IntMatrix sel = rays.select_rows(cone);
        ConeSet s;
        for (int i = 0; i < n; ++i) {
            if (in_simplicial_cone(sel, images[i])) {
                s.push_back(i);
                in_support[i] = 1;
            }
        }
        hat.push_back(s);
    }
    for (int i = 0; i < n; ++i)
        if (!in_support[i])
            throw std::domain_error("hat_fan: image " + std::to_string(i) +
                                    " lies outside the support of the fan");
    for (int j = 0; j < target.ray_count(); ++j) {
        bool covered = false;
        const IntMatrix rj = rays.select_rows({j});
        for (int i = 0; i < n && !covered; ++i)
            covered = !all_zero(images[i]) && in_simplicial_cone(rj, images[i]);
        if (!covered)
            throw std::domain_error("hat_fan: ray " + std::to_string(j) +
                                    " contains no image");
    }

    std::vector<ConeSet> reduced;
    for (size_t a = 0; a < hat.size(); ++a) {
        bool drop = false;
        for (size_t b = 0; b < hat.size() && !drop; ++b) {
            if (a == b) continue;
            if (std::includes(hat[b].begin(), hat[b].end(), hat[a].begin(), hat[a].end()))
                drop = hat[a] != hat[b] || b < a;
        }
        if (!drop) reduced.push_back(hat[a]);
    }

    std::vector<std::vector<mpz_class>> basis(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    return Fan(n, std::move(basis), std::move(reduced));
}

}  // namespace stackchow
