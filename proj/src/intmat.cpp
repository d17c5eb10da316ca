#include "stackchow/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stackchow {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    data_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : row) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

std::vector<mpz_class> IntMatrix::row(int i) const {
    std::vector<mpz_class> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

std::vector<mpz_class> IntMatrix::col(int j) const {
    std::vector<mpz_class> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

void IntMatrix::set_row(int i, const std::vector<mpz_class>& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void IntMatrix::set_col(int j, const std::vector<mpz_class>& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("set_col: length mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx) const {
    IntMatrix out(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < out.rows(); ++i) {
        if (idx[i] < 0 || idx[i] >= rows_) throw std::invalid_argument("select_rows: index out of range");
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
    }
    return out;
}

IntMatrix IntMatrix::select_cols(const std::vector<int>& idx) const {
    IntMatrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols(); ++j) {
        if (idx[j] < 0 || idx[j] >= cols_) throw std::invalid_argument("select_cols: index out of range");
        for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    }
    return out;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("stacked: column mismatch");
    IntMatrix out(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
    return out;
}

std::string IntMatrix::to_string() const {
    std::vector<size_t> width(cols_, 1);
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i)
            width[j] = std::max(width[j], at(i, j).get_str().size());
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            std::string s = at(i, j).get_str();
            if (j > 0) os << ' ';
            os << std::string(width[j] - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    if (rows_ == 0) os << "[]  (" << rows_ << "x" << cols_ << ")\n";
    return os.str();
}

namespace {

// dst -= q * src, applied to a matrix's rows or columns.
void row_submul(IntMatrix& m, int dst, int src, const mpz_class& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_submul(IntMatrix& m, int dst, int src, const mpz_class& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void row_add(IntMatrix& m, int dst, int src) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += m.at(src, j);
}

void row_swap(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void row_negate(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

mpz_class trunc_quot(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class floor_quot(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Reduces d to Smith normal form in place, mirroring the row operations into
// *u and the column operations into *v when given.
void snf_core(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
    const int R = d.rows(), C = d.cols();
    const int n = std::min(R, C);

    for (int t = 0; t < n; ++t) {
        bool exhausted = false;
        for (;;) {
            // Pivot: minimal |entry| of d[t.., t..], ties by (row, col).
            int pi = -1, pj = -1;
            mpz_class best;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j) {
                    const mpz_class& e = d.at(i, j);
                    if (e == 0) continue;
                    mpz_class a = abs(e);
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                exhausted = true;
                break;
            }
            row_swap(d, t, pi);
            if (u) row_swap(*u, t, pi);
            col_swap(d, t, pj);
            if (v) col_swap(*v, t, pj);

            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (d.at(i, t) == 0) continue;
                mpz_class q = trunc_quot(d.at(i, t), d.at(t, t));
                row_submul(d, i, t, q);
                if (u) row_submul(*u, i, t, q);
                if (d.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            for (int j = t + 1; j < C; ++j) {
                if (d.at(t, j) == 0) continue;
                mpz_class q = trunc_quot(d.at(t, j), d.at(t, t));
                col_submul(d, j, t, q);
                if (v) col_submul(*v, j, t, q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility fix: fold in the first entry (row-major) the pivot
            // does not divide, then clear again.
            int fi = -1;
            for (int i = t + 1; i < R && fi < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        fi = i;
                        break;
                    }
            if (fi >= 0) {
                row_add(d, t, fi);
                if (u) row_add(*u, t, fi);
                continue;
            }
            break;
        }
        if (exhausted) break;
    }

    for (int t = 0; t < n; ++t)
        if (d.at(t, t) < 0) {
            row_negate(d, t);
            if (u) row_negate(*u, t);
        }
}

std::vector<mpz_class> nonzero_diagonal(const IntMatrix& d) {
    std::vector<mpz_class> out;
    const int n = std::min(d.rows(), d.cols());
    for (int t = 0; t < n; ++t)
        if (d.at(t, t) != 0) out.push_back(d.at(t, t));
    return out;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), {}};
    snf_core(out.d, &out.u, &out.v);
    out.invariant_factors = nonzero_diagonal(out.d);
    return out;
}

std::vector<mpz_class> invariant_factors(const IntMatrix& m) {
    IntMatrix d = m;
    snf_core(d, nullptr, nullptr);
    return nonzero_diagonal(d);
}

int rank(const IntMatrix& m) {
    return static_cast<int>(invariant_factors(m).size());
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            row_swap(a, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign < 0 ? mpz_class(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    mpz_class d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("inverse_unimodular: matrix not square");
    SnfResult s = smith_normal_form(u);
    if (s.d != IntMatrix::identity(u.rows()))
        throw std::invalid_argument("inverse_unimodular: matrix not unimodular");
    return s.v * s.u;
}

IntMatrix row_hermite(const IntMatrix& m) {
    IntMatrix h = m;
    const int R = h.rows(), C = h.cols();
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        for (;;) {
            int pi = -1;
            mpz_class best;
            for (int i = r; i < R; ++i) {
                if (h.at(i, c) == 0) continue;
                mpz_class a = abs(h.at(i, c));
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                }
            }
            if (pi < 0) break;
            bool others = false;
            for (int i = r; i < R; ++i) {
                if (i == pi || h.at(i, c) == 0) continue;
                others = true;
                row_submul(h, i, pi, floor_quot(h.at(i, c), h.at(pi, c)));
            }
            if (others) continue;
            row_swap(h, r, pi);
            if (h.at(r, c) < 0) row_negate(h, r);
            for (int i = 0; i < r; ++i)
                row_submul(h, i, r, floor_quot(h.at(i, c), h.at(r, c)));
            ++r;
            break;
        }
    }
    return h;
}

IntMatrix column_hermite(const IntMatrix& m) {
    return row_hermite(m.transposed()).transposed();
}

IntMatrix kernel(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    const int r = static_cast<int>(s.invariant_factors.size());
    std::vector<int> idx;
    for (int j = r; j < m.cols(); ++j) idx.push_back(j);
    return column_hermite(s.v.select_cols(idx));
}

bool in_column_span(const IntMatrix& m, const std::vector<mpz_class>& x) {
    if (static_cast<int>(x.size()) != m.rows())
        throw std::invalid_argument("in_column_span: vector length mismatch");
    SnfResult s = smith_normal_form(m);
    // m y = x  <=>  d z = u x for some integer z.
    std::vector<mpz_class> w(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) w[i] += s.u.at(i, j) * x[j];
    const int n = std::min(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (i >= n || s.d.at(i, i) == 0) {
            if (w[i] != 0) return false;
        } else if (w[i] % s.d.at(i, i) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<mpz_class> primitive(const std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const mpz_class& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    std::vector<mpz_class> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace stackchow
