#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nlie {

template <class K>
using Vec = std::vector<K>;

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// y += a * x
template <class K>
void axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const K& fill = K())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n, K(0));
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Vec<K> row(int i) const {
        Vec<K> r(data_.begin() + static_cast<size_t>(i) * cols_,
                 data_.begin() + static_cast<size_t>(i + 1) * cols_);
        return r;
    }
    Vec<K> col(int j) const {
        Vec<K> c;
        c.reserve(rows_);
        for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, data_.empty() ? K() : data_[0] - data_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        if (a.cols_ == 0) throw std::invalid_argument("Matrix: empty product");
        Matrix r(a.rows_, b.cols_, a.data_.empty() ? K() : a.data_[0] - a.data_[0]);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix r(a);
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix r(a);
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend Matrix operator*(const K& c, const Matrix& m) {
        Matrix r(m);
        for (auto& x : r.data_) x = c * x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec<K> apply(const Vec<K>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("Matrix: vector length mismatch");
        Vec<K> y;
        y.reserve(rows_);
        for (int i = 0; i < rows_; ++i) {
            K acc = data_.empty() ? K() : data_[0] - data_[0];
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) acc += at(i, j) * x[j];
            y.push_back(acc);
        }
        return y;
    }

    bool is_zero() const { return is_zero_vec(data_); }

  private:
    int rows_, cols_;
    std::vector<K> data_;
};

// Determinant by cofactor expansion along the first row. Works over any
// commutative ring (no divisions); intended for small matrices.
template <class K>
K det_cofactor(const Matrix<K>& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("det: matrix must be square and nonempty");
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    K acc = m.at(0, 0) - m.at(0, 0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix<K> minor(n - 1, n - 1, acc);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        K term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Row reduction to reduced row echelon form; returns the pivot columns.
// Requires K to be a field (inv()).
template <class K>
std::vector<int> rref_inplace(Matrix<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        K f = m.at(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = f * m.at(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K g = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= g * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank_dense(Matrix<K> m) {
    return static_cast<int>(rref_inplace(m).size());
}

// Basis of the null space, one vector per free column of the RREF.
template <class K>
std::vector<Vec<K>> kernel_basis(Matrix<K> m) {
    std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec<K>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K(0) - m.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b (free variables set to zero); nullopt if inconsistent.
template <class K>
std::optional<Vec<K>> solve_dense(const Matrix<K>& a, const Vec<K>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve: right hand side length mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1, K(0));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec<K> x(a.cols(), K(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
    int n = m.rows();
    Matrix<K> aug(n, 2 * n, K(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    std::vector<int> pivots = rref_inplace(aug);
    int left = 0;
    for (int c : pivots)
        if (c < n) ++left;
    if (left != n) return std::nullopt;
    Matrix<K> inv(n, n, K(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Incrementally maintained echelon basis of a subspace of K^dim. Rows are kept
// sparse and normalized to 1 at their pivot. With canonical=true rows are also
// inter-reduced, so reduce() returns the canonical residue modulo the span.
template <class K>
class EchelonBasis {
  public:
    explicit EchelonBasis(int dim, bool canonical = true) : dim_(dim), canonical_(canonical) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Residue of v after elimination against the stored rows. Zero iff v lies
    // in the span; canonical when the basis was built with canonical=true.
    Vec<K> reduce(Vec<K> v) const {
        for (const auto& [p, row] : rows_) {
            if (v[p].is_zero()) continue;
            K f = v[p];
            for (const auto& [i, a] : row) v[i] -= f * a;
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }

    // Adds v to the span. Returns false (and changes nothing) if dependent.
    bool insert(Vec<K> v) {
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("EchelonBasis: vector length mismatch");
        v = reduce(std::move(v));
        int p = -1;
        for (int i = 0; i < dim_; ++i)
            if (!v[i].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return false;
        K f = v[p].inv();
        std::vector<std::pair<int, K>> row;
        for (int i = p; i < dim_; ++i)
            if (!v[i].is_zero()) row.emplace_back(i, f * v[i]);
        if (canonical_) {
            for (auto& [q, other] : rows_) {
                K c{};
                bool hit = false;
                for (const auto& [i, a] : other)
                    if (i == p) {
                        c = a;
                        hit = true;
                        break;
                    }
                if (!hit) continue;
                other = sparse_axpy(other, c, row);
            }
        }
        rows_.emplace(p, std::move(row));
        return true;
    }

    // Rows in pivot order, densified.
    std::vector<Vec<K>> basis() const {
        std::vector<Vec<K>> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) {
            Vec<K> v(dim_, K(0));
            for (const auto& [i, a] : row) v[i] = a;
            out.push_back(std::move(v));
        }
        return out;
    }

    std::vector<int> pivots() const {
        std::vector<int> ps;
        ps.reserve(rows_.size());
        for (const auto& [p, row] : rows_) ps.push_back(p);
        return ps;
    }

  private:
    // result = a - c * b over sorted sparse rows.
    static std::vector<std::pair<int, K>> sparse_axpy(const std::vector<std::pair<int, K>>& a,
                                                      const K& c,
                                                      const std::vector<std::pair<int, K>>& b) {
        std::vector<std::pair<int, K>> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, K(0) - c * b[j].second);
                ++j;
            } else {
                K v = a[i].second - c * b[j].second;
                if (!v.is_zero()) out.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    int dim_;
    bool canonical_;
    std::map<int, std::vector<std::pair<int, K>>> rows_;
};

// Linear map K^in -> K^out stored by columns as sparse (row, value) lists.
template <class K>
struct SparseLinearMap {
    int out_dim = 0;
    int in_dim = 0;
    std::vector<std::vector<std::pair<int, K>>> cols;

    SparseLinearMap(int out, int in) : out_dim(out), in_dim(in), cols(in) {}

    void add(int row, int col, const K& val) {
        if (val.is_zero()) return;
        for (auto& [r, v] : cols[col])
            if (r == row) {
                v += val;
                return;
            }
        cols[col].emplace_back(row, val);
    }

    Vec<K> apply(const Vec<K>& x) const {
        if (static_cast<int>(x.size()) != in_dim)
            throw std::invalid_argument("SparseLinearMap: vector length mismatch");
        Vec<K> y(out_dim, K(0));
        for (int j = 0; j < in_dim; ++j) {
            if (x[j].is_zero()) continue;
            for (const auto& [r, v] : cols[j]) y[r] += x[j] * v;
        }
        return y;
    }

    Matrix<K> dense() const {
        Matrix<K> m(out_dim, in_dim, K(0));
        for (int j = 0; j < in_dim; ++j)
            for (const auto& [r, v] : cols[j]) m.at(r, j) = v;
        return m;
    }

    // Rank by streaming the rows through an echelon basis. Memory stays
    // bounded by rank x in_dim even when out_dim is large.
    int rank() const {
        std::vector<std::vector<std::pair<int, K>>> rows(out_dim);
        for (int j = 0; j < in_dim; ++j)
            for (const auto& [r, v] : cols[j]) rows[r].emplace_back(j, v);
        EchelonBasis<K> eb(in_dim, false);
        Vec<K> buf(in_dim, K(0));
        for (int r = 0; r < out_dim; ++r) {
            if (rows[r].empty()) continue;
            std::fill(buf.begin(), buf.end(), K(0));
            for (const auto& [j, v] : rows[r]) buf[j] = v;
            eb.insert(buf);
        }
        return eb.rank();
    }

    // Null space basis via column elimination with history. Each dependent
    // column yields one kernel vector; the results are echelon by last index.
    std::vector<Vec<K>> kernel() const {
        std::map<int, std::pair<std::vector<std::pair<int, K>>, Vec<K>>> ech;
        std::vector<Vec<K>> ker;
        for (int j = 0; j < in_dim; ++j) {
            Vec<K> v(out_dim, K(0));
            for (const auto& [r, val] : cols[j]) v[r] = val;
            Vec<K> h(in_dim, K(0));
            h[j] = K(1);
            for (const auto& [p, rh] : ech) {
                if (v[p].is_zero()) continue;
                K f = v[p];
                for (const auto& [i, a] : rh.first) v[i] -= f * a;
                for (int i = 0; i < in_dim; ++i)
                    if (!rh.second[i].is_zero()) h[i] -= f * rh.second[i];
            }
            int p = -1;
            for (int i = 0; i < out_dim; ++i)
                if (!v[i].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) {
                ker.push_back(std::move(h));
                continue;
            }
            K f = v[p].inv();
            std::vector<std::pair<int, K>> row;
            for (int i = p; i < out_dim; ++i)
                if (!v[i].is_zero()) row.emplace_back(i, f * v[i]);
            for (auto& x : h) x = f * x;
            ech.emplace(p, std::make_pair(std::move(row), std::move(h)));
        }
        return ker;
    }

    // Echelon basis of the column span.
    EchelonBasis<K> image(bool canonical = false) const {
        EchelonBasis<K> eb(out_dim, canonical);
        Vec<K> buf(out_dim, K(0));
        for (int j = 0; j < in_dim; ++j) {
            if (cols[j].empty()) continue;
            std::fill(buf.begin(), buf.end(), K(0));
            for (const auto& [r, v] : cols[j]) buf[r] = v;
            eb.insert(buf);
        }
        return eb;
    }

    std::optional<Vec<K>> solve(const Vec<K>& b) const { return solve_dense(dense(), b); }
};

// Basis of span(vs) modulo the subspace held in bs: canonical residues,
// echelonized. bs must have been built with canonical=true.
template <class K>
std::vector<Vec<K>> quotient_basis(const std::vector<Vec<K>>& vs, const EchelonBasis<K>& bs) {
    EchelonBasis<K> q(bs.dim(), true);
    for (const auto& v : vs) q.insert(bs.reduce(v));
    return q.basis();
}

}  // namespace nlie
