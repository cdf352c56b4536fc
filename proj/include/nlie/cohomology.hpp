#pragma once

#include <stdexcept>
#include <vector>

#include "nlie/leibniz.hpp"
#include "nlie/linalg.hpp"
#include "nlie/multiindex.hpp"
#include "nlie/nary.hpp"

namespace nlie {

// Deformation cohomology of an n-ary bracket.  Degrees are arranged so that
// the bracket itself and deformation terms live in degree 2 and obstructions
// in degree 3:
//   degree 1: linear maps N -> N                        (dim m^2)
//   degree 2: fully skew maps Lambda^n N -> N           (dim C(m,n) m)
//   degree p >= 3: p-2+1 = p-1 fundamental blocks in Lambda^{n-1} N plus one
//     final vector, values in N, no symmetry across blocks (dim D^{p-1} m^2
//     with D = C(m, n-1))
// Flat coordinates order the tuple/block indices first and the output
// coordinate last, so a basis cochain is (index slot, output coordinate).

// Fully skew map Lambda^n N -> N, stored on increasing n-tuples.
template <typename K>
class SkewCochain {
  public:
    SkewCochain(int arity, int dim)
        : n_(arity), m_(dim), idx_(dim, arity), val_(idx_.size(), Vec<K>(dim, K(0))) {}

    int arity() const { return n_; }
    int dim() const { return m_; }
    const SubsetIndexer& tuples() const { return idx_; }
    static long coord_dim(int arity, int dim) {
        return static_cast<long>(SubsetIndexer(dim, arity).size()) * dim;
    }

    const Vec<K>& value(int rank) const { return val_[rank]; }

    void set(std::vector<int> tuple, const Vec<K>& v) {
        int s = canonical_sign(tuple);
        if (s == 0) {
            if (!is_zero_vec(v)) throw std::invalid_argument("SkewCochain: repeated index");
            return;
        }
        Vec<K>& slot = val_[idx_.rank(tuple)];
        if (s > 0)
            slot = v;
        else
            for (int t = 0; t < m_; ++t) slot[t] = K(0) - v[t];
    }

    Vec<K> eval(std::vector<int> tuple) const {
        Vec<K> out(m_, K(0));
        int s = canonical_sign(tuple);
        if (s == 0) return out;
        const Vec<K>& v = val_[idx_.rank(tuple)];
        for (int t = 0; t < m_; ++t) {
            if (v[t].is_zero()) continue;
            if (s > 0)
                out[t] += v[t];
            else
                out[t] -= v[t];
        }
        return out;
    }

    // signed basis evaluation under the name the circle-product kernels use
    Vec<K> on_basis(const std::vector<int>& tuple) const { return eval(tuple); }

    // alternating multilinear extension to arbitrary vector arguments
    Vec<K> eval_vecs(const std::vector<Vec<K>>& args) const {
        Vec<K> out(m_, K(0));
        for (int r = 0; r < idx_.size(); ++r) {
            if (is_zero_vec(val_[r])) continue;
            const std::vector<int>& t = idx_.tuple(r);
            Matrix<K> M(n_, n_, K(0));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) M.at(i, j) = args[j][t[i]];
            K d = det_cofactor(M);
            if (!d.is_zero()) axpy(out, d, val_[r]);
        }
        return out;
    }

    // psi(tuple with the vector w in slot pos), extended linearly.
    Vec<K> eval_with_vec(std::vector<int> tuple, int pos, const Vec<K>& w) const {
        Vec<K> out(m_, K(0));
        for (int k = 0; k < m_; ++k) {
            if (w[k].is_zero()) continue;
            std::vector<int> t = tuple;
            t[pos] = k;
            int s = canonical_sign(t);
            if (s == 0) continue;
            const Vec<K>& v = val_[idx_.rank(t)];
            for (int c = 0; c < m_; ++c) {
                if (v[c].is_zero()) continue;
                if (s > 0)
                    out[c] += w[k] * v[c];
                else
                    out[c] -= w[k] * v[c];
            }
        }
        return out;
    }

    Vec<K> coordinates() const {
        Vec<K> out;
        out.reserve(val_.size() * m_);
        for (const auto& v : val_) out.insert(out.end(), v.begin(), v.end());
        return out;
    }

    static SkewCochain from_coordinates(int arity, int dim, const Vec<K>& co) {
        SkewCochain psi(arity, dim);
        if (static_cast<long>(co.size()) != coord_dim(arity, dim))
            throw std::invalid_argument("SkewCochain: coordinate length mismatch");
        for (size_t r = 0; r < psi.val_.size(); ++r)
            for (int t = 0; t < dim; ++t) psi.val_[r][t] = co[r * dim + t];
        return psi;
    }

    bool is_zero() const {
        for (const auto& v : val_)
            if (!is_zero_vec(v)) return false;
        return true;
    }

    bool operator==(const SkewCochain& o) const {
        return n_ == o.n_ && m_ == o.m_ && val_ == o.val_;
    }

  private:
    int n_, m_;
    SubsetIndexer idx_;
    std::vector<Vec<K>> val_;
};

// Multilinear map taking `blocks` fundamental wedge blocks plus one final
// vector, values in N; no symmetry across blocks.
template <typename K>
class GridCochain {
  public:
    GridCochain(int blocks, int arity, int dim)
        : p_(blocks), n_(arity), m_(dim), bidx_(dim, arity - 1) {
        size_t slots = 1;
        for (int i = 0; i < p_; ++i) slots *= static_cast<size_t>(bidx_.size());
        val_.assign(slots * m_, Vec<K>(m_, K(0)));
    }

    int blocks() const { return p_; }
    int arity() const { return n_; }
    int dim() const { return m_; }
    int block_count() const { return bidx_.size(); }
    const SubsetIndexer& block_space() const { return bidx_; }
    static long coord_dim(int blocks, int arity, int dim) {
        long d = 1;
        int D = SubsetIndexer(dim, arity - 1).size();
        for (int i = 0; i < blocks; ++i) d *= D;
        return d * dim * dim;
    }

    const Vec<K>& value(const std::vector<int>& brs, int z) const { return val_[slot(brs, z)]; }
    void set(const std::vector<int>& brs, int z, Vec<K> v) { val_[slot(brs, z)] = std::move(v); }
    void add_to(const std::vector<int>& brs, int z, const Vec<K>& v) {
        Vec<K>& s = val_[slot(brs, z)];
        for (int t = 0; t < m_; ++t) s[t] += v[t];
    }

    // acc += sign * sum_b w[b] psi(brs with pos -> b, z)
    void axpy_block_vec(Vec<K>& acc, int sign, std::vector<int> brs, int pos, const Vec<K>& w,
                        int z) const {
        for (int b = 0; b < bidx_.size(); ++b) {
            if (w[b].is_zero()) continue;
            brs[pos] = b;
            const Vec<K>& v = val_[slot(brs, z)];
            for (int t = 0; t < m_; ++t) {
                if (v[t].is_zero()) continue;
                if (sign > 0)
                    acc[t] += w[b] * v[t];
                else
                    acc[t] -= w[b] * v[t];
            }
        }
    }

    // acc += sign * sum_k w[k] psi(brs, e_k)
    void axpy_z_vec(Vec<K>& acc, int sign, const std::vector<int>& brs, const Vec<K>& w) const {
        for (int k = 0; k < m_; ++k) {
            if (w[k].is_zero()) continue;
            const Vec<K>& v = val_[slot(brs, k)];
            for (int t = 0; t < m_; ++t) {
                if (v[t].is_zero()) continue;
                if (sign > 0)
                    acc[t] += w[k] * v[t];
                else
                    acc[t] -= w[k] * v[t];
            }
        }
    }

    Vec<K> coordinates() const {
        Vec<K> out;
        out.reserve(val_.size() * m_);
        for (const auto& v : val_) out.insert(out.end(), v.begin(), v.end());
        return out;
    }

    static GridCochain from_coordinates(int blocks, int arity, int dim, const Vec<K>& co) {
        GridCochain psi(blocks, arity, dim);
        if (static_cast<long>(co.size()) != coord_dim(blocks, arity, dim))
            throw std::invalid_argument("GridCochain: coordinate length mismatch");
        for (size_t r = 0; r < psi.val_.size(); ++r)
            for (int t = 0; t < dim; ++t) psi.val_[r][t] = co[r * dim + t];
        return psi;
    }

    bool is_zero() const {
        for (const auto& v : val_)
            if (!is_zero_vec(v)) return false;
        return true;
    }

    bool operator==(const GridCochain& o) const {
        return p_ == o.p_ && n_ == o.n_ && m_ == o.m_ && val_ == o.val_;
    }

  private:
    size_t slot(const std::vector<int>& brs, int z) const {
        size_t r = 0;
        for (int b : brs) r = r * static_cast<size_t>(bidx_.size()) + static_cast<size_t>(b);
        return r * static_cast<size_t>(m_) + static_cast<size_t>(z);
    }

    int p_, n_, m_;
    SubsetIndexer bidx_;
    std::vector<Vec<K>> val_;
};

// Shared evaluation context: fundamental blocks, their adjoint matrices, and
// the induced Leibniz bracket (built without the validity gate so coboundary
// maps stay usable on candidate tables).
template <typename K>
struct CochainContext {
    StructureConstants<K> A;
    SubsetIndexer blocks;
    NAryTable<K> leib;
    std::vector<Matrix<K>> L;
};

template <typename K>
CochainContext<K> make_context(const StructureConstants<K>& A) {
    SubsetIndexer blocks = fundamental_basis(A);
    NAryTable<K> leib = detail::induced_bracket_table(A, blocks);
    std::vector<Matrix<K>> L;
    L.reserve(blocks.size());
    for (int r = 0; r < blocks.size(); ++r) L.push_back(A.ad_matrix(blocks.tuple(r)));
    return {A, blocks, leib, std::move(L)};
}

namespace detail {

template <typename K>
void axpy_matvec(Vec<K>& acc, int sign, const Matrix<K>& M, const Vec<K>& v) {
    for (int j = 0; j < M.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < M.rows(); ++i) {
            if (M.at(i, j).is_zero()) continue;
            if (sign > 0)
                acc[i] += M.at(i, j) * v[j];
            else
                acc[i] -= M.at(i, j) * v[j];
        }
    }
}

inline std::vector<int> drop_index(const std::vector<int>& v, int i) {
    std::vector<int> out;
    out.reserve(v.size() - 1);
    for (size_t k = 0; k < v.size(); ++k)
        if (static_cast<int>(k) != i) out.push_back(v[k]);
    return out;
}

}  // namespace detail

// delta1 phi (x_1..x_n) = -phi([x_1..x_n]) + sum_i [x_1,..,phi(x_i),..,x_n]
template <typename K>
SkewCochain<K> delta1(const StructureConstants<K>& A, const Matrix<K>& phi) {
    int n = A.arity(), m = A.dim();
    SkewCochain<K> out(n, m);
    for (const auto& tuple : increasing_tuples(m, n)) {
        Vec<K> acc(m, K(0));
        Vec<K> br = A.on_basis(tuple);
        detail::axpy_matvec(acc, -1, phi, br);
        for (int i = 0; i < n; ++i)
            axpy(acc, K(1), eval_with_vec_at(A, tuple, i, phi.col(tuple[i])));
        out.set(tuple, acc);
    }
    return out;
}

// Skew cochain viewed on the block grid: psi(block, z).
template <typename K>
GridCochain<K> grid_embed(const CochainContext<K>& ctx, const SkewCochain<K>& psi) {
    int n = ctx.A.arity(), m = ctx.A.dim();
    GridCochain<K> g(1, n, m);
    for (int b = 0; b < ctx.blocks.size(); ++b) {
        std::vector<int> args = ctx.blocks.tuple(b);
        args.push_back(0);
        for (int z = 0; z < m; ++z) {
            args[n - 1] = z;
            g.set({b}, z, psi.eval(args));
        }
    }
    return g;
}

// Six-term coboundary of a fully skew cochain, on blocks a1, a2 and final z:
//   (d psi)(a1,a2,z) = - sum_i psi(y_1,..,[a1,y_i],..,y_{n-1},z)
//                      - psi(a2, L(a1) z) + psi(a1, L(a2) z)
//                      + L(a1) psi(a2, z) - L(a2) psi(a1, z)
//                      - sum_i [y_1,..,psi(a1,y_i),..,y_{n-1},z]
// with a1 = x_1^..^x_{n-1}, a2 = y_1^..^y_{n-1}.
template <typename K>
GridCochain<K> delta2(const CochainContext<K>& ctx, const SkewCochain<K>& psi) {
    int n = ctx.A.arity(), m = ctx.A.dim(), D = ctx.blocks.size();
    GridCochain<K> out(2, n, m);
    for (int b1 = 0; b1 < D; ++b1) {
        const std::vector<int>& x = ctx.blocks.tuple(b1);
        const Matrix<K>& Lx = ctx.L[b1];
        for (int b2 = 0; b2 < D; ++b2) {
            const std::vector<int>& y = ctx.blocks.tuple(b2);
            const Matrix<K>& Ly = ctx.L[b2];
            std::vector<int> yz = y, xz = x;
            yz.push_back(0);
            xz.push_back(0);
            for (int z = 0; z < m; ++z) {
                yz[n - 1] = z;
                xz[n - 1] = z;
                Vec<K> acc(m, K(0));
                for (int i = 0; i < n - 1; ++i)
                    axpy(acc, K(-1), psi.eval_with_vec(yz, i, Lx.col(y[i])));
                axpy(acc, K(-1), psi.eval_with_vec(yz, n - 1, Lx.col(z)));
                axpy(acc, K(1), psi.eval_with_vec(xz, n - 1, Ly.col(z)));
                detail::axpy_matvec(acc, 1, Lx, psi.eval(yz));
                detail::axpy_matvec(acc, -1, Ly, psi.eval(xz));
                for (int i = 0; i < n - 1; ++i) {
                    std::vector<int> inner = x;
                    inner.push_back(y[i]);
                    Vec<K> v = psi.eval(inner);
                    if (is_zero_vec(v)) continue;
                    axpy(acc, K(-1), eval_with_vec_at(ctx.A, yz, i, v));
                }
                out.set({b1, b2}, z, acc);
            }
        }
    }
    return out;
}

template <typename K>
GridCochain<K> delta2(const StructureConstants<K>& A, const SkewCochain<K>& psi) {
    return delta2(make_context(A), psi);
}

// General coboundary on blocks a_1..a_{p+1} and final z, for psi taking p
// blocks.  Four groups: Leibniz-bracket insertions, L(a_i) z substitution,
// outer L(a_i) action, and the final bracket insertion sum weighted (-1)^p.
template <typename K>
GridCochain<K> delta_general(const CochainContext<K>& ctx, const GridCochain<K>& psi) {
    int n = ctx.A.arity(), m = ctx.A.dim(), D = ctx.blocks.size();
    int p = psi.blocks();
    GridCochain<K> out(p + 1, n, m);
    int sign4 = (p % 2 == 0) ? 1 : -1;
    std::vector<int> B(p + 1, 0);
    while (true) {
        std::vector<int> head(B.begin(), B.end() - 1);
        const std::vector<int>& y = ctx.blocks.tuple(B[p]);
        std::vector<int> yz = y;
        yz.push_back(0);
        for (int z = 0; z < m; ++z) {
            yz[n - 1] = z;
            Vec<K> acc(m, K(0));
            for (int i = 0; i <= p; ++i) {
                int si = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1} with 1-based i
                std::vector<int> rest = detail::drop_index(B, i);
                for (int j = i + 1; j <= p; ++j) {
                    Vec<K> w = ctx.leib.on_basis({B[i], B[j]});
                    if (is_zero_vec(w)) continue;
                    psi.axpy_block_vec(acc, si, rest, j - 1, w, z);
                }
                psi.axpy_z_vec(acc, si, rest, ctx.L[B[i]].col(z));
                detail::axpy_matvec(acc, -si, ctx.L[B[i]], psi.value(rest, z));
            }
            for (int i = 0; i < n - 1; ++i) {
                const Vec<K>& inner = psi.value(head, y[i]);
                if (is_zero_vec(inner)) continue;
                axpy(acc, K(sign4), eval_with_vec_at(ctx.A, yz, i, inner));
            }
            out.set(B, z, acc);
        }
        int i = p;
        while (i >= 0 && B[i] == D - 1) B[i--] = 0;
        if (i < 0) break;
        ++B[i];
    }
    return out;
}

// ---- coboundary matrices on the flat coordinate bases ----

template <typename K>
SparseLinearMap<K> delta1_matrix(const CochainContext<K>& ctx) {
    int n = ctx.A.arity(), m = ctx.A.dim();
    long out_dim = SkewCochain<K>::coord_dim(n, m);
    SparseLinearMap<K> M(static_cast<int>(out_dim), m * m);
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
            Matrix<K> phi(m, m, K(0));
            phi.at(r, s) = K(1);
            Vec<K> co = delta1(ctx.A, phi).coordinates();
            for (size_t i = 0; i < co.size(); ++i)
                if (!co[i].is_zero()) M.add(static_cast<int>(i), r * m + s, co[i]);
        }
    return M;
}

template <typename K>
SparseLinearMap<K> delta2_matrix(const CochainContext<K>& ctx) {
    int n = ctx.A.arity(), m = ctx.A.dim();
    long in_dim = SkewCochain<K>::coord_dim(n, m);
    long out_dim = GridCochain<K>::coord_dim(2, n, m);
    SparseLinearMap<K> M(static_cast<int>(out_dim), static_cast<int>(in_dim));
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < in_dim; ++c) {
        Vec<K> basis(in_dim, K(0));
        basis[c] = K(1);
        SkewCochain<K> psi = SkewCochain<K>::from_coordinates(n, m, basis);
        Vec<K> co = delta2(ctx, psi).coordinates();
        std::vector<std::pair<int, K>> col;
        for (size_t i = 0; i < co.size(); ++i)
            if (!co[i].is_zero()) col.emplace_back(static_cast<int>(i), co[i]);
        M.cols[c] = std::move(col);
    }
    return M;
}

// Coboundary matrix out of degree p+1 (p >= 2 blocks in the target).
template <typename K>
SparseLinearMap<K> delta_general_matrix(const CochainContext<K>& ctx, int in_blocks) {
    int n = ctx.A.arity(), m = ctx.A.dim();
    long in_dim = GridCochain<K>::coord_dim(in_blocks, n, m);
    long out_dim = GridCochain<K>::coord_dim(in_blocks + 1, n, m);
    SparseLinearMap<K> M(static_cast<int>(out_dim), static_cast<int>(in_dim));
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < in_dim; ++c) {
        Vec<K> basis(in_dim, K(0));
        basis[c] = K(1);
        GridCochain<K> psi = GridCochain<K>::from_coordinates(in_blocks, n, m, basis);
        Vec<K> co = delta_general(ctx, psi).coordinates();
        std::vector<std::pair<int, K>> col;
        for (size_t i = 0; i < co.size(); ++i)
            if (!co[i].is_zero()) col.emplace_back(static_cast<int>(i), co[i]);
        M.cols[c] = std::move(col);
    }
    return M;
}

template <typename K>
SparseLinearMap<K> delta3_matrix(const CochainContext<K>& ctx) {
    return delta_general_matrix(ctx, 2);
}

struct CohomologySummary {
    int p = 0;
    long dim_c = 0;
    long dim_z = 0;
    long dim_b = 0;
    long dim_h = 0;
};

template <typename K>
long derivation_dim(const CochainContext<K>& ctx) {
    int m = ctx.A.dim();
    return m * static_cast<long>(m) - delta1_matrix(ctx).rank();
}

template <typename K>
CohomologySummary cohomology_dims(const StructureConstants<K>& A, int p) {
    if (p < 1 || p > 3) throw std::invalid_argument("cohomology_dims: degree must be 1, 2 or 3");
    if (!check_nambu(A)) throw std::invalid_argument("cohomology_dims: bracket fails the Nambu identity");
    CochainContext<K> ctx = make_context(A);
    int n = A.arity(), m = A.dim();
    CohomologySummary s;
    s.p = p;
    if (p == 1) {
        s.dim_c = m * static_cast<long>(m);
        s.dim_z = s.dim_c - delta1_matrix(ctx).rank();
        s.dim_b = 0;
    } else if (p == 2) {
        s.dim_c = SkewCochain<K>::coord_dim(n, m);
        s.dim_z = s.dim_c - delta2_matrix(ctx).rank();
        s.dim_b = delta1_matrix(ctx).rank();
    } else {
        s.dim_c = GridCochain<K>::coord_dim(2, n, m);
        s.dim_z = s.dim_c - delta3_matrix(ctx).rank();
        s.dim_b = delta2_matrix(ctx).rank();
    }
    s.dim_h = s.dim_z - s.dim_b;
    return s;
}

// ---- scalar (trivial coefficient) forms ----

// Skew n-linear form with scalar values.
template <typename K>
class ScalarForm {
  public:
    ScalarForm(int arity, int dim) : n_(arity), m_(dim), idx_(dim, arity), c_(idx_.size(), K(0)) {}

    int arity() const { return n_; }
    int dim() const { return m_; }
    const SubsetIndexer& tuples() const { return idx_; }
    const Vec<K>& coefficients() const { return c_; }
    K& coefficient(int rank) { return c_[rank]; }

    void set(std::vector<int> tuple, const K& v) {
        int s = canonical_sign(tuple);
        if (s == 0) {
            if (!v.is_zero()) throw std::invalid_argument("ScalarForm: repeated index");
            return;
        }
        c_[idx_.rank(tuple)] = (s > 0) ? v : K(0) - v;
    }

    K eval(std::vector<int> tuple) const {
        int s = canonical_sign(tuple);
        if (s == 0) return K(0);
        return (s > 0) ? c_[idx_.rank(tuple)] : K(0) - c_[idx_.rank(tuple)];
    }

    K eval_with_vec(const std::vector<int>& tuple, int pos, const Vec<K>& w) const {
        K acc = K(0);
        for (int k = 0; k < m_; ++k) {
            if (w[k].is_zero()) continue;
            std::vector<int> t = tuple;
            t[pos] = k;
            int s = canonical_sign(t);
            if (s == 0) continue;
            if (s > 0)
                acc += w[k] * c_[idx_.rank(t)];
            else
                acc -= w[k] * c_[idx_.rank(t)];
        }
        return acc;
    }

    bool is_zero() const { return is_zero_vec(c_); }

  private:
    int n_, m_;
    SubsetIndexer idx_;
    Vec<K> c_;
};

// Scalar coboundary of a 1-form: (d theta)(x_1..x_n) = -theta([x_1..x_n]).
template <typename K>
ScalarForm<K> scalar_delta1(const StructureConstants<K>& A, const Vec<K>& theta) {
    int n = A.arity(), m = A.dim();
    ScalarForm<K> out(n, m);
    for (const auto& tuple : increasing_tuples(m, n)) {
        Vec<K> br = A.on_basis(tuple);
        K acc = K(0);
        for (int k = 0; k < m; ++k)
            if (!br[k].is_zero()) acc -= theta[k] * br[k];
        out.set(tuple, acc);
    }
    return out;
}

// Coboundary of a scalar n-form: the action terms of the six-term formula
// drop, leaving
//   (d w)(a1,a2,z) = - sum_i w(y_1,..,[a1,y_i],..,y_{n-1},z)
//                    - w(a2, L(a1) z) + w(a1, L(a2) z),
// flat over (b1, b2, z).
template <typename K>
Vec<K> scalar_delta(const CochainContext<K>& ctx, const ScalarForm<K>& w) {
    int n = ctx.A.arity(), m = ctx.A.dim(), D = ctx.blocks.size();
    Vec<K> out;
    out.reserve(static_cast<size_t>(D) * D * m);
    for (int b1 = 0; b1 < D; ++b1) {
        const std::vector<int>& x = ctx.blocks.tuple(b1);
        const Matrix<K>& Lx = ctx.L[b1];
        for (int b2 = 0; b2 < D; ++b2) {
            const std::vector<int>& y = ctx.blocks.tuple(b2);
            const Matrix<K>& Ly = ctx.L[b2];
            std::vector<int> yz = y, xz = x;
            yz.push_back(0);
            xz.push_back(0);
            for (int z = 0; z < m; ++z) {
                yz[n - 1] = z;
                xz[n - 1] = z;
                K acc = K(0);
                for (int i = 0; i < n - 1; ++i) acc -= w.eval_with_vec(yz, i, Lx.col(y[i]));
                acc -= w.eval_with_vec(yz, n - 1, Lx.col(z));
                acc += w.eval_with_vec(xz, n - 1, Ly.col(z));
                out.push_back(acc);
            }
        }
    }
    return out;
}

template <typename K>
bool scalar_cocycle(const StructureConstants<K>& A, const ScalarForm<K>& w) {
    return is_zero_vec(scalar_delta(make_context(A), w));
}

// ---- comparison map into Leibniz cohomology ----

// Delta phi (x_1^..^x_{n-1}) = sum_i x_1^..^phi(x_i)^..^x_{n-1}
template <typename K>
Matrix<K> delta_map0(const CochainContext<K>& ctx, const Matrix<K>& phi) {
    int n = ctx.A.arity(), D = ctx.blocks.size(), m = ctx.A.dim();
    Matrix<K> F(D, D, K(0));
    for (int b = 0; b < D; ++b) {
        const std::vector<int>& y = ctx.blocks.tuple(b);
        for (int i = 0; i < n - 1; ++i)
            for (int k = 0; k < m; ++k) {
                if (phi.at(k, y[i]).is_zero()) continue;
                std::vector<int> t = y;
                t[i] = k;
                int s = canonical_sign(t);
                if (s == 0) continue;
                if (s > 0)
                    F.at(ctx.blocks.rank(t), b) += phi.at(k, y[i]);
                else
                    F.at(ctx.blocks.rank(t), b) -= phi.at(k, y[i]);
            }
    }
    return F;
}

// Delta psi (a_1,..,a_{p+1}) = sum_i x_{p+1}^1 ^..^ psi(a_1..a_p, x_{p+1}^i)
// ^..^ x_{p+1}^{n-1}, as a (p+1)-ary table on the fundamental space.
template <typename K>
NAryTable<K> delta_map(const CochainContext<K>& ctx, const GridCochain<K>& psi) {
    int n = ctx.A.arity(), D = ctx.blocks.size(), m = ctx.A.dim();
    int p = psi.blocks();
    NAryTable<K> out(p + 1, D);
    std::vector<int> B(p + 1, 0);
    while (true) {
        std::vector<int> head(B.begin(), B.end() - 1);
        const std::vector<int>& y = ctx.blocks.tuple(B[p]);
        Vec<K> acc(D, K(0));
        for (int i = 0; i < n - 1; ++i) {
            const Vec<K>& v = psi.value(head, y[i]);
            for (int k = 0; k < m; ++k) {
                if (v[k].is_zero()) continue;
                std::vector<int> t = y;
                t[i] = k;
                int s = canonical_sign(t);
                if (s == 0) continue;
                if (s > 0)
                    acc[ctx.blocks.rank(t)] += v[k];
                else
                    acc[ctx.blocks.rank(t)] -= v[k];
            }
        }
        out.set(B, acc);
        int i = p;
        while (i >= 0 && B[i] == D - 1) B[i--] = 0;
        if (i < 0) break;
        ++B[i];
    }
    return out;
}

// Leibniz coboundary with adjoint coefficients for the induced bracket:
//   (d w)(a_1..a_{q+1}) = sum_{i<=q} (-1)^{i+1} [a_i, w(..a_i hat..)]
//                       + (-1)^{q+1} [w(a_1..a_q), a_{q+1}]
//                       + sum_{i<j} (-1)^i w(..a_i hat.., [a_i,a_j] at j, ..)
template <typename K>
NAryTable<K> leibniz_d(const NAryTable<K>& leib, const NAryTable<K>& w) {
    int D = leib.dim(), q = w.arity();
    NAryTable<K> out(q + 1, D);
    std::vector<int> a(q + 1, 0);
    while (true) {
        Vec<K> acc(D, K(0));
        for (int i = 0; i < q; ++i) {
            Vec<K> v = w.on_basis(detail::drop_index(a, i));
            if (!is_zero_vec(v)) {
                Vec<K> t = eval_with_vec_at(leib, {a[i], 0}, 1, v);
                axpy(acc, K(i % 2 == 0 ? 1 : -1), t);
            }
        }
        {
            Vec<K> v = w.on_basis(std::vector<int>(a.begin(), a.end() - 1));
            if (!is_zero_vec(v)) {
                Vec<K> t = eval_with_vec_at(leib, {0, a[q]}, 0, v);
                axpy(acc, K(q % 2 == 0 ? -1 : 1), t);  // (-1)^{q+1}, 1-based q+1 slot
            }
        }
        for (int i = 0; i <= q; ++i)
            for (int j = i + 1; j <= q; ++j) {
                Vec<K> br = leib.on_basis({a[i], a[j]});
                if (is_zero_vec(br)) continue;
                std::vector<int> rest = detail::drop_index(a, i);
                Vec<K> t = eval_with_vec_at(w, rest, j - 1, br);
                axpy(acc, K(i % 2 == 0 ? -1 : 1), t);
            }
        out.set(a, acc);
        int i = q;
        while (i >= 0 && a[i] == D - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

template <typename K>
NAryTable<K> leibniz_d(const NAryTable<K>& leib, const Matrix<K>& w) {
    int D = leib.dim();
    NAryTable<K> w1(1, D);
    for (int j = 0; j < D; ++j) w1.set({j}, w.col(j));
    return leibniz_d(leib, w1);
}

// Residuals of d(Delta psi) - Delta(delta psi) over all block tuples.
template <typename K>
std::vector<Violation<K>> delta_commutation_residuals(const CochainContext<K>& ctx,
                                                      const GridCochain<K>& psi) {
    NAryTable<K> lhs = leibniz_d(ctx.leib, delta_map(ctx, psi));
    NAryTable<K> rhs = delta_map(ctx, delta_general(ctx, psi));
    int D = ctx.blocks.size(), q = lhs.arity();
    std::vector<Violation<K>> out;
    std::vector<int> a(q, 0);
    while (true) {
        Vec<K> l = lhs.on_basis(a), r = rhs.on_basis(a);
        for (int s = 0; s < D; ++s) {
            K d = l[s] - r[s];
            if (!d.is_zero()) out.push_back({a, s, d});
        }
        int i = q - 1;
        while (i >= 0 && a[i] == D - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

template <typename K>
std::vector<Violation<K>> delta_commutation_residuals(const CochainContext<K>& ctx,
                                                      const Matrix<K>& phi) {
    NAryTable<K> lhs = leibniz_d(ctx.leib, delta_map0(ctx, phi));
    NAryTable<K> rhs = delta_map(ctx, grid_embed(ctx, delta1(ctx.A, phi)));
    int D = ctx.blocks.size();
    std::vector<Violation<K>> out;
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
            Vec<K> l = lhs.on_basis({a, b}), r = rhs.on_basis({a, b});
            for (int s = 0; s < D; ++s) {
                K d = l[s] - r[s];
                if (!d.is_zero()) out.push_back({{a, b}, s, d});
            }
        }
    return out;
}

}  // namespace nlie
