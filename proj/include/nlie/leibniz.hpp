#pragma once

#include <stdexcept>
#include <vector>

#include "nlie/linalg.hpp"
#include "nlie/multiindex.hpp"
#include "nlie/nary.hpp"

namespace nlie {

// The fundamental space of an n-ary bracket on K^m is Lambda^{n-1} K^m with
// the increasing-tuple basis e_{i_1}^...^e_{i_{n-1}}, i_1 < ... < i_{n-1},
// ordered lexicographically.  Elements x = x_1^...^x_{n-1} act on K^m through
// the adjoint map L(x) z = [x_1, ..., x_{n-1}, z], and the action induces a
// binary bracket on the fundamental space that is Leibniz exactly when the
// underlying bracket satisfies the Nambu identity.

inline SubsetIndexer fundamental_basis(int arity, int dim) { return SubsetIndexer(dim, arity - 1); }

template <typename K>
SubsetIndexer fundamental_basis(const StructureConstants<K>& A) {
    return fundamental_basis(A.arity(), A.dim());
}

// Coordinates of e_{t_1}^...^e_{t_k} over the increasing basis; zero when an
// index repeats.
template <typename K>
Vec<K> wedge_coords(const SubsetIndexer& basis, std::vector<int> tuple) {
    Vec<K> v(basis.size(), K(0));
    int s = canonical_sign(tuple);
    if (s != 0) v[basis.rank(tuple)] += K(s);
    return v;
}

// Matrix of L(x) = sum_b x_b L(e_{b_1}^...^e_{b_{n-1}}) acting on K^m.
template <typename K>
Matrix<K> adjoint_matrix(const StructureConstants<K>& A, const SubsetIndexer& basis, const Vec<K>& x) {
    int m = A.dim();
    Matrix<K> L(m, m, K(0));
    for (int b = 0; b < basis.size(); ++b) {
        if (x[b].is_zero()) continue;
        Matrix<K> Lb = A.ad_matrix(basis.tuple(b));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!Lb.at(i, j).is_zero()) L.at(i, j) += x[b] * Lb.at(i, j);
    }
    return L;
}

template <typename K>
Vec<K> adjoint_action(const StructureConstants<K>& A, const SubsetIndexer& basis, const Vec<K>& x,
                      const Vec<K>& z) {
    return adjoint_matrix(A, basis, x).apply(z);
}

namespace detail {

// [x, y] = sum_i y_1 ^ ... ^ L(x) y_i ^ ... ^ y_{n-1} on basis blocks,
// without the validity gate.
template <typename K>
NAryTable<K> induced_bracket_table(const StructureConstants<K>& A, const SubsetIndexer& basis) {
    int n = A.arity(), D = basis.size();
    NAryTable<K> T(2, D);
    for (int bx = 0; bx < D; ++bx) {
        Matrix<K> Lx = A.ad_matrix(basis.tuple(bx));
        for (int by = 0; by < D; ++by) {
            const std::vector<int>& y = basis.tuple(by);
            Vec<K> out(D, K(0));
            for (int i = 0; i < n - 1; ++i) {
                Vec<K> img = Lx.col(y[i]);
                for (int k = 0; k < A.dim(); ++k) {
                    if (img[k].is_zero()) continue;
                    std::vector<int> t = y;
                    t[i] = k;
                    int s = canonical_sign(t);
                    if (s != 0) out[basis.rank(t)] += K(s) * img[k];
                }
            }
            T.set({bx, by}, out);
        }
    }
    return T;
}

}  // namespace detail

template <typename K>
NAryTable<K> induced_leibniz_bracket(const StructureConstants<K>& A) {
    if (!check_nambu(A))
        throw std::invalid_argument("induced_leibniz_bracket: bracket fails the Nambu identity");
    return detail::induced_bracket_table(A, fundamental_basis(A));
}

// Left Leibniz identity [a,[b,c]] = [[a,b],c] + [b,[a,c]] over all basis
// triples of a binary table.
template <typename K>
std::vector<Violation<K>> left_leibniz_residuals(const NAryTable<K>& T) {
    if (T.arity() != 2) throw std::invalid_argument("left_leibniz_residuals: arity 2 expected");
    int D = T.dim();
    std::vector<Violation<K>> out;
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b)
            for (int c = 0; c < D; ++c) {
                Vec<K> lhs = eval_with_vec_at(T, {a, 0}, 1, T.on_basis({b, c}));
                Vec<K> r1 = eval_with_vec_at(T, {0, c}, 0, T.on_basis({a, b}));
                Vec<K> r2 = eval_with_vec_at(T, {b, 0}, 1, T.on_basis({a, c}));
                for (int s = 0; s < D; ++s) {
                    K r = lhs[s] - r1[s] - r2[s];
                    if (!r.is_zero()) out.push_back({{a, b, c}, s, r});
                }
            }
    return out;
}

// L is a morphism onto commutators: L([x,y]) = L(x)L(y) - L(y)L(x) for all
// fundamental basis blocks x, y.  Empty exactly when A passes check_nambu.
template <typename K>
std::vector<Violation<K>> verify_L_morphism(const StructureConstants<K>& A) {
    SubsetIndexer basis = fundamental_basis(A);
    NAryTable<K> T = detail::induced_bracket_table(A, basis);
    int m = A.dim(), D = basis.size();
    std::vector<Violation<K>> out;
    for (int bx = 0; bx < D; ++bx) {
        Matrix<K> Lx = A.ad_matrix(basis.tuple(bx));
        for (int by = 0; by < D; ++by) {
            Matrix<K> Ly = A.ad_matrix(basis.tuple(by));
            Matrix<K> want = Lx * Ly - Ly * Lx;
            Matrix<K> got = adjoint_matrix(A, basis, T.on_basis({bx, by}));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    K r = got.at(i, j) - want.at(i, j);
                    if (!r.is_zero()) out.push_back({{bx, by}, i * m + j, r});
                }
        }
    }
    return out;
}

}  // namespace nlie
