#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "nlie/linalg.hpp"
#include "nlie/multiindex.hpp"

namespace nlie {

enum class Exec { Serial, Parallel };

// One violated relation instance: the index data identifying the relation,
// the output coordinate, and the (nonzero) residual value.
template <class K>
struct Violation {
    std::vector<int> where;
    int coord;
    K value;
};

template <class K>
using Residuals = std::vector<Violation<K>>;

// Skew n-ary bracket on K^m stored by structure constants over strictly
// increasing multi-indices. Lookups canonicalize and apply the permutation
// sign; repeated indices give zero.
template <class K>
class StructureConstants {
  public:
    StructureConstants(int arity, int dim) : n_(arity), m_(dim) {
        if (arity < 2 || dim < 1) throw std::invalid_argument("StructureConstants: bad shape");
    }

    int arity() const { return n_; }
    int dim() const { return m_; }
    const std::map<std::vector<int>, Vec<K>>& table() const { return table_; }

    // [e_{idx[0]}, ..., e_{idx[n-1]}] = value; idx in any order, 0-based.
    void set_bracket(std::vector<int> idx, Vec<K> value) {
        check_tuple(idx);
        if (static_cast<int>(value.size()) != m_)
            throw std::invalid_argument("StructureConstants: value length mismatch");
        int sign = canonical_sign(idx);
        if (sign == 0) throw std::invalid_argument("StructureConstants: repeated index");
        if (sign < 0)
            for (auto& v : value) v = K(0) - v;
        if (is_zero_vec(value))
            table_.erase(idx);
        else
            table_[idx] = std::move(value);
    }

    Vec<K> on_basis(std::vector<int> idx) const {
        check_tuple(idx);
        int sign = canonical_sign(idx);
        Vec<K> out(m_, K(0));
        if (sign == 0) return out;
        auto it = table_.find(idx);
        if (it == table_.end()) return out;
        out = it->second;
        if (sign < 0)
            for (auto& v : out) v = K(0) - v;
        return out;
    }

    K coeff(const std::vector<int>& idx, int k) const { return on_basis(idx)[k]; }

    // Multilinear skew extension to coordinate vectors.
    Vec<K> eval(const std::vector<Vec<K>>& args) const {
        if (static_cast<int>(args.size()) != n_)
            throw std::invalid_argument("StructureConstants: wrong argument count");
        for (const auto& a : args)
            if (static_cast<int>(a.size()) != m_)
                throw std::invalid_argument("StructureConstants: vector length mismatch");
        Vec<K> out(m_, K(0));
        for (const auto& [idx, val] : table_) {
            // coefficient of C_idx is det(args[c][idx[r]])
            Matrix<K> mtx(n_, n_, K(0));
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < n_; ++c) mtx.at(r, c) = args[c][idx[r]];
            K d = det_cofactor(mtx);
            if (d.is_zero()) continue;
            for (int s = 0; s < m_; ++s) out[s] += d * val[s];
        }
        return out;
    }

    // z -> [e_{block[0]}, ..., e_{block[n-2]}, z], as an m x m matrix.
    Matrix<K> ad_matrix(const std::vector<int>& block) const {
        if (static_cast<int>(block.size()) != n_ - 1)
            throw std::invalid_argument("StructureConstants: block length mismatch");
        Matrix<K> mat(m_, m_, K(0));
        std::vector<int> idx(block);
        idx.push_back(0);
        for (int c = 0; c < m_; ++c) {
            idx.back() = c;
            Vec<K> col = on_basis(idx);
            for (int r = 0; r < m_; ++r) mat.at(r, c) = col[r];
        }
        return mat;
    }

    bool is_zero() const {
        for (const auto& [idx, val] : table_)
            if (!is_zero_vec(val)) return false;
        return true;
    }

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.table_ == b.table_;
    }
    friend bool operator!=(const StructureConstants& a, const StructureConstants& b) {
        return !(a == b);
    }

  private:
    void check_tuple(const std::vector<int>& idx) const {
        if (static_cast<int>(idx.size()) != n_)
            throw std::invalid_argument("StructureConstants: tuple length mismatch");
        for (int i : idx)
            if (i < 0 || i >= m_) throw std::out_of_range("StructureConstants: index out of range");
    }

    int n_, m_;
    std::map<std::vector<int>, Vec<K>> table_;
};

// Dense n-ary operation table with no symmetry imposed.
template <class K>
class NAryTable {
  public:
    NAryTable(int arity, int dim)
        : n_(arity), m_(dim), table_(pow_size(dim, arity), Vec<K>(dim, K(0))) {}

    int arity() const { return n_; }
    int dim() const { return m_; }

    void set(const std::vector<int>& idx, Vec<K> value) {
        if (static_cast<int>(value.size()) != m_)
            throw std::invalid_argument("NAryTable: value length mismatch");
        table_[rank_of(idx)] = std::move(value);
    }

    Vec<K> on_basis(const std::vector<int>& idx) const { return table_[rank_of(idx)]; }

    void add_to(const std::vector<int>& idx, const Vec<K>& value) {
        Vec<K>& slot = table_[rank_of(idx)];
        for (int s = 0; s < m_; ++s) slot[s] += value[s];
    }

    bool is_zero() const {
        for (const auto& v : table_)
            if (!is_zero_vec(v)) return false;
        return true;
    }

    // Full multilinear extension.
    Vec<K> eval(const std::vector<Vec<K>>& args) const {
        if (static_cast<int>(args.size()) != n_)
            throw std::invalid_argument("NAryTable: wrong argument count");
        Vec<K> out(m_, K(0));
        std::vector<int> idx(n_, 0);
        for (size_t r = 0; r < table_.size(); ++r) {
            if (!is_zero_vec(table_[r])) {
                K c = args[0][idx[0]];
                for (int a = 1; a < n_; ++a) c = c * args[a][idx[a]];
                if (!c.is_zero())
                    for (int s = 0; s < m_; ++s) out[s] += c * table_[r][s];
            }
            for (int a = n_ - 1; a >= 0; --a) {
                if (++idx[a] < m_) break;
                idx[a] = 0;
            }
        }
        return out;
    }

    friend bool operator==(const NAryTable& a, const NAryTable& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.table_ == b.table_;
    }

  private:
    static size_t pow_size(int m, int n) {
        size_t s = 1;
        for (int i = 0; i < n; ++i) s *= static_cast<size_t>(m);
        return s;
    }
    size_t rank_of(const std::vector<int>& idx) const {
        if (static_cast<int>(idx.size()) != n_)
            throw std::invalid_argument("NAryTable: tuple length mismatch");
        size_t r = 0;
        for (int i : idx) {
            if (i < 0 || i >= m_) throw std::out_of_range("NAryTable: index out of range");
            r = r * static_cast<size_t>(m_) + static_cast<size_t>(i);
        }
        return r;
    }

    int n_, m_;
    std::vector<Vec<K>> table_;
};

// mu(..., w) with the vector w substituted at position pos of the basis tuple.
template <class K, class M>
Vec<K> eval_with_vec_at(const M& mu, std::vector<int> idx, int pos, const Vec<K>& w) {
    int m = mu.dim();
    Vec<K> out(m, K(0));
    for (int k = 0; k < m; ++k) {
        if (w[k].is_zero()) continue;
        idx[pos] = k;
        Vec<K> v = mu.on_basis(idx);
        for (int s = 0; s < m; ++s) out[s] += w[k] * v[s];
    }
    return out;
}

// Circle product of two n-ary operations: the (2n-1)-ary operation
//   mu o nu (x_1..x_{2n-1}) = mu(x_1..x_{n-1}, nu(x_n..x_{2n-1}))
//     - sum_{i=n}^{2n-1} mu(x_n .. nu(x_1..x_{n-1}, x_i) .. x_{2n-1}).
// Vanishing of mu o mu is equivalent to the Nambu identity.
template <class K, class M1, class M2>
Vec<K> circle_on_basis(const M1& mu, const M2& nu, const std::vector<int>& idx) {
    int n = mu.arity(), m = mu.dim();
    std::vector<int> head(idx.begin(), idx.begin() + (n - 1));
    std::vector<int> tail(idx.begin() + (n - 1), idx.end());
    std::vector<int> args(head);
    args.push_back(0);
    Vec<K> out = eval_with_vec_at(mu, args, n - 1, nu.on_basis(tail));
    for (int i = 0; i < n; ++i) {
        args = head;
        args.push_back(tail[i]);
        Vec<K> w = nu.on_basis(args);
        Vec<K> term = eval_with_vec_at(mu, tail, i, w);
        for (int s = 0; s < m; ++s) out[s] -= term[s];
    }
    return out;
}

template <class K, class M1, class M2>
NAryTable<K> circle(const M1& mu, const M2& nu) {
    if (mu.arity() != nu.arity() || mu.dim() != nu.dim())
        throw std::invalid_argument("circle: arity or dimension mismatch");
    int n = mu.arity(), m = mu.dim();
    NAryTable<K> out(2 * n - 1, m);
    std::vector<int> idx(2 * n - 1, 0);
    while (true) {
        out.set(idx, circle_on_basis<K>(mu, nu, idx));
        int a = 2 * n - 2;
        for (; a >= 0; --a) {
            if (++idx[a] < m) break;
            idx[a] = 0;
        }
        if (a < 0) break;
    }
    return out;
}

// Residual of the Nambu relations at the structure-constant level for one
// increasing (n-1)-tuple i and increasing n-tuple j, as a vector over the
// output coordinate s:
//   sum_k C_j^k C_{i,k}^s  -  sum_r sum_k C_{i,j_r}^k C_{j[r->k]}^s.
template <class K>
Vec<K> nambu_residual_at(const StructureConstants<K>& A, const std::vector<int>& i,
                         const std::vector<int>& j) {
    int n = A.arity(), m = A.dim();
    std::vector<int> args(i);
    args.push_back(0);
    Vec<K> out = eval_with_vec_at(A, args, n - 1, A.on_basis(j));
    for (int r = 0; r < n; ++r) {
        args = i;
        args.push_back(j[r]);
        Vec<K> w = A.on_basis(args);
        Vec<K> term = eval_with_vec_at(A, j, r, w);
        for (int s = 0; s < m; ++s) out[s] -= term[s];
    }
    return out;
}

template <class K>
Residuals<K> nambu_residuals(const StructureConstants<K>& A, Exec exec = Exec::Parallel) {
    int n = A.arity(), m = A.dim();
    auto is = increasing_tuples(m, n - 1);
    auto js = increasing_tuples(m, n);
    int total = static_cast<int>(is.size() * js.size());
    std::vector<Residuals<K>> parts(total);
    bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int t = 0; t < total; ++t) {
        const auto& i = is[t / js.size()];
        const auto& j = js[t % js.size()];
        Vec<K> res = nambu_residual_at(A, i, j);
        for (int s = 0; s < m; ++s) {
            if (res[s].is_zero()) continue;
            std::vector<int> where(i);
            where.insert(where.end(), j.begin(), j.end());
            parts[t].push_back({std::move(where), s, res[s]});
        }
    }
    Residuals<K> out;
    for (auto& p : parts)
        for (auto& v : p) out.push_back(std::move(v));
    return out;
}

template <class K>
bool check_nambu(const StructureConstants<K>& A, Exec exec = Exec::Parallel) {
    return nambu_residuals(A, exec).empty();
}

// Signed sum over S_{2n-1} of [[x_{s(1)},..,x_{s(n)}], x_{s(n+1)},..];
// evaluated on strictly increasing basis tuples (the sum is alternating).
// Identically satisfied when m < 2n-1.
template <class K>
Residuals<K> generalized_jacobi_residuals(const StructureConstants<K>& A) {
    int n = A.arity(), m = A.dim();
    int w = 2 * n - 1;
    Residuals<K> out;
    if (m < w) return out;
    std::vector<int> perm(w);
    for (const auto& tuple : increasing_tuples(m, w)) {
        Vec<K> acc(m, K(0));
        for (int i = 0; i < w; ++i) perm[i] = i;
        do {
            std::vector<int> copy(perm);
            int sign = canonical_sign(copy);
            std::vector<int> inner(n), outer(w - n + 1, 0);
            for (int i = 0; i < n; ++i) inner[i] = tuple[perm[i]];
            for (int i = n; i < w; ++i) outer[i - n + 1] = tuple[perm[i]];
            Vec<K> v = A.on_basis(inner);
            Vec<K> term = eval_with_vec_at(A, outer, 0, v);
            for (int s = 0; s < m; ++s) {
                if (sign > 0)
                    acc[s] += term[s];
                else
                    acc[s] -= term[s];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int s = 0; s < m; ++s)
            if (!acc[s].is_zero()) out.push_back({tuple, s, acc[s]});
    }
    return out;
}

enum class AssocMode { Total, WeakTotal, Partial };

// Placement i of the nested product on a basis (2n-1)-tuple:
//   m(x_1..x_i, m(x_{i+1}..x_{i+n}), x_{i+n+1}..x_{2n-1}).
template <class K>
Vec<K> nested_placement(const NAryTable<K>& T, const std::vector<int>& idx, int i) {
    int n = T.arity();
    std::vector<int> inner(idx.begin() + i, idx.begin() + i + n);
    std::vector<int> outer;
    outer.reserve(n);
    for (int a = 0; a < i; ++a) outer.push_back(idx[a]);
    outer.push_back(0);
    for (int a = i + n; a < 2 * n - 1; ++a) outer.push_back(idx[a]);
    return eval_with_vec_at(T, outer, i, T.on_basis(inner));
}

template <class K>
Residuals<K> associativity_residuals(const NAryTable<K>& T, AssocMode mode) {
    int n = T.arity(), m = T.dim();
    Residuals<K> out;
    std::vector<int> idx(2 * n - 1, 0);
    while (true) {
        if (mode == AssocMode::Partial) {
            Vec<K> acc(m, K(0));
            for (int i = 0; i < n; ++i) {
                Vec<K> term = nested_placement(T, idx, i);
                for (int s = 0; s < m; ++s) acc[s] += term[s];
            }
            for (int s = 0; s < m; ++s)
                if (!acc[s].is_zero()) out.push_back({idx, s, acc[s]});
        } else {
            Vec<K> first = nested_placement(T, idx, 0);
            if (mode == AssocMode::WeakTotal) {
                Vec<K> last = nested_placement(T, idx, n - 1);
                for (int s = 0; s < m; ++s) {
                    K d = first[s] - last[s];
                    if (!d.is_zero()) out.push_back({idx, s, d});
                }
            } else {
                for (int i = 1; i < n; ++i) {
                    Vec<K> other = nested_placement(T, idx, i);
                    for (int s = 0; s < m; ++s) {
                        K d = first[s] - other[s];
                        if (d.is_zero()) continue;
                        std::vector<int> where(idx);
                        where.push_back(i);
                        out.push_back({std::move(where), s, d});
                    }
                }
            }
        }
        int a = 2 * n - 2;
        for (; a >= 0; --a) {
            if (++idx[a] < m) break;
            idx[a] = 0;
        }
        if (a < 0) break;
    }
    return out;
}

// Antisymmetrization [x_1..x_n] = sum_sigma sgn(sigma) m(x_{s(1)},..,x_{s(n)}).
// Refuses tables that fail the partial associativity identity.
template <class K>
StructureConstants<K> skew_symmetrize_to_lie(const NAryTable<K>& T) {
    if (!associativity_residuals(T, AssocMode::Partial).empty())
        throw std::invalid_argument("skew_symmetrize_to_lie: table is not partially associative");
    int n = T.arity(), m = T.dim();
    StructureConstants<K> A(n, m);
    std::vector<int> perm(n);
    for (const auto& tuple : increasing_tuples(m, n)) {
        Vec<K> acc(m, K(0));
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            std::vector<int> copy(perm);
            int sign = canonical_sign(copy);
            std::vector<int> args(n);
            for (int i = 0; i < n; ++i) args[i] = tuple[perm[i]];
            Vec<K> v = T.on_basis(args);
            for (int s = 0; s < m; ++s) {
                if (sign > 0)
                    acc[s] += v[s];
                else
                    acc[s] -= v[s];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        A.set_bracket(tuple, std::move(acc));
    }
    return A;
}

// N^1 = span of all bracket values; Z(N) = {z : [z, e_{i_2}, .., e_{i_n}] = 0}.
template <class K>
std::pair<std::vector<Vec<K>>, std::vector<Vec<K>>> derived_and_center(
    const StructureConstants<K>& A) {
    int n = A.arity(), m = A.dim();
    EchelonBasis<K> derived(m);
    for (const auto& [idx, val] : A.table()) derived.insert(val);
    auto blocks = increasing_tuples(m, n - 1);
    Matrix<K> sys(static_cast<int>(blocks.size()) * m, m, K(0));
    for (size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> idx;
        idx.push_back(0);
        idx.insert(idx.end(), blocks[b].begin(), blocks[b].end());
        for (int c = 0; c < m; ++c) {
            idx[0] = c;
            Vec<K> v = A.on_basis(idx);
            for (int s = 0; s < m; ++s) sys.at(static_cast<int>(b) * m + s, c) = v[s];
        }
    }
    return {derived.basis(), kernel_basis(sys)};
}

// Skew-symmetric family of d x d matrices indexed by (n-1)-tuples of algebra
// basis indices: a representation candidate rho.
template <class K>
class Representation {
  public:
    Representation(int arity, int alg_dim, int mod_dim)
        : n_(arity), m_(alg_dim), d_(mod_dim) {}

    int arity() const { return n_; }
    int alg_dim() const { return m_; }
    int mod_dim() const { return d_; }

    void set_block(std::vector<int> idx, Matrix<K> rho) {
        int sign = canonical_sign(idx);
        if (sign == 0) throw std::invalid_argument("Representation: repeated index");
        if (rho.rows() != d_ || rho.cols() != d_)
            throw std::invalid_argument("Representation: matrix shape mismatch");
        if (sign < 0) rho = (K(0) - K(1)) * rho;
        table_[idx] = std::move(rho);
    }

    Matrix<K> on_block(std::vector<int> idx) const {
        int sign = canonical_sign(idx);
        if (sign == 0) return Matrix<K>(d_, d_, K(0));
        auto it = table_.find(idx);
        if (it == table_.end()) return Matrix<K>(d_, d_, K(0));
        if (sign < 0) return (K(0) - K(1)) * it->second;
        return it->second;
    }

  private:
    int n_, m_, d_;
    std::map<std::vector<int>, Matrix<K>> table_;
};

template <class K>
Representation<K> adjoint_representation(const StructureConstants<K>& A) {
    Representation<K> rho(A.arity(), A.dim(), A.dim());
    for (const auto& block : increasing_tuples(A.dim(), A.arity() - 1))
        rho.set_block(block, A.ad_matrix(block));
    return rho;
}

// rho(x) rho(y) - rho(y) rho(x) = sum_i rho(y_1, .., ad_x(y_i), .., y_{n-1})
// with ad_x(u) = [x_1, .., x_{n-1}, u], checked on all pairs of increasing
// basis blocks. Empty report iff rho is a representation.
template <class K>
Residuals<K> representation_residuals(const Representation<K>& rho,
                                      const StructureConstants<K>& A) {
    int n = A.arity(), m = A.dim(), d = rho.mod_dim();
    Residuals<K> out;
    auto blocks = increasing_tuples(m, n - 1);
    for (const auto& x : blocks) {
        Matrix<K> rx = rho.on_block(x);
        for (const auto& y : blocks) {
            Matrix<K> ry = rho.on_block(y);
            Matrix<K> resid = rx * ry - ry * rx;
            for (int i = 0; i < n - 1; ++i) {
                std::vector<int> args(x);
                args.push_back(y[i]);
                Vec<K> w = A.on_basis(args);  // ad_x(y_i) in coordinates
                for (int c = 0; c < m; ++c) {
                    if (w[c].is_zero()) continue;
                    std::vector<int> yb(y);
                    yb[i] = c;
                    std::vector<int> check(yb);
                    if (canonical_sign(check) == 0) continue;
                    resid = resid - (w[c] * rho.on_block(yb));
                }
            }
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    if (resid.at(r, c).is_zero()) continue;
                    std::vector<int> where(x);
                    where.insert(where.end(), y.begin(), y.end());
                    out.push_back({std::move(where), r * d + c, resid.at(r, c)});
                }
        }
    }
    return out;
}

// f intertwines rho and rho': f(rho(x) y) = rho'(x) f(y) on basis data.
template <class K>
bool representations_equivalent(const Representation<K>& rho, const Representation<K>& rhop,
                                const Matrix<K>& f) {
    if (!inverse(f).has_value())
        throw std::invalid_argument("representations_equivalent: singular intertwiner");
    for (const auto& x : increasing_tuples(rho.alg_dim(), rho.arity() - 1))
        if (!(f * rho.on_block(x) == rhop.on_block(x) * f)) return false;
    return true;
}

}  // namespace nlie
