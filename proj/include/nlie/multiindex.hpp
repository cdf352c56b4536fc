#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace nlie {

// Sorts idx ascending in place and returns the sign of the permutation used,
// or 0 when an index repeats.
inline int canonical_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        int v = idx[i];
        size_t j = i;
        while (j > 0 && idx[j - 1] > v) {
            idx[j] = idx[j - 1];
            --j;
            sign = -sign;
        }
        idx[j] = v;
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] == idx[i]) return 0;
    return sign;
}

// All strictly increasing k-tuples from {0, ..., m-1} in lexicographic order.
inline std::vector<std::vector<int>> increasing_tuples(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == m - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

// Bidirectional numbering of the strictly increasing k-tuples from {0..m-1}.
class SubsetIndexer {
  public:
    SubsetIndexer() : m_(0), k_(0) {}
    SubsetIndexer(int m, int k) : m_(m), k_(k), tuples_(increasing_tuples(m, k)) {
        for (size_t i = 0; i < tuples_.size(); ++i) rank_[tuples_[i]] = static_cast<int>(i);
    }

    int size() const { return static_cast<int>(tuples_.size()); }
    int m() const { return m_; }
    int k() const { return k_; }

    int rank(const std::vector<int>& tuple) const {
        auto it = rank_.find(tuple);
        if (it == rank_.end()) throw std::invalid_argument("SubsetIndexer: tuple not increasing");
        return it->second;
    }

    const std::vector<int>& tuple(int r) const { return tuples_[r]; }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }

  private:
    int m_, k_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> rank_;
};

}  // namespace nlie
