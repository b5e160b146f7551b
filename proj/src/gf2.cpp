#include "nsflow/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nsflow {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix must have positive dimension");
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<std::vector<std::uint64_t>> IntMatrix::rows() const {
    std::vector<std::vector<std::uint64_t>> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
    return out;
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_per_row_; ++w)
        words_[dst * words_per_row_ + w] ^= words_[src * words_per_row_ + w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        std::swap(words_[a * words_per_row_ + w], words_[b * words_per_row_ + w]);
}

Gf2Matrix mod2_reduce(const IntMatrix& a) {
    Gf2Matrix b(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) b.set(i, j, a.at(i, j) & 1u);
    return b;
}

std::size_t gf2_rank(Gf2Matrix m) {
    const std::size_t n = m.dim();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && !m.at(pivot, col)) ++pivot;
        if (pivot == n) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t r = pivot + 1; r < n; ++r)
            if (m.at(r, col)) m.xor_row(r, rank);
        ++rank;
    }
    return rank;
}

std::size_t kernel_dim(const Gf2Matrix& b) {
    Gf2Matrix m = b;
    for (std::size_t i = 0; i < m.dim(); ++i) m.set(i, i, !m.at(i, i));  // I - B over F2
    return m.dim() - gf2_rank(std::move(m));
}

std::size_t ssft_k(const IntMatrix& a) { return kernel_dim(mod2_reduce(a)); }

namespace {

// Reachability from vertex 0 in the support digraph, arcs optionally reversed.
std::vector<bool> reach_from_zero(const IntMatrix& a, bool reversed) {
    const std::size_t n = a.dim();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            const std::uint64_t entry = reversed ? a.at(w, v) : a.at(v, w);
            if (entry > 0 && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_irreducible(const IntMatrix& a) {
    const std::vector<bool> fwd = reach_from_zero(a, false);
    const std::vector<bool> bwd = reach_from_zero(a, true);
    for (std::size_t v = 0; v < a.dim(); ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

IntMatrix find_matrix_with_k(std::size_t k) {
    if (k == 0) {
        IntMatrix m(1);
        m.set(0, 0, 2);
        return m;
    }
    IntMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.set(i, j, i == j ? 1 : 2);
    return m;
}

}  // namespace nsflow
