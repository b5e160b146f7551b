#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nsflow {

/// Square matrix of nonnegative integers. Used as the transition matrix of a
/// suspension of a subshift of finite type attached to a saddle vertex.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}

    /// Builds from a list of rows; throws std::invalid_argument if the rows
    /// are empty or not square.
    static IntMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

    std::size_t dim() const { return dim_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { entries_[i * dim_ + j] = v; }

    /// Row-major entries, as serialized in graph documents.
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    std::vector<std::vector<std::uint64_t>> rows() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t dim_;
    std::vector<std::uint64_t> entries_;
};

/// Square bit matrix over the two-element field. Rows are stored as bitsets
/// (64-bit words), so elimination works a word at a time.
class Gf2Matrix {
public:
    explicit Gf2Matrix(std::size_t dim)
        : dim_(dim), words_per_row_((dim + 63) / 64), words_(dim * words_per_row_, 0) {}

    std::size_t dim() const { return dim_; }

    bool at(std::size_t i, std::size_t j) const {
        return (word(i, j / 64) >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        std::uint64_t& w = words_[i * words_per_row_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        w = v ? (w | bit) : (w & ~bit);
    }

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(const Gf2Matrix&) const = default;

private:
    std::uint64_t word(std::size_t row, std::size_t w) const {
        return words_[row * words_per_row_ + w];
    }

    std::size_t dim_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> words_;
};

/// Entrywise reduction mod 2.
Gf2Matrix mod2_reduce(const IntMatrix& a);

/// Row rank over the two-element field (bitset Gaussian elimination).
std::size_t gf2_rank(Gf2Matrix m);

/// dim ker(I - B) over the two-element field, i.e. dim - rank(I - B).
std::size_t kernel_dim(const Gf2Matrix& b);

/// kernel_dim(mod2_reduce(a)): the k-invariant of the subshift with matrix a.
std::size_t ssft_k(const IntMatrix& a);

/// True iff the digraph with an arc i -> j whenever a(i,j) > 0 is strongly
/// connected.
bool is_irreducible(const IntMatrix& a);

/// Deterministic irreducible matrix with prescribed k-invariant: [[2]] for
/// k = 0, otherwise the k x k matrix with 1 on the diagonal and 2 elsewhere
/// (its mod-2 reduction is the identity, so I - B vanishes).
IntMatrix find_matrix_with_k(std::size_t k);

}  // namespace nsflow
