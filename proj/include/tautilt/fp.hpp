#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tautilt/errors.hpp"

namespace tautilt {

// Arithmetic in the prime field F_p. Elements are canonical residues in
// [0, p). p stays small (a machine word), so products fit in uint64_t.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

using Vec = std::vector<std::uint32_t>;

// Dense matrix over F_p, row major. The field is passed to the
// operations rather than stored, matching how a single field instance
// governs a whole algebra. Zero-row / zero-column shapes are legal and
// show up constantly (empty vertex blocks).
struct Mat {
    int rows = 0;
    int cols = 0;
    Vec a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    static Mat identity(int n);

    std::uint32_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat add(const PrimeField& F, const Mat& x, const Mat& y);
Mat sub(const PrimeField& F, const Mat& x, const Mat& y);
Mat scale(const PrimeField& F, std::uint32_t c, const Mat& x);
Mat mul(const PrimeField& F, const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);

// In-place reduced row echelon form, columns processed left to right.
// Returns the rank; pivot column indices appended to `pivots` if given.
int rref(const PrimeField& F, Mat& m, std::vector<int>* pivots = nullptr);

int row_rank(const PrimeField& F, Mat m);

// Basis of { v : v * m = 0 } as the rows of the result, in the
// deterministic order induced by the free rows of m.
Mat left_nullspace(const PrimeField& F, const Mat& m);

// Solve x * a = b for x, if b's rows lie in the row space of a.
std::optional<Mat> solve_left(const PrimeField& F, const Mat& a, const Mat& b);

// Solutions of eq * x = 0 (x a column vector), returned as the rows of
// the first component, in standard form: row k has a 1 at free column k
// and 0 at the other free columns. Second component lists the free
// columns.
std::pair<Mat, std::vector<int>> right_nullspace(const PrimeField& F, Mat eq);

// Whether every block of a square-blocked map is invertible is checked
// elsewhere; here: invertibility of one square matrix.
bool is_invertible(const PrimeField& F, const Mat& m);

// A row space with a caller-chosen elimination order over the columns.
// Used for ideal spans, where the pivoting order decides which path
// residues survive as basis representatives.
class RowSpace {
public:
    // `order[k]` is the column eliminated k-th. Must be a permutation of
    // 0..cols-1 of the ambient space.
    RowSpace(const PrimeField& F, int cols, std::vector<int> order);

    // Add a vector to the span. Returns true if it enlarged the span.
    bool insert(Vec v);

    // Residual of v after reduction; zero iff v lies in the span.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    bool is_pivot(int col) const { return pivot_of_col_[col] >= 0; }

private:
    const PrimeField F_;
    int cols_;
    std::vector<int> order_;
    std::vector<int> pos_in_order_;       // col -> position in order
    std::vector<Vec> rows_;               // normalized, pivot coefficient 1
    std::vector<int> pivot_col_of_row_;
    std::vector<int> pivot_of_col_;       // col -> row index or -1
    void reduce_in_place(Vec& v) const;
};

} // namespace tautilt
