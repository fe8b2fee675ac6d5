#include "tautilt/fp.hpp"

#include <algorithm>

namespace tautilt {

namespace {
bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
} // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (p > 65521) throw InvalidArgument("characteristic too large (max 65521)");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    // extended Euclid on (a, p)
    long long t = 0, newt = 1;
    long long r = p_, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    return reduce(t);
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

bool Mat::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Mat add(const PrimeField& F, const Mat& x, const Mat& y) {
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
    return r;
}

Mat sub(const PrimeField& F, const Mat& x, const Mat& y) {
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
    return r;
}

Mat scale(const PrimeField& F, std::uint32_t c, const Mat& x) {
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.mul(c, x.a[i]);
    return r;
}

Mat mul(const PrimeField& F, const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint64_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                if (y.at(k, j) == 0) continue;
                r.at(i, j) = F.reduce(static_cast<long long>(r.at(i, j)) +
                                      static_cast<long long>(v * y.at(k, j) % F.p()));
            }
        }
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat hstack(const Mat& x, const Mat& y) {
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat vstack(const Mat& x, const Mat& y) {
    Mat r(x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
    return r;
}

int rref(const PrimeField& F, Mat& m, std::vector<int>* pivots) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        std::uint32_t s = F.inv(m.at(rank, col));
        for (int j = col; j < m.cols; ++j) m.at(rank, j) = F.mul(s, m.at(rank, j));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            std::uint32_t f = m.at(r, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(rank, j)));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

int row_rank(const PrimeField& F, Mat m) { return rref(F, m); }

Mat left_nullspace(const PrimeField& F, const Mat& m) {
    // rref of [m | I]; rows whose m-part vanished carry the basis.
    Mat aug = hstack(m, Mat::identity(m.rows));
    rref(F, aug);
    std::vector<int> zero_rows;
    for (int r = 0; r < aug.rows; ++r) {
        bool z = true;
        for (int j = 0; j < m.cols; ++j)
            if (aug.at(r, j) != 0) { z = false; break; }
        if (z) zero_rows.push_back(r);
    }
    Mat res(static_cast<int>(zero_rows.size()), m.rows);
    for (std::size_t i = 0; i < zero_rows.size(); ++i)
        for (int j = 0; j < m.rows; ++j) res.at(static_cast<int>(i), j) = aug.at(zero_rows[i], m.cols + j);
    return res;
}

std::optional<Mat> solve_left(const PrimeField& F, const Mat& a, const Mat& b) {
    // rref of [a | I] gives (R | T) with T*a = R; express rows of b over R.
    Mat aug = hstack(a, Mat::identity(a.rows));
    std::vector<int> pivots;
    Mat work = aug;
    int rank = rref(F, work, &pivots);
    Mat x(b.rows, a.rows);
    for (int i = 0; i < b.rows; ++i) {
        Vec v(b.a.begin() + static_cast<std::size_t>(i) * b.cols,
              b.a.begin() + static_cast<std::size_t>(i + 1) * b.cols);
        Vec coeff(a.rows, 0);
        for (int r = 0; r < rank; ++r) {
            int pc = pivots[r];
            std::uint32_t f = v[pc];
            if (f == 0) continue;
            for (int j = 0; j < a.cols; ++j) v[j] = F.sub(v[j], F.mul(f, work.at(r, j)));
            for (int j = 0; j < a.rows; ++j)
                coeff[j] = F.add(coeff[j], F.mul(f, work.at(r, a.cols + j)));
        }
        for (int j = 0; j < a.cols; ++j)
            if (v[j] != 0) return std::nullopt;
        for (int j = 0; j < a.rows; ++j) x.at(i, j) = coeff[j];
    }
    return x;
}

std::pair<Mat, std::vector<int>> right_nullspace(const PrimeField& F, Mat eq) {
    std::vector<int> pivots;
    int rank = rref(F, eq, &pivots);
    std::vector<char> is_piv(eq.cols, 0);
    for (int c : pivots) is_piv[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < eq.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Mat basis(static_cast<int>(free_cols.size()), eq.cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(static_cast<int>(k), fc) = 1;
        for (int r = 0; r < rank; ++r)
            basis.at(static_cast<int>(k), pivots[r]) = F.neg(eq.at(r, fc));
    }
    return {std::move(basis), std::move(free_cols)};
}

bool is_invertible(const PrimeField& F, const Mat& m) {
    if (m.rows != m.cols) return false;
    return row_rank(F, m) == m.rows;
}

RowSpace::RowSpace(const PrimeField& F, int cols, std::vector<int> order)
    : F_(F), cols_(cols), order_(std::move(order)), pos_in_order_(cols, -1), pivot_of_col_(cols, -1) {
    for (std::size_t k = 0; k < order_.size(); ++k) pos_in_order_[order_[k]] = static_cast<int>(k);
}

void RowSpace::reduce_in_place(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = v[pivot_col_of_row_[r]];
        if (f == 0) continue;
        const Vec& row = rows_[r];
        for (int j = 0; j < cols_; ++j)
            if (row[j] != 0) v[j] = F_.sub(v[j], F_.mul(f, row[j]));
    }
}

bool RowSpace::insert(Vec v) {
    reduce_in_place(v);
    int pc = -1;
    for (int k : order_)
        if (v[k] != 0) { pc = k; break; }
    if (pc < 0) return false;
    std::uint32_t s = F_.inv(v[pc]);
    for (auto& x : v) x = F_.mul(s, x);
    // keep existing rows fully reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = rows_[r][pc];
        if (f == 0) continue;
        for (int j = 0; j < cols_; ++j)
            rows_[r][j] = F_.sub(rows_[r][j], F_.mul(f, v[j]));
    }
    pivot_of_col_[pc] = static_cast<int>(rows_.size());
    pivot_col_of_row_.push_back(pc);
    rows_.push_back(std::move(v));
    return true;
}

Vec RowSpace::reduce(Vec v) const {
    reduce_in_place(v);
    return v;
}

bool RowSpace::contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

} // namespace tautilt
