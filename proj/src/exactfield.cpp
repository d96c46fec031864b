#include "dhom/exactfield.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace dhom {

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Mat: entry count mismatch");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("Mat::from_columns: length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("Mat::from_rows: length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec Mat::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vec Mat::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vec> Mat::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    Mat b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
    assert(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Mat Mat::select_columns(const std::vector<std::size_t>& idx) const {
    Mat out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, idx[j]);
    return out;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
    Mat out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
    return out;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) p(i, j) += a * o(k, j);
        }
    return p;
}

Vec Mat::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("Mat*Vec: shape mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    Mat s = *this;
    s += o;
    return s;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const { return scaled(-1); }

Mat Mat::scaled(const Scalar& s) const {
    Mat m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) {
        if (a.rows() == 0 && a.cols() == 0) return b;
        if (b.rows() == 0 && b.cols() == 0) return a;
        throw std::invalid_argument("hcat: row mismatch");
    }
    Mat m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Mat vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) {
        if (a.rows() == 0 && a.cols() == 0) return b;
        if (b.rows() == 0 && b.cols() == 0) return a;
        throw std::invalid_argument("vcat: column mismatch");
    }
    Mat m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Echelon rref(const Mat& input) {
    Mat m = input;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        Scalar inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
    if (m.empty()) return 0;
    return rref(m).pivots.size();
}

std::vector<Vec> kernel_basis(const Mat& m) {
    std::vector<Vec> basis;
    if (m.cols() == 0) return basis;
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Vec v(m.cols());
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat kernel_matrix(const Mat& m) { return Mat::from_columns(m.cols(), kernel_basis(m)); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    if (m.cols() == 0) {
        if (is_zero(b)) return Vec{};
        return std::nullopt;
    }
    Mat aug = hcat(m, Mat::from_columns(m.rows(), {b}));
    auto e = rref(aug);
    Vec x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, m.cols());
    }
    return x;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve: rhs rows mismatch");
    if (b.cols() == 0) return Mat(m.cols(), 0);
    if (m.cols() == 0) {
        if (b.is_zero()) return Mat(0, b.cols());
        return std::nullopt;
    }
    auto e = rref(hcat(m, b));
    Mat x(m.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= m.cols()) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[i], c) = e.reduced(i, m.cols() + c);
    }
    return x;
}

std::vector<std::size_t> independent_columns(const Mat& m) {
    if (m.empty()) return {};
    return rref(m).pivots;
}

Mat column_space(const Mat& m) { return m.select_columns(independent_columns(m)); }

Mat left_kernel_matrix(const Mat& m) { return kernel_matrix(m.transpose()).transpose(); }

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(const Vec& a, const Scalar& s) {
    Vec r(a);
    for (auto& x : r) x *= s;
    return r;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r(a);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace dhom
