#pragma once

// Dense exact matrices and the elimination routines every other module is
// built on. Vectors are rows: a linear map V -> W with dim V = r, dim W = c is
// an r x c matrix acting by v |-> v * M, so composites multiply in
// diagrammatic order (first map on the left).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "angleforge/error.hpp"
#include "angleforge/field.hpp"

namespace angleforge {

template <class K>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    /// Builds from nested rows; all rows must have equal length.
    static Mat from_rows(const std::vector<std::vector<K>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        Mat m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Mat row_vector(std::span<const K> v) {
        Mat m(1, v.size());
        std::copy(v.begin(), v.end(), m.a_.begin());
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<K> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
    std::span<const K> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
    std::vector<K> row_copy(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }
    const std::vector<K>& data() const { return a_; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const K& x) { return angleforge::is_zero(x); });
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Mat select_rows(const std::vector<std::size_t>& idx) const {
        Mat m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }

    Mat select_cols(const std::vector<std::size_t>& idx) const {
        Mat m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    void append_row(std::span<const K> v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "append_row width");
        a_.insert(a_.end(), v.begin(), v.end());
        ++rows_;
    }

    Mat& operator+=(const Mat& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Mat& operator*=(const K& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const K& s) { return a *= s; }
    friend Mat operator*(const K& s, Mat a) { return a *= s; }
    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& x = a(i, k);
                if (angleforge::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& y = b(k, j);
                    if (!angleforge::is_zero(y)) c(i, j) += x * y;
                }
            }
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << to_string(m(i, j));
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

template <class K>
Mat<K> vstack(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() == 0) return b.rows() == 0 ? Mat<K>(0, std::max(a.cols(), b.cols())) : b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack");
    Mat<K> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <class K>
Mat<K> hstack(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack");
    Mat<K> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

/// Block diagonal sum.
template <class K>
Mat<K> direct_sum(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

/// Gauss-Jordan elimination in place, choosing pivots only among the first
/// `pivot_cols` columns (the leftmost column with a nonzero entry; within it
/// the first nonzero row). Returns pivot column indices.
template <class K>
std::vector<std::size_t> eliminate(Mat<K>& a, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    std::vector<std::size_t> nz;
    for (std::size_t col = 0; col < pivot_cols && rank < a.rows(); ++col) {
        std::size_t r = rank;
        while (r < a.rows() && is_zero(a(r, col))) ++r;
        if (r == a.rows()) continue;
        if (r != rank)
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(r, j), a(rank, j));
        K inv = K(1) / a(rank, col);
        nz.clear();
        for (std::size_t j = col; j < a.cols(); ++j)
            if (!is_zero(a(rank, j))) {
                a(rank, j) *= inv;
                nz.push_back(j);
            }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || is_zero(a(i, col))) continue;
            K f = a(i, col);
            for (std::size_t j : nz) a(i, j) -= f * a(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

template <class K>
struct RrefResult {
    std::size_t rank = 0;
    Mat<K> reduced;
    Mat<K> transform;  // transform * m == reduced, transform invertible
    std::vector<std::size_t> pivots;
};

template <class K>
RrefResult<K> rref(const Mat<K>& m) {
    Mat<K> aug = hstack(m, Mat<K>::identity(m.rows()));
    auto piv = eliminate(aug, m.cols());
    RrefResult<K> r;
    r.rank = piv.size();
    r.reduced = aug.block(0, 0, m.rows(), m.cols());
    r.transform = aug.block(0, m.cols(), m.rows(), m.rows());
    r.pivots = std::move(piv);
    return r;
}

template <class K>
std::size_t rank(Mat<K> m) {
    return eliminate(m, m.cols()).size();
}

/// Basis (as rows) of the right null space {x : m x^T = 0}, i.e. of the
/// column-convention kernel. Free variables are enumerated left to right.
template <class K>
Mat<K> kernel(const Mat<K>& m) {
    Mat<K> r = m;
    auto piv = eliminate(r, r.cols());
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    Mat<K> ker(0, m.cols());
    std::vector<K> v(m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::fill(v.begin(), v.end(), K(0));
        v[f] = K(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
        ker.append_row(v);
    }
    return ker;
}

/// Basis (as rows) of {y : y * m = 0}.
template <class K>
Mat<K> left_kernel(const Mat<K>& m) {
    return kernel(m.transpose());
}

template <class K>
struct SolutionSet {
    Mat<K> particular;  // a.cols x b.cols
    Mat<K> kernel;      // rows span {x : a x = 0}
};

/// One solution of a * x = b (column convention), free variables set to zero.
template <class K>
std::optional<Mat<K>> particular_solution(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: a.rows != b.rows");
    Mat<K> aug = hstack(a, b);
    auto piv = eliminate(aug, a.cols());
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        for (std::size_t j = a.cols(); j < aug.cols(); ++j)
            if (!is_zero(aug(i, j))) return std::nullopt;
    Mat<K> x(a.cols(), b.cols());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[k], j) = aug(k, a.cols() + j);
    return x;
}

/// Solves a * x = b (column convention). Returns nullopt when inconsistent.
template <class K>
std::optional<SolutionSet<K>> solve(const Mat<K>& a, const Mat<K>& b) {
    auto x = particular_solution(a, b);
    if (!x) return std::nullopt;
    return SolutionSet<K>{std::move(*x), kernel(a)};
}

/// Solves x * a = b for x.
template <class K>
std::optional<Mat<K>> solve_left(const Mat<K>& a, const Mat<K>& b) {
    auto x = particular_solution(a.transpose(), b.transpose());
    if (!x) return std::nullopt;
    return x->transpose();
}

/// Canonical (reduced row echelon) basis of the row space.
template <class K>
Mat<K> row_space(const Mat<K>& m) {
    Mat<K> r = m;
    auto piv = eliminate(r, r.cols());
    return r.block(0, 0, piv.size(), r.cols());
}

/// Fast coordinates with respect to a fixed basis of a subspace of k^N:
/// precomputes pivot columns so each query reads only `dim` entries.
template <class K>
class LinearCoordinates {
public:
    LinearCoordinates() = default;
    explicit LinearCoordinates(Mat<K> basis) : basis_(std::move(basis)) {
        Mat<K> r = basis_;
        pivots_ = eliminate(r, r.cols());
        if (pivots_.size() != basis_.rows()) throw Error(ErrorKind::Internal, "LinearCoordinates: dependent basis");
        // c * basis = v restricted to the pivot columns reads c * square = v_p.
        inverse_ = rref(basis_.select_cols(pivots_)).transform;
    }

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    const Mat<K>& basis() const { return basis_; }

    /// Coordinates assuming v lies in the span.
    std::vector<K> coords(std::span<const K> v) const {
        std::vector<K> c(dim(), K(0));
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const K& x = v[pivots_[k]];
            if (is_zero(x)) continue;
            for (std::size_t j = 0; j < dim(); ++j) c[j] += x * inverse_(k, j);
        }
        return c;
    }

    /// Coordinates, or nullopt when v is outside the span.
    std::optional<std::vector<K>> checked_coords(std::span<const K> v) const {
        auto c = coords(v);
        for (std::size_t j = 0; j < ambient(); ++j) {
            K s(0);
            for (std::size_t i = 0; i < dim(); ++i)
                if (!is_zero(c[i])) s += c[i] * basis_(i, j);
            if (s != v[j]) return std::nullopt;
        }
        return c;
    }

    std::vector<K> combine(std::span<const K> c) const {
        std::vector<K> v(ambient(), K(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (is_zero(c[i])) continue;
            for (std::size_t j = 0; j < ambient(); ++j) v[j] += c[i] * basis_(i, j);
        }
        return v;
    }

private:
    Mat<K> basis_;
    std::vector<std::size_t> pivots_;
    Mat<K> inverse_;
};

/// Incrementally maintained echelon basis; `add` reports whether a vector
/// was independent of everything added so far.
template <class K>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : n_(n) {}

    std::size_t dim() const { return rows_.size(); }

    /// Reduces v against the stored rows in place.
    void reduce(std::vector<K>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const K& x = v[pivots_[k]];
            if (is_zero(x)) continue;
            K f = x;
            for (std::size_t j = pivots_[k]; j < n_; ++j)
                if (!is_zero(rows_[k][j])) v[j] -= f * rows_[k][j];
        }
    }

    bool contains(std::span<const K> v) const {
        std::vector<K> w(v.begin(), v.end());
        reduce(w);
        return all_zero_vec(w);
    }

    bool add(std::span<const K> v) {
        std::vector<K> w(v.begin(), v.end());
        reduce(w);
        std::size_t p = 0;
        while (p < n_ && is_zero(w[p])) ++p;
        if (p == n_) return false;
        K inv = K(1) / w[p];
        for (std::size_t j = p; j < n_; ++j) w[j] *= inv;
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

private:
    static bool all_zero_vec(const std::vector<K>& w) {
        for (const auto& x : w)
            if (!is_zero(x)) return false;
        return true;
    }
    std::size_t n_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Greedy deterministic complement: rows of `space` (in order) that are
/// independent modulo span(sub) and the rows already chosen.
template <class K>
Mat<K> complement_rows(const Mat<K>& space, const Mat<K>& sub, std::vector<std::size_t>* chosen = nullptr) {
    std::size_t n = space.cols();
    EchelonBasis<K> acc(n);
    for (std::size_t i = 0; i < sub.rows(); ++i) acc.add(sub.row(i));
    Mat<K> out(0, n);
    for (std::size_t i = 0; i < space.rows(); ++i) {
        if (acc.add(space.row(i))) {
            out.append_row(space.row(i));
            if (chosen) chosen->push_back(i);
        }
    }
    return out;
}

template <class K>
struct SubspaceOps {
    Mat<K> intersection;
    Mat<K> sum;
    Mat<K> quotient;  // rows of u completing u∩v to a basis of u; represents u/(u∩v)
};

/// Intersection, sum and the quotient u/(u ∩ v) for row bases u, v of subspaces of a common k^N.
template <class K>
SubspaceOps<K> subspace_ops(const Mat<K>& u, const Mat<K>& v) {
    if (u.rows() && v.rows() && u.cols() != v.cols())
        throw Error(ErrorKind::DimensionMismatch, "subspace_ops: ambient dimensions differ");
    std::size_t n = u.rows() ? u.cols() : v.cols();
    Mat<K> ub = row_space(u.rows() ? u : Mat<K>(0, n));
    Mat<K> vb = row_space(v.rows() ? v : Mat<K>(0, n));
    SubspaceOps<K> r;
    r.sum = row_space(vstack(ub, vb));
    if (ub.rows() == 0 || vb.rows() == 0) {
        r.intersection = Mat<K>(0, n);
    } else {
        // pairs (x, y) with x u + y v = 0 give x u in the intersection
        Mat<K> lk = left_kernel(vstack(ub, vb));
        Mat<K> xs = lk.rows() ? lk.block(0, 0, lk.rows(), ub.rows()) : Mat<K>(0, ub.rows());
        r.intersection = xs.rows() ? row_space(xs * ub) : Mat<K>(0, n);
    }
    r.quotient = complement_rows(ub, r.intersection);
    if (r.intersection.rows() + r.sum.rows() != ub.rows() + vb.rows())
        throw Error(ErrorKind::Internal, "Grassmann identity violated");
    return r;
}

/// True when every row of `sub` lies in the row space of `space`.
template <class K>
bool contained_in(const Mat<K>& sub, const Mat<K>& space) {
    if (sub.rows() == 0) return true;
    if (space.rows() == 0) return sub.is_zero();
    return rank(vstack(space, sub)) == rank(space);
}

template <class K>
std::vector<K> operator*(std::span<const K> v, const Mat<K>& m) {
    std::vector<K> r(m.cols(), K(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) r[j] += v[i] * m(i, j);
    }
    return r;
}

template <class K>
std::vector<K> vec_times(const std::vector<K>& v, const Mat<K>& m) {
    return std::span<const K>(v) * m;
}

template <class K>
bool all_zero(std::span<const K> v) {
    return std::all_of(v.begin(), v.end(), [](const K& x) { return is_zero(x); });
}

}  // namespace angleforge
