#pragma once

// Exact dense linear algebra over Q and F_p.
//
// Fields are small value objects that own all scalar arithmetic (in the style
// of fflas/ffpack: F.add(a, b), F.mul(a, b), ...). Matrices carry their field
// so every routine can produce zeros and ones without extra arguments.
// Scalars are always canonical: rationals in lowest terms, F_p residues in
// [0, p), so structural equality is mathematical equality.

#include "tautilt/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tautilt {

class Rationals {
public:
    using value_type = mpq_class;

    [[nodiscard]] value_type zero() const { return value_type(0); }
    [[nodiscard]] value_type one() const { return value_type(1); }
    [[nodiscard]] value_type from_int(long long v) const {
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
        return value_type(z);
    }

    [[nodiscard]] value_type parse(std::string_view text) const {
        std::string s(text);
        s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
        if (s.empty()) fail(ErrorKind::InvalidInput, "empty rational literal");
        value_type v;
        if (v.set_str(s, 10) != 0) fail(ErrorKind::InvalidInput, "bad rational literal '" + s + "'");
        if (v.get_den() == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
        v.canonicalize();
        return v;
    }

    [[nodiscard]] std::string format(const value_type& v) const { return v.get_str(); }

    [[nodiscard]] bool is_zero(const value_type& v) const { return sgn(v) == 0; }
    [[nodiscard]] bool is_one(const value_type& v) const { return v == 1; }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }

    [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
    [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
    [[nodiscard]] value_type inv(const value_type& a) const {
        if (is_zero(a)) fail(ErrorKind::InvalidInput, "division by zero");
        return 1 / a;
    }
    [[nodiscard]] value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

    void add_in(value_type& a, const value_type& b) const { a += b; }
    /// a -= f * b
    void sub_mul_in(value_type& a, const value_type& f, const value_type& b) const {
        mpq_class t = f * b;
        a -= t;
    }
    void mul_in(value_type& a, const value_type& b) const { a *= b; }

    [[nodiscard]] std::uint64_t characteristic() const { return 0; }
    [[nodiscard]] std::string name() const { return "rationals"; }
    bool operator==(const Rationals&) const = default;
};

class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p < 2 || p >= (std::uint64_t(1) << 31) || !is_prime(p))
            fail(ErrorKind::InvalidInput, "prime field modulus must be a prime below 2^31, got " + std::to_string(p));
    }

    [[nodiscard]] std::uint32_t modulus() const { return p_; }

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }

    [[nodiscard]] value_type parse(std::string_view text) const {
        std::string s(text);
        s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return from_int(std::stoll(s));
            auto num = from_int(std::stoll(s.substr(0, slash)));
            auto den = from_int(std::stoll(s.substr(slash + 1)));
            if (den == 0) fail(ErrorKind::InvalidInput, "denominator vanishes mod p in '" + s + "'");
            return div(num, den);
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidInput, "bad F_p literal '" + s + "'");
        }
    }

    [[nodiscard]] std::string format(value_type v) const { return std::to_string(v); }

    [[nodiscard]] bool is_zero(value_type v) const { return v == 0; }
    [[nodiscard]] bool is_one(value_type v) const { return v == 1; }
    [[nodiscard]] bool equal(value_type a, value_type b) const { return a == b; }

    [[nodiscard]] value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t(a) * b) % p_);
    }
    [[nodiscard]] value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] value_type inv(value_type a) const {
        if (a == 0) fail(ErrorKind::InvalidInput, "division by zero");
        // Fermat
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    [[nodiscard]] value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    void add_in(value_type& a, value_type b) const { a = add(a, b); }
    void sub_mul_in(value_type& a, value_type f, value_type b) const { a = sub(a, mul(f, b)); }
    void mul_in(value_type& a, value_type b) const { a = mul(a, b); }

    [[nodiscard]] std::uint64_t characteristic() const { return p_; }
    [[nodiscard]] std::string name() const { return "prime(" + std::to_string(p_) + ")"; }
    bool operator==(const PrimeField&) const = default;

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

template <class F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) fail(ErrorKind::InvalidInput, "matrix entry count mismatch");
    }

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Builds from nested integer rows; handy for literals in tests.
    static Matrix from_rows(const F& field, const std::vector<std::vector<long long>>& rows) {
        std::size_t r = rows.size(), c = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) fail(ErrorKind::InvalidInput, "ragged matrix literal");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
        }
        return m;
    }

    [[nodiscard]] const F& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] const std::vector<value_type>& entries() const { return data_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [&](const value_type& v) { return field_.is_zero(v); });
    }

    [[nodiscard]] Matrix row(std::size_t i) const {
        Matrix r(field_, 1, cols_);
        for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
    }

private:
    F field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.field().format(m(i, j));
        os << ']';
    }
    return os << ']';
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::InternalInconsistency, "matrix product shape mismatch");
    const F& f = a.field();
    Matrix<F> c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (f.is_zero(b(k, j))) continue;
                f.add_in(c(i, j), f.mul(aik, b(k, j)));
            }
        }
    return c;
}

template <class F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::InternalInconsistency, "matrix sum shape mismatch");
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a.field().add_in(c(i, j), b(i, j));
    return c;
}

template <class F>
Matrix<F> scale(const Matrix<F>& a, const typename F::value_type& s) {
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a.field().mul_in(c(i, j), s);
    return c;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
    Matrix<F> t(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// Horizontal concatenation [a | b]; row counts must agree.
template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::InternalInconsistency, "hstack row mismatch");
    Matrix<F> c(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) fail(ErrorKind::InternalInconsistency, "vstack column mismatch");
    Matrix<F> c(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

template <class F>
Matrix<F> block_diagonal(const F& field, const std::vector<Matrix<F>>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix<F> out(field, r, c);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

template <class F>
Matrix<F> select_rows(const Matrix<F>& a, const std::vector<std::size_t>& rows) {
    Matrix<F> out(a.field(), rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(rows[i], j);
    return out;
}

template <class F>
Matrix<F> select_cols(const Matrix<F>& a, const std::vector<std::size_t>& cols) {
    Matrix<F> out(a.field(), a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(i, cols[j]);
    return out;
}

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination. Zero entries are skipped, which matters because
/// the systems built for Hom spaces are very sparse.
template <class F>
RrefResult<F> rref(Matrix<F> a) {
    const F& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (!f.is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (piv == a.rows()) continue;
        a.swap_rows(r, piv);
        auto inv = f.inv(a(r, c));
        support.clear();
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!f.is_zero(a(r, j))) {
                f.mul_in(a(r, j), inv);
                support.push_back(j);
            }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || f.is_zero(a(i, c))) continue;
            auto factor = a(i, c);
            for (std::size_t j : support) f.sub_mul_in(a(i, j), factor, a(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult<F>{std::move(a), pivots, r};
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
    if (a.empty()) return 0;
    return rref(a).rank;
}

/// Rows form a basis of the right kernel {v : A v^T = 0}.
template <class F>
Matrix<F> nullspace_basis(const Matrix<F>& a) {
    const F& f = a.field();
    auto [r, pivots, rk] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix<F> basis(f, a.cols() - rk, a.cols());
    std::size_t k = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(k, free) = f.one();
        for (std::size_t i = 0; i < rk; ++i) basis(k, pivots[i]) = f.neg(r(i, free));
        ++k;
    }
    return basis;
}

/// Rows form a basis of {x : x A = 0}.
template <class F>
Matrix<F> left_kernel(const Matrix<F>& a) {
    return nullspace_basis(transpose(a));
}

/// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
template <class F>
Matrix<F> row_space_basis(const Matrix<F>& a) {
    if (a.rows() == 0) return Matrix<F>(a.field(), 0, a.cols());
    auto res = rref(a);
    std::vector<std::size_t> idx(res.rank);
    for (std::size_t i = 0; i < res.rank; ++i) idx[i] = i;
    return select_rows(res.reduced, idx);
}

template <class F>
struct ImageCokernel {
    Matrix<F> image_basis;       // columns span the column space of A
    Matrix<F> coker_projection;  // (rows - rank) x rows, kernel = column space of A
};

/// Column-vector convention: A maps k^cols to k^rows.
template <class F>
ImageCokernel<F> image_cokernel(const Matrix<F>& a) {
    auto img_rows = row_space_basis(transpose(a));
    return ImageCokernel<F>{transpose(img_rows), left_kernel(a)};
}

/// For K of full row rank returns R with K R = I.
template <class F>
Matrix<F> right_inverse(const Matrix<F>& k) {
    const F& f = k.field();
    auto aug = hstack(k, Matrix<F>::identity(f, k.rows()));
    // Eliminate only over the first k.cols() columns.
    auto res = rref(aug);
    std::size_t rk = 0;
    for (auto p : res.pivots)
        if (p < k.cols()) ++rk;
    if (rk != k.rows()) fail(ErrorKind::InternalInconsistency, "right_inverse of a matrix without full row rank");
    // Row i of reduced = T K restricted, with pivot at pivots[i]; T is the right block.
    Matrix<F> out(f, k.cols(), k.rows());
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < k.rows(); ++j) out(res.pivots[i], j) = res.reduced(i, k.cols() + j);
    return out;
}

/// For Q of full column rank returns S with S Q = I.
template <class F>
Matrix<F> left_inverse(const Matrix<F>& q) {
    return transpose(right_inverse(transpose(q)));
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return right_inverse(a);
}

template <class F>
bool is_invertible(const Matrix<F>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

/// Solves x A = b for a row vector x, if possible.
template <class F>
std::optional<Matrix<F>> solve_left(const Matrix<F>& a, const Matrix<F>& b) {
    // x A = b  <=>  A^T x^T = b^T. Eliminate on [A^T | b^T].
    const F& f = a.field();
    if (b.cols() != a.cols() || b.rows() != 1) fail(ErrorKind::InternalInconsistency, "solve_left shape mismatch");
    auto res = rref(hstack(transpose(a), transpose(b)));
    if (!res.pivots.empty() && res.pivots.back() == a.rows()) return std::nullopt;
    Matrix<F> x(f, 1, a.rows());
    for (std::size_t i = 0; i < res.rank; ++i) x(0, res.pivots[i]) = res.reduced(i, a.rows());
    return x;
}

template <class F>
Matrix<F> power(const Matrix<F>& a, std::size_t e) {
    Matrix<F> result = Matrix<F>::identity(a.field(), a.rows());
    Matrix<F> base = a;
    while (e) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

template <class F>
typename F::value_type trace(const Matrix<F>& a) {
    auto t = a.field().zero();
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) a.field().add_in(t, a(i, i));
    return t;
}

template <class F>
bool is_nilpotent(const Matrix<F>& a) {
    return a.rows() == 0 || power(a, a.rows()).is_zero();
}

} // namespace tautilt
