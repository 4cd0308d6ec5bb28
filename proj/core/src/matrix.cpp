#include "hgl/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hgl/error.hpp"

namespace hgl {

namespace {

struct ModOps {
    std::int64_t p;
    using Elem = std::int64_t;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a - b + p) % p; }
    Elem mul(Elem a, Elem b) const { return a * b % p; }
    Elem inv(Elem a) const { return detail::mod_inverse(a, p); }
    // acc + a*b, with acc < p
    Elem fma(Elem acc, Elem a, Elem b) const { return (acc + a * b) % p; }
};

struct RatOps {
    using Elem = mpq_class;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    Elem fma(const Elem& acc, const Elem& a, const Elem& b) const { return acc + a * b; }
};

template <class F>
decltype(auto) with_ops(const Field& field, F&& f)
{
    if (field.is_prime()) return f(ModOps{field.characteristic()});
    return f(RatOps{});
}

template <class Ops>
auto& storage(Matrix& m, const Ops&)
{
    if constexpr (std::is_same_v<Ops, ModOps>)
        return *m.residues();
    else
        return *m.rationals();
}

template <class Ops>
const auto& storage(const Matrix& m, const Ops&)
{
    if constexpr (std::is_same_v<Ops, ModOps>)
        return *m.residues();
    else
        return *m.rationals();
}

void require_same_field(const Matrix& a, const Matrix& b, const char* what)
{
    if (!(a.field() == b.field()))
        throw FieldMismatch(std::string(what) + ": " + a.field().name() + " vs " + b.field().name());
}

template <class Ops>
RrefResult rref_impl(const Matrix& m, const Ops& ops)
{
    RrefResult out{m, 0, {}};
    auto& a = storage(out.reduced, ops);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && ops.is_zero(a[piv * cols + c])) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const auto inv = ops.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || ops.is_zero(a[i * cols + c])) continue;
            const auto factor = a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j) {
                if (ops.is_zero(a[r * cols + j])) continue;
                a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(factor, a[r * cols + j]));
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols)
{
    if (f.is_prime())
        data_ = std::vector<std::int64_t>(rows * cols, 0);
    else
        data_ = std::vector<mpq_class>(rows * cols);
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    const Scalar one(f, 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<Scalar>> data;
    for (const auto& row : rows) {
        auto& out = data.emplace_back();
        for (long v : row) out.emplace_back(f, v);
    }
    return from_rows(f, data);
}

Matrix Matrix::unit_vector(Field f, std::size_t n, std::size_t i)
{
    Matrix m(f, n, 1);
    m.set(i, 0, Scalar(f, 1));
    return m;
}

void Matrix::check_index(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw DimensionMismatch("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") out of range");
}

Scalar Matrix::at(std::size_t r, std::size_t c) const
{
    check_index(r, c);
    if (auto v = residues()) return Scalar(field_, static_cast<long>((*v)[r * cols_ + c]));
    return Scalar(field_, (*rationals())[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v)
{
    check_index(r, c);
    if (!(v.field() == field_))
        throw FieldMismatch("entry over " + v.field().name() + " in a matrix over " + field_.name());
    if (auto d = residues())
        (*d)[r * cols_ + c] = v.residue();
    else
        (*rationals())[r * cols_ + c] = v.rational();
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, at(r, c) + v); }

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const
{
    check_index(r, c);
    if (auto v = residues()) return (*v)[r * cols_ + c] == 0;
    return sgn((*rationals())[r * cols_ + c]) == 0;
}

const std::vector<std::int64_t>* Matrix::residues() const noexcept
{
    return std::get_if<std::vector<std::int64_t>>(&data_);
}
std::vector<std::int64_t>* Matrix::residues() noexcept
{
    return std::get_if<std::vector<std::int64_t>>(&data_);
}
const std::vector<mpq_class>* Matrix::rationals() const noexcept
{
    return std::get_if<std::vector<mpq_class>>(&data_);
}
std::vector<mpq_class>* Matrix::rationals() noexcept
{
    return std::get_if<std::vector<mpq_class>>(&data_);
}

bool Matrix::is_zero() const
{
    return with_ops(field_, [&](const auto& ops) {
        const auto& d = storage(*this, ops);
        return std::all_of(d.begin(), d.end(), [&](const auto& x) { return ops.is_zero(x); });
    });
}

Matrix Matrix::transpose() const
{
    Matrix out(field_, cols_, rows_);
    with_ops(field_, [&](const auto& ops) {
        const auto& src = storage(*this, ops);
        auto& dst = storage(out, ops);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
        return 0;
    });
    return out;
}

Matrix Matrix::row(std::size_t r) const { return select_rows({r}); }
Matrix Matrix::col(std::size_t c) const { return select_cols({c}); }

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, idx.size(), cols_);
    with_ops(field_, [&](const auto& ops) {
        const auto& src = storage(*this, ops);
        auto& dst = storage(out, ops);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= rows_) throw DimensionMismatch("select_rows: index out of range");
            std::copy_n(src.begin() + idx[i] * cols_, cols_, dst.begin() + i * cols_);
        }
        return 0;
    });
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, rows_, idx.size());
    with_ops(field_, [&](const auto& ops) {
        const auto& src = storage(*this, ops);
        auto& dst = storage(out, ops);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw DimensionMismatch("select_cols: index out of range");
            for (std::size_t i = 0; i < rows_; ++i) dst[i * idx.size() + j] = src[i * cols_ + idx[j]];
        }
        return 0;
    });
    return out;
}

Matrix Matrix::reshaped(std::size_t rows, std::size_t cols) const
{
    if (rows * cols != rows_ * cols_) throw DimensionMismatch("reshape: size mismatch");
    Matrix out = *this;
    out.rows_ = rows;
    out.cols_ = cols;
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    if (!(s.field() == field_)) throw FieldMismatch("scaled: field mismatch");
    Matrix out = *this;
    with_ops(field_, [&](const auto& ops) {
        auto& d = storage(out, ops);
        typename std::decay_t<decltype(ops)>::Elem v;
        if constexpr (std::is_same_v<std::decay_t<decltype(ops)>, ModOps>)
            v = s.residue();
        else
            v = s.rational();
        for (auto& x : d) x = ops.mul(x, v);
        return 0;
    });
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "matrix product");
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    Matrix out(a.field_, a.rows_, b.cols_);
    with_ops(a.field_, [&](const auto& ops) {
        const auto& x = storage(a, ops);
        const auto& y = storage(b, ops);
        auto& z = storage(out, ops);
        const std::size_t n = a.cols_, m = b.cols_;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const auto& aik = x[i * n + k];
                if (ops.is_zero(aik)) continue;
                for (std::size_t j = 0; j < m; ++j) {
                    const auto& bkj = y[k * m + j];
                    if (ops.is_zero(bkj)) continue;
                    z[i * m + j] = ops.fma(z[i * m + j], aik, bkj);
                }
            }
        return 0;
    });
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "matrix sum");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
    Matrix out = a;
    with_ops(a.field_, [&](const auto& ops) {
        auto& z = storage(out, ops);
        const auto& y = storage(b, ops);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = ops.add(z[i], y[i]);
        return 0;
    });
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "matrix difference");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix difference: shape mismatch");
    Matrix out = a;
    with_ops(a.field_, [&](const auto& ops) {
        auto& z = storage(out, ops);
        const auto& y = storage(b, ops);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = ops.sub(z[i], y[i]);
        return 0;
    });
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

int compare(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "matrix compare");
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
    if (auto x = a.residues()) {
        const auto& y = *b.residues();
        for (std::size_t i = 0; i < x->size(); ++i)
            if ((*x)[i] != y[i]) return (*x)[i] < y[i] ? -1 : 1;
        return 0;
    }
    const auto& x = *a.rationals();
    const auto& y = *b.rationals();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (int c = cmp(x[i], y[i]); c != 0) return c < 0 ? -1 : 1;
    return 0;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks)
{
    if (blocks.empty()) throw DimensionMismatch("hstack of nothing");
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        require_same_field(blocks[0], b, "hstack");
        if (b.rows_ != blocks[0].rows_) throw DimensionMismatch("hstack: row counts differ");
        cols += b.cols_;
    }
    Matrix out(blocks[0].field_, blocks[0].rows_, cols);
    with_ops(out.field_, [&](const auto& ops) {
        auto& z = storage(out, ops);
        std::size_t offset = 0;
        for (const auto& b : blocks) {
            const auto& y = storage(b, ops);
            for (std::size_t i = 0; i < b.rows_; ++i)
                std::copy_n(y.begin() + i * b.cols_, b.cols_, z.begin() + i * cols + offset);
            offset += b.cols_;
        }
        return 0;
    });
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks)
{
    if (blocks.empty()) throw DimensionMismatch("vstack of nothing");
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        require_same_field(blocks[0], b, "vstack");
        if (b.cols_ != blocks[0].cols_) throw DimensionMismatch("vstack: column counts differ");
        rows += b.rows_;
    }
    Matrix out(blocks[0].field_, rows, blocks[0].cols_);
    with_ops(out.field_, [&](const auto& ops) {
        auto& z = storage(out, ops);
        std::size_t offset = 0;
        for (const auto& b : blocks) {
            const auto& y = storage(b, ops);
            std::copy(y.begin(), y.end(), z.begin() + offset);
            offset += y.size();
        }
        return 0;
    });
    return out;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix kron(const Matrix& m, const Matrix& n)
{
    require_same_field(m, n, "kron");
    const std::size_t p = n.rows(), q = n.cols();
    Matrix out(m.field(), m.rows() * p, m.cols() * q);
    with_ops(m.field(), [&](const auto& ops) {
        const auto& x = storage(m, ops);
        const auto& y = storage(n, ops);
        auto& z = storage(out, ops);
        const std::size_t out_cols = m.cols() * q;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const auto& mij = x[i * m.cols() + j];
                if (ops.is_zero(mij)) continue;
                for (std::size_t k = 0; k < p; ++k)
                    for (std::size_t l = 0; l < q; ++l) {
                        const auto& nkl = y[k * q + l];
                        if (ops.is_zero(nkl)) continue;
                        z[(i * p + k) * out_cols + j * q + l] = ops.mul(mij, nkl);
                    }
            }
        return 0;
    });
    return out;
}

RrefResult rref(const Matrix& m)
{
    return with_ops(m.field(), [&](const auto& ops) { return rref_impl(m, ops); });
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    require_same_field(a, b, "solve");
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    const std::size_t n = a.cols();
    if (a.rows() == 0) return Matrix(a.field(), n, b.cols());
    const auto r = rref(Matrix::hstack({a, b}));
    Matrix x(a.field(), n, b.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t pc = r.pivots[i];
        if (pc >= n) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, r.reduced.at(i, n + j));
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix tensor_permutation(Field f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm)
{
    const std::size_t k = dims.size();
    if (perm.size() != k) throw DimensionMismatch("tensor_permutation: perm length");
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    std::vector<std::size_t> out_dims(k);
    for (std::size_t t = 0; t < k; ++t) out_dims[t] = dims.at(perm[t]);
    Matrix out(f, total, total);
    std::vector<std::size_t> idx(k);
    const Scalar one(f, 1);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t t = k; t-- > 0;) {
            idx[t] = rem % dims[t];
            rem /= dims[t];
        }
        std::size_t target = 0;
        for (std::size_t t = 0; t < k; ++t) target = target * out_dims[t] + idx[perm[t]];
        out.set(target, flat, one);
    }
    return out;
}

Matrix flip(Field f, std::size_t dim_v, std::size_t dim_w)
{
    return tensor_permutation(f, {dim_v, dim_w}, {1, 0});
}

}  // namespace hgl
