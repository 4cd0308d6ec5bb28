#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hgl/field.hpp"

namespace hgl {

/// Dense row-major matrix over a single Field.
///
/// Linear maps act on column vectors: a map k^n -> k^m is an m x n matrix.
/// Tensor products are flattened with the global convention
/// e_i (x) f_j  ->  i * dim(F) + j, which is exactly what kron() realises.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    static Matrix identity(Field f, std::size_t n);
    /// Throws FieldMismatch when entries disagree with f.
    static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows);
    /// Column vector e_i of length n.
    static Matrix unit_vector(Field f, std::size_t n, std::size_t i);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void add_to(std::size_t r, std::size_t c, const Scalar& v);
    bool is_zero_at(std::size_t r, std::size_t c) const;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix row(std::size_t r) const;
    Matrix col(std::size_t c) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    /// Reinterpret a (rows*cols) column vector, or the transposes thereof.
    Matrix reshaped(std::size_t rows, std::size_t cols) const;

    Matrix scaled(const Scalar& s) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Lexicographic on (rows, cols, entries); used for canonical ordering.
    friend int compare(const Matrix& a, const Matrix& b);

    static Matrix hstack(const std::vector<Matrix>& blocks);
    static Matrix vstack(const std::vector<Matrix>& blocks);

    std::string to_string() const;

    /// Raw GF(p) storage, row-major; empty optional over Q.
    const std::vector<std::int64_t>* residues() const noexcept;
    std::vector<std::int64_t>* residues() noexcept;
    const std::vector<mpq_class>* rationals() const noexcept;
    std::vector<mpq_class>* rationals() noexcept;

private:
    void check_index(std::size_t r, std::size_t c) const;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<std::vector<std::int64_t>, std::vector<mpq_class>> data_;
};

/// Kronecker product; rows and columns flattened as i * rows(N) + k, j * cols(N) + l.
Matrix kron(const Matrix& m, const Matrix& n);

struct RrefResult {
    Matrix reduced;  // same shape as the input; zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Solves a * x = b (b may have several columns). nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Permutation matrix sending e_{i0} (x) ... (x) e_{ik} to the factors reordered by perm:
/// output factor t is input factor perm[t].
Matrix tensor_permutation(Field f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm);
/// The flip V (x) W -> W (x) V.
Matrix flip(Field f, std::size_t dim_v, std::size_t dim_w);

}  // namespace hgl
