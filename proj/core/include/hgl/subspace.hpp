#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hgl/matrix.hpp"

namespace hgl {

/// A subspace of k^n stored by its reduced row echelon basis (rows).
///
/// The RREF basis is canonical, so equality of subspaces is equality of bases,
/// and the basis entries give a total order used for deterministic enumeration.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of k^n.
    Subspace(Field f, std::size_t ambient_dim);

    /// Row span of `rows` (any spanning set, zero rows allowed).
    static Subspace span(const Matrix& rows);
    /// Column span of `m`, i.e. the image of the map m.
    static Subspace image(const Matrix& m);
    static Subspace full(Field f, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    /// dim() x ambient_dim(), in RREF with full row rank.
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Basis vectors as columns (ambient_dim() x dim()).
    Matrix basis_columns() const { return basis_.transpose(); }

    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    /// Accepts a row or column vector.
    bool contains(const Matrix& v) const;
    /// True when every column of m lies in the subspace.
    bool contains_columns(const Matrix& m) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    /// Canonical order: by dimension, then lexicographically on RREF entries.
    friend int compare(const Subspace& a, const Subspace& b);
    friend bool operator<(const Subspace& a, const Subspace& b) { return compare(a, b) < 0; }

    /// Stable 64-bit FNV-1a hash of the canonical basis.
    std::uint64_t hash() const;
    std::string to_string() const;

private:
    Field field_;
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& v, const Subspace& w);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& v, const Subspace& w);
bool subspace_le(const Subspace& v, const Subspace& w);

/// {x : m x = 0} inside k^{cols(m)}.
Subspace kernel(const Matrix& m);

/// Quotient k^n -> k^n / V realised on the non-pivot coordinates of V's RREF.
struct QuotientData {
    Matrix proj;     // (n - d) x n, kernel exactly V
    Matrix section;  // n x (n - d), coordinate inclusion, proj * section = id
    std::vector<std::size_t> free_columns;
};

QuotientData quotient_data(const Subspace& v);

/// Every subspace of GF(p)^n in canonical order (by dimension, then RREF entries).
/// Throws EnumerationUnsupported over Q or when n exceeds cap.
std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n, std::size_t cap);
/// Number of subspaces of GF(q)^n (sum of Gaussian binomials).
std::uint64_t count_subspaces(std::uint64_t q, std::size_t n);

}  // namespace hgl
