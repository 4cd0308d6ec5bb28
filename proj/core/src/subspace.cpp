#include "hgl/subspace.hpp"

#include <algorithm>
#include <sstream>

#include "hgl/error.hpp"

namespace hgl {

namespace {

void require_compatible(const Subspace& v, const Subspace& w, const char* what)
{
    if (!(v.field() == w.field())) throw FieldMismatch(std::string(what) + ": field mismatch");
    if (v.ambient_dim() != w.ambient_dim())
        throw DimensionMismatch(std::string(what) + ": ambient dimensions " +
                                std::to_string(v.ambient_dim()) + " and " +
                                std::to_string(w.ambient_dim()));
}

}  // namespace

Subspace::Subspace(Field f, std::size_t ambient_dim)
    : field_(f), ambient_(ambient_dim), basis_(f, 0, ambient_dim)
{
}

Subspace Subspace::span(const Matrix& rows)
{
    Subspace s(rows.field(), rows.cols());
    if (rows.rows() == 0) return s;
    auto r = rref(rows);
    std::vector<std::size_t> keep(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
    s.basis_ = r.reduced.select_rows(keep);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::image(const Matrix& m) { return span(m.transpose()); }

Subspace Subspace::full(Field f, std::size_t n) { return span(Matrix::identity(f, n)); }

bool Subspace::contains(const Matrix& v) const
{
    if (v.cols() == 1 && v.rows() == ambient_) return contains_columns(v);
    if (v.rows() == 1 && v.cols() == ambient_) return contains_columns(v.transpose());
    throw DimensionMismatch("Subspace::contains: vector length does not match ambient dimension");
}

bool Subspace::contains_columns(const Matrix& m) const
{
    if (m.rows() != ambient_) throw DimensionMismatch("Subspace::contains_columns: row count");
    if (m.cols() == 0) return true;
    if (dim() == 0) return m.is_zero();
    const Matrix residual = m - basis_columns() * m.select_rows(pivots_);
    return residual.is_zero();
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

int compare(const Subspace& a, const Subspace& b)
{
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_ ? -1 : 1;
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    return compare(a.basis_, b.basis_);
}

std::uint64_t Subspace::hash() const
{
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    mix(std::to_string(ambient_));
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < basis_.cols(); ++j) mix(basis_.at(i, j).to_string());
    return h;
}

std::string Subspace::to_string() const
{
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < dim(); ++i) {
        os << (i ? ", (" : "(");
        for (std::size_t j = 0; j < ambient_; ++j) os << (j ? "," : "") << basis_.at(i, j);
        os << ')';
    }
    os << '}';
    return os.str();
}

Subspace subspace_sum(const Subspace& v, const Subspace& w)
{
    require_compatible(v, w, "subspace_sum");
    if (v.dim() == 0) return w;
    if (w.dim() == 0) return v;
    return Subspace::span(Matrix::vstack({v.basis(), w.basis()}));
}

Subspace subspace_intersect(const Subspace& v, const Subspace& w)
{
    require_compatible(v, w, "subspace_intersect");
    const Field f = v.field();
    const std::size_t n = v.ambient_dim();
    if (v.dim() == 0 || w.dim() == 0) return Subspace(f, n);
    // [V | V ; W | 0]: rows whose left half vanishes after reduction span V ∩ W.
    const Matrix top = Matrix::hstack({v.basis(), v.basis()});
    const Matrix bottom = Matrix::hstack({w.basis(), Matrix(f, w.dim(), n)});
    const auto r = rref(Matrix::vstack({top, bottom}));
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < r.rank; ++i)
        if (r.pivots[i] >= n) rows.push_back(i);
    if (rows.empty()) return Subspace(f, n);
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
    return Subspace::span(r.reduced.select_rows(rows).select_cols(right));
}

bool subspace_le(const Subspace& v, const Subspace& w)
{
    require_compatible(v, w, "subspace_le");
    if (v.dim() > w.dim()) return false;
    return w.contains_columns(v.basis_columns());
}

Subspace kernel(const Matrix& m)
{
    const Field f = m.field();
    const std::size_t n = m.cols();
    if (m.rows() == 0) return Subspace::full(f, n);
    const auto r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    if (free.empty()) return Subspace(f, n);
    Matrix gens(f, free.size(), n);
    const Scalar one(f, 1);
    for (std::size_t k = 0; k < free.size(); ++k) {
        gens.set(k, free[k], one);
        for (std::size_t i = 0; i < r.rank; ++i) {
            if (r.reduced.is_zero_at(i, free[k])) continue;
            gens.set(k, r.pivots[i], -r.reduced.at(i, free[k]));
        }
    }
    return Subspace::span(gens);
}

QuotientData quotient_data(const Subspace& v)
{
    const Field f = v.field();
    const std::size_t n = v.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : v.pivots()) is_pivot[p] = true;
    QuotientData q;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) q.free_columns.push_back(j);
    const std::size_t qd = q.free_columns.size();
    q.proj = Matrix(f, qd, n);
    q.section = Matrix(f, n, qd);
    const Scalar one(f, 1);
    for (std::size_t k = 0; k < qd; ++k) {
        q.proj.set(k, q.free_columns[k], one);
        q.section.set(q.free_columns[k], k, one);
    }
    // e_{pivot(i)} ≡ e_{pivot(i)} - b_i, which is supported on free columns.
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t k = 0; k < qd; ++k) {
            if (v.basis().is_zero_at(i, q.free_columns[k])) continue;
            q.proj.set(k, v.pivots()[i], -v.basis().at(i, q.free_columns[k]));
        }
    return q;
}

std::uint64_t count_subspaces(std::uint64_t q, std::size_t n)
{
    std::uint64_t total = 0;
    for (std::size_t d = 0; d <= n; ++d) {
        // Gaussian binomial [n choose d]_q, computed as a ratio of products.
        std::uint64_t num = 1, den = 1;
        for (std::size_t i = 0; i < d; ++i) {
            std::uint64_t qn = 1, qi = 1;
            for (std::size_t t = 0; t < n - i; ++t) qn *= q;
            for (std::size_t t = 0; t < i + 1; ++t) qi *= q;
            num *= qn - 1;
            den *= qi - 1;
        }
        total += num / den;
    }
    return total;
}

std::vector<Subspace> enumerate_subspaces(Field f, std::size_t n, std::size_t cap)
{
    if (f.is_rational())
        throw EnumerationUnsupported(
            "subspace enumeration needs a finite field; over Q use the explicit constructions");
    if (n > cap)
        throw EnumerationUnsupported("ambient dimension " + std::to_string(n) +
                                     " exceeds enumeration cap " + std::to_string(cap) +
                                     " (raise --cap; the subspace count grows like p^(n^2/4))");
    const auto p = f.characteristic();
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(count_subspaces(static_cast<std::uint64_t>(p), n)));
    for (std::size_t d = 0; d <= n; ++d) {
        std::vector<Subspace> layer;
        // pivot sets as increasing d-subsets of {0..n-1}
        std::vector<std::size_t> piv(d);
        for (std::size_t i = 0; i < d; ++i) piv[i] = i;
        while (true) {
            std::vector<bool> is_pivot(n, false);
            for (auto c : piv) is_pivot[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = piv[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free.emplace_back(r, c);
            std::vector<std::int64_t> digits(free.size(), 0);
            while (true) {
                Matrix m(f, d, n);
                auto& raw = *m.residues();
                for (std::size_t r = 0; r < d; ++r) raw[r * n + piv[r]] = 1;
                for (std::size_t k = 0; k < free.size(); ++k)
                    raw[free[k].first * n + free[k].second] = digits[k];
                layer.push_back(d == 0 ? Subspace(f, n) : Subspace::span(m));
                std::size_t k = 0;
                while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
                if (k == digits.size()) break;
            }
            // next combination
            std::size_t i = d;
            while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
        }
        std::sort(layer.begin(), layer.end());
        for (auto& s : layer) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace hgl
