#include "hgl/hopf.hpp"

#include "internal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hgl {

namespace {

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix)
{
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
    return out;
}

}  // namespace

namespace detail {

void require_shape(const Matrix& m, const Field& f, std::size_t rows, std::size_t cols,
                   const std::string& what)
{
    if (!(m.field() == f)) throw FieldMismatch(what + ": field " + m.field().name() + ", expected " + f.name());
    if (m.rows() != rows || m.cols() != cols)
        throw DimensionMismatch(what + ": shape " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                std::to_string(cols));
}

Matrix tensor_algebra_mult(const AlgebraData& a, const AlgebraData& b)
{
    const std::size_t m = a.dim, n = b.dim;
    return kron(a.mult, b.mult) * tensor_permutation(a.field, {m, n, m, n}, {0, 2, 1, 3});
}

std::string describe_witness(const std::vector<std::size_t>& w, const std::vector<std::string>& labels)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i ? ", " : "");
        if (w[i] < labels.size())
            os << labels[w[i]];
        else
            os << w[i];
    }
    os << ')';
    return os.str();
}

}  // namespace detail

using detail::describe_witness;
using detail::require_shape;

AlgebraData::AlgebraData(Field f, std::size_t n, Matrix mult_, Matrix unit_, std::vector<std::string> labels_)
    : field(f), dim(n), mult(std::move(mult_)), unit(std::move(unit_)), labels(std::move(labels_))
{
    require_shape(mult, f, n, n * n, "multiplication");
    require_shape(unit, f, n, 1, "unit");
    if (labels.empty()) labels = default_labels(n, "e");
    if (labels.size() != n) throw DimensionMismatch("basis labels: count differs from dimension");
}

Matrix AlgebraData::product(const Matrix& a, const Matrix& b) const { return mult * kron(a, b); }

Matrix AlgebraData::right_mult(const Matrix& b) const
{
    return mult * kron(Matrix::identity(field, dim), b);
}

Matrix AlgebraData::left_mult(const Matrix& b) const
{
    return mult * kron(b, Matrix::identity(field, dim));
}

CoalgebraData::CoalgebraData(Field f, std::size_t n, Matrix comult_, Matrix counit_)
    : field(f), dim(n), comult(std::move(comult_)), counit(std::move(counit_))
{
    require_shape(comult, f, n * n, n, "comultiplication");
    require_shape(counit, f, 1, n, "counit");
}

std::size_t ValidationReport::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; }));
}

const AxiomCheck* ValidationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string ValidationReport::to_string() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "  pass  " : "  FAIL  ") << c.name;
        if (!c.passed && !c.detail.empty()) os << "  " << c.detail;
        os << '\n';
    }
    os << passed() << '/' << checks.size() << " axioms pass\n";
    return os.str();
}

AxiomCheck check_identity(std::string name, const Matrix& lhs, const Matrix& rhs,
                          const std::vector<std::size_t>& dims, const std::vector<std::string>& labels)
{
    const std::size_t arity = dims.size();
    AxiomCheck c{std::move(name), true, {}, {}};
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.passed = false;
        c.detail = "shape mismatch";
        return c;
    }
    if (lhs == rhs) return c;
    c.passed = false;
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
        bool differs = false;
        for (std::size_t i = 0; i < lhs.rows() && !differs; ++i) differs = !(lhs.at(i, j) == rhs.at(i, j));
        if (!differs) continue;
        std::vector<std::size_t> w(arity);
        std::size_t rem = j;
        for (std::size_t t = arity; t-- > 0;) {
            w[t] = rem % dims[t];
            rem /= dims[t];
        }
        c.witness = w;
        c.detail = arity == 0 ? "identity fails" : "fails at " + describe_witness(w, labels);
        break;
    }
    return c;
}

ValidationReport validate_algebra(const AlgebraData& a)
{
    const std::size_t n = a.dim;
    const Matrix id = Matrix::identity(a.field, n);
    ValidationReport r;
    r.checks.push_back(check_identity("associativity", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult),
                                      std::vector<std::size_t>(3, n), a.labels));
    auto left = check_identity("unit", a.mult * kron(a.unit, id), id, std::vector<std::size_t>(1, n), a.labels);
    r.checks.push_back(left.passed ? check_identity("unit", a.mult * kron(id, a.unit), id, std::vector<std::size_t>(1, n), a.labels)
                                   : left);
    return r;
}

ValidationReport validate_coalgebra(const CoalgebraData& c)
{
    const std::size_t n = c.dim;
    const Matrix id = Matrix::identity(c.field, n);
    ValidationReport r;
    r.checks.push_back(check_identity("coassociativity", kron(c.comult, id) * c.comult,
                                      kron(id, c.comult) * c.comult, std::vector<std::size_t>(1, n)));
    auto left = check_identity("counit", kron(c.counit, id) * c.comult, id, std::vector<std::size_t>(1, n));
    r.checks.push_back(left.passed ? check_identity("counit", kron(id, c.counit) * c.comult, id, std::vector<std::size_t>(1, n)) : left);
    return r;
}

bool is_unital_subalgebra(const AlgebraData& a, const Subspace& s)
{
    if (s.ambient_dim() != a.dim) throw DimensionMismatch("subalgebra test: ambient dimension");
    if (!s.contains(a.unit)) return false;
    const Matrix cols = s.basis_columns();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Matrix left = a.left_mult(cols.col(i));
        if (!s.contains_columns(left * cols)) return false;
    }
    return true;
}

HopfAlgebra::HopfAlgebra(AlgebraData algebra, CoalgebraData coalgebra, Matrix antipode)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)), antipode_(std::move(antipode))
{
    if (!(algebra_.field == coalgebra_.field)) throw FieldMismatch("algebra and coalgebra fields differ");
    if (algebra_.dim != coalgebra_.dim) throw DimensionMismatch("algebra and coalgebra dimensions differ");
    require_shape(antipode_, algebra_.field, algebra_.dim, algebra_.dim, "antipode");
}

ValidationReport validate_hopf(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    const Field f = h.field();
    const auto& labels = h.labels();
    const Matrix id = Matrix::identity(f, n);
    const Matrix& m = h.mult();
    const Matrix& u = h.unit();
    const Matrix& d = h.comult();
    const Matrix& e = h.counit();
    const Matrix& s = h.antipode();

    ValidationReport r;
    auto alg = validate_algebra(h.algebra());
    for (auto& c : alg.checks) r.checks.push_back(std::move(c));
    auto coalg = validate_coalgebra(h.coalgebra());
    for (auto& c : coalg.checks) {
        if (!c.passed && !c.witness.empty()) c.detail = "fails at " + describe_witness(c.witness, labels);
        r.checks.push_back(std::move(c));
    }

    r.checks.push_back(check_identity("comultiplication multiplicative", d * m,
                                      detail::tensor_algebra_mult(h.algebra(), h.algebra()) * kron(d, d), std::vector<std::size_t>(2, n), labels));
    r.checks.push_back(check_identity("counit multiplicative", e * m, kron(e, e), std::vector<std::size_t>(2, n), labels));
    r.checks.push_back(check_identity("comultiplication unital", d * u, kron(u, u), std::vector<std::size_t>(0, n), labels));
    r.checks.push_back(check_identity("counit unital", e * u, Matrix::identity(f, 1), std::vector<std::size_t>(0, n), labels));

    const Matrix unit_counit = u * e;
    auto left = check_identity("antipode", m * kron(s, id) * d, unit_counit, std::vector<std::size_t>(1, n), labels);
    r.checks.push_back(left.passed ? check_identity("antipode", m * kron(id, s) * d, unit_counit, std::vector<std::size_t>(1, n), labels)
                                   : left);

    AxiomCheck inv{"antipode invertible", rank(s) == n, {}, {}};
    if (!inv.passed) inv.detail = "rank " + std::to_string(rank(s)) + " < " + std::to_string(n);
    r.checks.push_back(inv);
    return r;
}

CayleyTable cyclic_group_table(std::size_t n)
{
    CayleyTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

CayleyTable symmetric_group_table(std::size_t k)
{
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    CayleyTable t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> c(k);
            for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

HopfAlgebra group_algebra(const CayleyTable& cayley, Field f, std::vector<std::string> labels)
{
    const std::size_t n = cayley.size();
    if (n == 0) throw GroupTableError("closure: empty table");
    for (const auto& row : cayley) {
        if (row.size() != n) throw GroupTableError("closure: table is not square");
        for (auto v : row)
            if (v >= n) throw GroupTableError("closure: entry " + std::to_string(v) + " out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
                    throw GroupTableError("associativity fails at (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ", " + std::to_string(c) + ")");
    std::size_t e = n;
    for (std::size_t i = 0; i < n && e == n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = cayley[i][j] == j && cayley[j][i] == j;
        if (ok) e = i;
    }
    if (e == n) throw GroupTableError("identity: no two-sided identity element");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (cayley[a][b] == e && cayley[b][a] == e) inv[a] = b;
        if (inv[a] == n) throw GroupTableError("inverses: element " + std::to_string(a) + " has no inverse");
    }

    if (labels.empty()) labels = default_labels(n, "g");
    const Scalar one(f, 1);
    Matrix mult(f, n, n * n), unit(f, n, 1), comult(f, n * n, n), counit(f, 1, n), s(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mult.set(cayley[a][b], a * n + b, one);
        comult.set(a * n + a, a, one);
        counit.set(0, a, one);
        s.set(inv[a], a, one);
    }
    unit.set(e, 0, one);
    return HopfAlgebra(AlgebraData(f, n, mult, unit, std::move(labels)), CoalgebraData(f, n, comult, counit), s);
}

HopfAlgebra taft(std::size_t n, const Scalar& q, Field f)
{
    if (n < 2) throw ParameterError("taft: n must be at least 2");
    if (!(q.field() == f)) throw FieldMismatch("taft: q lives over " + q.field().name());
    if (f.is_prime() && static_cast<std::int64_t>(n) % f.characteristic() == 0)
        throw ParameterError("taft: characteristic divides n");
    if (!q.pow(static_cast<std::int64_t>(n)).is_one())
        throw ParameterError("taft: q = " + q.to_string() + " is not an n-th root of unity (q^n = " +
                             q.pow(static_cast<std::int64_t>(n)).to_string() + ")");
    for (std::size_t k = 1; k < n; ++k)
        if (q.pow(static_cast<std::int64_t>(k)).is_one())
            throw ParameterError("taft: q is not a primitive n-th root of unity (q^" + std::to_string(k) + " = 1)");

    const std::size_t dim = n * n;
    auto index = [n](std::size_t gi, std::size_t xj) { return xj * n + gi; };
    std::vector<std::string> labels(dim);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            std::string g = i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i));
            std::string x = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
            labels[index(i, j)] = (g + x).empty() ? "1" : g + x;
        }

    // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
    Matrix mult(f, dim, dim * dim);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (b + d >= n) continue;
                    const auto coeff = q.pow(static_cast<std::int64_t>(b * c));
                    mult.set(index((a + c) % n, b + d), index(a, b) * dim + index(c, d), coeff);
                }
    Matrix unit = Matrix::unit_vector(f, dim, 0);
    AlgebraData alg(f, dim, mult, unit, labels);

    const Matrix g = Matrix::unit_vector(f, dim, index(1, 0));
    const Matrix x = Matrix::unit_vector(f, dim, index(0, 1));
    const Matrix one = unit;
    const Matrix mult2 = detail::tensor_algebra_mult(alg, alg);
    auto prod2 = [&](const Matrix& a, const Matrix& b) { return mult2 * kron(a, b); };
    const Matrix delta_g = kron(g, g);
    const Matrix delta_x = kron(x, one) + kron(g, x);
    const Matrix g_inv = Matrix::unit_vector(f, dim, index(n - 1, 0));
    const Matrix s_x = alg.product(g_inv, x).scaled(Scalar(f, -1));

    Matrix comult(f, dim * dim, dim), counit(f, 1, dim), antipode(f, dim, dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix d = kron(one, one);
            for (std::size_t t = 0; t < i; ++t) d = prod2(d, delta_g);
            for (std::size_t t = 0; t < j; ++t) d = prod2(d, delta_x);
            Matrix s = one;  // S(g^i x^j) = S(x)^j S(g)^i
            for (std::size_t t = 0; t < j; ++t) s = alg.product(s, s_x);
            for (std::size_t t = 0; t < i; ++t) s = alg.product(s, g_inv);
            const std::size_t col = index(i, j);
            for (std::size_t r = 0; r < dim * dim; ++r)
                if (!d.is_zero_at(r, 0)) comult.set(r, col, d.at(r, 0));
            for (std::size_t r = 0; r < dim; ++r)
                if (!s.is_zero_at(r, 0)) antipode.set(r, col, s.at(r, 0));
            if (j == 0) counit.set(0, col, Scalar(f, 1));
        }
    return HopfAlgebra(std::move(alg), CoalgebraData(f, dim, comult, counit), antipode);
}

HopfAlgebra sweedler(Field f)
{
    if (f.characteristic() == 2) throw FieldError("sweedler: characteristic 2 is unsupported");
    HopfAlgebra t = taft(2, Scalar(f, -1), f);
    AlgebraData alg = t.algebra();
    alg.labels = {"1", "g", "x", "gx"};
    return HopfAlgebra(alg, t.coalgebra(), t.antipode());
}

HopfAlgebra dual(const HopfAlgebra& h)
{
    const Field f = h.field();
    std::vector<std::string> labels;
    for (const auto& l : h.labels()) labels.push_back(l + "*");
    return HopfAlgebra(AlgebraData(f, h.dim(), h.comult().transpose(), h.counit().transpose(), labels),
                       CoalgebraData(f, h.dim(), h.mult().transpose(), h.unit().transpose()),
                       h.antipode().transpose());
}

namespace {

Matrix antipode_inverse(const HopfAlgebra& h)
{
    auto s_inv = inverse(h.antipode());
    if (!s_inv) throw InvariantViolation("antipode is not invertible");
    return *s_inv;
}

}  // namespace

HopfAlgebra opposite(const HopfAlgebra& h)
{
    AlgebraData alg = h.algebra();
    alg.mult = h.mult() * flip(h.field(), h.dim(), h.dim());
    return HopfAlgebra(alg, h.coalgebra(), antipode_inverse(h));
}

HopfAlgebra coopposite(const HopfAlgebra& h)
{
    CoalgebraData co = h.coalgebra();
    co.comult = flip(h.field(), h.dim(), h.dim()) * h.comult();
    return HopfAlgebra(h.algebra(), co, antipode_inverse(h));
}

LinearHom::LinearHom(CoalgebraData source_, AlgebraData target_, Matrix map_)
    : source(std::move(source_)), target(std::move(target_)), map(std::move(map_))
{
    require_shape(map, source.field, target.dim, source.dim, "linear map");
    if (!(source.field == target.field)) throw FieldMismatch("LinearHom: source and target fields differ");
}

LinearHom convolution_unit(const CoalgebraData& source, const AlgebraData& target)
{
    return LinearHom(source, target, target.unit * source.counit);
}

LinearHom convolve(const LinearHom& f, const LinearHom& g)
{
    if (!(f.source == g.source) || !(f.target == g.target))
        throw DimensionMismatch("convolve: maps have different source coalgebra or target algebra");
    return LinearHom(f.source, f.target, f.target.mult * kron(f.map, g.map) * f.source.comult);
}

Result<LinearHom> convolution_inverse(const LinearHom& f)
{
    const Field fld = f.source.field;
    const std::size_t m = f.target.dim, n = f.source.dim;
    // x -> f * x is linear in x; assemble it on the basis of m x n matrices.
    const Matrix left = f.target.mult * kron(f.map, Matrix::identity(fld, m));
    Matrix op(fld, m * n, m * n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Matrix e(fld, m, n);
            e.set(r, c, Scalar(fld, 1));
            const Matrix img = left * kron(Matrix::identity(fld, n), e) * f.source.comult;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!img.is_zero_at(i, j)) op.set(i * n + j, r * n + c, img.at(i, j));
        }
    const LinearHom unit = convolution_unit(f.source, f.target);
    const auto x = solve(op, unit.map.reshaped(m * n, 1));
    if (!x) return Result<LinearHom>::fail("no right convolution inverse");
    LinearHom candidate(f.source, f.target, x->reshaped(m, n));
    if (!(convolve(candidate, f).map == unit.map))
        return Result<LinearHom>::fail("right inverse is not a left inverse");
    return Result<LinearHom>::ok(std::move(candidate));
}

TensorOver tensor_over(const AlgebraData& a, const Subspace& b)
{
    if (!is_unital_subalgebra(a, b)) throw InvariantViolation("tensor_over: base is not a unital subalgebra");
    const std::size_t n = a.dim;
    const Matrix id = Matrix::identity(a.field, n);
    const Matrix cols = b.basis_columns();
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const Matrix v = cols.col(i);
        blocks.push_back(kron(a.right_mult(v), id) - kron(id, a.left_mult(v)));
    }
    TensorOver t;
    t.relations = blocks.empty() ? Subspace(a.field, n * n) : Subspace::image(Matrix::hstack(blocks));
    t.quotient = quotient_data(t.relations);
    return t;
}

}  // namespace hgl
