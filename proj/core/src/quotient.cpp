#include "hgl/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "hgl/parallel.hpp"
#include "internal.hpp"

namespace hgl {

namespace {

std::string vector_text(const Matrix& row)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < row.cols(); ++j) os << (j ? "," : "") << row.at(0, j);
    os << ')';
    return os.str();
}

void require_ambient(const HopfAlgebra& h, const Subspace& s, const char* what)
{
    if (!(s.field() == h.field())) throw FieldMismatch(std::string(what) + ": subspace lives over " + s.field().name());
    if (s.ambient_dim() != h.dim())
        throw DimensionMismatch(std::string(what) + ": ambient dimension " + std::to_string(s.ambient_dim()) +
                                ", expected " + std::to_string(h.dim()));
}

void require_same_hopf(const GeneralisedQuotient& a, const GeneralisedQuotient& b)
{
    if (!(a.hopf == b.hopf)) throw InvariantViolation("quotients of different Hopf algebras");
}

/// All products v h with v in the basis of s and h in the basis of H, as columns v_i h_j at i * n + j.
Matrix right_products(const HopfAlgebra& h, const Matrix& cols)
{
    return h.mult() * kron(cols, Matrix::identity(h.field(), h.dim()));
}

/// Columns (π ⊗ π) Δ(v) for the basis vectors v of s.
Matrix coideal_defect(const HopfAlgebra& h, const Matrix& proj, const Matrix& cols)
{
    return kron(proj, proj) * (h.comult() * cols);
}

std::size_t first_nonzero_col(const Matrix& m)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m.is_zero_at(i, j)) return j;
    return m.cols();
}

std::size_t first_col_outside(const Subspace& s, const Matrix& m)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!s.contains_columns(m.col(j))) return j;
    return m.cols();
}

GeneralisedQuotient induced_structure(const HopfAlgebra& h, const Subspace& ideal)
{
    GeneralisedQuotient q;
    q.hopf = h;
    q.ideal = ideal;
    q.data = quotient_data(ideal);
    q.q_dim = q.data.proj.rows();
    const Field f = h.field();
    const Matrix& p = q.data.proj;
    const Matrix& s = q.data.section;
    q.comult = kron(p, p) * h.comult() * s;
    q.counit = h.counit() * s;
    q.action = p * h.mult() * kron(s, Matrix::identity(f, h.dim()));

    const std::size_t qd = q.q_dim, n = h.dim();
    const auto co = validate_coalgebra(CoalgebraData(f, qd, q.comult, q.counit));
    if (!co.all_passed()) throw InvariantViolation("induced coalgebra on H/I fails its axioms");
    const Matrix id_q = Matrix::identity(f, qd);
    if (!(q.action * kron(q.action, Matrix::identity(f, n)) == q.action * kron(id_q, h.mult())))
        throw InvariantViolation("induced right action on H/I is not associative");
    if (!(q.action * kron(id_q, h.unit()) == id_q)) throw InvariantViolation("induced right action on H/I is not unital");
    const Matrix one = p * h.unit();
    if (!(q.comult * one == kron(one, one)) || !(q.counit * one).at(0, 0).is_one())
        throw InvariantViolation("π(1) is not group-like in H/I");
    return q;
}

Result<CoidealSubalgebra> validate_coideal_subalgebra_side(const HopfAlgebra& h, const Subspace& k, bool left)
{
    require_ambient(h, k, "coideal subalgebra");
    using R = Result<CoidealSubalgebra>;
    if (!k.contains(h.unit())) return R::fail("unit: 1 is not in K");
    const Matrix cols = k.basis_columns();
    const std::size_t d = k.dim();
    const Matrix products = h.mult() * kron(cols, cols);
    const std::size_t bad = first_col_outside(k, products);
    if (bad < products.cols())
        return R::fail("multiplicative: k_" + std::to_string(bad / d) + " k_" + std::to_string(bad % d) +
                           " is not in K",
                       {bad / d, bad % d});
    const Matrix id = Matrix::identity(h.field(), h.dim());
    const Matrix proj = quotient_data(k).proj;
    const Matrix test = (left ? kron(id, proj) : kron(proj, id)) * h.comult() * cols;
    const std::size_t c = first_nonzero_col(test);
    if (c < test.cols())
        return R::fail(std::string(left ? "left coideal: Δ(k) ∉ H⊗K" : "right coideal: Δ(k) ∉ K⊗H") + " for k = " +
                           vector_text(k.basis().row(c)),
                       {c});
    return R::ok(CoidealSubalgebra{h, k});
}

/// Subspaces S with base ⊆ S ⊆ bound, in canonical order, that satisfy pred.
template <class Pred>
std::vector<Subspace> enumerate_between(const Subspace& base, const Subspace& bound, const EnumerationOptions& opts,
                                        Pred pred)
{
    const Field f = bound.field();
    const QuotientData qd = quotient_data(base);
    const Subspace image = Subspace::image(qd.proj * bound.basis_columns());
    const std::size_t d = image.dim();
    const Matrix lifts = qd.section * image.basis_columns();  // n x d, inside bound
    const auto candidates = enumerate_subspaces(f, d, opts.cap);
    auto build = [&](std::size_t i) {
        const Subspace& w = candidates[i];
        if (w.is_zero()) return base;
        const Matrix rows = (lifts * w.basis_columns()).transpose();
        return base.is_zero() ? Subspace::span(rows) : Subspace::span(Matrix::vstack({base.basis(), rows}));
    };
    auto results = parallel_map(candidates.size(), opts.jobs, [&](std::size_t i) -> std::optional<Subspace> {
        Subspace s = build(i);
        if (!pred(s)) return std::nullopt;
        return s;
    });
    std::vector<Subspace> out;
    for (auto& r : results)
        if (r) out.push_back(std::move(*r));
    std::sort(out.begin(), out.end());
    return out;
}

void check_order_axioms(const FinitePoset& p)
{
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!p.le(i, i)) throw PosetError("not reflexive at (" + std::to_string(i) + ", " + std::to_string(i) + ", " + std::to_string(i) + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && p.le(i, j) && p.le(j, i))
                throw PosetError("not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                 std::to_string(i) + ")");
            if (!p.le(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (p.le(j, k) && !p.le(i, k))
                    throw PosetError("not transitive at (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                     std::to_string(k) + ")");
        }
}

/// Least upper bound of i and j in the table, if it exists.
std::optional<std::size_t> table_join(const FinitePoset& p, std::size_t i, std::size_t j)
{
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (!p.le(i, c) || !p.le(j, c)) continue;
        bool least = true;
        for (std::size_t u = 0; u < p.size() && least; ++u)
            if (p.le(i, u) && p.le(j, u) && !p.le(c, u)) least = false;
        if (least) return c;
    }
    return std::nullopt;
}

std::optional<std::size_t> table_meet(const FinitePoset& p, std::size_t i, std::size_t j)
{
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (!p.le(c, i) || !p.le(c, j)) continue;
        bool greatest = true;
        for (std::size_t l = 0; l < p.size() && greatest; ++l)
            if (p.le(l, i) && p.le(l, j) && !p.le(l, c)) greatest = false;
        if (greatest) return c;
    }
    return std::nullopt;
}

}  // namespace

Result<GeneralisedQuotient> validate_rico(const HopfAlgebra& h, const Subspace& ideal)
{
    require_ambient(h, ideal, "validate_rico");
    using R = Result<GeneralisedQuotient>;
    const Matrix cols = ideal.basis_columns();
    const Matrix eps = h.counit() * cols;
    const std::size_t c = first_nonzero_col(eps);
    if (c < eps.cols())
        return R::fail("counit: ε(v) = " + eps.at(0, c).to_string() + " for v = " + vector_text(ideal.basis().row(c)),
                       {c});
    const Matrix products = right_products(h, cols);
    const std::size_t bad = first_col_outside(ideal, products);
    if (bad < products.cols()) {
        const std::size_t i = bad / h.dim(), j = bad % h.dim();
        return R::fail("right-ideal: v·" + h.labels()[j] + " ∉ I for v = " + vector_text(ideal.basis().row(i)), {i, j});
    }
    const Matrix defect = coideal_defect(h, quotient_data(ideal).proj, cols);
    const std::size_t cd = first_nonzero_col(defect);
    if (cd < defect.cols())
        return R::fail("coideal: Δ(v) ∉ I⊗H + H⊗I for v = " + vector_text(ideal.basis().row(cd)), {cd});
    return R::ok(induced_structure(h, ideal));
}

GeneralisedQuotient make_quotient(const HopfAlgebra& h, const Subspace& ideal)
{
    auto r = validate_rico(h, ideal);
    if (!r) throw InvariantViolation("not a coideal right ideal: " + r.reason());
    return std::move(r).value();
}

bool is_rico(const HopfAlgebra& h, const Subspace& ideal)
{
    if (ideal.is_zero()) return true;
    const Matrix cols = ideal.basis_columns();
    if (!(h.counit() * cols).is_zero()) return false;
    if (!ideal.contains_columns(right_products(h, cols))) return false;
    return coideal_defect(h, quotient_data(ideal).proj, cols).is_zero();
}

GeneralisedQuotient full_quotient(const HopfAlgebra& h) { return make_quotient(h, Subspace(h.field(), h.dim())); }

GeneralisedQuotient trivial_quotient(const HopfAlgebra& h) { return make_quotient(h, h.augmentation_ideal()); }

Result<CoidealSubalgebra> validate_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k)
{
    return validate_coideal_subalgebra_side(h, k, true);
}

Result<CoidealSubalgebra> validate_right_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k)
{
    return validate_coideal_subalgebra_side(h, k, false);
}

bool is_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k)
{
    if (!k.contains(h.unit())) return false;
    const Matrix cols = k.basis_columns();
    if (!k.contains_columns(h.mult() * kron(cols, cols))) return false;
    const Matrix proj = quotient_data(k).proj;
    return (kron(Matrix::identity(h.field(), h.dim()), proj) * (h.comult() * cols)).is_zero();
}

GeneralisedQuotient join_q(const GeneralisedQuotient& a, const GeneralisedQuotient& b)
{
    require_same_hopf(a, b);
    return make_quotient(a.hopf, subspace_sum(a.ideal, b.ideal));
}

GeneralisedQuotient meet_q(const GeneralisedQuotient& a, const GeneralisedQuotient& b)
{
    require_same_hopf(a, b);
    return make_quotient(a.hopf, cogenerated_rico(a.hopf, subspace_intersect(a.ideal, b.ideal)));
}

Subspace cogenerated_rico(const HopfAlgebra& h, const Subspace& y)
{
    require_ambient(h, y, "cogenerated_rico");
    Subspace cur = subspace_intersect(y, h.augmentation_ideal());
    while (!cur.is_zero()) {
        const Matrix cols = cur.basis_columns();
        const Matrix proj = quotient_data(cur).proj;
        std::vector<Matrix> conds{kron(proj, proj) * h.comult()};
        for (std::size_t j = 0; j < h.dim(); ++j) conds.push_back(proj * h.algebra().right_mult(h.basis_vector(j)));
        // coordinates c with cols * c satisfying every condition
        const Subspace coords = kernel(Matrix::vstack(conds) * cols);
        if (coords.dim() == cur.dim()) break;
        cur = coords.is_zero() ? Subspace(h.field(), h.dim()) : Subspace::image(cols * coords.basis_columns());
    }
    return cur;
}

std::optional<std::size_t> FinitePoset::index_of(const Subspace& s) const
{
    auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it != elements.end() && *it == s) return static_cast<std::size_t>(it - elements.begin());
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == s) return i;
    return std::nullopt;
}

FinitePoset inclusion_poset(std::vector<Subspace> elements, bool exhaustive)
{
    FinitePoset p;
    p.elements = std::move(elements);
    p.exhaustive = exhaustive;
    const std::size_t n = p.size();
    p.leq.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.leq[i][j] = subspace_le(p.elements[i], p.elements[j]) ? 1 : 0;
    return p;
}

QuotientLattice enumerate_ricos(const HopfAlgebra& h, const EnumerationOptions& opts)
{
    const Subspace zero(h.field(), h.dim());
    auto ideals = enumerate_between(zero, h.augmentation_ideal(), opts, [&](const Subspace& s) { return is_rico(h, s); });
    QuotientLattice q;
    q.hopf = h;
    q.quotients = parallel_map(ideals.size(), opts.jobs, [&](std::size_t i) { return make_quotient(h, ideals[i]); });
    const std::size_t n = ideals.size();
    q.poset.elements = std::move(ideals);
    q.poset.exhaustive = true;
    q.poset.leq.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q.poset.leq[i][j] = subspace_le(q.poset.elements[j], q.poset.elements[i]) ? 1 : 0;
    return q;
}

FinitePoset enumerate_coideal_subalgebras(const HopfAlgebra& h, const EnumerationOptions& opts)
{
    const Subspace ones = Subspace::image(h.unit());
    auto subs = enumerate_between(ones, Subspace::full(h.field(), h.dim()), opts,
                                  [&](const Subspace& s) { return is_coideal_subalgebra(h, s); });
    return inclusion_poset(std::move(subs), true);
}

FinitePoset enumerate_subalgebras_over(const AlgebraData& a, const Subspace& base, const EnumerationOptions& opts)
{
    if (!is_unital_subalgebra(a, base)) throw InvariantViolation("enumerate_subalgebras_over: base is not a unital subalgebra");
    auto subs = enumerate_between(base, Subspace::full(a.field, a.dim), opts, [&](const Subspace& s) {
        const Matrix cols = s.basis_columns();
        return s.contains_columns(a.mult * kron(cols, cols));
    });
    return inclusion_poset(std::move(subs), true);
}

PosetReport poset_report(const FinitePoset& p)
{
    check_order_axioms(p);
    PosetReport r;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !p.le(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (k != i && k != j && p.le(i, k) && p.le(k, j)) cover = false;
            if (cover) r.hasse.emplace_back(i, j);
        }
    for (std::size_t c = 0; c < n; ++c) {
        bool top = true, bottom = true;
        for (std::size_t i = 0; i < n; ++i) {
            top = top && p.le(i, c);
            bottom = bottom && p.le(c, i);
        }
        if (top) r.top = c;
        if (bottom) r.bottom = c;
    }
    r.is_lattice = n > 0;
    for (std::size_t i = 0; i < n && r.is_lattice; ++i)
        for (std::size_t j = i + 1; j < n && r.is_lattice; ++j)
            r.is_lattice = table_join(p, i, j).has_value() && table_meet(p, i, j).has_value();
    return r;
}

PosetReport poset_report(const QuotientLattice& q)
{
    PosetReport r = poset_report(q.poset);
    bool agree = true;
    for (std::size_t i = 0; i < q.size() && agree; ++i)
        for (std::size_t j = 0; j < q.size() && agree; ++j) {
            const auto sup = table_join(q.poset, i, j);
            const auto inf = table_meet(q.poset, i, j);
            // the quotient supremum has the smaller ideal
            agree = sup && inf && meet_q(q.quotients[i], q.quotients[j]).ideal == q.poset.elements[*sup] &&
                    join_q(q.quotients[i], q.quotients[j]).ideal == q.poset.elements[*inf];
        }
    r.operations_agree = agree;
    return r;
}

}  // namespace hgl
