#include "hgl/comodule.hpp"

#include "internal.hpp"

namespace hgl {

using detail::require_shape;

ComoduleAlgebra::ComoduleAlgebra(HopfAlgebra hopf, AlgebraData algebra, Matrix coaction)
    : hopf_(std::move(hopf)), algebra_(std::move(algebra)), coaction_(std::move(coaction))
{
    if (!(hopf_.field() == algebra_.field)) throw FieldMismatch("comodule algebra: algebra and Hopf algebra fields differ");
    require_shape(coaction_, algebra_.field, algebra_.dim * hopf_.dim(), algebra_.dim, "coaction");
    coinvariants_ = kernel(coaction_defect());
}

Matrix ComoduleAlgebra::coaction_defect() const
{
    return coaction_ - kron(Matrix::identity(field(), dim()), hopf_.unit());
}

ValidationReport validate_comodule_algebra(const ComoduleAlgebra& a)
{
    const Field f = a.field();
    const std::size_t m = a.dim(), n = a.hopf().dim();
    const Matrix id_m = Matrix::identity(f, m);
    const Matrix id_n = Matrix::identity(f, n);
    const Matrix& d = a.coaction();
    const auto& labels = a.algebra().labels;
    ValidationReport r;
    r.checks.push_back(check_identity("coassociativity", kron(d, id_n) * d, kron(id_m, a.hopf().comult()) * d,
                                      {m}, labels));
    r.checks.push_back(check_identity("counit", kron(id_m, a.hopf().counit()) * d, id_m, {m}, labels));
    const Matrix mult_ah = detail::tensor_algebra_mult(a.algebra(), a.hopf().algebra());
    r.checks.push_back(check_identity("coaction multiplicative", d * a.algebra().mult, mult_ah * kron(d, d),
                                      {m, m}, labels));
    r.checks.push_back(check_identity("coaction unital", d * a.algebra().unit, kron(a.algebra().unit, a.hopf().unit()),
                                      {}, labels));
    return r;
}

ComoduleAlgebra regular(const HopfAlgebra& h) { return ComoduleAlgebra(h, h.algebra(), h.comult()); }

ComoduleAlgebra trivial_coaction(const AlgebraData& a, const HopfAlgebra& h)
{
    return ComoduleAlgebra(h, a, kron(Matrix::identity(a.field, a.dim), h.unit()));
}

Subspace coinvariants(const ComoduleAlgebra& a)
{
    const Subspace& s = a.cached_coinvariants();
    if (!is_unital_subalgebra(a.algebra(), s))
        throw InvariantViolation("coinvariants do not form a unital subalgebra; is the coaction multiplicative?");
    return s;
}

Subspace coinvariants_q(const ComoduleAlgebra& a, const Subspace& ideal)
{
    if (!(ideal.field() == a.field())) throw FieldMismatch("coinvariants_q: ideal lives over " + ideal.field().name());
    if (ideal.ambient_dim() != a.hopf().dim())
        throw DimensionMismatch("coinvariants_q: ideal ambient dimension " + std::to_string(ideal.ambient_dim()) +
                                ", expected " + std::to_string(a.hopf().dim()));
    const Matrix proj = quotient_data(ideal).proj;
    const Subspace k = kernel(kron(Matrix::identity(a.field(), a.dim()), proj) * a.coaction_defect());
    if (!subspace_le(a.cached_coinvariants(), k))
        throw InvariantViolation("coinvariants_q: result misses A^{co H}");
    return k;
}

ModuleAlgebra::ModuleAlgebra(HopfAlgebra hopf_, AlgebraData algebra_, Matrix action_)
    : hopf(std::move(hopf_)), algebra(std::move(algebra_)), action(std::move(action_))
{
    if (!(hopf.field() == algebra.field)) throw FieldMismatch("module algebra: algebra and Hopf algebra fields differ");
    require_shape(action, algebra.field, algebra.dim, hopf.dim() * algebra.dim, "action");
}

Matrix ModuleAlgebra::acting(const Matrix& h) const
{
    return action * kron(h, Matrix::identity(algebra.field, algebra.dim));
}

ValidationReport validate_module_algebra(const ModuleAlgebra& ma)
{
    const Field f = ma.algebra.field;
    const std::size_t m = ma.algebra.dim, n = ma.hopf.dim();
    const Matrix id_m = Matrix::identity(f, m);
    const Matrix id_n = Matrix::identity(f, n);
    const Matrix& act = ma.action;
    const Matrix& mult = ma.algebra.mult;
    ValidationReport r;
    r.checks.push_back(check_identity("module associativity", act * kron(id_n, act),
                                      act * kron(ma.hopf.mult(), id_m), {n, n, m}));
    r.checks.push_back(check_identity("module unit", act * kron(ma.hopf.unit(), id_m), id_m, {m}));
    // h·(ab) = (h1·a)(h2·b)
    const Matrix rhs = mult * kron(act, act) * tensor_permutation(f, {n, n, m, m}, {0, 2, 1, 3}) *
                       kron(ma.hopf.comult(), Matrix::identity(f, m * m));
    r.checks.push_back(check_identity("module algebra", act * kron(id_n, mult), rhs, {n, m, m}));
    r.checks.push_back(check_identity("action on unit", act * kron(id_n, ma.algebra.unit),
                                      ma.algebra.unit * ma.hopf.counit(), {n}));
    return r;
}

ModuleAlgebra to_module_algebra(const ComoduleAlgebra& a)
{
    const Field f = a.field();
    const std::size_t m = a.dim(), n = a.hopf().dim();
    Matrix action(f, m, n * m);
    // f_k · a_i = Σ_j δ(a_i)[j ⊗ h_k] a_j
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!a.coaction().is_zero_at(j * n + k, i)) action.set(j, k * m + i, a.coaction().at(j * n + k, i));
    return ModuleAlgebra(dual(a.hopf()), a.algebra(), action);
}

Subspace invariants(const ModuleAlgebra& ma)
{
    const Field f = ma.algebra.field;
    const std::size_t m = ma.algebra.dim, n = ma.hopf.dim();
    const Matrix id_m = Matrix::identity(f, m);
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < n; ++k)
        blocks.push_back(ma.acting(ma.hopf.basis_vector(k)) - id_m.scaled(ma.hopf.counit().at(0, k)));
    return kernel(Matrix::vstack(blocks));
}

HomCanonicalMap hom_canonical(const ModuleAlgebra& ma, const Subspace& base)
{
    const Field f = ma.algebra.field;
    const std::size_t m = ma.algebra.dim, n = ma.hopf.dim();
    HomCanonicalMap out{tensor_over(ma.algebra, base), Matrix(f, 0, 0), false};
    const Matrix id_m = Matrix::identity(f, m);
    Matrix lifted(f, m * n, m * m);
    for (std::size_t j = 0; j < n; ++j) {
        // x ⊗ y -> x (h_j · y)
        const Matrix part = ma.algebra.mult * kron(id_m, ma.acting(ma.hopf.basis_vector(j)));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = 0; c < m * m; ++c)
                if (!part.is_zero_at(i, c)) lifted.set(i * n + j, c, part.at(i, c));
    }
    if (!out.tensor.relations.is_zero() && !(lifted * out.tensor.relations.basis_columns()).is_zero())
        throw InvariantViolation("hom_canonical: the map does not descend to A ⊗_B A (base not contained in invariants?)");
    out.map = lifted * out.tensor.quotient.section;
    out.bijective = out.tensor.dim() == m * n && rank(out.map) == m * n;
    return out;
}

CleftData trivial_cleft(const AlgebraData& b, const HopfAlgebra& h)
{
    if (!(b.field == h.field())) throw FieldMismatch("trivial_cleft: B and H fields differ");
    const Field f = b.field;
    const std::size_t mb = b.dim, n = h.dim();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < mb; ++i)
        for (std::size_t j = 0; j < n; ++j) labels.push_back(b.labels[i] + "⊗" + h.labels()[j]);
    AlgebraData alg(f, mb * n, detail::tensor_algebra_mult(b, h.algebra()), kron(b.unit, h.unit()), labels);
    ComoduleAlgebra a(h, std::move(alg), kron(Matrix::identity(f, mb), h.comult()));
    LinearHom gamma(h.coalgebra(), a.algebra(), kron(b.unit, Matrix::identity(f, n)));
    LinearHom gamma_inv(h.coalgebra(), a.algebra(), kron(b.unit, h.antipode()));
    return CleftData{std::move(a), std::move(gamma), std::move(gamma_inv)};
}

Result<CleftData> verify_cleft(const ComoduleAlgebra& a, const Matrix& gamma)
{
    const std::size_t n = a.hopf().dim();
    require_shape(gamma, a.field(), a.dim(), n, "cleaving map");
    if (!(a.coaction() * gamma == kron(gamma, Matrix::identity(a.field(), n)) * a.hopf().comult()))
        return Result<CleftData>::fail("gamma is not a comodule map");
    LinearHom g(a.hopf().coalgebra(), a.algebra(), gamma);
    auto inv = convolution_inverse(g);
    if (!inv) return Result<CleftData>::fail("gamma is not convolution invertible: " + inv.reason());
    return Result<CleftData>::ok(CleftData{a, g, inv.value()});
}

}  // namespace hgl
