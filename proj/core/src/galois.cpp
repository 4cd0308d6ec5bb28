#include "hgl/galois.hpp"

#include <algorithm>

#include "hgl/parallel.hpp"

namespace hgl {

namespace {

void require_same_hopf(const ComoduleAlgebra& a, const GeneralisedQuotient& q)
{
    if (!(a.hopf() == q.hopf)) throw PreconditionError("quotient is not a quotient of the coacting Hopf algebra");
}

void require_exhaustive(const QuotientLattice& quots)
{
    if (!quots.poset.exhaustive)
        throw PreconditionError("psi by enumeration needs the complete list of generalised quotients");
}

std::size_t zero_ideal_index(const QuotientLattice& quots)
{
    const auto i = quots.index_of(Subspace(quots.hopf.field(), quots.hopf.dim()));
    if (!i) throw InvariantViolation("enumerated quotients miss the zero ideal");
    return *i;
}

std::size_t require_index(const FinitePoset& p, const Subspace& s, const char* what)
{
    const auto i = p.index_of(s);
    if (!i) throw InvariantViolation(std::string(what) + " is missing from the enumeration: " + s.to_string());
    return *i;
}

/// x -> x₍₁₎ ⊗ x₍₂₎ ⊗ x₍₃₎.
Matrix double_comult(const HopfAlgebra& h)
{
    return kron(h.comult(), Matrix::identity(h.field(), h.dim())) * h.comult();
}

/// h ⊗ k -> h₍₁₎ k S(h₍₂₎) when left, S(h₍₁₎) k h₍₂₎ otherwise.
Matrix adjoint_action(const HopfAlgebra& h, bool left)
{
    const Field f = h.field();
    const std::size_t n = h.dim();
    const Matrix id = Matrix::identity(f, n);
    const Matrix twist = left ? kron(kron(id, id), h.antipode()) : kron(h.antipode(), kron(id, id));
    return h.mult() * kron(h.mult(), id) * twist * tensor_permutation(f, {n, n, n}, {0, 2, 1}) * kron(h.comult(), id);
}

}  // namespace

Subspace phi(const ComoduleAlgebra& a, const GeneralisedQuotient& q)
{
    require_same_hopf(a, q);
    return coinvariants_q(a, q.ideal);
}

std::vector<Subspace> phi_table(const ComoduleAlgebra& a, const QuotientLattice& quots, unsigned jobs)
{
    return parallel_map(quots.size(), jobs, [&](std::size_t i) { return phi(a, quots.quotients[i]); });
}

std::size_t psi_enum_index(const Subspace& b, const QuotientLattice& quots, const std::vector<Subspace>& phis)
{
    require_exhaustive(quots);
    const HopfAlgebra& h = quots.hopf;
    Subspace meet = Subspace::full(h.field(), h.dim());
    for (std::size_t i = 0; i < quots.size(); ++i)
        if (subspace_le(b, phis[i])) meet = subspace_intersect(meet, quots.quotients[i].ideal);
    return require_index(quots.poset, cogenerated_rico(h, meet), "psi");
}

GeneralisedQuotient psi_enum(const ComoduleAlgebra& a, const Subspace& b, const QuotientLattice& quots)
{
    require_exhaustive(quots);
    if (!(a.hopf() == quots.hopf)) throw PreconditionError("psi_enum: quotients of a different Hopf algebra");
    return quots.quotients[psi_enum_index(b, quots, phi_table(a, quots))];
}

GeneralisedQuotient psi_regular(const CoidealSubalgebra& k)
{
    const HopfAlgebra& h = k.hopf;
    auto valid = validate_coideal_subalgebra(h, k.space);
    if (!valid) throw InvariantViolation("psi_regular: not a left coideal subalgebra: " + valid.reason());
    const Subspace plus = subspace_intersect(k.space, h.augmentation_ideal());
    if (plus.is_zero()) return full_quotient(h);
    return make_quotient(h, Subspace::image(h.mult() * kron(plus.basis_columns(), Matrix::identity(h.field(), h.dim()))));
}

CanonicalMapData canonical_map(const ComoduleAlgebra& a, const GeneralisedQuotient& q)
{
    require_same_hopf(a, q);
    const Field f = a.field();
    const std::size_t m = a.dim();
    CanonicalMapData c{q, phi(a, q), {}, {}, {}, false, false};
    c.tensor = tensor_over(a.algebra(), c.base);
    c.lifted = kron(a.algebra().mult, q.proj()) * kron(Matrix::identity(f, m), a.coaction());
    if (!c.tensor.relations.is_zero() && !(c.lifted * c.tensor.relations.basis_columns()).is_zero())
        throw InvariantViolation("canonical map does not descend to A ⊗_B A");
    c.map = c.lifted * c.tensor.quotient.section;
    const std::size_t target = m * q.q_dim;
    c.surjective = rank(c.map) == target;
    c.bijective = c.surjective && c.tensor.dim() == target;
    return c;
}

bool is_q_galois(const ComoduleAlgebra& a, const GeneralisedQuotient& q) { return canonical_map(a, q).bijective; }

Matrix canonical_inverse_regular(const CoidealSubalgebra& k)
{
    const HopfAlgebra& h = k.hopf;
    const Field f = h.field();
    const std::size_t n = h.dim();
    const GeneralisedQuotient q = psi_regular(k);
    const CanonicalMapData can = canonical_map(regular(h), q);
    const Matrix id = Matrix::identity(f, n);
    // x ⊗ y -> x S(y₍₁₎) ⊗ y₍₂₎ on H ⊗ H, then into H ⊗_B H
    const Matrix lifted = can.tensor.quotient.proj * kron(h.mult(), id) * kron(id, kron(h.antipode(), id)) *
                          kron(id, h.comult());
    if (!q.ideal.is_zero() && !(lifted * kron(id, q.ideal.basis_columns())).is_zero())
        throw InvariantViolation("can⁻¹ is not well defined on H ⊗ H/I");
    const Matrix inv = lifted * kron(id, q.data.section);
    if (!(can.map * inv == Matrix::identity(f, n * q.q_dim)))
        throw InvariantViolation("can ∘ can⁻¹ is not the identity");
    if (!(inv * can.map == Matrix::identity(f, can.tensor.dim())))
        throw InvariantViolation("can⁻¹ ∘ can is not the identity");
    return inv;
}

ClosureReport closure_report(const ComoduleAlgebra& a, const ClosureOptions& opts)
{
    const unsigned jobs = opts.enumeration.jobs;
    ClosureReport r;
    r.quotients = enumerate_ricos(a.hopf(), opts.enumeration);
    const auto& quots = r.quotients;
    const std::size_t nq = quots.size();
    r.phi = phi_table(a, quots, jobs);
    const auto cans = parallel_map(nq, jobs, [&](std::size_t i) {
        const auto c = canonical_map(a, quots.quotients[i]);
        return std::make_pair(c.bijective, c.surjective);
    });
    r.q_galois.resize(nq);
    for (std::size_t i = 0; i < nq; ++i) r.q_galois[i] = cans[i].first;
    r.can_h_surjective = cans[zero_ideal_index(quots)].second;
    r.psi_of_phi = parallel_map(nq, jobs, [&](std::size_t i) { return psi_enum_index(r.phi[i], quots, r.phi); });
    r.closed_quotients.resize(nq);
    for (std::size_t i = 0; i < nq; ++i) r.closed_quotients[i] = r.psi_of_phi[i] == i;

    auto note = [&r](std::string s) { r.violations.push_back(std::move(s)); };
    for (std::size_t i = 0; i < nq; ++i) {
        const std::size_t c = r.psi_of_phi[i];
        if (!subspace_le(quots.quotients[c].ideal, quots.quotients[i].ideal))
            note("Galois property fails at quotient " + std::to_string(i));
        if (r.psi_of_phi[c] != c) note("ψφ is not idempotent at quotient " + std::to_string(i));
        for (std::size_t j = 0; j < nq; ++j)
            if (quots.poset.le(i, j) && !subspace_le(r.phi[j], r.phi[i]))
                note("φ is not antitone on quotients " + std::to_string(i) + ", " + std::to_string(j));
        if (r.can_h_surjective && r.q_galois[i] && !r.closed_quotients[i])
            note("Q-Galois quotient " + std::to_string(i) + " is not closed");
    }

    if (!opts.with_subalgebras) return r;
    r.subalgebras = enumerate_subalgebras_over(a.algebra(), coinvariants(a), opts.enumeration);
    const auto& subs = r.subalgebras;
    const std::size_t ns = subs.size();
    r.phi_index.resize(nq);
    for (std::size_t i = 0; i < nq; ++i) r.phi_index[i] = require_index(subs, r.phi[i], "coinvariant subalgebra");
    r.psi = parallel_map(ns, jobs, [&](std::size_t j) { return psi_enum_index(subs.elements[j], quots, r.phi); });
    r.phi_of_psi.resize(ns);
    r.closed_subalgebras.resize(ns);
    for (std::size_t j = 0; j < ns; ++j) {
        r.phi_of_psi[j] = r.phi_index[r.psi[j]];
        r.closed_subalgebras[j] = r.phi_of_psi[j] == j;
    }
    for (std::size_t j = 0; j < ns; ++j) {
        const std::size_t c = r.phi_of_psi[j];
        if (!subs.le(j, c)) note("Galois property fails at subalgebra " + std::to_string(j));
        if (r.phi_of_psi[c] != c) note("φψ is not idempotent at subalgebra " + std::to_string(j));
        for (std::size_t k = 0; k < ns; ++k)
            if (subs.le(j, k) && !quots.poset.le(r.psi[k], r.psi[j]))
                note("ψ is not antitone on subalgebras " + std::to_string(j) + ", " + std::to_string(k));
        if (r.closed_subalgebras[j] && !(r.closed_quotients[r.psi[j]] && r.phi_index[r.psi[j]] == j))
            note("ψ does not invert φ at closed subalgebra " + std::to_string(j));
    }
    for (std::size_t i = 0; i < nq; ++i)
        if (r.closed_quotients[i] && !(r.closed_subalgebras[r.phi_index[i]] && r.psi[r.phi_index[i]] == i))
            note("φ does not invert ψ at closed quotient " + std::to_string(i));
    return r;
}

FdimCertificate check_fdim_bijection(const ComoduleAlgebra& a, const EnumerationOptions& opts)
{
    const CanonicalMapData top = canonical_map(a, full_quotient(a.hopf()));
    if (!top.bijective)
        throw PreconditionError("A is not H-Galois: can_H : A ⊗_B A -> A ⊗ H has domain dimension " +
                                std::to_string(top.tensor.dim()) + ", rank " + std::to_string(rank(top.map)) +
                                ", target dimension " + std::to_string(a.dim() * a.hopf().dim()));
    const QuotientLattice quots = enumerate_ricos(a.hopf(), opts);
    const std::size_t nq = quots.size();
    const auto phis = phi_table(a, quots, opts.jobs);
    const auto galois = parallel_map(nq, opts.jobs, [&](std::size_t i) {
        return static_cast<char>(is_q_galois(a, quots.quotients[i]) ? 1 : 0);
    });
    FdimCertificate c;
    for (std::size_t i = 0; i < nq; ++i) {
        c.pairs.emplace_back(quots.quotients[i].ideal, phis[i]);
        if (!galois[i]) c.failures.push_back("quotient " + std::to_string(i) + " is not Q-Galois");
        if (psi_enum_index(phis[i], quots, phis) != i) c.failures.push_back("quotient " + std::to_string(i) + " is not closed");
        for (std::size_t j = 0; j < nq; ++j) {
            if (i != j && phis[i] == phis[j] && i < j)
                c.failures.push_back("quotients " + std::to_string(i) + " and " + std::to_string(j) +
                                     " have equal coinvariants");
            if (quots.poset.le(i, j) != subspace_le(phis[j], phis[i]))
                c.failures.push_back("order is not reversed on quotients " + std::to_string(i) + ", " + std::to_string(j));
        }
    }
    c.holds = c.failures.empty();
    return c;
}

bool check_mono_on_qgalois(const ComoduleAlgebra& a, const GeneralisedQuotient& q1, const GeneralisedQuotient& q2)
{
    if (!canonical_map(a, full_quotient(a.hopf())).surjective)
        throw PreconditionError("check_mono_on_qgalois: can_H is not surjective");
    if (!is_q_galois(a, q1) || !is_q_galois(a, q2))
        throw PreconditionError("check_mono_on_qgalois: both quotients must be Q-Galois");
    return !(phi(a, q1) == phi(a, q2)) || q1.ideal == q2.ideal;
}

std::vector<std::pair<std::size_t, std::size_t>> scan_mono(const ComoduleAlgebra& a, const QuotientLattice& quots)
{
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    const auto phis = phi_table(a, quots);
    std::vector<bool> galois(quots.size());
    for (std::size_t i = 0; i < quots.size(); ++i) galois[i] = is_q_galois(a, quots.quotients[i]);
    for (std::size_t i = 0; i < quots.size(); ++i)
        for (std::size_t j = i + 1; j < quots.size(); ++j)
            if (galois[i] && galois[j] && phis[i] == phis[j] && !(quots.quotients[i].ideal == quots.quotients[j].ideal))
                bad.emplace_back(i, j);
    return bad;
}

bool is_normal_subalgebra(const HopfAlgebra& h, const Subspace& k)
{
    if (!is_unital_subalgebra(h.algebra(), k)) return false;
    const Matrix id = Matrix::identity(h.field(), h.dim());
    const Matrix cols = k.basis_columns();
    const Matrix proj = quotient_data(k).proj;
    const Matrix delta = h.comult() * cols;
    if (!(kron(proj, id) * delta).is_zero() || !(kron(id, proj) * delta).is_zero()) return false;
    if (!k.contains_columns(h.antipode() * cols)) return false;
    for (bool left : {true, false})
        if (!k.contains_columns(adjoint_action(h, left) * kron(id, cols))) return false;
    return true;
}

bool is_normal_ideal(const HopfAlgebra& h, const Subspace& ideal)
{
    if (ideal.is_zero()) return true;
    const Field f = h.field();
    const std::size_t n = h.dim();
    const Matrix id = Matrix::identity(f, n);
    const Matrix cols = ideal.basis_columns();
    if (!(h.counit() * cols).is_zero()) return false;
    if (!ideal.contains_columns(h.mult() * kron(cols, id)) || !ideal.contains_columns(h.mult() * kron(id, cols)))
        return false;
    const Matrix proj = quotient_data(ideal).proj;
    if (!(kron(proj, proj) * h.comult() * cols).is_zero()) return false;
    if (!ideal.contains_columns(h.antipode() * cols)) return false;
    const Matrix d3 = double_comult(h) * cols;
    const Matrix left = kron(h.mult(), id) * kron(id, kron(h.antipode(), id)) *
                        tensor_permutation(f, {n, n, n}, {0, 2, 1}) * d3;
    if (!(kron(id, proj) * left).is_zero()) return false;
    const Matrix right = kron(id, h.mult()) * kron(id, kron(h.antipode(), id)) *
                         tensor_permutation(f, {n, n, n}, {1, 0, 2}) * d3;
    return (kron(proj, id) * right).is_zero();
}

NormalReport check_normal_restriction(const HopfAlgebra& h, const EnumerationOptions& opts)
{
    NormalReport r;
    const FinitePoset subs = enumerate_coideal_subalgebras(h, opts);
    const QuotientLattice quots = enumerate_ricos(h, opts);
    const ComoduleAlgebra reg = regular(h);
    for (const auto& k : subs.elements) {
        if (!is_normal_subalgebra(h, k)) continue;
        r.normal_subalgebras.push_back(k);
        const Subspace ideal = psi_regular(CoidealSubalgebra{h, k}).ideal;
        if (!is_normal_ideal(h, ideal))
            r.violations.push_back("ψ of normal subalgebra " + k.to_string() + " is not a normal ideal");
    }
    for (const auto& q : quots.quotients) {
        if (!is_normal_ideal(h, q.ideal)) continue;
        r.normal_ideals.push_back(q.ideal);
        const Subspace k = coinvariants_q(reg, q.ideal);
        if (!is_normal_subalgebra(h, k))
            r.violations.push_back("φ of normal ideal " + q.ideal.to_string() + " is not a normal subalgebra");
    }
    return r;
}

MontgomeryReport check_montgomery_conditions(const HopfAlgebra& h, const EnumerationOptions& opts)
{
    const ComoduleAlgebra reg = regular(h);
    const QuotientLattice quots = enumerate_ricos(h, opts);
    const FinitePoset subs = enumerate_coideal_subalgebras(h, opts);
    const auto galois = parallel_map(quots.size(), opts.jobs, [&](std::size_t i) {
        return static_cast<char>(is_q_galois(reg, quots.quotients[i]) ? 1 : 0);
    });
    // φψ(K) for every coideal subalgebra K
    const auto closures = parallel_map(subs.size(), opts.jobs, [&](std::size_t j) {
        return phi(reg, psi_regular(CoidealSubalgebra{h, subs.elements[j]}));
    });
    const auto quotient_roundtrip = parallel_map(quots.size(), opts.jobs, [&](std::size_t i) {
        const Subspace k = phi(reg, quots.quotients[i]);
        return static_cast<char>(psi_regular(CoidealSubalgebra{h, k}).ideal == quots.quotients[i].ideal ? 1 : 0);
    });
    MontgomeryReport r;
    r.cond1 = std::all_of(galois.begin(), galois.end(), [](char c) { return c != 0; });
    r.cond2 = true;
    bool subs_roundtrip = true;
    for (std::size_t j = 0; j < subs.size(); ++j) {
        r.cond2 = r.cond2 && subspace_le(closures[j], subs.elements[j]);
        subs_roundtrip = subs_roundtrip && closures[j] == subs.elements[j];
    }
    r.bijection = subs_roundtrip &&
                  std::all_of(quotient_roundtrip.begin(), quotient_roundtrip.end(), [](char c) { return c != 0; });
    return r;
}

Matrix codiagonal_coaction(const ComoduleAlgebra& a)
{
    const Field f = a.field();
    const std::size_t m = a.dim(), n = a.hopf().dim();
    return kron(Matrix::identity(f, m * m), a.hopf().mult()) * tensor_permutation(f, {m, n, m, n}, {0, 2, 1, 3}) *
           kron(a.coaction(), a.coaction());
}

Subspace bigalois_space(const ComoduleAlgebra& a)
{
    const std::size_t m = a.dim();
    return kernel(codiagonal_coaction(a) - kron(Matrix::identity(a.field(), m * m), a.hopf().unit()));
}

Result<Subspace> bigalois_I(const ComoduleAlgebra& a, const Subspace& b)
{
    const Field f = a.field();
    const std::size_t n = a.hopf().dim();
    const TensorOver t = tensor_over(a.algebra(), b);
    const Matrix pushed = kron(t.quotient.proj, Matrix::identity(f, n)) * codiagonal_coaction(a);
    if (!t.relations.is_zero() && !(pushed * t.relations.basis_columns()).is_zero())
        return Result<Subspace>::fail("the codiagonal coaction does not descend to A ⊗_B A");
    const Matrix induced = pushed * t.quotient.section;
    return Result<Subspace>::ok(kernel(induced - kron(Matrix::identity(f, t.dim()), a.hopf().unit())));
}

}  // namespace hgl
