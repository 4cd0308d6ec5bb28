#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace hgl;
using corpus::F2;
using corpus::F3;

namespace {

Subspace span_of(std::initializer_list<std::initializer_list<long>> rows) { return Subspace::span(Matrix::from_ints(F3, rows)); }

Subspace group_span(const HopfAlgebra& h, const std::vector<std::size_t>& elements)
{
    std::vector<Matrix> rows;
    for (std::size_t x : elements) rows.push_back(h.basis_vector(x).transpose());
    return Subspace::span(Matrix::vstack(rows));
}

const Subspace sw_x_ideal = span_of({{0, 0, 1, 0}, {0, 0, 0, 1}});
const Subspace sw_x_sub = span_of({{1, 0, 0, 0}, {0, 0, 1, 0}});

}  // namespace

TEST_CASE("phi examples")
{
    const ComoduleAlgebra a = regular(corpus::sw());
    const HopfAlgebra& h = a.hopf();
    CHECK(phi(a, full_quotient(h)) == coinvariants(a));
    CHECK(phi(a, trivial_quotient(h)).is_full());
    CHECK(phi(a, make_quotient(h, sw_x_ideal)) == sw_x_sub);
    CHECK_THROWS_AS(phi(a, full_quotient(corpus::c2())), PreconditionError);
}

TEST_CASE("psi_enum examples")
{
    const ComoduleAlgebra a = regular(corpus::sw());
    const QuotientLattice q = enumerate_ricos(a.hopf());
    CHECK(psi_enum(a, Subspace::full(F3, 4), q).ideal == a.hopf().augmentation_ideal());
    CHECK(psi_enum(a, span_of({{1, 0, 0, 0}}), q).ideal.is_zero());
    CHECK(psi_enum(a, sw_x_sub, q).ideal == sw_x_ideal);

    QuotientLattice partial = q;
    partial.poset.exhaustive = false;
    CHECK_THROWS_AS(psi_enum(a, sw_x_sub, partial), PreconditionError);
}

TEST_CASE("psi_regular examples")
{
    const HopfAlgebra h = corpus::sw();
    CHECK(psi_regular({h, span_of({{1, 0, 0, 0}})}).ideal.is_zero());
    CHECK(psi_regular({h, Subspace::full(F3, 4)}).ideal == h.augmentation_ideal());
    CHECK(psi_regular({h, sw_x_sub}).ideal == sw_x_ideal);
    CHECK_THROWS(psi_regular({h, span_of({{1, 0, 0, 0}, {0, 0, 0, 1}})}));
}

TEST_CASE("psi_regular is K⁺H and agrees with psi_enum")
{
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2(), corpus::c4(), corpus::s3()}) {
        const oracle::Hopf o(h);
        const ComoduleAlgebra a = regular(h);
        const QuotientLattice q = enumerate_ricos(h);
        for (const auto& k : enumerate_coideal_subalgebras(h).elements) {
            const GeneralisedQuotient r = psi_regular({h, k});
            CHECK(oracle::to_set(r.ideal) == o.k_plus_h(oracle::to_set(k)));
            CHECK(psi_enum(a, k, q).ideal == r.ideal);
        }
    }
}

TEST_CASE("tensor over a subalgebra")
{
    const AlgebraData a = corpus::sw().algebra();
    CHECK(tensor_over(a, span_of({{1, 0, 0, 0}})).relations.is_zero());
    CHECK(tensor_over(a, span_of({{1, 0, 0, 0}})).dim() == 16);
    CHECK(tensor_over(a, Subspace::full(F3, 4)).dim() == 4);
    const ComoduleAlgebra c = trivial_cleft(corpus::c2().algebra(), corpus::sw()).algebra;
    CHECK(tensor_over(c.algebra(), coinvariants(c)).dim() == 32);
    CHECK_THROWS_AS(tensor_over(a, span_of({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}})), InvariantViolation);
}

TEST_CASE("canonical map examples")
{
    const ComoduleAlgebra c2 = regular(corpus::c2());
    const CanonicalMapData full = canonical_map(c2, full_quotient(c2.hopf()));
    CHECK(full.bijective);
    // a basis permutation: every column has a single entry 1
    for (std::size_t j = 0; j < full.map.cols(); ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < full.map.rows(); ++i) ones += full.map.at(i, j).is_one();
        CHECK(ones == 1);
    }
    const ComoduleAlgebra sw = regular(corpus::sw());
    const CanonicalMapData k = canonical_map(sw, trivial_quotient(sw.hopf()));
    CHECK(k.bijective);
    // A ⊗_A A ≅ A and can is the identity under x ⊗ 1 <-> x
    for (std::size_t i = 0; i < 4; ++i) {
        const Matrix e = Matrix::unit_vector(F3, 4, i);
        CHECK(k.map * k.tensor.quotient.proj * kron(e, sw.hopf().unit()) == e);
    }
    CHECK(is_q_galois(sw, make_quotient(sw.hopf(), sw_x_ideal)));
    CHECK_FALSE(is_q_galois(corpus::dual_numbers(), full_quotient(corpus::c2())));
}

TEST_CASE("Q-Galois agrees with the rank oracle on the corpus")
{
    for (const auto& e : corpus::comodule_algebras()) {
        CAPTURE(e.name);
        const oracle::Comodule o(e.algebra);
        for (const auto& q : enumerate_ricos(e.algebra.hopf()).quotients)
            CHECK(is_q_galois(e.algebra, q) == o.q_galois(oracle::to_set(q.ideal)));
    }
}

TEST_CASE("explicit inverse of the canonical map")
{
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2(), corpus::c4()}) {
        const ComoduleAlgebra a = regular(h);
        for (const auto& k : enumerate_coideal_subalgebras(h).elements) {
            const Matrix inv = canonical_inverse_regular({h, k});
            const CanonicalMapData can = canonical_map(a, psi_regular({h, k}));
            CHECK(can.map * inv == Matrix::identity(F3, inv.cols()));
            CHECK(inv * can.map == Matrix::identity(F3, inv.rows()));
            // K ⊆ coinvariants of H under H/K⁺H
            CHECK(subspace_le(k, coinvariants_q(a, psi_regular({h, k}).ideal)));
        }
    }
    const HopfAlgebra c2 = corpus::c2();
    const Matrix full = canonical_inverse_regular({c2, Subspace::full(F3, 2)});
    const CanonicalMapData can = canonical_map(regular(c2), trivial_quotient(c2));
    CHECK(full.rows() == 2);
    CHECK(full.cols() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        const Matrix e = Matrix::unit_vector(F3, 2, i);
        CHECK(full * e == can.tensor.quotient.proj * kron(e, c2.unit()));
    }
}

TEST_CASE("closure report examples")
{
    const ClosureReport c2 = closure_report(regular(corpus::c2()));
    CHECK(c2.ok());
    CHECK(c2.quotients.size() == 2);
    CHECK(c2.closed_quotients == std::vector<bool>{true, true});
    CHECK(c2.q_galois == std::vector<bool>{true, true});

    // trivial coaction: φ is constant, so only the largest quotient Q = H is closed
    const ClosureReport triv = closure_report(trivial_coaction(corpus::c2().algebra(), corpus::sw()));
    CHECK(triv.ok());
    CHECK_FALSE(triv.can_h_surjective);
    for (std::size_t i = 0; i < triv.quotients.size(); ++i)
        CHECK(triv.closed_quotients[i] == triv.quotients.quotients[i].ideal.is_zero());

    const ClosureReport sw = closure_report(regular(corpus::sw()));
    CHECK(sw.ok());
    CHECK(sw.closed_quotients == sw.q_galois);
    std::set<Subspace> images;
    for (std::size_t i = 0; i < sw.quotients.size(); ++i)
        if (sw.closed_quotients[i]) images.insert(sw.phi[i]);
    CHECK(images.size() == static_cast<std::size_t>(std::count(sw.closed_quotients.begin(), sw.closed_quotients.end(), true)));
}

TEST_CASE("closure reports agree with the oracle")
{
    for (const auto& e : corpus::comodule_algebras()) {
        CAPTURE(e.name);
        const ClosureReport r = closure_report(e.algebra);
        CHECK(r.ok());
        const oracle::Comodule o(e.algebra);
        std::vector<oracle::VecSet> ricos;
        for (const auto& q : r.quotients.quotients) ricos.push_back(oracle::to_set(q.ideal));
        CHECK(r.closed_quotients == oracle::closed_quotients(o, ricos));
        std::vector<oracle::VecSet> coinv;
        for (const auto& i : ricos) coinv.push_back(o.coinvariants(i));
        for (std::size_t j = 0; j < r.subalgebras.size(); ++j) {
            const auto b = oracle::to_set(r.subalgebras.elements[j]);
            CHECK(oracle::to_set(r.quotients.quotients[r.psi[j]].ideal) == oracle::psi(b, ricos, coinv));
            // Galois property
            CHECK(subspace_le(r.subalgebras.elements[j], r.subalgebras.elements[r.phi_of_psi[j]]));
        }
        for (std::size_t i = 0; i < r.quotients.size(); ++i)
            CHECK(subspace_le(r.quotients.quotients[r.psi_of_phi[i]].ideal, r.quotients.quotients[i].ideal));
    }
}

TEST_CASE("closure is independent of the worker count")
{
    const ComoduleAlgebra a = trivial_cleft(corpus::c2().algebra(), corpus::sw()).algebra;
    const ClosureReport one = closure_report(a, {{6, 1}, true});
    const ClosureReport four = closure_report(a, {{6, 4}, true});
    CHECK(one.phi == four.phi);
    CHECK(one.psi == four.psi);
    CHECK(one.closed_quotients == four.closed_quotients);
    CHECK(one.closed_subalgebras == four.closed_subalgebras);
}

TEST_CASE("finite-dimensional bijection")
{
    const FdimCertificate sw = check_fdim_bijection(regular(corpus::sw()));
    CHECK(sw.holds);
    CHECK(sw.pairs.size() == enumerate_ricos(corpus::sw()).size());
    const FdimCertificate c2 = check_fdim_bijection(regular(corpus::c2()));
    CHECK(c2.holds);
    CHECK(c2.pairs.size() == 2);
    CHECK_THROWS_AS(check_fdim_bijection(trivial_coaction(corpus::c2().algebra(), corpus::sw())), PreconditionError);
}

TEST_CASE("coinvariants separate Q-Galois quotients")
{
    const ComoduleAlgebra a = regular(corpus::sw());
    const QuotientLattice q = enumerate_ricos(a.hopf());
    for (const auto& q1 : q.quotients) {
        CHECK(check_mono_on_qgalois(a, q1, q1));
        for (const auto& q2 : q.quotients) CHECK(check_mono_on_qgalois(a, q1, q2));
    }
    for (const auto& e : corpus::comodule_algebras()) {
        const QuotientLattice qe = enumerate_ricos(e.algebra.hopf());
        if (closure_report(e.algebra, {{}, false}).can_h_surjective) CHECK(scan_mono(e.algebra, qe).empty());
    }
    const ComoduleAlgebra graded = corpus::dual_numbers();
    const QuotientLattice qg = enumerate_ricos(graded.hopf());
    CHECK_THROWS_AS(check_mono_on_qgalois(graded, qg.quotients[0], qg.quotients[1]), PreconditionError);
}

TEST_CASE("normal subalgebras and ideals")
{
    const HopfAlgebra s3 = corpus::s3();
    CHECK(is_normal_subalgebra(s3, group_span(s3, {0})));
    CHECK(is_normal_subalgebra(s3, Subspace::full(F2, 6)));
    CHECK(is_normal_subalgebra(s3, group_span(s3, {0, 3, 4})));
    CHECK_FALSE(is_normal_subalgebra(s3, group_span(s3, {0, 1})));
    CHECK(is_normal_ideal(s3, s3.augmentation_ideal()));
    CHECK(is_normal_ideal(s3, Subspace(F2, 6)));
    CHECK_FALSE(is_normal_ideal(corpus::sw(), sw_x_ideal));

    for (const HopfAlgebra& h : {corpus::s3(), corpus::sw(), corpus::c2(), corpus::c4()}) {
        const NormalReport r = check_normal_restriction(h);
        CHECK(r.ok());
        CHECK(r.normal_subalgebras.size() == r.normal_ideals.size());
    }
    CHECK(check_normal_restriction(corpus::s3()).normal_subalgebras.size() == 3);
}

TEST_CASE("montgomery conditions")
{
    for (const HopfAlgebra& h : {corpus::c2(), corpus::one()}) {
        const MontgomeryReport r = check_montgomery_conditions(h);
        CHECK(r.cond1);
        CHECK(r.cond2);
        CHECK(r.bijection);
    }
    for (const HopfAlgebra& h : {corpus::sw(), corpus::s3(), corpus::c4()}) CHECK(check_montgomery_conditions(h).consistent());
}

TEST_CASE("codiagonal coinvariants")
{
    const ComoduleAlgebra triv = trivial_coaction(corpus::c2().algebra(), corpus::sw());
    CHECK(bigalois_space(triv).is_full());
    const ComoduleAlgebra c2 = regular(corpus::c2());
    CHECK(bigalois_space(c2) == span_of({{1, 0, 0, 0}, {0, 0, 0, 1}}));
    const auto over_scalars = bigalois_I(c2, span_of({{1, 0}}));
    REQUIRE(over_scalars);
    CHECK(over_scalars.value() == bigalois_space(c2));

    const ComoduleAlgebra sw = regular(corpus::sw());
    const auto over_coinv = bigalois_I(sw, coinvariants(sw));
    REQUIRE(over_coinv);
    CHECK(over_coinv->dim() == bigalois_space(sw).dim());
    CHECK_FALSE(bigalois_I(sw, sw_x_sub));
}
