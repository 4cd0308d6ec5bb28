#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace hgl;
using corpus::F3;

namespace {

Subspace span_of(std::initializer_list<std::initializer_list<long>> rows) { return Subspace::span(Matrix::from_ints(F3, rows)); }

std::set<oracle::VecSet> as_sets(const std::vector<Subspace>& v)
{
    std::set<oracle::VecSet> out;
    for (const auto& s : v) out.insert(oracle::to_set(s));
    return out;
}

std::vector<Subspace> ideals(const QuotientLattice& q)
{
    std::vector<Subspace> out;
    for (const auto& g : q.quotients) out.push_back(g.ideal);
    return out;
}

/// span{n g - g : n ∈ N, g ∈ G} for a subgroup N given by element indices.
Subspace subgroup_ideal(const HopfAlgebra& h, const CayleyTable& t, const std::vector<std::size_t>& n)
{
    std::vector<Matrix> rows;
    for (std::size_t x : n)
        for (std::size_t g = 0; g < t.size(); ++g)
            rows.push_back((h.basis_vector(t[x][g]) - h.basis_vector(g)).transpose());
    return Subspace::span(Matrix::vstack(rows));
}

Subspace subgroup_span(const HopfAlgebra& h, const std::vector<std::size_t>& n)
{
    std::vector<Matrix> rows;
    for (std::size_t x : n) rows.push_back(h.basis_vector(x).transpose());
    return Subspace::span(Matrix::vstack(rows));
}

}  // namespace

TEST_CASE("validate_rico examples")
{
    const HopfAlgebra h = corpus::sw();
    const auto zero = validate_rico(h, Subspace(F3, 4));
    REQUIRE(zero);
    CHECK(zero->q_dim == 4);
    const auto top = validate_rico(h, h.augmentation_ideal());
    REQUIRE(top);
    CHECK(top->q_dim == 1);

    const auto q = validate_rico(h, span_of({{0, 0, 1, 0}, {0, 0, 0, 1}}));
    REQUIRE(q);
    CHECK(q->q_dim == 2);
    // H/I ≅ GF(3)[C₂]: both basis vectors of the quotient are group-like
    for (std::size_t i = 0; i < 2; ++i) {
        const Matrix e = Matrix::unit_vector(F3, 2, i);
        CHECK(q->comult * e == kron(e, e));
        CHECK(q->counit * e == Matrix::identity(F3, 1));
    }
    // π(1) is group-like
    const Matrix one = q->proj() * h.unit();
    CHECK(q->comult * one == kron(one, one));

    const auto counit = validate_rico(h, span_of({{0, 1, 0, 0}}));
    CHECK_FALSE(counit);
    CHECK(counit.reason().rfind("counit:", 0) == 0);
    const auto right = validate_rico(h, span_of({{0, 0, 1, 0}}));
    CHECK_FALSE(right);
    CHECK(right.reason().rfind("right-ideal:", 0) == 0);
    // in GF(3)[C₄] = GF(3)[t]/(t⁴ - 1) the ideal spanned by (t - 1)(t² + 1) is not a coideal
    const auto coideal = validate_rico(corpus::c4(), span_of({{2, 1, 2, 1}}));
    CHECK_FALSE(coideal);
    CHECK(coideal.reason().rfind("coideal:", 0) == 0);
    CHECK_THROWS_AS(make_quotient(h, span_of({{0, 1, 0, 0}})), InvariantViolation);
    CHECK(is_rico(h, span_of({{0, 0, 1, 0}, {0, 0, 0, 1}})));
}

TEST_CASE("coideal subalgebra validators")
{
    const HopfAlgebra h = corpus::sw();
    CHECK(validate_coideal_subalgebra(h, span_of({{1, 0, 0, 0}})));
    CHECK(validate_coideal_subalgebra(h, Subspace::full(F3, 4)));
    CHECK(validate_coideal_subalgebra(h, span_of({{1, 0, 0, 0}, {0, 0, 1, 0}})));

    const auto unit = validate_coideal_subalgebra(h, span_of({{0, 1, 0, 0}}));
    CHECK(unit.reason().rfind("unit:", 0) == 0);
    const auto mult = validate_coideal_subalgebra(h, span_of({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}));
    CHECK_FALSE(mult);
    // span{1, gx}: Δ(gx) = gx ⊗ g + 1 ⊗ gx is not in H ⊗ K
    const auto left = validate_coideal_subalgebra(h, span_of({{1, 0, 0, 0}, {0, 0, 0, 1}}));
    CHECK_FALSE(left);
    CHECK(left.reason().rfind("left coideal:", 0) == 0);
    CHECK(validate_right_coideal_subalgebra(h, span_of({{1, 0, 0, 0}, {0, 0, 0, 1}})));
}

TEST_CASE("validator symmetry under coopposite")
{
    const HopfAlgebra h = corpus::sw(), cop = coopposite(h);
    for (const auto& k : enumerate_subspaces(F3, 4, 6))
        CHECK(bool(validate_coideal_subalgebra(h, k)) == bool(validate_right_coideal_subalgebra(cop, k)));
}

TEST_CASE("join and meet examples")
{
    const HopfAlgebra h = corpus::sw();
    const GeneralisedQuotient bottom_ideal = full_quotient(h), top_ideal = trivial_quotient(h);
    const GeneralisedQuotient q1 = make_quotient(h, span_of({{0, 0, 1, 0}, {0, 0, 0, 1}}));
    const GeneralisedQuotient q2 = make_quotient(h, span_of({{1, 2, 0, 0}, {0, 0, 1, 2}}));
    CHECK(join_q(q1, bottom_ideal).ideal == q1.ideal);
    CHECK(join_q(q1, top_ideal).ideal == top_ideal.ideal);
    CHECK(join_q(q1, q2).ideal == h.augmentation_ideal());
    CHECK(meet_q(q1, top_ideal).ideal == q1.ideal);
    CHECK(meet_q(q1, bottom_ideal).ideal.is_zero());
    CHECK(meet_q(q1, q2).ideal.is_zero());
}

TEST_CASE("cogenerated rico examples")
{
    const HopfAlgebra h = corpus::sw();
    CHECK(cogenerated_rico(h, Subspace::full(F3, 4)) == h.augmentation_ideal());
    const HopfAlgebra c2 = corpus::c2();
    CHECK(cogenerated_rico(c2, span_of({{0, 1}})).is_zero());
    CHECK(cogenerated_rico(c2, span_of({{2, 1}})) == span_of({{2, 1}}));
}

TEST_CASE("cogenerated rico is the largest rico inside every subspace")
{
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2(), corpus::c4()}) {
        const oracle::Hopf o(h);
        const auto ricos = o.ricos();
        for (const auto& y : enumerate_subspaces(F3, h.dim(), 6)) {
            const Subspace c = cogenerated_rico(h, y);
            CHECK(subspace_le(c, subspace_intersect(y, h.augmentation_ideal())));
            CHECK(cogenerated_rico(h, c) == c);
            CHECK(is_rico(h, c));
            CHECK(oracle::to_set(c) == oracle::largest_rico_inside(oracle::to_set(y), ricos));
        }
    }
}

TEST_CASE("enumeration agrees with the brute-force oracle")
{
    for (const HopfAlgebra& h : {corpus::one(), corpus::c2(), corpus::c3(), corpus::c4(), corpus::sw(), corpus::s3()}) {
        const oracle::Hopf o(h);
        const QuotientLattice q = enumerate_ricos(h);
        const auto expected_q = o.ricos();
        CHECK(q.size() == expected_q.size());
        CHECK(as_sets(ideals(q)) == std::set<oracle::VecSet>(expected_q.begin(), expected_q.end()));
        CHECK(q.poset.exhaustive);

        const FinitePoset k = enumerate_coideal_subalgebras(h);
        const auto expected_k = o.left_coideal_subalgebras();
        CHECK(k.size() == expected_k.size());
        CHECK(as_sets(k.elements) == std::set<oracle::VecSet>(expected_k.begin(), expected_k.end()));

        CHECK(q.index_of(Subspace(h.field(), h.dim())));
        CHECK(q.index_of(h.augmentation_ideal()));
        CHECK(k.index_of(Subspace::span(h.unit().transpose())));
        CHECK(k.index_of(Subspace::full(h.field(), h.dim())));
    }
    CHECK(enumerate_ricos(corpus::c2()).size() == 2);
    CHECK(enumerate_ricos(corpus::c2()).quotients[1].ideal == span_of({{1, 2}}));
    CHECK(enumerate_coideal_subalgebras(corpus::c2()).size() == 2);
    CHECK(enumerate_ricos(corpus::one()).size() == 1);
    CHECK(enumerate_ricos(corpus::sw()).size() == 6);
}

TEST_CASE("enumerated order and canonical indices")
{
    const QuotientLattice q = enumerate_ricos(corpus::sw());
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            CHECK(q.poset.le(i, j) == subspace_le(q.quotients[j].ideal, q.quotients[i].ideal));
    for (std::size_t i = 1; i < q.size(); ++i) CHECK(compare(q.quotients[i - 1].ideal, q.quotients[i].ideal) < 0);
    const QuotientLattice parallel = enumerate_ricos(corpus::sw(), {6, 4});
    CHECK(ideals(parallel) == ideals(q));
}

TEST_CASE("subalgebras over a base")
{
    const ComoduleAlgebra a = regular(corpus::sw());
    const FinitePoset p = enumerate_subalgebras_over(a.algebra(), coinvariants(a));
    const oracle::Comodule o(a);
    const auto expected = o.subalgebras_over(oracle::to_set(coinvariants(a)));
    CHECK(p.size() == expected.size());
    CHECK(as_sets(p.elements) == std::set<oracle::VecSet>(expected.begin(), expected.end()));
}

TEST_CASE("enumeration refuses rationals and oversized spaces")
{
    CHECK_THROWS_AS(enumerate_ricos(sweedler(Field::rational())), EnumerationUnsupported);
    CHECK_THROWS_AS(enumerate_ricos(corpus::sw(), {2, 1}), EnumerationUnsupported);
    CHECK_THROWS_AS(enumerate_coideal_subalgebras(corpus::sw(), {2, 1}), EnumerationUnsupported);
}

TEST_CASE("lattice laws on generalised quotients")
{
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2()}) {
        const QuotientLattice q = enumerate_ricos(h);
        const oracle::Hopf o(h);
        const auto ricos = o.ricos();
        for (const auto& a : q.quotients)
            for (const auto& b : q.quotients) {
                CHECK(join_q(a, b).ideal == join_q(b, a).ideal);
                CHECK(meet_q(a, b).ideal == meet_q(b, a).ideal);
                CHECK(join_q(a, meet_q(a, b)).ideal == a.ideal);
                CHECK(meet_q(a, join_q(a, b)).ideal == a.ideal);
                const auto both = oracle::intersect(oracle::to_set(a.ideal), oracle::to_set(b.ideal));
                CHECK(oracle::to_set(meet_q(a, b).ideal) == oracle::largest_rico_inside(both, ricos));
                for (const auto& c : q.quotients) {
                    CHECK(join_q(join_q(a, b), c).ideal == join_q(a, join_q(b, c)).ideal);
                    CHECK(meet_q(meet_q(a, b), c).ideal == meet_q(a, meet_q(b, c)).ideal);
                }
            }
        for (const auto& a : q.quotients) {
            CHECK(join_q(a, a).ideal == a.ideal);
            CHECK(meet_q(a, a).ideal == a.ideal);
        }
    }
}

TEST_CASE("poset reports")
{
    const Subspace a = span_of({{1, 0}}), b = span_of({{0, 1}});
    const FinitePoset chain = inclusion_poset({Subspace(F3, 2), a}, false);
    const auto c = poset_report(chain);
    CHECK(c.is_lattice);
    CHECK(c.hasse.size() == 1);

    const FinitePoset anti = inclusion_poset({a, b}, false);
    const auto r = poset_report(anti);
    CHECK_FALSE(r.is_lattice);
    CHECK_FALSE(r.top);
    CHECK_FALSE(r.bottom);

    FinitePoset broken = chain;
    broken.leq[1][0] = 1;
    CHECK_THROWS_AS(poset_report(broken), PosetError);

    const auto q = poset_report(enumerate_ricos(corpus::sw()));
    CHECK(q.is_lattice);
    REQUIRE(q.operations_agree);
    CHECK(*q.operations_agree);
    CHECK(q.hasse.size() == 8);
}

TEST_CASE("subgroup ideals of group algebras")
{
    struct Case {
        CayleyTable table;
        std::vector<std::vector<std::size_t>> subgroups;
    };
    const std::vector<Case> cases = {
        {cyclic_group_table(2), {{0}, {0, 1}}},
        {cyclic_group_table(3), {{0}, {0, 1, 2}}},
        {cyclic_group_table(4), {{0}, {0, 2}, {0, 1, 2, 3}}},
    };
    for (const auto& c : cases) {
        const HopfAlgebra h = group_algebra(c.table, F3);
        const QuotientLattice q = enumerate_ricos(h);
        const ComoduleAlgebra reg = regular(h);
        for (const auto& n : c.subgroups) {
            const Subspace ideal = subgroup_ideal(h, c.table, n);
            CHECK(q.index_of(ideal));
            CHECK(coinvariants_q(reg, ideal) == subgroup_span(h, n));
        }
    }
}
