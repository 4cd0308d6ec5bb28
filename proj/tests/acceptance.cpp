// One PASS/FAIL line per acceptance criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <tuple>

#include "commands.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace hgl;
using corpus::F3;

namespace {

/// Collects failures; a criterion passes when none were recorded.
struct Tally {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 when untimed
    std::function<void(Tally&)> body;
};

const std::string data = HGL_DATA_DIR;

std::vector<oracle::VecSet> ideals_of(const QuotientLattice& q)
{
    std::vector<oracle::VecSet> out;
    for (const auto& x : q.quotients) out.push_back(oracle::to_set(x.ideal));
    return out;
}

std::vector<oracle::VecSet> coinvariants_of(const oracle::Comodule& o, const std::vector<oracle::VecSet>& ricos)
{
    std::vector<oracle::VecSet> out;
    for (const auto& i : ricos) out.push_back(o.coinvariants(i));
    return out;
}

std::vector<ComoduleAlgebra> over(const HopfAlgebra& h)
{
    std::vector<ComoduleAlgebra> out;
    for (auto& e : corpus::comodule_algebras())
        if (e.algebra.hopf() == h) out.push_back(e.algebra);
    return out;
}

void axiom_suite(Tally& t)
{
    const Field q = Field::rational(), f7 = Field::prime(7);
    const std::vector<std::pair<std::string, HopfAlgebra>> hs = {
        {"S3/GF(2)", corpus::s3()},
        {"sweedler/Q", sweedler(q)},
        {"sweedler/GF(3)", corpus::sw()},
        {"taft(3,2)/GF(7)", taft(3, Scalar(f7, 2), f7)}};
    for (const auto& [name, h] : hs)
        for (const auto& [variant, v] : std::vector<std::pair<std::string, HopfAlgebra>>{
                 {"", h}, {" dual", dual(h)}, {" opposite", opposite(h)}, {" dual opposite", opposite(dual(h))}}) {
            const auto r = validate_hopf(v);
            t.expect(r.checks.size() == 10 && r.all_passed(), name + variant + ": validate_hopf");
            t.expect(oracle::failing_axioms(v).empty(), name + variant + ": element-level axioms");
        }

    enum Part { mult, unit, comult, counit, antipode };
    const HopfAlgebra h = corpus::sw();
    const std::vector<std::tuple<Part, std::size_t, std::size_t>> cases = {
        {mult, 0, 1 * 4 + 1},   {mult, 1, 2 * 4 + 2}, {mult, 3, 2 * 4 + 1}, {unit, 1, 0},  {comult, 1 * 4 + 1, 1},
        {comult, 0, 2},         {counit, 0, 1},       {counit, 0, 2},       {antipode, 1, 1}, {antipode, 3, 2}};
    for (const auto& [part, r, c] : cases) {
        Matrix m = h.mult(), u = h.unit(), d = h.comult(), e = h.counit(), s = h.antipode();
        Matrix* target = part == mult ? &m : part == unit ? &u : part == comult ? &d : part == counit ? &e : &s;
        target->add_to(r, c, Scalar(F3, 1));
        const HopfAlgebra bad(AlgebraData(F3, 4, m, u, h.labels()), CoalgebraData(F3, 4, d, e), s);
        const std::string where = "perturbation (" + std::to_string(part) + "," + std::to_string(r) + "," +
                                  std::to_string(c) + ")";
        t.expect(!validate_hopf(bad).all_passed(), where + " passes validate_hopf");
        t.expect(!oracle::failing_axioms(bad).empty(), where + " passes the element-level check");
    }
}

void galois_property(Tally& t)
{
    const ComoduleAlgebra a = regular(corpus::sw());
    const ClosureReport r = closure_report(a);
    t.expect(r.ok(), "closure report lists violations");
    const oracle::Comodule o(a);
    const auto ricos = o.hopf.ricos();
    const auto coinv = coinvariants_of(o, ricos);
    auto lib_ideals = ideals_of(r.quotients), oracle_ideals = ricos;
    std::sort(lib_ideals.begin(), lib_ideals.end());
    std::sort(oracle_ideals.begin(), oracle_ideals.end());
    t.expect(lib_ideals == oracle_ideals, "enumerated quotients differ from the oracle");

    std::vector<oracle::VecSet> subs;
    for (const auto& b : r.subalgebras.elements) subs.push_back(oracle::to_set(b));
    auto expected = o.subalgebras_over(o.coinvariants({oracle::Vec(4, 0)}));
    std::sort(expected.begin(), expected.end());
    auto got = subs;
    std::sort(got.begin(), got.end());
    t.expect(got == expected, "enumerated subalgebras differ from the oracle");

    // B ⊆ φψ(B), with ψ and φ both evaluated by the oracle and by the library
    for (std::size_t j = 0; j < subs.size(); ++j) {
        const oracle::VecSet psi = oracle::psi(subs[j], ricos, coinv);
        t.expect(oracle::to_set(r.quotients.quotients[r.psi[j]].ideal) == psi, "ψ differs from the oracle");
        t.expect(oracle::subset(subs[j], o.coinvariants(psi)), "B ⊄ φψ(B) (oracle)");
        t.expect(subspace_le(r.subalgebras.elements[j], r.subalgebras.elements[r.phi_of_psi[j]]), "B ⊄ φψ(B)");
    }
    // Q ⪯ ψφ(Q): the ideal of ψφ(Q) lies inside I_Q
    for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        const auto& q = r.quotients.quotients[i];
        const oracle::VecSet back = oracle::psi(o.coinvariants(oracle::to_set(q.ideal)), ricos, coinv);
        t.expect(oracle::subset(back, oracle::to_set(q.ideal)), "Q ⋠ ψφ(Q) (oracle)");
        t.expect(subspace_le(r.quotients.quotients[r.psi_of_phi[i]].ideal, q.ideal), "Q ⋠ ψφ(Q)");
    }
}

void suprema_reversal(Tally& t)
{
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2()}) {
        const QuotientLattice quots = enumerate_ricos(h);
        const oracle::Hopf oh(h);
        const auto ricos = oh.ricos();
        const auto algebras = over(h);
        t.expect(algebras.size() >= 2, "too few comodule algebras in the corpus");
        for (const ComoduleAlgebra& a : algebras) {
            const oracle::Comodule o(a);
            for (const auto& q1 : quots.quotients)
                for (const auto& q2 : quots.quotients) {
                    const Subspace both = subspace_intersect(coinvariants_q(a, q1.ideal), coinvariants_q(a, q2.ideal));
                    const GeneralisedQuotient sup = meet_q(q1, q2);
                    t.expect(coinvariants_q(a, sup.ideal) == both, "A^{co Q1 ∨ Q2} ≠ A^{co Q1} ∩ A^{co Q2}");
                    t.expect(coinvariants_q(a, subspace_intersect(q1.ideal, q2.ideal)) == both,
                             "coinvariants of I1 ∩ I2 differ from the intersection");
                    const auto i1 = oracle::to_set(q1.ideal), i2 = oracle::to_set(q2.ideal);
                    const auto sup_ideal = oracle::largest_rico_inside(oracle::intersect(i1, i2), ricos);
                    t.expect(o.coinvariants(sup_ideal) == oracle::intersect(o.coinvariants(i1), o.coinvariants(i2)),
                             "oracle suprema reversal");
                    t.expect(oracle::to_set(both) == o.coinvariants(sup_ideal), "library and oracle disagree");
                }
        }
    }
}

void formula_agreement(Tally& t)
{
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2()}) {
        const ComoduleAlgebra a = regular(h);
        const QuotientLattice q = enumerate_ricos(h);
        const oracle::Hopf o(h);
        const FinitePoset subs = enumerate_coideal_subalgebras(h);
        std::vector<oracle::VecSet> got;
        for (const auto& k : subs.elements) got.push_back(oracle::to_set(k));
        auto want = o.left_coideal_subalgebras();
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        t.expect(got == want, "coideal subalgebras differ from the oracle");
        for (const auto& k : subs.elements) {
            const GeneralisedQuotient r = psi_regular({h, k});
            t.expect(psi_enum(a, k, q).ideal == r.ideal, "psi_enum ≠ psi_regular");
            t.expect(oracle::to_set(r.ideal) == o.k_plus_h(oracle::to_set(k)), "psi_regular ≠ K⁺H (oracle)");
        }
    }
}

void closed_iff_qgalois(Tally& t)
{
    std::vector<std::pair<std::string, ComoduleAlgebra>> cases;
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2(), corpus::s3()}) cases.emplace_back("regular", regular(h));
    cases.emplace_back("C2 ⊗ sweedler", trivial_cleft(corpus::c2().algebra(), corpus::sw()).algebra);
    for (const auto& [name, a] : cases) {
        const ClosureReport r = closure_report(a, {{}, false});
        t.expect(r.ok(), name + ": closure report lists violations");
        t.expect(r.can_h_surjective, name + ": can_H not surjective");
        const oracle::Comodule o(a);
        const auto ricos = ideals_of(r.quotients);
        const auto closed = oracle::closed_quotients(o, ricos);
        for (std::size_t i = 0; i < ricos.size(); ++i) {
            const bool galois = o.q_galois(ricos[i]);
            t.expect(r.closed_quotients[i] == closed[i], name + ": closedness differs from the oracle");
            t.expect(r.q_galois[i] == galois, name + ": Q-Galois differs from the oracle");
            t.expect(closed[i] == galois, name + ": closed ⇎ Q-Galois");
        }
    }
}

void finite_bijection(Tally& t)
{
    for (const HopfAlgebra& h : {corpus::sw(), corpus::c2(), corpus::s3()}) {
        const ComoduleAlgebra a = regular(h);
        const FdimCertificate c = check_fdim_bijection(a);
        const auto ricos = oracle::Hopf(h).ricos();
        t.expect(c.holds, "check_fdim_bijection fails");
        t.expect(c.pairs.size() == ricos.size(), "certificate size ≠ |Quot_gen(H)|");
        // injectivity and correctness of every pair, by the oracle
        const oracle::Comodule o(a);
        std::set<oracle::VecSet> images;
        for (const auto& [ideal, co] : c.pairs) {
            t.expect(oracle::to_set(co) == o.coinvariants(oracle::to_set(ideal)), "certificate pair is wrong");
            images.insert(oracle::to_set(co));
        }
        t.expect(images.size() == ricos.size(), "Q ↦ A^{co Q} not injective");
    }
    t.expect(oracle::Hopf(corpus::c2()).ricos().size() == 2, "|Quot_gen(GF(3)[C2])| ≠ 2");
}

void canonical_inverse(Tally& t)
{
    const HopfAlgebra h = corpus::sw();
    const ComoduleAlgebra a = regular(h);
    const oracle::Comodule o(a);
    for (const auto& k : enumerate_coideal_subalgebras(h).elements) {
        const Matrix inv = canonical_inverse_regular({h, k});
        const GeneralisedQuotient q = psi_regular({h, k});
        const CanonicalMapData can = canonical_map(a, q);
        t.expect(can.map * inv == Matrix::identity(F3, inv.cols()), "can ∘ can⁻¹ ≠ id");
        t.expect(inv * can.map == Matrix::identity(F3, inv.rows()), "can⁻¹ ∘ can ≠ id");
        t.expect(subspace_le(k, coinvariants_q(a, q.ideal)), "K ⊄ coinvariants of H/K⁺H");
        t.expect(oracle::subset(oracle::to_set(k), o.coinvariants(oracle::to_set(q.ideal))),
                 "K ⊄ coinvariants of H/K⁺H (oracle)");
    }
}

void mono(Tally& t)
{
    for (const auto& e : corpus::comodule_algebras()) {
        const QuotientLattice q = enumerate_ricos(e.algebra.hopf());
        if (closure_report(e.algebra, {{}, false}).can_h_surjective)
            t.expect(scan_mono(e.algebra, q).empty(), e.name + ": scan_mono found a pair");
        // oracle scan over every Q-Galois pair, whatever the hypotheses
        const oracle::Comodule o(e.algebra);
        const auto ricos = ideals_of(q);
        std::vector<std::size_t> galois;
        for (std::size_t i = 0; i < ricos.size(); ++i)
            if (o.q_galois(ricos[i])) galois.push_back(i);
        for (std::size_t x : galois)
            for (std::size_t y : galois)
                if (x < y)
                    t.expect(o.coinvariants(ricos[x]) != o.coinvariants(ricos[y]),
                             e.name + ": distinct Q-Galois ideals with equal coinvariants");
    }
}

void chase_sweedler(Tally& t)
{
    for (const auto& e : corpus::comodule_algebras()) {
        const ModuleAlgebra m = to_module_algebra(e.algebra);
        const oracle::Comodule o(e.algebra);
        const Subspace b = coinvariants(e.algebra);
        t.expect(invariants(m) == b, e.name + ": invariants ≠ coinvariants");
        t.expect(o.invariants_of_dual_action() == oracle::to_set(b), e.name + ": oracle invariants differ");
        const bool galois = is_q_galois(e.algebra, full_quotient(e.algebra.hopf()));
        t.expect(hom_canonical(m, b).bijective == galois, e.name + ": Hom canonical map ≠ is_q_galois");
        t.expect(o.q_galois({oracle::Vec(o.n(), 0)}) == galois, e.name + ": oracle H-Galois differs");
    }
}

void lattice_laws(Tally& t)
{
    const HopfAlgebra h = corpus::sw();
    const QuotientLattice q = enumerate_ricos(h);
    const auto ricos = oracle::Hopf(h).ricos();
    for (const auto& a : q.quotients) {
        t.expect(join_q(a, a).ideal == a.ideal, "join not idempotent");
        t.expect(meet_q(a, a).ideal == a.ideal, "meet not idempotent");
        for (const auto& b : q.quotients) {
            t.expect(join_q(a, b).ideal == join_q(b, a).ideal, "join not commutative");
            t.expect(meet_q(a, b).ideal == meet_q(b, a).ideal, "meet not commutative");
            t.expect(join_q(a, meet_q(a, b)).ideal == a.ideal, "absorption fails");
            t.expect(meet_q(a, join_q(a, b)).ideal == a.ideal, "absorption fails");
            const auto both = oracle::intersect(oracle::to_set(a.ideal), oracle::to_set(b.ideal));
            t.expect(oracle::to_set(meet_q(a, b).ideal) == oracle::largest_rico_inside(both, ricos),
                     "meet differs from the largest rico inside the intersection");
            for (const auto& c : q.quotients) {
                t.expect(join_q(join_q(a, b), c).ideal == join_q(a, join_q(b, c)).ideal, "join not associative");
                t.expect(meet_q(meet_q(a, b), c).ideal == meet_q(a, meet_q(b, c)).ideal, "meet not associative");
            }
        }
    }
}

void montgomery(Tally& t)
{
    const std::vector<std::pair<std::string, HopfAlgebra>> hs = {
        {"C2", corpus::c2()}, {"C3", corpus::c3()}, {"C4", corpus::c4()},
        {"sweedler", corpus::sw()}, {"S3", corpus::s3()}, {"k", corpus::one()}};
    for (const auto& [name, h] : hs) {
        const MontgomeryReport r = check_montgomery_conditions(h);
        t.expect(r.consistent(), name + ": bijection ⇎ cond1 ∧ cond2");
        // the three flags recomputed by brute force
        const oracle::Comodule o(regular(h));
        const auto ricos = o.hopf.ricos();
        const auto subs = o.hopf.left_coideal_subalgebras();
        bool cond1 = true, cond2 = true, bijection = true;
        for (const auto& i : ricos) {
            cond1 = cond1 && o.q_galois(i);
            bijection = bijection && o.hopf.k_plus_h(o.coinvariants(i)) == i;
        }
        for (const auto& k : subs) {
            const auto closure = o.coinvariants(o.hopf.k_plus_h(k));
            cond2 = cond2 && oracle::subset(closure, k);
            bijection = bijection && closure == k;
        }
        t.expect(r.cond1 == cond1 && r.cond2 == cond2 && r.bijection == bijection, name + ": flags differ from the oracle");
        if (name == "C2") t.expect(r.cond1 && r.cond2 && r.bijection, "C2 is not (true, true, true)");
    }
}

void determinism(Tally& t)
{
    const std::vector<std::vector<std::string>> runs = {
        {"closure", data + "/sweedler_gf3.hopf", "--regular"},
        {"closure", data + "/sweedler_gf3.hopf", "--cleft", data + "/c2_gf3.alg"},
        {"closure", data + "/s3_gf2.hopf", "--regular"},
        {"closure", data + "/dual_numbers_c2.comod"}};
    for (const auto& args : runs) {
        std::string outputs[2];
        int codes[2];
        for (int k = 0; k < 2; ++k) {
            auto full = args;
            full.insert(full.end(), {"--jobs", k == 0 ? "1" : "4"});
            std::ostringstream out, err;
            codes[k] = cli::run(full, out, err);
            outputs[k] = out.str();
        }
        t.expect(codes[0] == 0 && codes[1] == 0, args[1] + ": nonzero exit");
        t.expect(!outputs[0].empty() && outputs[0] == outputs[1], args[1] + ": output depends on --jobs");
    }
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "axiom suite", 5, axiom_suite},
        {2, "Galois property", 60, galois_property},
        {3, "suprema reversal", 0, suprema_reversal},
        {4, "psi_enum = psi_regular", 0, formula_agreement},
        {5, "closed iff Q-Galois", 120, closed_iff_qgalois},
        {6, "finite-dimensional bijection", 0, finite_bijection},
        {7, "explicit canonical inverse", 0, canonical_inverse},
        {8, "coinvariants separate Q-Galois quotients", 0, mono},
        {9, "invariants and Hom canonical map", 0, chase_sweedler},
        {10, "lattice laws", 0, lattice_laws},
        {11, "Montgomery conditions", 0, montgomery},
        {12, "closure determinism across --jobs", 0, determinism},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(t);
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            t.failures.push_back("runtime " + std::to_string(secs) + " s over the limit");
        const bool ok = t.failures.empty();
        all = all && ok;
        char line[160];
        if (c.limit_seconds > 0)
            std::snprintf(line, sizeof line, "criterion %2d  %-42s %s  (%.2f s, limit %.0f s)", c.number, c.title.c_str(),
                          ok ? "PASS" : "FAIL", secs, c.limit_seconds);
        else
            std::snprintf(line, sizeof line, "criterion %2d  %-42s %s  (%.2f s)", c.number, c.title.c_str(),
                          ok ? "PASS" : "FAIL", secs);
        std::cout << line << '\n';
        for (std::size_t i = 0; i < std::min<std::size_t>(t.failures.size(), 5); ++i)
            std::cout << "    " << t.failures[i] << '\n';
    }
    return all ? 0 : 1;
}
