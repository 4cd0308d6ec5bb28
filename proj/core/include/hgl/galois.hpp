#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hgl/quotient.hpp"

namespace hgl {

/// A^{co Q}. Throws PreconditionError when Q is a quotient of a different Hopf algebra.
Subspace phi(const ComoduleAlgebra& a, const GeneralisedQuotient& q);
/// phi for every element of an enumerated Quot_gen, by index.
std::vector<Subspace> phi_table(const ComoduleAlgebra& a, const QuotientLattice& quots, unsigned jobs = 1);

/// Join of all Q with B ⊆ A^{co Q}: the quotient by cogenerated_rico of the intersection of
/// their ideals. Refuses (PreconditionError) unless `quots` is exhaustive.
GeneralisedQuotient psi_enum(const ComoduleAlgebra& a, const Subspace& b, const QuotientLattice& quots);
/// Same, as an index into `quots`, reusing a precomputed phi table.
std::size_t psi_enum_index(const Subspace& b, const QuotientLattice& quots, const std::vector<Subspace>& phis);
/// H / K⁺H for a left coideal subalgebra K.
GeneralisedQuotient psi_regular(const CoidealSubalgebra& k);

struct CanonicalMapData {
    GeneralisedQuotient quotient;
    Subspace base;      // A^{co Q}
    TensorOver tensor;  // A ⊗_B A, relations inside A ⊗ A
    Matrix lifted;      // A ⊗ A -> A ⊗ Q
    Matrix map;         // A ⊗_B A -> A ⊗ Q
    bool bijective = false;
    bool surjective = false;
};

/// can_Q(x ⊗ y) = x y₍₀₎ ⊗ π(y₍₁₎). Throws InvariantViolation if it fails to descend to A ⊗_B A.
CanonicalMapData canonical_map(const ComoduleAlgebra& a, const GeneralisedQuotient& q);
bool is_q_galois(const ComoduleAlgebra& a, const GeneralisedQuotient& q);

/// For A = regular(H) and Q = psi_regular(K): the matrix A ⊗ Q -> A ⊗_K A of
/// x ⊗ π(y) -> x S(y₍₁₎) ⊗ y₍₂₎. Throws InvariantViolation unless it is well defined
/// and a two-sided inverse of can_Q.
Matrix canonical_inverse_regular(const CoidealSubalgebra& k);

struct ClosureOptions {
    EnumerationOptions enumeration;
    /// Without subalgebra enumeration only the quotient side of the report is filled.
    bool with_subalgebras = true;
};

struct ClosureReport {
    QuotientLattice quotients;
    FinitePoset subalgebras;  // Sub_alg(A / A^{co H}); empty without with_subalgebras
    std::vector<Subspace> phi;                // per quotient
    std::vector<std::size_t> psi_of_phi;      // ψφ, quotient -> quotient
    std::vector<std::size_t> phi_index;       // φ, quotient -> subalgebra (with subalgebras)
    std::vector<std::size_t> psi;             // ψ, subalgebra -> quotient
    std::vector<std::size_t> phi_of_psi;      // φψ, subalgebra -> subalgebra
    std::vector<bool> closed_quotients;
    std::vector<bool> closed_subalgebras;
    std::vector<bool> q_galois;
    /// can_H : A ⊗_{A^{co H}} A -> A ⊗ H is onto.
    bool can_h_surjective = false;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Tables of φ and ψ with their closures and the closed and Q-Galois flags. Failed checks of the
/// Galois connection go to `violations`. "Q-Galois implies closed" is only checked when can_H is onto.
ClosureReport closure_report(const ComoduleAlgebra& a, const ClosureOptions& opts = {});

struct FdimCertificate {
    bool holds = false;
    std::vector<std::pair<Subspace, Subspace>> pairs;  // (ideal of Q, A^{co Q})
    std::vector<std::string> failures;
};

/// Q -> A^{co Q} on all of Quot_gen(H) for an H-Galois A. Throws PreconditionError when
/// can_H is not bijective.
FdimCertificate check_fdim_bijection(const ComoduleAlgebra& a, const EnumerationOptions& opts = {});

/// A^{co Q₁} = A^{co Q₂} implies Q₁ = Q₂. Throws PreconditionError unless can_H is onto and
/// both quotients are Q-Galois.
bool check_mono_on_qgalois(const ComoduleAlgebra& a, const GeneralisedQuotient& q1, const GeneralisedQuotient& q2);
/// Index pairs of Q-Galois quotients with equal coinvariants and distinct ideals.
std::vector<std::pair<std::size_t, std::size_t>> scan_mono(const ComoduleAlgebra& a, const QuotientLattice& quots);

/// Sub-Hopf algebra stable under h₍₁₎ k S(h₍₂₎) and S(h₍₁₎) k h₍₂₎.
bool is_normal_subalgebra(const HopfAlgebra& h, const Subspace& k);
/// Hopf ideal stable under both adjoint coactions x₍₁₎S(x₍₃₎) ⊗ x₍₂₎ and x₍₂₎ ⊗ S(x₍₁₎)x₍₃₎.
bool is_normal_ideal(const HopfAlgebra& h, const Subspace& ideal);

struct NormalReport {
    std::vector<Subspace> normal_subalgebras;
    std::vector<Subspace> normal_ideals;
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// ψ sends normal coideal subalgebras to normal ideals and φ sends normal ideals back.
NormalReport check_normal_restriction(const HopfAlgebra& h, const EnumerationOptions& opts = {});

struct MontgomeryReport {
    bool cond1 = false;
    bool cond2 = false;
    bool bijection = false;
    bool consistent() const noexcept { return bijection == (cond1 && cond2); }
};

MontgomeryReport check_montgomery_conditions(const HopfAlgebra& h, const EnumerationOptions& opts = {});

/// a ⊗ b -> a₍₀₎ ⊗ b₍₀₎ ⊗ a₍₁₎ b₍₁₎ on A ⊗ A.
Matrix codiagonal_coaction(const ComoduleAlgebra& a);
/// (A ⊗ A)^{co H} under the codiagonal coaction.
Subspace bigalois_space(const ComoduleAlgebra& a);
/// (A ⊗_B A)^{co H} in the quotient coordinates of tensor_over(A, B); fails when the
/// codiagonal coaction does not descend to A ⊗_B A.
Result<Subspace> bigalois_I(const ComoduleAlgebra& a, const Subspace& b);

}  // namespace hgl
