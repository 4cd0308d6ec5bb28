#pragma once

#include "hgl/hopf.hpp"

namespace hgl {

/// Right H-comodule algebra: δ : A -> A ⊗ H, a matrix (m·n) x m.
class ComoduleAlgebra {
public:
    ComoduleAlgebra() = default;
    /// Shape checks only; see validate_comodule_algebra for the axioms.
    ComoduleAlgebra(HopfAlgebra hopf, AlgebraData algebra, Matrix coaction);

    const HopfAlgebra& hopf() const noexcept { return hopf_; }
    const AlgebraData& algebra() const noexcept { return algebra_; }
    const Matrix& coaction() const noexcept { return coaction_; }
    const Field& field() const noexcept { return algebra_.field; }
    std::size_t dim() const noexcept { return algebra_.dim; }
    /// A^{co H}, computed once at construction.
    const Subspace& cached_coinvariants() const noexcept { return coinvariants_; }
    /// The linear map a -> δ(a) - a ⊗ 1.
    Matrix coaction_defect() const;

private:
    HopfAlgebra hopf_;
    AlgebraData algebra_;
    Matrix coaction_;
    Subspace coinvariants_;
};

ValidationReport validate_comodule_algebra(const ComoduleAlgebra& a);

/// A = H with δ = Δ.
ComoduleAlgebra regular(const HopfAlgebra& h);
/// δ(a) = a ⊗ 1.
ComoduleAlgebra trivial_coaction(const AlgebraData& a, const HopfAlgebra& h);

/// {a : δ(a) = a ⊗ 1}; throws InvariantViolation if the result is not a unital subalgebra.
Subspace coinvariants(const ComoduleAlgebra& a);
/// {a : δ(a) - a ⊗ 1 ∈ A ⊗ I}, the coinvariants of the quotient H/I.
Subspace coinvariants_q(const ComoduleAlgebra& a, const Subspace& ideal);

/// Left H-module algebra: action h ⊗ a -> h·a as a matrix m x (n·m).
struct ModuleAlgebra {
    HopfAlgebra hopf;
    AlgebraData algebra;
    Matrix action;

    ModuleAlgebra(HopfAlgebra hopf, AlgebraData algebra, Matrix action);

    /// Matrix of a -> h·a for a vector h of H.
    Matrix acting(const Matrix& h) const;
};

ValidationReport validate_module_algebra(const ModuleAlgebra& m);

/// The H*-module algebra with f·a = (id ⊗ f)(δ(a)); the acting Hopf algebra is dual(H).
ModuleAlgebra to_module_algebra(const ComoduleAlgebra& a);
/// {a : h·a = ε(h) a for all h}.
Subspace invariants(const ModuleAlgebra& m);

struct HomCanonicalMap {
    TensorOver tensor;
    Matrix map;  // dim(A ⊗_B A) -> Hom(H, A) ≅ A ⊗ H^*, flattened as i * n + j
    bool bijective = false;
};

/// a1 ⊗_B a2 -> (h -> a1 (h·a2)). Throws InvariantViolation when the map does not descend to A ⊗_B A.
HomCanonicalMap hom_canonical(const ModuleAlgebra& m, const Subspace& base);

struct CleftData {
    ComoduleAlgebra algebra;
    LinearHom gamma;
    LinearHom gamma_inverse;
};

/// A = B ⊗ H with componentwise product, δ = id_B ⊗ Δ and γ(h) = 1 ⊗ h.
CleftData trivial_cleft(const AlgebraData& b, const HopfAlgebra& h);
/// Checks that γ is a comodule map with a convolution inverse.
Result<CleftData> verify_cleft(const ComoduleAlgebra& a, const Matrix& gamma);

}  // namespace hgl
