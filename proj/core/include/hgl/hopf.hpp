#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hgl/error.hpp"
#include "hgl/matrix.hpp"
#include "hgl/subspace.hpp"

namespace hgl {

/// Finite-dimensional unital algebra given by structure constants.
struct AlgebraData {
    Field field;
    std::size_t dim = 0;
    Matrix mult;  // dim x dim^2, column i*dim+j holds e_i e_j
    Matrix unit;  // dim x 1
    std::vector<std::string> labels;

    /// Throws DimensionMismatch when shapes disagree with dim. Default labels e0, e1, ...
    AlgebraData(Field f, std::size_t n, Matrix mult, Matrix unit, std::vector<std::string> labels = {});
    AlgebraData() = default;

    /// Product of two column vectors.
    Matrix product(const Matrix& a, const Matrix& b) const;
    /// Matrices of x -> x b and x -> b x.
    Matrix right_mult(const Matrix& b) const;
    Matrix left_mult(const Matrix& b) const;

    bool operator==(const AlgebraData& o) const
    {
        return field == o.field && dim == o.dim && mult == o.mult && unit == o.unit;
    }
};

struct CoalgebraData {
    Field field;
    std::size_t dim = 0;
    Matrix comult;  // dim^2 x dim
    Matrix counit;  // 1 x dim

    CoalgebraData(Field f, std::size_t n, Matrix comult, Matrix counit);
    CoalgebraData() = default;

    bool operator==(const CoalgebraData& o) const
    {
        return field == o.field && dim == o.dim && comult == o.comult && counit == o.counit;
    }
};

/// One named axiom with its verdict. A failure records the first offending basis tuple.
struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;

    std::size_t passed() const;
    bool all_passed() const { return passed() == checks.size(); }
    const AxiomCheck* find(const std::string& name) const;
    std::string to_string() const;
};

/// Compares two linear maps column by column; on mismatch the witness is the
/// first differing column decoded as a tuple of basis indices for the tensor factors `dims`.
AxiomCheck check_identity(std::string name, const Matrix& lhs, const Matrix& rhs,
                          const std::vector<std::size_t>& dims, const std::vector<std::string>& labels = {});

ValidationReport validate_algebra(const AlgebraData& a);
ValidationReport validate_coalgebra(const CoalgebraData& c);

bool is_unital_subalgebra(const AlgebraData& a, const Subspace& s);

/// Hopf algebra (H, m, u, Δ, ε, S) as structure constants on one basis.
class HopfAlgebra {
public:
    HopfAlgebra() = default;
    /// Structural checks only (shapes, fields); axioms are checked by validate_hopf.
    HopfAlgebra(AlgebraData algebra, CoalgebraData coalgebra, Matrix antipode);

    const Field& field() const noexcept { return algebra_.field; }
    std::size_t dim() const noexcept { return algebra_.dim; }
    const AlgebraData& algebra() const noexcept { return algebra_; }
    const CoalgebraData& coalgebra() const noexcept { return coalgebra_; }
    const Matrix& mult() const noexcept { return algebra_.mult; }
    const Matrix& unit() const noexcept { return algebra_.unit; }
    const Matrix& comult() const noexcept { return coalgebra_.comult; }
    const Matrix& counit() const noexcept { return coalgebra_.counit; }
    const Matrix& antipode() const noexcept { return antipode_; }
    const std::vector<std::string>& labels() const noexcept { return algebra_.labels; }

    Matrix product(const Matrix& a, const Matrix& b) const { return algebra_.product(a, b); }
    Matrix basis_vector(std::size_t i) const { return Matrix::unit_vector(field(), dim(), i); }
    /// ker ε.
    Subspace augmentation_ideal() const { return kernel(counit()); }

    bool operator==(const HopfAlgebra& o) const
    {
        return algebra_ == o.algebra_ && coalgebra_ == o.coalgebra_ && antipode_ == o.antipode_;
    }

private:
    AlgebraData algebra_;
    CoalgebraData coalgebra_;
    Matrix antipode_;
};

/// The ten Hopf axioms as exact matrix identities.
ValidationReport validate_hopf(const HopfAlgebra& h);

using CayleyTable = std::vector<std::vector<std::size_t>>;
CayleyTable cyclic_group_table(std::size_t n);
/// Permutations of {0..k-1} in lexicographic order (identity first); product is composition.
CayleyTable symmetric_group_table(std::size_t k);

/// k[G] with Δ(g) = g ⊗ g, ε(g) = 1, S(g) = g^{-1}. Throws GroupTableError naming the failed axiom.
HopfAlgebra group_algebra(const CayleyTable& cayley, Field f, std::vector<std::string> labels = {});
/// Basis {1, g, x, gx}; requires characteristic ≠ 2.
HopfAlgebra sweedler(Field f);
/// Taft algebra of dimension n^2 with basis g^i x^j at index j*n + i; q must be a primitive n-th root.
HopfAlgebra taft(std::size_t n, const Scalar& q, Field f);

HopfAlgebra dual(const HopfAlgebra& h);
/// Multiplication precomposed with the flip, antipode S^{-1}.
HopfAlgebra opposite(const HopfAlgebra& h);
/// Comultiplication postcomposed with the flip, antipode S^{-1}.
HopfAlgebra coopposite(const HopfAlgebra& h);

/// Element of the convolution algebra Hom(C, A): a matrix dim A x dim C.
struct LinearHom {
    CoalgebraData source;
    AlgebraData target;
    Matrix map;

    LinearHom(CoalgebraData source, AlgebraData target, Matrix map);
};

/// u_A ∘ ε_C.
LinearHom convolution_unit(const CoalgebraData& source, const AlgebraData& target);
/// m_A ∘ (f ⊗ g) ∘ Δ_C.
LinearHom convolve(const LinearHom& f, const LinearHom& g);
/// Two-sided convolution inverse, or failure when none exists.
Result<LinearHom> convolution_inverse(const LinearHom& f);

/// A ⊗_B A as the quotient of A ⊗ A by span{ab ⊗ a' - a ⊗ ba'}.
struct TensorOver {
    Subspace relations;  // inside A ⊗ A
    QuotientData quotient;
    std::size_t dim() const { return quotient.proj.rows(); }
};

/// Throws InvariantViolation when B is not a unital subalgebra of A.
TensorOver tensor_over(const AlgebraData& a, const Subspace& b);

}  // namespace hgl
