#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgl/comodule.hpp"

namespace hgl {

/// H/I for a coideal right ideal I, with the induced coalgebra and right H-module structure.
struct GeneralisedQuotient {
    HopfAlgebra hopf;
    Subspace ideal;
    QuotientData data;
    std::size_t q_dim = 0;
    Matrix comult;  // q^2 x q
    Matrix counit;  // 1 x q
    Matrix action;  // q x (q * n): π(x) ⊗ h -> π(x h)

    const Matrix& proj() const noexcept { return data.proj; }
};

/// Checks ε(I) = 0, I·H ⊆ I and Δ(I) ⊆ I ⊗ H + H ⊗ I. On failure the reason names the
/// condition (counit, right-ideal or coideal) and the witness holds basis indices
/// (the offending basis vector of I, then the basis element of H for right-ideal).
Result<GeneralisedQuotient> validate_rico(const HopfAlgebra& h, const Subspace& ideal);
/// validate_rico, throwing InvariantViolation on failure.
GeneralisedQuotient make_quotient(const HopfAlgebra& h, const Subspace& ideal);
/// Fast yes/no version of validate_rico without the induced structure.
bool is_rico(const HopfAlgebra& h, const Subspace& ideal);

/// Q = H, the zero ideal.
GeneralisedQuotient full_quotient(const HopfAlgebra& h);
/// Q = k, the augmentation ideal.
GeneralisedQuotient trivial_quotient(const HopfAlgebra& h);

struct CoidealSubalgebra {
    HopfAlgebra hopf;
    Subspace space;
};

/// 1 ∈ K, K·K ⊆ K and Δ(K) ⊆ H ⊗ K.
Result<CoidealSubalgebra> validate_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k);
/// Mirror image: Δ(K) ⊆ K ⊗ H.
Result<CoidealSubalgebra> validate_right_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k);
bool is_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k);

/// Ideal I₁ + I₂.
GeneralisedQuotient join_q(const GeneralisedQuotient& a, const GeneralisedQuotient& b);
/// Ideal cogenerated_rico(I₁ ∩ I₂).
GeneralisedQuotient meet_q(const GeneralisedQuotient& a, const GeneralisedQuotient& b);
/// Largest coideal right ideal contained in y.
Subspace cogenerated_rico(const HopfAlgebra& h, const Subspace& y);

/// Finite partially ordered set with an explicit relation table.
struct FinitePoset {
    std::vector<Subspace> elements;
    std::vector<std::vector<char>> leq;  // leq[i][j] : elements[i] ⪯ elements[j]
    /// True when the elements are every object of their kind (not a sample).
    bool exhaustive = false;

    std::size_t size() const noexcept { return elements.size(); }
    bool le(std::size_t i, std::size_t j) const { return leq[i][j] != 0; }
    std::optional<std::size_t> index_of(const Subspace& s) const;
};

/// Poset of subspaces ordered by inclusion.
FinitePoset inclusion_poset(std::vector<Subspace> elements, bool exhaustive);

/// Enumerated Quot_gen(H). Elements are the ideals in canonical order, and
/// leq[i][j] holds when Q_i ⪯ Q_j, i.e. I_j ⊆ I_i.
struct QuotientLattice {
    HopfAlgebra hopf;
    std::vector<GeneralisedQuotient> quotients;
    FinitePoset poset;

    std::size_t size() const noexcept { return quotients.size(); }
    std::optional<std::size_t> index_of(const Subspace& ideal) const { return poset.index_of(ideal); }
};

struct EnumerationOptions {
    std::size_t cap = 6;
    unsigned jobs = 1;
};

/// The enumeration searches subspaces of ker ε, so the cap bounds dim H - 1.
QuotientLattice enumerate_ricos(const HopfAlgebra& h, const EnumerationOptions& opts = {});
/// Left coideal subalgebras; the cap bounds dim H - 1.
FinitePoset enumerate_coideal_subalgebras(const HopfAlgebra& h, const EnumerationOptions& opts = {});
/// Unital subalgebras of A containing B₀; the cap bounds dim A - dim B₀.
FinitePoset enumerate_subalgebras_over(const AlgebraData& a, const Subspace& base,
                                       const EnumerationOptions& opts = {});

struct PosetReport {
    bool is_lattice = false;
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, upper) covers
    std::optional<std::size_t> top;
    std::optional<std::size_t> bottom;
    /// Set for quotient lattices: table suprema and infima agree with meet_q and join_q.
    std::optional<bool> operations_agree;
};

/// Throws PosetError naming a witness triple when leq is not a partial order.
PosetReport poset_report(const FinitePoset& p);
PosetReport poset_report(const QuotientLattice& q);

}  // namespace hgl
