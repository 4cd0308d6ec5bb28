#pragma once

#include <string>

#include "hgl/hopf.hpp"

namespace hgl::detail {

/// Throws FieldMismatch or DimensionMismatch naming `what`.
void require_shape(const Matrix& m, const Field& f, std::size_t rows, std::size_t cols, const std::string& what);

/// Product of the tensor algebra A ⊗ B: (a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'.
Matrix tensor_algebra_mult(const AlgebraData& a, const AlgebraData& b);

std::string describe_witness(const std::vector<std::size_t>& w, const std::vector<std::string>& labels);

}  // namespace hgl::detail
