#ifndef LRC_LINALG_HPP
#define LRC_LINALG_HPP

#include <vector>

#include "lrc/field.hpp"

namespace lrc {

// Row-major matrices over a Field; entries are canonical element indices.
using Matrix = std::vector<std::vector<felem>>;

int rank(const Field& f, Matrix a);

// Basis of the right null space of a (rows spanning {x : a x^T = 0}).
Matrix null_space(const Field& f, const Matrix& a);

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);

// a * b^T; handy for generator/parity orthogonality checks.
Matrix mat_mul_transpose(const Field& f, const Matrix& a, const Matrix& b);

bool is_zero_matrix(const Matrix& a);

std::vector<felem> vec_mat_mul(const Field& f, std::span<const felem> v, const Matrix& a);

} // namespace lrc

#endif
