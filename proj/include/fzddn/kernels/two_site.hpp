#pragma once

#include <span>

#include "fzddn/core/types.hpp"

namespace fzddn::kernels {

// x <- op_{i j} x, where op acts on factors i, j (1-based, in that order) of
// a tensor product with factor dimensions `dims`, without forming the
// embedded operator. Columns of x are processed in parallel.
void apply_two_site(const CMatrix& op, int i, int j, std::span<const int> dims, CMatrix& x);

// x <- op_{i} x for a single factor.
void apply_one_site(const CMatrix& op, int i, std::span<const int> dims, CMatrix& x);

namespace serial {

// Single-threaded reference with the loop nest inverted (rows outer).
void apply_two_site(const CMatrix& op, int i, int j, std::span<const int> dims, CMatrix& x);
void apply_one_site(const CMatrix& op, int i, std::span<const int> dims, CMatrix& x);

}  // namespace serial

}  // namespace fzddn::kernels
