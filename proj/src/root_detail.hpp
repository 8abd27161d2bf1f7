#ifndef QDEFORM_SRC_ROOT_DETAIL_HPP
#define QDEFORM_SRC_ROOT_DETAIL_HPP

#include <optional>

#include "qdeform/scalar.hpp"

namespace qdeform::detail {

// Floor of the n-th root of a non-negative integer (Newton iteration).
Scalar::Int floor_nth_root(const Scalar::Int& a, unsigned n);

// Exact n-th root of a non-negative rational, if one exists.
std::optional<Scalar::Rat> try_nth_root(const Scalar::Rat& t, unsigned n);

}  // namespace qdeform::detail

#endif
