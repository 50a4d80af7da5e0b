#pragma once

#include <vector>

#include <Eigen/Core>

namespace larlens::grokkit {

// Flat parameter and gradient storage. Eigen vectorizes reductions over a Map
// according to its address, so aligned blocks keep runs bit-reproducible.
template <typename Scalar>
using ParamVector = std::vector<Scalar, Eigen::aligned_allocator<Scalar>>;

}  // namespace larlens::grokkit
