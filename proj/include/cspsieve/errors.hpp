#pragma once

#include <stdexcept>
#include <string>

namespace cspsieve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constructor/builder parameters outside the documented domain.
struct InvalidParams : Error {
    using Error::Error;
};

// exact_div found a nonzero remainder; a formula was misused upstream.
struct NotDivisible : Error {
    using Error::Error;
};

// Permutation fails to preserve adjacency of the graph it is paired with.
struct NotAutomorphism : Error {
    using Error::Error;
};

// A nonidentity element of the subgroup fixes a vertex.
struct NotFreeAction : Error {
    using Error::Error;
};

// A vertex set's size disagrees with the statistic's k.
struct SizeMismatch : Error {
    using Error::Error;
};

} // namespace cspsieve
