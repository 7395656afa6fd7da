#pragma once

#include "emb7/int_matrix.hpp"

namespace emb7 {

/// Smith normal form  U * A * V = S.
///
/// U (rows x rows) and V (cols x cols) are unimodular; S is diagonal with
/// nonnegative invariant factors s1 | s2 | ... and zeros last. The exact
/// inverses of U and V are carried along (they are maintained during the
/// elimination, so no separate inversion is ever needed).
struct SmithDecomposition {
    IntMatrix source;
    IntMatrix u, u_inv;
    IntMatrix s;
    IntMatrix v, v_inv;

    /// Diagonal of S, length min(rows, cols).
    IntVec diagonal() const;

    /// Number of nonzero invariant factors.
    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

} // namespace emb7
