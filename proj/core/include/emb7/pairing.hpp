#pragma once

#include "emb7/abelian.hpp"
#include "emb7/int_matrix.hpp"

namespace emb7 {

/// Context for the mod-d pairing between coker(2L mod d) and ker(2L mod d).
///
/// H1 and H3 are identified with Z^rank via dual bases, so the ambient
/// intersection pairing is the standard dot product and the form's adjoint
/// is the matrix L. The pairing is well defined exactly when 2L is
/// symmetric mod d; construction does not enforce that (verifier suites
/// deliberately build broken contexts as negative controls).
struct PairingContext {
    std::size_t rank = 0;
    IntMatrix form;         // L
    IntMatrix doubled_form; // 2L
    Int modulus;            // d, 0 meaning exact arithmetic over Z
    KernelLattice kernel;
    FgAbelianGroup cokernel;

    bool symmetric_mod_d() const;
};

PairingContext make_pairing_context(const IntMatrix& l_matrix, const Int& d);

/// [c] paired with y: dot product of any coordinate representative of c
/// with y, reduced mod d. Errors if y is outside the kernel lattice.
Int cap_d(const PairingContext& ctx, const GroupElement& c, const IntVec& y);

/// True iff every image vector of the doubled form pairs to 0 mod d with
/// every kernel basis vector, i.e. the pairing value is independent of the
/// chosen coset representative.
bool check_cap_well_defined(const PairingContext& ctx);

/// The index [Z_d : c(ker(m mod d))] computed by the closed formula:
/// divisibility of c mod torsion when d = 0, d / ord(c) otherwise.
/// Requires m symmetric mod d; c must live in coker(m mod d).
Int unimzd_index(std::size_t v_rank, const IntMatrix& m, const Int& d, const GroupElement& c);

/// The same index by direct enumeration (d > 0, bounded to rank <= 4 and
/// d <= 24) or by a kernel-basis gcd (d = 0). Independent of the formula
/// path above; the two are cross-checked by the verifier suites.
Int unimzd_brute(std::size_t v_rank, const IntMatrix& m, const Int& d, const GroupElement& c);

} // namespace emb7
