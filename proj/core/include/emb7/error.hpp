#pragma once

#include <stdexcept>
#include <string>

namespace emb7 {

/// Error codes form a stable contract; the CLI prints the code name and
/// maps categories to exit codes.
enum class errc {
    symmetry,          // matrix expected symmetric
    unimodular,        // |det| != 1
    signature_mismatch,
    not_characteristic,
    dimension,        // size mismatch between inputs
    symmetry_mod_d,   // doubled form not symmetric mod d
    not_in_kernel,    // pairing argument outside the kernel lattice
    infinite_ambient, // direct-summand test on an infinite group
    non_integral,     // a count formula failed to divide exactly
    unresolved_theta,
    budget,           // enumeration bound exceeded
    psi_format,       // malformed psi table
    parse             // malformed input file / flag value
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
    {
    }

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace emb7
