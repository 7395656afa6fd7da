#include "emb7/error.hpp"

namespace emb7 {

const char* errc_name(errc code)
{
    switch (code) {
    case errc::symmetry: return "SYMMETRY";
    case errc::unimodular: return "UNIMODULAR";
    case errc::signature_mismatch: return "SIGNATURE_MISMATCH";
    case errc::not_characteristic: return "NOT_CHARACTERISTIC";
    case errc::dimension: return "DIMENSION";
    case errc::symmetry_mod_d: return "SYMMETRY_MOD_D";
    case errc::not_in_kernel: return "NOT_IN_KERNEL";
    case errc::infinite_ambient: return "INFINITE_AMBIENT";
    case errc::non_integral: return "NON_INTEGRAL";
    case errc::unresolved_theta: return "UNRESOLVED_THETA";
    case errc::budget: return "BUDGET";
    case errc::psi_format: return "PSI_FORMAT";
    case errc::parse: return "PARSE";
    }
    return "UNKNOWN";
}

} // namespace emb7
