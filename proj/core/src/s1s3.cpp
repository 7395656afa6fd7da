#include "emb7/s1s3.hpp"

#include "emb7/error.hpp"

namespace emb7 {

int p_size(const Int& l, const Int& b)
{
    if (l != 0) return 12;
    return static_cast<int>(to_ll(2 * gcd_int(b, 6)));
}

bool p_equal(const Int& l, const Int& b, const Int& l_prime, const Int& b_prime)
{
    if (l != l_prime) return false;
    return mod_reduce(b - b_prime, 2 * l) == 0;
}

void PsiOracle::insert(const Int& l, const Int& k, const Int& residue, int value, std::string provenance)
{
    table_[{l, k, residue}] = Entry{floormod(value, 12).convert_to<int>(), std::move(provenance)};
}

std::optional<int> PsiOracle::lookup(const Int& l, const Int& k, const Int& residue) const
{
    auto it = table_.find({l, k, residue});
    if (it == table_.end()) return std::nullopt;
    return it->second.value;
}

std::optional<bool> tau_equiv(const TauLabel& x, const TauLabel& y, const PsiOracle& psi)
{
    if (x.l != y.l) return false;
    const Int& l = x.l;

    if (l == 0) {
        if (x.b != y.b) return false;
        Int modulus = 2 * gcd_int(x.b, 6);
        return floormod(Int(x.a) - Int(y.a), modulus) == 0;
    }

    Int period = 2 * l;
    if (floormod(x.b - y.b, period) != 0) return false;

    Int kx = floordiv(x.b, period);
    Int ky = floordiv(y.b, period);
    Int residue = x.b - period * kx; // shared by both labels
    if (kx == ky) // identical b: the correction terms cancel
        return floormod(Int(x.a) - Int(y.a), 12) == 0;

    std::optional<int> px = psi.lookup(l, kx, residue);
    std::optional<int> py = psi.lookup(l, ky, residue);
    if (!px || !py) return std::nullopt;
    return floormod(Int(x.a) - Int(y.a) - (*px - *py), 12) == 0;
}

std::vector<OrbitRow> orbit_table(const Int& l_lo, const Int& l_hi, const Int& b_lo, const Int& b_hi)
{
    std::vector<OrbitRow> rows;
    for (Int l = l_lo; l <= l_hi; ++l)
        for (Int b = b_lo; b <= b_hi; ++b) {
            int p = p_size(l, b);
            rows.push_back(OrbitRow{l, b, p, 12 / p});
        }
    return rows;
}

} // namespace emb7
