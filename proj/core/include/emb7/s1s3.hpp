#pragma once

#include "emb7/ints.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace emb7 {

/// Orbit size of the knot-group action on the classes labelled (l, b):
/// 12 for l != 0, otherwise 2 gcd(b, 6).
int p_size(const Int& l, const Int& b);

/// Whether the label sets (l, b) and (l', b') coincide: equal l and
/// b == b' mod 2l (mod 0 meaning equality).
bool p_equal(const Int& l, const Int& b, const Int& l_prime, const Int& b_prime);

/// Parameters of a connected-sum label: knot class a in Z_12 and the two
/// integer labels.
struct TauLabel {
    int a = 0;
    Int l = 0;
    Int b = 0;
};

/// Partial correction table psi_l : Z x Z_{2l} -> Z_12, injected from
/// outside and never synthesized; entries carry a provenance string.
/// Missing entries make the equivalence decision indeterminate.
class PsiOracle {
public:
    struct Entry {
        int value;
        std::string provenance;
    };

    void insert(const Int& l, const Int& k, const Int& residue, int value, std::string provenance);
    std::optional<int> lookup(const Int& l, const Int& k, const Int& residue) const;
    std::size_t size() const { return table_.size(); }

private:
    std::map<std::tuple<Int, Int, Int>, Entry> table_;
};

/// Decide whether the two labels give the same class. The l = 0 branch is
/// closed-form; the l != 0 branch consults the oracle and returns nullopt
/// when an entry is missing. The bracket [b/2l] uses floor division, so
/// b = 2l*[b/2l] + residue exactly.
std::optional<bool> tau_equiv(const TauLabel& x, const TauLabel& y, const PsiOracle& psi);

struct OrbitRow {
    Int l;
    Int b;
    int p;       // orbit size
    int inertia; // 12 / p
};

/// Full grid of orbit sizes over the given inclusive ranges.
std::vector<OrbitRow> orbit_table(const Int& l_lo, const Int& l_hi, const Int& b_lo, const Int& b_hi);

} // namespace emb7
