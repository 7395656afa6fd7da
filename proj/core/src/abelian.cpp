#include "emb7/abelian.hpp"

#include "emb7/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace emb7 {

Int gcd_hat(const Int& n)
{
    return gcd_int(n, 24);
}

// ---------------------------------------------------------------------------
// KernelLattice

KernelLattice::KernelLattice(IntMatrix defining, Int modulus, IntMatrix basis)
    : defining_(std::move(defining)), modulus_(std::move(modulus)), basis_(std::move(basis))
{
}

bool KernelLattice::contains(const IntVec& v) const
{
    if (v.size() != ambient_rank()) return false;
    IntVec image = defining_.apply(v);
    for (const Int& x : image)
        if (mod_reduce(x, modulus_) != 0) return false;
    return true;
}

Int KernelLattice::index_in_ambient() const
{
    if (basis_.rows() != basis_.cols())
        throw Error(errc::dimension, "lattice is not full rank; index undefined");
    return abs_int(basis_.det());
}

KernelLattice kernel_mod(const IntMatrix& a, const Int& d)
{
    if (d < 0) throw Error(errc::parse, "negative modulus");
    SmithDecomposition snf = smith_normal_form(a);
    std::size_t n = a.cols();
    std::size_t k = std::min(a.rows(), n);

    // In the coordinates w = V^{-1} v the congruence reads s_i w_i == 0
    // (mod d), so the solution lattice is diagonal there.
    IntMatrix basis(n, 0);
    if (d == 0) {
        std::vector<std::size_t> free_idx;
        for (std::size_t i = 0; i < n; ++i)
            if (i >= k || snf.s.at(i, i) == 0) free_idx.push_back(i);
        basis = IntMatrix(n, free_idx.size());
        for (std::size_t j = 0; j < free_idx.size(); ++j)
            basis.set_col(j, snf.v.col_vec(free_idx[j]));
    } else {
        basis = IntMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Int stretch = 1;
            if (i < k) stretch = d / gcd_int(snf.s.at(i, i), d);
            IntVec col = snf.v.col_vec(i);
            for (Int& x : col) x *= stretch;
            basis.set_col(i, col);
        }
    }
    return KernelLattice(a, d, std::move(basis));
}

// ---------------------------------------------------------------------------
// FgAbelianGroup

FgAbelianGroup::FgAbelianGroup(std::size_t generator_count, IntMatrix relations)
{
    if (relations.rows() != generator_count)
        throw Error(errc::dimension, "relation matrix must have one row per generator");
    auto data = std::make_shared<Data>();
    data->generators = generator_count;
    data->relations = std::move(relations);
    data->snf = smith_normal_form(data->relations);
    data->factors.assign(generator_count, Int(0));
    std::size_t k = std::min(data->relations.rows(), data->relations.cols());
    for (std::size_t i = 0; i < k; ++i) data->factors[i] = data->snf.s.at(i, i);
    data_ = std::move(data);
}

std::size_t FgAbelianGroup::generator_count() const { return data_->generators; }

const IntMatrix& FgAbelianGroup::relations() const { return data_->relations; }

const IntVec& FgAbelianGroup::invariant_factors() const { return data_->factors; }

IntVec FgAbelianGroup::nontrivial_factors() const
{
    IntVec out;
    for (const Int& f : data_->factors)
        if (f != 1) out.push_back(f);
    return out;
}

std::size_t FgAbelianGroup::free_rank() const
{
    std::size_t r = 0;
    for (const Int& f : data_->factors)
        if (f == 0) ++r;
    return r;
}

std::optional<Int> FgAbelianGroup::order() const
{
    Int n = 1;
    for (const Int& f : data_->factors) {
        if (f == 0) return std::nullopt;
        n *= f;
    }
    return n;
}

IntVec FgAbelianGroup::canonical_form(const IntVec& coords) const
{
    if (coords.size() != data_->generators)
        throw Error(errc::dimension, "coordinate length does not match generator count");
    IntVec y = data_->snf.u.apply(coords);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (data_->factors[i] != 0) y[i] = floormod(y[i], data_->factors[i]);
    return y;
}

GroupElement FgAbelianGroup::element(IntVec coords) const
{
    return GroupElement(*this, std::move(coords));
}

GroupElement FgAbelianGroup::zero() const
{
    return GroupElement(*this, IntVec(data_->generators, Int(0)));
}

GroupElement FgAbelianGroup::element_from_canonical(const IntVec& canonical) const
{
    if (canonical.size() != data_->generators)
        throw Error(errc::dimension, "canonical coordinate length mismatch");
    return element(data_->snf.u_inv.apply(canonical));
}

std::vector<GroupElement> FgAbelianGroup::all_elements() const
{
    if (!is_finite()) throw Error(errc::infinite_ambient, "cannot enumerate an infinite group");
    std::vector<GroupElement> out;
    IntVec c(data_->generators, Int(0));
    for (;;) {
        out.push_back(element_from_canonical(c));
        std::size_t i = data_->generators;
        while (i > 0) {
            --i;
            c[i] += 1;
            if (c[i] < data_->factors[i]) break;
            c[i] = 0;
            if (i == 0) return out;
        }
        if (data_->generators == 0) return out;
    }
}

bool FgAbelianGroup::same_presentation(const FgAbelianGroup& other) const
{
    if (data_ == other.data_) return true;
    return data_->generators == other.data_->generators && data_->relations == other.data_->relations;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(FgAbelianGroup group, IntVec coords)
    : group_(std::move(group)), coords_(std::move(coords)), canonical_(group_.canonical_form(coords_))
{
}

bool GroupElement::is_zero() const
{
    for (const Int& x : canonical_)
        if (x != 0) return false;
    return true;
}

static void require_same_group(const GroupElement& a, const GroupElement& b)
{
    if (!a.group().same_presentation(b.group()))
        throw Error(errc::dimension, "elements of different presentations");
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const
{
    require_same_group(*this, rhs);
    IntVec c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coords_[i];
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const
{
    require_same_group(*this, rhs);
    IntVec c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coords_[i];
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::scaled(const Int& k) const
{
    IntVec c = coords_;
    for (Int& x : c) x *= k;
    return GroupElement(group_, std::move(c));
}

bool GroupElement::operator==(const GroupElement& rhs) const
{
    require_same_group(*this, rhs);
    return canonical_ == rhs.canonical_;
}

// ---------------------------------------------------------------------------
// Derived operations

FgAbelianGroup cokernel_mod(const IntMatrix& a, const Int& d)
{
    if (d < 0) throw Error(errc::parse, "negative modulus");
    IntMatrix relations = a;
    if (d > 0) {
        IntMatrix scaled = IntMatrix::identity(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) scaled.at(i, i) = d;
        relations = a.cols_appended(scaled);
    }
    return FgAbelianGroup(a.rows(), relations);
}

std::optional<Int> element_order(const GroupElement& g)
{
    const IntVec& factors = g.group().invariant_factors();
    const IntVec& c = g.canonical();
    Int k = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (factors[i] == 0) {
            if (c[i] != 0) return std::nullopt;
            continue;
        }
        Int oi = factors[i] / gcd_int(c[i], factors[i]);
        k = k / gcd_int(k, oi) * oi;
    }
    return k;
}

Int divisibility_mod_torsion(const GroupElement& g)
{
    const IntVec& factors = g.group().invariant_factors();
    const IntVec& c = g.canonical();
    IntVec free_coords;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (factors[i] == 0) free_coords.push_back(c[i]);
    return vec_gcd(free_coords);
}

std::vector<GroupElement> subgroup_elements(const IntMatrix& gens, const FgAbelianGroup& ambient)
{
    if (!ambient.is_finite())
        throw Error(errc::infinite_ambient, "subgroup closure in an infinite group");
    if (gens.rows() != ambient.generator_count())
        throw Error(errc::dimension, "generator columns do not live in the ambient group");

    std::vector<GroupElement> generators;
    for (std::size_t j = 0; j < gens.cols(); ++j) generators.push_back(ambient.element(gens.col_vec(j)));

    std::map<IntVec, GroupElement> seen;
    std::vector<GroupElement> queue{ambient.zero()};
    seen.emplace(queue.front().canonical(), queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const GroupElement& g : generators) {
            GroupElement next = queue[head] + g;
            if (seen.emplace(next.canonical(), next).second) queue.push_back(next);
        }
    }
    return queue;
}

namespace {

// Canonical-coordinate arithmetic used by the retraction search: elements of
// the ambient group as reduced tuples, addition coordinatewise mod factors.
IntVec canon_add_scaled(const IntVec& acc, const IntVec& x, const Int& k, const IntVec& factors)
{
    IntVec out = acc;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += x[i] * k;
        if (factors[i] != 0) out[i] = floormod(out[i], factors[i]);
    }
    return out;
}

} // namespace

std::optional<Retraction> find_retraction(const IntMatrix& gens, const FgAbelianGroup& ambient,
                                          std::uint64_t budget)
{
    if (!ambient.is_finite())
        throw Error(errc::infinite_ambient, "direct-summand test needs a finite ambient group");

    std::vector<GroupElement> sub = subgroup_elements(gens, ambient);
    const IntVec& factors = ambient.invariant_factors();
    std::size_t n = ambient.generator_count();

    // Candidate image per canonical generator: subgroup elements killed by
    // that generator's order, so the assignment extends to a homomorphism.
    std::vector<std::vector<const GroupElement*>> candidates(n);
    double space = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (const GroupElement& m : sub)
            if (m.scaled(factors[i]).is_zero()) candidates[i].push_back(&m);
        space *= static_cast<double>(candidates[i].size());
        if (space > static_cast<double>(budget))
            throw Error(errc::budget, "retraction search space exceeds budget");
    }

    std::vector<IntVec> target;   // canonical forms of the subgroup generators
    for (std::size_t j = 0; j < gens.cols(); ++j)
        target.push_back(ambient.canonical_form(gens.col_vec(j)));

    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        bool fixes_all = true;
        for (std::size_t j = 0; j < target.size() && fixes_all; ++j) {
            IntVec image(n, Int(0));
            for (std::size_t i = 0; i < n; ++i)
                image = canon_add_scaled(image, candidates[i][pick[i]]->canonical(), target[j][i], factors);
            fixes_all = (image == target[j]);
        }
        if (fixes_all) {
            Retraction r;
            for (std::size_t i = 0; i < n; ++i) r.generator_images.push_back(*candidates[i][pick[i]]);
            return r;
        }
        std::size_t i = n;
        for (;;) {
            if (i == 0) return std::nullopt;
            --i;
            if (++pick[i] < candidates[i].size()) break;
            pick[i] = 0;
        }
    }
}

bool is_direct_summand(const IntMatrix& gens, const FgAbelianGroup& ambient, std::uint64_t budget)
{
    return find_retraction(gens, ambient, budget).has_value();
}

} // namespace emb7
