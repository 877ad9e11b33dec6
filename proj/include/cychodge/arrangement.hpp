#pragma once

#include "cychodge/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cychodge {

/// Hyperplane in P^n: projectivized normal vector (n+1 rationals, first
/// nonzero coordinate scaled to 1) with a positive multiplicity.
struct Hyperplane {
    std::vector<Rat> normal;
    long multiplicity = 1;

    Hyperplane() = default;
    Hyperplane(std::vector<Rat> coeffs, long mult);

    bool operator==(const Hyperplane& o) const { return normal == o.normal; }
};

/// Weighted hyperplane arrangement in P^n.
struct Arrangement {
    int dim = 0;  ///< n
    std::vector<Hyperplane> hyperplanes;

    Arrangement() = default;
    Arrangement(int n, std::vector<Hyperplane> planes);

    /// s hyperplanes in general position: normals on the moment curve
    /// (1, t, t^2, ..., t^n) with distinct parameters t = 0..s-1.
    static Arrangement generic(int n, int count, const std::vector<long>& multiplicities = {});

    int count() const { return static_cast<int>(hyperplanes.size()); }
    bool is_reduced() const;
    /// Sum of multiplicities (each hyperplane has degree 1).
    long total_degree() const;
};

/// Nonempty intersection of hyperplanes, identified as a subspace.
struct Flat {
    std::vector<int> generators;   ///< one index set cutting the flat out
    std::vector<int> containing;   ///< every hyperplane index containing the flat
    uint64_t containing_mask = 0;
    int dim = 0;                   ///< projective dimension
    int codim = 0;

    long incidence_number(const Arrangement& arr) const;
    bool is_normal_crossing() const { return static_cast<int>(containing.size()) == codim; }
};

/// All distinct nonempty intersections, ordered by decreasing dimension,
/// with subspace inclusion and Mobius function data.
class IntersectionPoset {
public:
    explicit IntersectionPoset(const Arrangement& arr);

    const Arrangement& arrangement() const { return arr_; }
    const std::vector<Flat>& flats() const { return flats_; }
    int size() const { return static_cast<int>(flats_.size()); }

    /// True iff flat g is contained in flat f as subspaces.
    bool leq(int g, int f) const;
    /// Mobius function of the pair (f, g) with g <= f; mu(f,f) = 1.
    long mobius(int f, int g) const;

    /// Euler characteristic of the open stratum of flat f
    /// (the flat minus all strictly smaller flats).
    long stratum_euler(int f) const;
    /// Euler characteristic of the complement of the arrangement in P^n.
    long complement_euler() const;

private:
    Arrangement arr_;
    std::vector<Flat> flats_;
    std::vector<std::vector<long>> mu_;       // mu_[f][g] for g <= f, else 0
    std::vector<long> open_euler_;
};

struct HypothesisReport {
    bool normal_crossing = false;
    std::vector<int> violating_flats;           ///< poset indices
    bool multiplicities_coprime = false;
    bool essential_coprime = false;
    bool arrangement_type = true;               ///< always true for hyperplanes
    std::vector<long> essential_incidence;      ///< sorted, deduplicated
    bool pass() const { return multiplicities_coprime && essential_coprime && arrangement_type; }
};

/// True iff every flat has exactly codim-many containing hyperplanes;
/// returns the violating flats otherwise.
std::pair<bool, std::vector<int>> is_normal_crossing(const IntersectionPoset& poset);

/// Incidence numbers (sums of multiplicities of containing hyperplanes) of
/// the flats where normal crossings fail, as a sorted set.
std::vector<long> essential_incidence_numbers(const IntersectionPoset& poset);

/// Coprimality checks of multiplicities and essential incidence numbers
/// against the covering degree d.
HypothesisReport check_cover_hypotheses(const IntersectionPoset& poset, long d);

/// Blow-up centers of the canonical resolution (the non-normal-crossing
/// flats by increasing dimension) with the multiplicity of the pulled-back
/// divisor along each exceptional divisor.
std::vector<std::pair<int, long>> resolution_pullback_coefficients(const IntersectionPoset& poset);

}  // namespace cychodge
