#include "cychodge/arrangement.hpp"

#include "cychodge/numtheory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cychodge {

namespace {

/// Reduced row echelon form over Q; returns the rank. Rows beyond the rank
/// are zeroed. The RREF is the canonical representative of the row space.
int rref(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        Rat inv = Rat(1) / m[rank][c];
        for (int j = c; j < cols; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rat f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::string span_key(const std::vector<std::vector<Rat>>& rrefRows, int rank) {
    std::string key;
    for (int r = 0; r < rank; ++r)
        for (const auto& v : rrefRows[r]) {
            key += v.str();
            key += ',';
        }
    return key;
}

/// True iff v lies in the row space given in RREF with the stated rank.
bool in_span(const std::vector<std::vector<Rat>>& rrefRows, int rank, const std::vector<Rat>& v) {
    std::vector<Rat> residue = v;
    const int cols = static_cast<int>(v.size());
    for (int r = 0; r < rank; ++r) {
        int lead = -1;
        for (int c = 0; c < cols; ++c)
            if (!rrefRows[r][c].is_zero()) { lead = c; break; }
        if (lead < 0) continue;
        if (residue[lead].is_zero()) continue;
        Rat f = residue[lead];  // pivot is 1
        for (int c = lead; c < cols; ++c) residue[c] -= f * rrefRows[r][c];
    }
    for (const auto& x : residue)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

Hyperplane::Hyperplane(std::vector<Rat> coeffs, long mult)
    : normal(std::move(coeffs)), multiplicity(mult) {
    if (multiplicity <= 0) throw std::invalid_argument("hyperplane multiplicity must be positive");
    int first = -1;
    for (size_t i = 0; i < normal.size(); ++i)
        if (!normal[i].is_zero()) { first = static_cast<int>(i); break; }
    if (first < 0) throw std::invalid_argument("hyperplane normal vector is zero");
    Rat inv = Rat(1) / normal[static_cast<size_t>(first)];
    for (auto& v : normal) v *= inv;
}

Arrangement::Arrangement(int n, std::vector<Hyperplane> planes)
    : dim(n), hyperplanes(std::move(planes)) {
    if (n < 1) throw std::invalid_argument("arrangement dimension must be >= 1");
    for (const auto& h : hyperplanes)
        if (static_cast<int>(h.normal.size()) != n + 1)
            throw std::invalid_argument("hyperplane normal has wrong length");
    for (size_t i = 0; i < hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < hyperplanes.size(); ++j)
            if (hyperplanes[i] == hyperplanes[j])
                throw std::invalid_argument("arrangement has repeated hyperplanes");
    if (hyperplanes.size() > 64)
        throw std::invalid_argument("arrangement too large (at most 64 hyperplanes)");
}

Arrangement Arrangement::generic(int n, int count, const std::vector<long>& multiplicities) {
    std::vector<Hyperplane> planes;
    planes.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) {
        std::vector<Rat> normal(static_cast<size_t>(n) + 1);
        Rat t(j), p(1);
        for (int c = 0; c <= n; ++c) {
            normal[static_cast<size_t>(c)] = p;
            p *= t;
        }
        long mult = multiplicities.empty() ? 1 : multiplicities.at(static_cast<size_t>(j));
        planes.emplace_back(std::move(normal), mult);
    }
    return Arrangement(n, std::move(planes));
}

bool Arrangement::is_reduced() const {
    for (const auto& h : hyperplanes)
        if (h.multiplicity != 1) return false;
    return true;
}

long Arrangement::total_degree() const {
    long total = 0;
    for (const auto& h : hyperplanes) total += h.multiplicity;
    return total;
}

long Flat::incidence_number(const Arrangement& arr) const {
    long sum = 0;
    for (int j : containing) sum += arr.hyperplanes[static_cast<size_t>(j)].multiplicity;
    return sum;
}

IntersectionPoset::IntersectionPoset(const Arrangement& arr) : arr_(arr) {
    const int n = arr.dim;
    const int s = arr.count();

    struct Node {
        std::vector<std::vector<Rat>> rows;  // RREF basis of the cutting normals
        int rank;
        std::vector<int> generators;
    };
    std::map<std::string, Node> seen;
    std::vector<Node> frontier;

    for (int j = 0; j < s; ++j) {
        std::vector<std::vector<Rat>> rows{arr.hyperplanes[static_cast<size_t>(j)].normal};
        int rank = rref(rows);
        std::string key = span_key(rows, rank);
        if (!seen.count(key)) {
            Node node{rows, rank, {j}};
            seen.emplace(key, node);
            frontier.push_back(std::move(node));
        }
    }

    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (int j = 0; j < s; ++j) {
                if (in_span(node.rows, node.rank, arr.hyperplanes[static_cast<size_t>(j)].normal))
                    continue;
                std::vector<std::vector<Rat>> rows = node.rows;
                rows.resize(static_cast<size_t>(node.rank));
                rows.push_back(arr.hyperplanes[static_cast<size_t>(j)].normal);
                int rank = rref(rows);
                if (rank > n) continue;  // empty intersection
                std::string key = span_key(rows, rank);
                if (seen.count(key)) continue;
                std::vector<int> gens = node.generators;
                gens.push_back(j);
                Node child{rows, rank, gens};
                seen.emplace(key, child);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    for (const auto& [key, node] : seen) {
        Flat f;
        f.generators = node.generators;
        f.codim = node.rank;
        f.dim = n - node.rank;
        for (int j = 0; j < s; ++j)
            if (in_span(node.rows, node.rank, arr.hyperplanes[static_cast<size_t>(j)].normal)) {
                f.containing.push_back(j);
                f.containing_mask |= uint64_t{1} << j;
            }
        flats_.push_back(std::move(f));
    }
    std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return a.containing < b.containing;
    });

    // Mobius values on each interval [g, f] of the subspace order.
    const int m = size();
    mu_.assign(static_cast<size_t>(m), {});
    for (int f = 0; f < m; ++f) {
        mu_[static_cast<size_t>(f)].assign(static_cast<size_t>(m), 0);
        mu_[static_cast<size_t>(f)][static_cast<size_t>(f)] = 1;
        // flats are sorted by codimension, so all g > f in the subspace
        // order have smaller index
        for (int g = f + 1; g < m; ++g) {
            if (!leq(g, f)) continue;
            long acc = 0;
            for (int h = f; h < g; ++h)
                if (leq(h, f) && leq(g, h)) acc += mu_[static_cast<size_t>(f)][static_cast<size_t>(h)];
            mu_[static_cast<size_t>(f)][static_cast<size_t>(g)] = -acc;
        }
    }

    open_euler_.assign(static_cast<size_t>(m), 0);
    for (int f = 0; f < m; ++f) {
        long e = 0;
        for (int g = f; g < m; ++g)
            if (leq(g, f)) e += mobius(f, g) * (flats_[static_cast<size_t>(g)].dim + 1);
        open_euler_[static_cast<size_t>(f)] = e;
    }
}

bool IntersectionPoset::leq(int g, int f) const {
    const Flat& fg = flats_[static_cast<size_t>(g)];
    const Flat& ff = flats_[static_cast<size_t>(f)];
    // g inside f as subspaces == every hyperplane containing f contains g
    return (fg.containing_mask & ff.containing_mask) == ff.containing_mask;
}

long IntersectionPoset::mobius(int f, int g) const {
    return mu_[static_cast<size_t>(f)][static_cast<size_t>(g)];
}

long IntersectionPoset::stratum_euler(int f) const {
    return open_euler_[static_cast<size_t>(f)];
}

long IntersectionPoset::complement_euler() const {
    long e = arr_.dim + 1;
    for (int f = 0; f < size(); ++f) e -= open_euler_[static_cast<size_t>(f)];
    return e;
}

std::pair<bool, std::vector<int>> is_normal_crossing(const IntersectionPoset& poset) {
    std::vector<int> violators;
    for (int f = 0; f < poset.size(); ++f)
        if (!poset.flats()[static_cast<size_t>(f)].is_normal_crossing()) violators.push_back(f);
    return {violators.empty(), violators};
}

std::vector<long> essential_incidence_numbers(const IntersectionPoset& poset) {
    std::set<long> numbers;
    for (const auto& flat : poset.flats())
        if (!flat.is_normal_crossing()) numbers.insert(flat.incidence_number(poset.arrangement()));
    return {numbers.begin(), numbers.end()};
}

HypothesisReport check_cover_hypotheses(const IntersectionPoset& poset, long d) {
    if (d < 2) throw std::invalid_argument("cover degree must be >= 2");
    HypothesisReport rep;
    auto [flag, violators] = is_normal_crossing(poset);
    rep.normal_crossing = flag;
    rep.violating_flats = violators;
    rep.essential_incidence = essential_incidence_numbers(poset);
    rep.multiplicities_coprime = true;
    for (const auto& h : poset.arrangement().hyperplanes)
        if (gcd_long(h.multiplicity, d) != 1) rep.multiplicities_coprime = false;
    rep.essential_coprime = true;
    for (long k : rep.essential_incidence)
        if (gcd_long(k, d) != 1) rep.essential_coprime = false;
    rep.arrangement_type = true;
    return rep;
}

std::vector<std::pair<int, long>> resolution_pullback_coefficients(const IntersectionPoset& poset) {
    std::vector<std::pair<int, long>> centers;
    for (int f = 0; f < poset.size(); ++f) {
        const Flat& flat = poset.flats()[static_cast<size_t>(f)];
        if (!flat.is_normal_crossing())
            centers.emplace_back(f, flat.incidence_number(poset.arrangement()));
    }
    std::sort(centers.begin(), centers.end(), [&](const auto& a, const auto& b) {
        const Flat& fa = poset.flats()[static_cast<size_t>(a.first)];
        const Flat& fb = poset.flats()[static_cast<size_t>(b.first)];
        if (fa.dim != fb.dim) return fa.dim < fb.dim;
        return fa.containing < fb.containing;
    });
    return centers;
}

}  // namespace cychodge
