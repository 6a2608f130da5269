#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "semicircle_lab/variance_profile.hpp"

namespace semicircle_lab::graphs {

/// Vertex labels are 1-based, matching the restricted-growth convention.
using Rgs = std::vector<int>;

/// One undirected edge {a, b} (a <= b) of a closed walk with the number of
/// traversals in each direction.
struct EdgeUse {
    int a = 0;
    int b = 0;
    int forward = 0;   ///< a -> b steps
    int backward = 0;  ///< b -> a steps (always 0 for loops)

    int multiplicity() const noexcept { return forward + backward; }
    bool is_loop() const noexcept { return a == b; }
};

struct CanonicalGraph {
    Rgs g;
    int t = 0;                   ///< number of vertices, max g
    std::vector<EdgeUse> edges;  ///< sorted by (a, b)
    int category = 0;

    std::size_t k() const noexcept { return g.size(); }
};

/// True if g(1) = 1 and every g(i) <= max(g(1..i-1)) + 1 (with g(i) >= 1).
bool is_restricted_growth(std::span<const int> g) noexcept;

/// Edge multiset of the closed walk g(1) -> g(2) -> ... -> g(k) -> g(1).
std::vector<EdgeUse> walk_edges(std::span<const int> g);

/// Category 1: every edge traversed exactly twice, once each way, no loops,
/// and the distinct edges form a tree. Category 2: some edge has odd
/// multiplicity. Category 3: everything else. Throws ValidationError on an
/// invalid string.
int classify(std::span<const int> g);

/// Full graph record for g.
CanonicalGraph make_graph(Rgs g);

/// Relabels any closed walk by first appearance into its canonical string.
Rgs canonicalize(std::span<const int> walk);

inline constexpr std::size_t max_enumeration_length = 12;

/// All restricted-growth strings of length k in lexicographic order
/// (Bell(k) of them). Throws DomainError unless 1 <= k <= 12.
std::vector<CanonicalGraph> enumerate_canonical(std::size_t k);

struct CategoryCounts {
    std::uint64_t c1 = 0;
    std::uint64_t c2 = 0;
    std::uint64_t c3 = 0;

    std::uint64_t total() const noexcept { return c1 + c2 + c3; }
};

CategoryCounts category_counts(std::size_t k);

/// n (n-1) ... (n-t+1); zero when t > n.
std::uint64_t class_size(std::uint64_t t, std::uint64_t n) noexcept;

/// (m-1)!! for even m, 0 for odd m; the m-th moment of a standard normal.
double gaussian_moment(int m) noexcept;

/// n^-(k/2+1) * sum over injective labelings of the graph's vertices of
/// prod over distinct edges of E Y^{mult} with Y ~ N(0, sigma^2_{label}).
double graph_contribution(const CanonicalGraph& graph, const VarianceProfile& profile,
                          std::size_t threads = 1);

struct MomentBreakdown {
    std::size_t k = 0;
    double s1 = 0.0;
    double s3 = 0.0;
    double total = 0.0;  ///< s1 + s3; category 2 contributes nothing
    std::map<std::string, double> contributions;  ///< keyed by g string, e.g. "1,2,1,3"
};

inline constexpr std::size_t max_exact_k = 8;
inline constexpr std::size_t max_exact_n = 16;

/// Exact E (1/n) Tr (n^-1/2 Y)^k for a Gaussian matrix with the given
/// profile, assembled graph by graph. Throws DomainError if k > 8 or n > 16.
MomentBreakdown gaussian_moment_exact(const VarianceProfile& profile, std::size_t k,
                                      std::size_t threads = 1);

inline constexpr std::uint64_t max_oracle_walks = 10'000'000;

/// Brute force over every index vector in {1..n}^k, independent of the
/// graph machinery. Throws DomainError if n^k > 1e7.
double wick_moment_oracle(const VarianceProfile& profile, std::size_t k);

std::string to_string(std::span<const int> g);

}  // namespace semicircle_lab::graphs
