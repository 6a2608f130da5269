#include "semicircle_lab/moment_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "semicircle_lab/error.hpp"
#include "semicircle_lab/parallel.hpp"

namespace semicircle_lab::graphs {

bool is_restricted_growth(std::span<const int> g) noexcept
{
    if (g.empty() || g[0] != 1) {
        return false;
    }
    int running_max = 1;
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] < 1 || g[i] > running_max + 1) {
            return false;
        }
        running_max = std::max(running_max, g[i]);
    }
    return true;
}

std::vector<EdgeUse> walk_edges(std::span<const int> g)
{
    std::vector<EdgeUse> edges;
    const std::size_t k = g.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int from = g[i];
        const int to = g[(i + 1) % k];
        const int a = std::min(from, to);
        const int b = std::max(from, to);
        auto it = std::find_if(edges.begin(), edges.end(),
                               [&](const EdgeUse& e) { return e.a == a && e.b == b; });
        if (it == edges.end()) {
            edges.push_back({a, b, 0, 0});
            it = edges.end() - 1;
        }
        if (from <= to) {
            ++it->forward;
        } else {
            ++it->backward;
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const EdgeUse& x, const EdgeUse& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return edges;
}

namespace {

int vertex_count(std::span<const int> g)
{
    return *std::max_element(g.begin(), g.end());
}

int find_root(std::vector<int>& parent, int v)
{
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

bool is_doubled_tree(const std::vector<EdgeUse>& edges, int t)
{
    if (static_cast<int>(edges.size()) != t - 1) {
        return false;
    }
    std::vector<int> parent(static_cast<std::size_t>(t) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : edges) {
        if (e.is_loop() || e.forward != 1 || e.backward != 1) {
            return false;
        }
        const int ra = find_root(parent, e.a);
        const int rb = find_root(parent, e.b);
        if (ra == rb) {
            return false;
        }
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    return true;
}

int classify_edges(const std::vector<EdgeUse>& edges, int t, std::size_t k)
{
    if (k % 2 == 0 && is_doubled_tree(edges, t)) {
        return 1;
    }
    const bool odd = std::any_of(edges.begin(), edges.end(),
                                 [](const EdgeUse& e) { return e.multiplicity() % 2 != 0; });
    return odd ? 2 : 3;
}

}  // namespace

int classify(std::span<const int> g)
{
    if (!is_restricted_growth(g)) {
        throw ValidationError("classify: '" + to_string(g) + "' is not a restricted-growth string");
    }
    return classify_edges(walk_edges(g), vertex_count(g), g.size());
}

CanonicalGraph make_graph(Rgs g)
{
    if (!is_restricted_growth(g)) {
        throw ValidationError("make_graph: '" + to_string(g) + "' is not a restricted-growth string");
    }
    CanonicalGraph graph;
    graph.t = vertex_count(g);
    graph.edges = walk_edges(g);
    graph.category = classify_edges(graph.edges, graph.t, g.size());
    graph.g = std::move(g);
    return graph;
}

Rgs canonicalize(std::span<const int> walk)
{
    std::unordered_map<int, int> label;
    Rgs out;
    out.reserve(walk.size());
    for (int v : walk) {
        auto [it, inserted] = label.try_emplace(v, static_cast<int>(label.size()) + 1);
        out.push_back(it->second);
    }
    return out;
}

std::vector<CanonicalGraph> enumerate_canonical(std::size_t k)
{
    if (k < 1 || k > max_enumeration_length) {
        throw DomainError("enumerate_canonical: k must lie in [1, " +
                          std::to_string(max_enumeration_length) + "], got " + std::to_string(k));
    }
    std::vector<CanonicalGraph> out;
    Rgs g(k, 1);
    // Depth-first extension: position i may take 1..max(g[0..i-1])+1.
    auto extend = [&](auto&& self, std::size_t i, int running_max) -> void {
        if (i == k) {
            out.push_back(make_graph(g));
            return;
        }
        for (int v = 1; v <= running_max + 1; ++v) {
            g[i] = v;
            self(self, i + 1, std::max(running_max, v));
        }
    };
    extend(extend, 1, 1);
    return out;
}

CategoryCounts category_counts(std::size_t k)
{
    CategoryCounts counts;
    for (const auto& graph : enumerate_canonical(k)) {
        switch (graph.category) {
        case 1: ++counts.c1; break;
        case 2: ++counts.c2; break;
        default: ++counts.c3; break;
        }
    }
    return counts;
}

std::uint64_t class_size(std::uint64_t t, std::uint64_t n) noexcept
{
    if (t > n) {
        return 0;
    }
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < t; ++i) {
        out *= n - i;
    }
    return out;
}

double gaussian_moment(int m) noexcept
{
    if (m < 0 || m % 2 != 0) {
        return 0.0;
    }
    double out = 1.0;
    for (int j = m - 1; j > 1; j -= 2) {
        out *= j;
    }
    return out;
}

double graph_contribution(const CanonicalGraph& graph, const VarianceProfile& profile,
                          std::size_t threads)
{
    const std::size_t n = profile.size();
    const std::size_t t = static_cast<std::size_t>(graph.t);
    if (t > n) {
        return 0.0;
    }
    for (const auto& e : graph.edges) {
        if (e.multiplicity() % 2 != 0) {
            return 0.0;
        }
    }

    struct Factor {
        std::size_t a, b;  // 0-based vertex slots
        int half;          // multiplicity / 2
        double constant;   // (mult-1)!!
    };
    std::vector<Factor> factors;
    for (const auto& e : graph.edges) {
        factors.push_back({static_cast<std::size_t>(e.a - 1), static_cast<std::size_t>(e.b - 1),
                           e.multiplicity() / 2, gaussian_moment(e.multiplicity())});
    }

    // One partial sum per label of vertex 1, reduced in label order.
    std::vector<double> partial(n, 0.0);
    parallel_for(n, threads, [&](std::size_t first) {
        std::vector<std::size_t> label(t);
        std::vector<char> used(n, 0);
        label[0] = first;
        used[first] = 1;
        double sum = 0.0;
        auto assign = [&](auto&& self, std::size_t slot) -> void {
            if (slot == t) {
                double term = 1.0;
                for (const auto& f : factors) {
                    const double s2 = profile(label[f.a], label[f.b]);
                    double power = 1.0;
                    for (int h = 0; h < f.half; ++h) {
                        power *= s2;
                    }
                    term *= f.constant * power;
                }
                sum += term;
                return;
            }
            for (std::size_t v = 0; v < n; ++v) {
                if (used[v]) {
                    continue;
                }
                used[v] = 1;
                label[slot] = v;
                self(self, slot + 1);
                used[v] = 0;
            }
        };
        assign(assign, 1);
        partial[first] = sum;
    });

    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    const double k = static_cast<double>(graph.k());
    return total / std::pow(static_cast<double>(n), k / 2.0 + 1.0);
}

MomentBreakdown gaussian_moment_exact(const VarianceProfile& profile, std::size_t k,
                                      std::size_t threads)
{
    if (k < 1 || k > max_exact_k) {
        throw DomainError("gaussian_moment_exact: k must lie in [1, " + std::to_string(max_exact_k) + "]");
    }
    if (profile.size() > max_exact_n) {
        throw DomainError("gaussian_moment_exact: n must be at most " + std::to_string(max_exact_n));
    }
    MomentBreakdown out;
    out.k = k;
    for (const auto& graph : enumerate_canonical(k)) {
        const double c = graph.category == 2 ? 0.0 : graph_contribution(graph, profile, threads);
        out.contributions.emplace(to_string(graph.g), c);
        if (graph.category == 1) {
            out.s1 += c;
        } else if (graph.category == 3) {
            out.s3 += c;
        }
    }
    out.total = out.s1 + out.s3;
    return out;
}

double wick_moment_oracle(const VarianceProfile& profile, std::size_t k)
{
    const std::size_t n = profile.size();
    if (k < 1) {
        throw DomainError("wick_moment_oracle: k must be positive");
    }
    double walks = std::pow(static_cast<double>(n), static_cast<double>(k));
    if (walks > static_cast<double>(max_oracle_walks)) {
        throw DomainError("wick_moment_oracle: n^k exceeds " + std::to_string(max_oracle_walks));
    }
    if (k % 2 != 0) {
        // Some entry appears an odd number of times in every closed walk of odd length.
        return 0.0;
    }

    std::vector<std::size_t> index(k, 0);
    std::vector<std::pair<std::size_t, std::size_t>> steps(k);
    double sum = 0.0;
    while (true) {
        for (std::size_t s = 0; s < k; ++s) {
            const std::size_t a = index[s];
            const std::size_t b = index[(s + 1) % k];
            steps[s] = {std::min(a, b), std::max(a, b)};
        }
        std::sort(steps.begin(), steps.end());
        double term = 1.0;
        for (std::size_t s = 0; s < k && term != 0.0;) {
            std::size_t e = s;
            while (e < k && steps[e] == steps[s]) {
                ++e;
            }
            const int mult = static_cast<int>(e - s);
            if (mult % 2 != 0) {
                term = 0.0;
            } else {
                const double sigma2 = profile(steps[s].first, steps[s].second);
                term *= gaussian_moment(mult) * std::pow(sigma2, mult / 2);
            }
            s = e;
        }
        sum += term;

        std::size_t pos = 0;
        while (pos < k && ++index[pos] == n) {
            index[pos++] = 0;
        }
        if (pos == k) {
            break;
        }
    }
    return sum / std::pow(static_cast<double>(n), static_cast<double>(k) / 2.0 + 1.0);
}

std::string to_string(std::span<const int> g)
{
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(g[i]);
    }
    return out;
}

}  // namespace semicircle_lab::graphs
