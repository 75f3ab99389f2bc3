#pragma once

#include "ccm/path_search.hpp"
#include "oracles.hpp"

#include <vector>

namespace fixture {

inline ccm::PotentialTorus<double> to_torus(const oracle::Grid& g)
{
    ccm::PotentialTorus<double> v(Eigen::Index(g.size()), Eigen::Index(g.front().size()));
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j)
            v(i, j) = g[std::size_t(i)][std::size_t(j)];
    return v;
}

inline oracle::Grid filled(int rows, int cols, double value)
{
    return oracle::Grid(std::size_t(rows), std::vector<double>(std::size_t(cols), value));
}

// A cheap branch leads off the valley floor into a dead end; the greedy walk takes
// it, a lookahead of 6 sees past it.
inline oracle::Grid dead_end_valley()
{
    auto g = filled(12, 12, 20);
    for (std::size_t k = 0; k < 12; ++k)
        g[k][k] = 2;
    g[0][0] = 0.5;
    g[3][2] = g[4][2] = g[5][2] = 1;
    return g;
}

// The global minimum is an isolated cell away from the cheap diagonal cycle.
inline oracle::Grid isolated_minimum()
{
    auto g = filled(12, 12, 20);
    for (std::size_t k = 0; k < 12; ++k)
        g[k][k] = 2;
    g[5][0] = 0;
    return g;
}

// Zero-valued cycle that wraps twice in i for every wrap in j.
inline oracle::Grid two_to_one()
{
    auto g = filled(6, 6, 5);
    const int cells[][2] = {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2},
                            {0, 3}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 5}};
    for (auto [i, j] : cells)
        g[std::size_t(i)][std::size_t(j)] = 0;
    return g;
}

// Descending diagonal groove: V(k, k) = 6 - k, 10 elsewhere.
inline oracle::Grid groove()
{
    auto g = filled(6, 6, 10);
    for (std::size_t k = 0; k < 6; ++k)
        g[k][k] = double(6 - k);
    return g;
}

} // namespace fixture
