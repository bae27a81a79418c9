#pragma once

#include "efm/recovery.hpp"
#include "efm/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace efm::testing {

inline Weight W(std::initializer_list<int> twice)
{
    Weight w;
    for (int t : twice)
        w.push_back(HalfInt::from_twice(t));
    return w;
}

inline Weight Wi(std::initializer_list<int> ints)
{
    Weight w;
    for (int v : ints)
        w.push_back(HalfInt::from_int(v));
    return w;
}

inline std::vector<Weight> sorted(std::vector<Weight> ws)
{
    std::sort(ws.begin(), ws.end());
    return ws;
}

// Partitions with at most max_len parts, each part at most max_part, and total at most max_size.
inline std::vector<Partition> small_partitions(int max_len, int max_part, int max_size)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int cap, int left) {
        out.push_back(Partition(cur));
        if (static_cast<int>(cur.size()) == max_len)
            return;
        for (int v = 1; v <= std::min(cap, left); ++v) {
            cur.push_back(v);
            rec(v, left - v);
            cur.pop_back();
        }
    };
    rec(max_part, max_size);
    return out;
}

// Valid parameter sets with p <= q, p+q <= maxN, a,b <= max_ab, |xi| <= max_xi and 1 <= n <= max_n,
// in a fixed order. Dimension is filtered by the caller.
inline std::vector<EfmParameters> parameter_grid(int maxN, int max_ab, int max_xi, int max_n)
{
    std::vector<EfmParameters> out;
    for (int N = 2; N <= maxN; ++N)
        for (int p = 1; 2 * p <= N; ++p) {
            const int q = N - p;
            for (int a = 0; a <= max_ab; ++a)
                for (int b = 0; b <= max_ab; ++b)
                    for (const Partition& xi : small_partitions(N - 1, a + b, max_xi)) {
                        const int n = p * a + q * b - xi.size();
                        if (n < 1 || n > max_n)
                            continue;
                        out.push_back(make_parameters(n, p, q, a, b, xi));
                    }
        }
    return out;
}

} // namespace efm::testing
