#pragma once

#include "cendiv/matrix.hpp"
#include "cendiv/numeric.hpp"

namespace cendiv::testing {

// Jordan block J_n(lambda), eigenvalue given as an integer.
inline MatrixExact jordan(const Field& f, int n, std::int64_t lambda) {
    MatrixExact m(f, n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, f.from_integer(lambda));
        if (i + 1 < n) m.set(i, i + 1, f.one());
    }
    return m;
}

inline MatrixExact random_matrix(const Field& f, int n, SplitMix64& rng, int q_span = 7) {
    MatrixExact m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (f.is_rationals()) {
                m.set(i, j, f.from_integer(static_cast<std::int64_t>(rng.below(q_span)) - q_span / 2));
            } else {
                GFVec v(f.extension_degree());
                for (auto& c : v) c = static_cast<std::int64_t>(rng.below(f.p()));
                m.set(i, j, std::move(v));
            }
        }
    return m;
}

inline MatrixExact random_invertible(const Field& f, int n, SplitMix64& rng) {
    for (;;) {
        MatrixExact u = random_matrix(f, n, rng);
        if (u.rank() == n) return u;
    }
}

// All strictly decreasing sequences with entries in [1, max_entry] and length
// in [1, max_len].
inline std::vector<std::vector<int>> decreasing_sequences(int max_entry, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next_max) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int v = next_max; v >= 1; --v) {
            cur.push_back(v);
            self(self, v - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_entry);
    return out;
}

} // namespace cendiv::testing
