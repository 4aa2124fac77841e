#pragma once

#include "bsgeo/digit_vector.hpp"

#include <functional>
#include <vector>

namespace bsgeo::testing {

/// Exhaustively enumerates box vectors: digits bounded by floor(n/2) except
/// the final digit, which may reach the tail bound once last_index >=
/// max(u,w); only vectors with |sigma| <= vcap and last_index <= K are
/// produced.  The zero vector is always emitted first.
inline void enumerate_box(int n, long long max_uw, long long K, const Int& vcap,
                          const std::function<void(const DigitVector&)>& emit) {
    const int fl = n / 2;
    const int tail = n == 2 ? fl + 2 : fl + 1;
    DigitVector zero;
    zero.n = n;
    emit(zero);

    std::vector<Int> pow(K + 2), lowmax(K + 2);
    pow[0] = 1;
    for (long long i = 1; i <= K + 1; ++i) pow[i] = pow[i - 1] * n;
    lowmax[0] = 0;
    for (long long i = 1; i <= K + 1; ++i) lowmax[i] = lowmax[i - 1] + Int(fl) * pow[i - 1];

    std::vector<int> buf;
    std::function<void(long long, const Int&)> dfs = [&](long long pos, const Int& partial) {
        if (pos < 0) {
            if (abs(partial) <= vcap) {
                std::vector<int> digits(buf.rbegin(), buf.rend());
                emit(DigitVector(std::move(digits), n));
            }
            return;
        }
        if (abs(partial) - lowmax[pos + 1] > vcap) return;
        for (int d = -fl; d <= fl; ++d) {
            buf.push_back(d);
            dfs(pos - 1, partial + Int(d) * pow[pos]);
            buf.pop_back();
        }
    };

    for (long long k = 0; k <= K; ++k) {
        int top = k >= max_uw ? tail : fl;
        for (int d = -top; d <= top; ++d) {
            if (d == 0) continue;
            buf.assign(1, d);
            dfs(k - 1, Int(d) * pow[k]);
            buf.clear();
        }
    }
}

} // namespace bsgeo::testing
