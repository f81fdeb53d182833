#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int det(const Rows& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Rows sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(row);
        }
        Int term = m[0][c] * det(sub);
        total += (c % 2 == 0) ? term : Int(-term);
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<std::pair<long, int>> factor(long n) {
    std::vector<std::pair<long, int>> out;
    for (long q = 2; q * q <= n; ++q) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e) out.push_back({q, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

}  // namespace

std::vector<Int> invariant_factors(Rows m) {
    const std::size_t R = m.size();
    const std::size_t C = R ? m[0].size() : 0;
    std::vector<Int> diag;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::size_t pr = R, pc = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (m[i][j] != 0 && (pr == R || iabs(m[i][j]) < iabs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == R) goto done;
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
                clean = clean && m[t][j] == 0;
            }
            if (clean) break;
        }
        diag.push_back(iabs(m[t][t]));
    }
done:
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                Int g = gcd(diag[i], diag[j]);
                Int l = lcm(diag[i], diag[j]);
                if (g != diag[i] || l != diag[j]) {
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

std::vector<Int> invariant_factors_by_minors(const Rows& m) {
    const std::size_t R = m.size();
    const std::size_t C = R ? m[0].size() : 0;
    std::vector<Int> out;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(R, C); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(R, k, rs);
        subsets(C, k, cs);
        Int g = 0;
        for (const auto& ri : rs)
            for (const auto& ci : cs) {
                Rows sub(k, std::vector<Int>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
                g = gcd(g, det(sub));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<long> primary_type(const std::vector<long>& cyclic_orders) {
    std::vector<long> out;
    for (long a : cyclic_orders)
        for (auto [q, e] : factor(a)) {
            long pe = 1;
            for (int i = 0; i < e; ++i) pe *= q;
            out.push_back(pe);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> extension_type(const std::vector<long>& a, long p, std::size_t r,
                                 const std::vector<std::vector<long>>& lifts) {
    if (lifts.size() != a.size()) throw std::invalid_argument("one lift per cyclic factor");
    // coordinates: r entries mod p, then one entry mod a_i per factor
    std::vector<long> radix(r, p);
    radix.insert(radix.end(), a.begin(), a.end());
    long order = 1;
    for (long x : radix) order *= x;

    auto decode = [&](long idx) {
        std::vector<long> c(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
            c[i] = idx % radix[i];
            idx /= radix[i];
        }
        return c;
    };
    auto encode = [&](const std::vector<long>& c) {
        long idx = 0;
        for (std::size_t i = radix.size(); i-- > 0;) idx = idx * radix[i] + c[i];
        return idx;
    };
    auto plus = [&](const std::vector<long>& x, const std::vector<long>& y) {
        std::vector<long> z(radix.size());
        for (std::size_t i = 0; i < r; ++i) z[i] = x[i] + y[i];
        for (std::size_t i = 0; i < a.size(); ++i) {
            long s = x[r + i] + y[r + i];
            if (s >= a[i]) {
                s -= a[i];
                for (std::size_t k = 0; k < r; ++k) z[k] += lifts[i][k];
            }
            z[r + i] = s;
        }
        for (std::size_t i = 0; i < r; ++i) z[i] %= p;
        return z;
    };

    std::map<long, long> count_by_order;
    for (long idx = 0; idx < order; ++idx) {
        const auto g = decode(idx);
        auto acc = g;
        long k = 1;
        while (encode(acc) != 0) {
            acc = plus(acc, g);
            ++k;
        }
        ++count_by_order[k];
    }

    std::vector<long> out;
    for (auto [q, e_total] : factor(order)) {
        // c[k] = log_q #{g : q^k g = 0} - log_q #{g : q^(k-1) g = 0} = #{summands of exponent >= k}
        std::vector<int> logs{0};
        for (long qk = q;; qk *= q) {
            long n = 0;
            for (auto [ord, cnt] : count_by_order)
                if (qk % ord == 0) n += cnt;
            int lg = 0;
            while (n > 1) {
                n /= q;
                ++lg;
            }
            if (lg == logs.back()) break;
            logs.push_back(lg);
            if (lg == e_total) break;
        }
        std::vector<int> c;
        for (std::size_t k = 1; k < logs.size(); ++k) c.push_back(logs[k] - logs[k - 1]);
        c.push_back(0);
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            long pe = 1;
            for (std::size_t i = 0; i <= k; ++i) pe *= q;
            for (int j = 0; j < c[k] - c[k + 1]; ++j) out.push_back(pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long>> finite_groups_up_to(long bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long base, long prod) {
        out.push_back(cur);
        for (long d = base; prod * d <= bound; d += base) {
            if (d < 2) continue;
            cur.push_back(d);
            rec(d, prod * d);
            cur.pop_back();
        }
    };
    rec(1, 1);
    return out;
}

std::vector<long> stem(int k) {
    switch (k) {
        case 0: return {0};
        case 1: return {2};
        case 2: return {2};
        case 3: return {24};
        case 6: return {2};
        case 7: return {240};
        default: return {};
    }
}

}  // namespace oracle
