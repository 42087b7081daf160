#include "exgroup/families.hpp"

#include <array>
#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace exg {

Group cyclic_group(int n) {
    require(n >= 1, errc::invalid_parameters, "cyclic order must be positive");
    std::vector<std::int32_t> t(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a) * size_t(n) + size_t(b)] = (a + b) % n;
    return group_from_cayley_table(n, std::move(t));
}

Group dihedral_group(int m) {
    require(m >= 1, errc::invalid_parameters, "dihedral parameter must be positive");
    const int n = 2 * m;
    // index r + m*s for rotation r, reflection flag s
    auto idx = [m](int r, int s) { return r + m * s; };
    std::vector<std::int32_t> t(size_t(n) * size_t(n));
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < 2; ++s)
            for (int r2 = 0; r2 < m; ++r2)
                for (int s2 = 0; s2 < 2; ++s2) {
                    const int rr = ((s ? r - r2 : r + r2) % m + m) % m;
                    t[size_t(idx(r, s)) * size_t(n) + size_t(idx(r2, s2))] =
                        std::int32_t(idx(rr, (s + s2) % 2));
                }
    return group_from_cayley_table(n, std::move(t));
}

Group elementary_abelian_group(int p, int k) {
    require(p >= 2 && k >= 1, errc::invalid_parameters, "need p >= 2, k >= 1");
    int n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    require(n <= 8192, errc::too_large, "elementary abelian group too large");
    std::vector<std::int32_t> t(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = a, y = b, pw = 1, sum = 0;
            for (int i = 0; i < k; ++i) {
                sum += (x % p + y % p) % p * pw;
                x /= p;
                y /= p;
                pw *= p;
            }
            t[size_t(a) * size_t(n) + size_t(b)] = std::int32_t(sum);
        }
    return group_from_cayley_table(n, std::move(t));
}

Group quaternion_group() {
    // elements: sign*unit with units 1,i,j,k -> indices 0..7 as (unit, sign)
    // unit products with sign: i*j=k, j*k=i, k*i=j, u*u=-1 for u != 1
    static const int unit_mul[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    static const int sign_mul[4][4] = {
        {+1, +1, +1, +1},
        {+1, -1, +1, -1},
        {+1, -1, -1, +1},
        {+1, +1, -1, -1},
    };
    auto idx = [](int unit, int sign) { return unit * 2 + (sign < 0 ? 1 : 0); };
    const int n = 8;
    std::vector<std::int32_t> t(size_t(n) * size_t(n));
    for (int u = 0; u < 4; ++u)
        for (int su : {+1, -1})
            for (int v = 0; v < 4; ++v)
                for (int sv : {+1, -1})
                    t[size_t(idx(u, su)) * size_t(n) + size_t(idx(v, sv))] =
                        std::int32_t(idx(unit_mul[u][v], su * sv * sign_mul[u][v]));
    return group_from_cayley_table(n, std::move(t));
}

Group alternating_group_4() {
    using Perm = std::array<int, 4>;
    std::vector<Perm> elems;
    Perm p{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<Perm, int> pos;
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = int(i);
    const int n = int(elems.size());
    std::vector<std::int32_t> t(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Perm c;
            for (int x = 0; x < 4; ++x) c[size_t(x)] = elems[size_t(a)][size_t(elems[size_t(b)][size_t(x)])];
            t[size_t(a) * size_t(n) + size_t(b)] = std::int32_t(pos.at(c));
        }
    return group_from_cayley_table(n, std::move(t));
}

Group direct_product(const Group& a, const Group& b) {
    const int n = a.n * b.n;
    require(n <= 8192, errc::too_large, "direct product too large");
    std::vector<std::int32_t> t(size_t(n) * size_t(n));
    auto idx = [&b](int x, int y) { return x * b.n + y; };
    for (int xa = 0; xa < a.n; ++xa)
        for (int ya = 0; ya < b.n; ++ya)
            for (int xb = 0; xb < a.n; ++xb)
                for (int yb = 0; yb < b.n; ++yb)
                    t[size_t(idx(xa, ya)) * size_t(n) + size_t(idx(xb, yb))] =
                        std::int32_t(idx(a.mul(xa, xb), b.mul(ya, yb)));
    return group_from_cayley_table(n, std::move(t));
}

Group semidirect_cyclic(int m, int k, int a) {
    require(m >= 1 && k >= 1, errc::invalid_parameters, "orders must be positive");
    std::int64_t ak = 1;
    for (int i = 0; i < k; ++i) ak = ak * a % m;
    require(ak % m == 1 % m, errc::invalid_parameters,
            "action " + std::to_string(a) + " has order not dividing " + std::to_string(k));
    const int n = m * k;
    // (i,j)*(i',j') = (i + a^j i', j + j')
    std::vector<int> apow(static_cast<size_t>(k), 0);
    std::int64_t cur = 1;
    for (int j = 0; j < k; ++j) {
        apow[size_t(j)] = int(cur);
        cur = cur * a % m;
    }
    std::vector<std::int32_t> t(size_t(n) * size_t(n));
    auto idx = [k](int i, int j) { return i * k + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < k; ++j2)
                    t[size_t(idx(i, j)) * size_t(n) + size_t(idx(i2, j2))] = std::int32_t(
                        idx(int((i + std::int64_t(apow[size_t(j)]) * i2) % m), (j + j2) % k));
    return group_from_cayley_table(n, std::move(t));
}

} // namespace exg
