#include "binom/affine_orbits.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "binom/factor.hpp"

namespace binom {

namespace {

long mod_reduce(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

long inv_mod_l(long a, long n) {
    // extended Euclid; caller guarantees gcd(a, n) = 1
    long r0 = n, r1 = mod_reduce(a, n), s0 = 0, s1 = 1;
    while (r1) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return mod_reduce(s0, n);
}

} // namespace

AffineElem::AffineElem(long n_, long a_, long b_) : n(n_) {
    if (n < 1) throw std::domain_error("AffineElem: modulus must be >= 1");
    a = mod_reduce(a_, n);
    b = mod_reduce(b_, n);
    if (gcd_l(a, n) != 1) throw std::domain_error("AffineElem: a must be a unit mod n");
}

AffineElem AffineElem::compose(const AffineElem& o) const {
    if (n != o.n) throw std::domain_error("AffineElem: modulus mismatch");
    return AffineElem(n, a * o.a, a * o.b + b);
}

AffineElem AffineElem::inverse() const {
    long ai = inv_mod_l(a, n);
    return AffineElem(n, ai, -ai * b);
}

SPoint::SPoint(long n_, long j_) : n(n_) {
    if (n < 1) throw std::domain_error("SPoint: modulus must be >= 1");
    j = mod_reduce(j_, n);
}

SPoint act(const AffineElem& g, const SPoint& v) {
    if (g.n != v.n) throw std::domain_error("act: modulus mismatch");
    return SPoint(g.n, g.a * v.j + g.b);
}

AffineSubgroup subgroup_closure(long n, const std::vector<AffineElem>& generators) {
    if (n < 1) throw std::domain_error("subgroup_closure: modulus must be >= 1");
    std::set<AffineElem> closed;
    closed.insert(AffineElem::identity(n));
    std::vector<AffineElem> frontier(closed.begin(), closed.end());
    std::vector<AffineElem> gens;
    for (const auto& g : generators) {
        if (g.n != n) throw std::domain_error("subgroup_closure: modulus mismatch");
        gens.push_back(g);
        gens.push_back(g.inverse());
    }
    while (!frontier.empty()) {
        std::vector<AffineElem> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                AffineElem p = g.compose(e);
                if (closed.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return AffineSubgroup{n, std::vector<AffineElem>(closed.begin(), closed.end())};
}

AffineSubgroup full_group(long n) {
    std::set<AffineElem> all;
    for (long a = 0; a < n || (n == 1 && a == 0); ++a) {
        if (n > 1 && gcd_l(a, n) != 1) continue;
        long au = n == 1 ? 0 : a;
        for (long b = 0; b < n; ++b) all.insert(AffineElem(n, au, b));
        if (n == 1) break;
    }
    return AffineSubgroup{n, std::vector<AffineElem>(all.begin(), all.end())};
}

std::vector<AffineSubgroup> enumerate_subgroups(long n) {
    if (n < 1) throw std::domain_error("enumerate_subgroups: modulus must be >= 1");
    if (n > global_config().group_bound)
        throw std::domain_error("enumerate_subgroups: modulus exceeds configured bound");
    AffineSubgroup U = full_group(n);
    const int N = (int)U.order();
    std::vector<int> at((size_t)n * n, -1);
    for (int i = 0; i < N; ++i) at[(size_t)U.elements[i].a * n + U.elements[i].b] = i;
    std::vector<uint16_t> comp((size_t)N * N);
    for (int g = 0; g < N; ++g)
        for (int e = 0; e < N; ++e) {
            AffineElem p = U.elements[g].compose(U.elements[e]);
            comp[(size_t)g * N + e] = (uint16_t)at[(size_t)p.a * n + p.b];
        }
    const uint16_t id = (uint16_t)at[(size_t)(1 % n) * n];

    // generated subgroup as a sorted index list (finite group: left
    // multiplication closure from the identity suffices)
    auto closure_idx = [&](const std::vector<uint16_t>& gens) {
        std::vector<char> in(N, 0);
        std::vector<uint16_t> mem{id};
        in[id] = 1;
        for (size_t k = 0; k < mem.size(); ++k)
            for (uint16_t g : gens) {
                uint16_t t = comp[(size_t)g * N + mem[k]];
                if (!in[t]) {
                    in[t] = 1;
                    mem.push_back(t);
                }
            }
        std::sort(mem.begin(), mem.end());
        return mem;
    };

    // canonical ascending generating chain: repeatedly adjoin the smallest
    // missing element; the chain depends only on the subgroup, so expanding
    // each subgroup with candidates above its last chain generator reaches
    // every subgroup exactly once
    auto greedy_gens = [&](const std::vector<uint16_t>& S) {
        std::vector<uint16_t> gens;
        std::vector<uint16_t> cur = closure_idx(gens);
        while (cur.size() < S.size()) {
            size_t i = 0, j = 0;
            while (j < cur.size() && S[i] == cur[j]) {
                ++i;
                ++j;
            }
            gens.push_back(S[i]);
            cur = closure_idx(gens);
        }
        return gens;
    };

    struct Node {
        std::vector<uint16_t> elems;
        std::vector<uint16_t> gens;
        int last;
    };
    std::set<std::vector<uint16_t>> seen;
    std::vector<Node> work;
    std::vector<uint16_t> triv = closure_idx({});
    seen.insert(triv);
    work.push_back({triv, {}, -1});
    for (size_t w = 0; w < work.size(); ++w) {
        Node node = work[w]; // copy: work may reallocate
        for (int g = node.last + 1; g < N; ++g) {
            if (std::binary_search(node.elems.begin(), node.elems.end(), (uint16_t)g)) continue;
            std::vector<uint16_t> gens2(node.gens);
            gens2.push_back((uint16_t)g);
            std::vector<uint16_t> T = closure_idx(gens2);
            if (!seen.insert(T).second) continue;
            std::vector<uint16_t> cgens = greedy_gens(T);
            int last = cgens.empty() ? -1 : cgens.back();
            work.push_back({std::move(T), std::move(cgens), last});
        }
    }

    std::vector<AffineSubgroup> out;
    out.reserve(seen.size());
    for (const auto& S : seen) {
        std::vector<AffineElem> elems;
        elems.reserve(S.size());
        for (uint16_t i : S) elems.push_back(U.elements[i]);
        out.push_back(AffineSubgroup{n, std::move(elems)});
    }
    std::sort(out.begin(), out.end(), [](const AffineSubgroup& x, const AffineSubgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elements < y.elements;
    });
    return out;
}

OrbitReport orbit_report(const AffineSubgroup& G) {
    long n = G.n;
    std::vector<char> visited(n, 0);
    OrbitReport rep{G, {}, LONG_MAX, true};
    for (long j = 0; j < n; ++j) {
        if (visited[j]) continue;
        std::set<long> orbit;
        for (const auto& g : G.elements) orbit.insert(act(g, SPoint(n, j)).j);
        for (long k : orbit) visited[k] = 1;
        rep.orbits.emplace_back(orbit.begin(), orbit.end());
        rep.lambda = std::min(rep.lambda, (long)orbit.size());
    }
    for (const auto& orb : rep.orbits)
        if ((long)orb.size() % rep.lambda != 0) rep.divisibility_ok = false;
    if (n % rep.lambda != 0)
        throw std::logic_error("orbit_report: minimal orbit size does not divide n");
    return rep;
}

std::optional<SPoint> prime_power_fixed_point(const AffineElem& g) {
    long n = g.n;
    long p = 0;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) { p = d; break; }
    if (p == 0) p = n;
    if (p < 3 || !is_prime_l(p)) throw std::domain_error("prime_power_fixed_point: modulus must be an odd prime power");
    for (long m = n; m > 1; m /= p)
        if (m % p != 0) throw std::domain_error("prime_power_fixed_point: modulus must be an odd prime power");
    long am1 = mod_reduce(g.a - 1, n);
    if (gcd_l(am1, n) != 1) return std::nullopt;
    long j = mod_reduce(-g.b * inv_mod_l(am1, n), n);
    return SPoint(n, j);
}

AffineSubgroup reduce_subgroup(const AffineSubgroup& G, long m) {
    if (m < 1 || G.n % m != 0) throw std::domain_error("reduce_subgroup: m must divide n");
    std::set<AffineElem> red;
    for (const auto& g : G.elements) red.insert(AffineElem(m, g.a, g.b));
    return AffineSubgroup{m, std::vector<AffineElem>(red.begin(), red.end())};
}

bool crt_relations_check(const AffineSubgroup& G, long m, long q) {
    long n = G.n;
    if (m < 1 || q < 1 || m * q != n || gcd_l(m, q) != 1)
        throw std::domain_error("crt_relations_check: invalid coprime factorization");
    if (q > 1) {
        long p = 2;
        while (q % p != 0) ++p;
        for (long t = q; t > 1; t /= p)
            if (t % p != 0) throw std::domain_error("crt_relations_check: q must be a prime power");
    }

    AffineSubgroup Gm = reduce_subgroup(G, m);
    AffineSubgroup Gq = reduce_subgroup(G, q);

    // reductions are homomorphisms
    for (const auto& x : G.elements)
        for (const auto& y : G.elements) {
            AffineElem xy = x.compose(y);
            if (!(AffineElem(m, x.a, x.b).compose(AffineElem(m, y.a, y.b)) ==
                  AffineElem(m, xy.a, xy.b)))
                return false;
            if (!(AffineElem(q, x.a, x.b).compose(AffineElem(q, y.a, y.b)) ==
                  AffineElem(q, xy.a, xy.b)))
                return false;
        }

    auto orbit_size = [](const AffineSubgroup& H, long j) {
        std::set<long> orb;
        for (const auto& g : H.elements) orb.insert(act(g, SPoint(H.n, j)).j);
        return (long)orb.size();
    };

    for (long j = 0; j < n; ++j) {
        long s = orbit_size(G, j);
        long sm = orbit_size(Gm, j % m);
        long sq = orbit_size(Gq, j % q);
        if (s % lcm_l(sm, sq) != 0) return false;
        if (s > sm * sq) return false;
    }
    return orbit_report(G).lambda == orbit_report(Gm).lambda * orbit_report(Gq).lambda;
}

} // namespace binom
