#include "ment/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ment {

namespace {

using Poly = std::vector<Rational>; // low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_div(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    Poly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return q;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

std::size_t sign_changes(const std::vector<Poly>& chain, const Rational& x) {
    std::size_t n = 0;
    int last = 0;
    for (const Poly& p : chain) {
        int s = sign(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++n;
        last = s;
    }
    return n;
}

SpectralResult exact_radius(const Graph& g, double tol) {
    std::size_t n = g.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : g[i]) a[i][j] += 1;
    Poly p;
    for (const Int& c : characteristic_polynomial(a)) p.push_back(Rational(c));
    Poly sq = poly_div(p, poly_gcd(p, derivative(p)));
    Rational lead = sq.back();
    for (Rational& c : sq) c /= lead;

    std::vector<Poly> chain{sq, derivative(sq)};
    while (true) {
        Poly r = poly_mod(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (Rational& c : r) c = -c;
        chain.push_back(r);
    }
    // Cauchy bound on the roots.
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < sq.size(); ++i) bound = std::max(bound, abs(sq[i]));
    bound += 1;
    std::size_t v_hi = sign_changes(chain, bound);
    auto roots_above = [&](const Rational& x) { return sign_changes(chain, x) - v_hi; };

    Rational lo = 0, hi = bound;
    if (roots_above(lo) == 0 && eval(sq, lo) != 0) return SpectralResult{1, 0, "acyclic"};
    Rational width(Int(1), Int(1) << 60);
    Rational tol_r = tol > 0 ? Rational(tol) : width;
    while (hi - lo > tol_r / 4 && hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (roots_above(mid) > 0) lo = mid;
        else hi = mid;
    }
    double mid = static_cast<double>((lo + hi) / 2);
    Rational guess(static_cast<long long>(std::llround(mid)));
    if (eval(sq, guess) == 0 && roots_above(guess) == 0)
        return SpectralResult{std::max(1.0, guess.convert_to<double>()), 0, "charpoly"};
    if (mid < 1) return SpectralResult{1, 0, "acyclic"};
    return SpectralResult{mid, static_cast<double>((hi - lo) / 2), "charpoly"};
}

// Tarjan's strongly connected components.
std::vector<std::vector<std::size_t>> components(const Graph& g) {
    std::size_t n = g.size(), counter = 0;
    std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
    std::vector<bool> on(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on[v] = true;
        for (std::size_t w : g[v]) {
            if (index[w] == SIZE_MAX) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on[w] = false;
                comp.push_back(w);
            } while (w != v);
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] == SIZE_MAX) visit(v);
    return out;
}

// Perron root of one strongly connected component via A^d on a cyclic class,
// bracketed by the Collatz-Wielandt ratios.
SpectralResult component_radius(const Graph& g, const std::vector<std::size_t>& comp, double tol,
                                std::size_t max_iter) {
    std::size_t n = g.size();
    std::vector<long> local(n, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<long>(i);
    std::size_t m = comp.size();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t w : g[comp[i]])
            if (local[w] >= 0) adj[i].push_back(static_cast<std::size_t>(local[w]));

    std::vector<long> level(m, -1);
    level[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (std::size_t w : adj[queue[h]])
            if (level[w] < 0) {
                level[w] = level[queue[h]] + 1;
                queue.push_back(w);
            }
    long d = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t w : adj[i]) d = std::gcd(d, std::labs(level[i] + 1 - level[w]));
    if (d == 0) d = 1;

    std::vector<double> x(m, 0.0), y(m);
    for (std::size_t i = 0; i < m; ++i)
        if (level[i] % d == 0) x[i] = 1.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        std::vector<double> cur = x;
        for (long s = 0; s < d; ++s) {
            std::fill(y.begin(), y.end(), 0.0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t w : adj[i]) y[i] += cur[w];
            cur.swap(y);
        }
        double lo = INFINITY, hi = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (level[i] % d != 0) continue;
            double r = cur[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        double rlo = std::pow(lo, 1.0 / static_cast<double>(d)), rhi = std::pow(hi, 1.0 / static_cast<double>(d));
        if (rhi - rlo <= tol) return SpectralResult{(rlo + rhi) / 2, (rhi - rlo) / 2, "power"};
        double scale = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (level[i] % d == 0) scale = std::max(scale, cur[i]);
        for (std::size_t i = 0; i < m; ++i) x[i] = level[i] % d == 0 ? cur[i] / scale : 0.0;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge in " + std::to_string(max_iter) +
                             " iterations");
}

} // namespace

std::vector<Int> characteristic_polynomial(const std::vector<std::vector<Int>>& a) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    std::size_t n = a.size();
    std::vector<Int> c(n + 1, 0);
    c[n] = 1;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0)), am(n, std::vector<Int>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int s = 0;
                if (k > 1)
                    for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                if (i == j) s += c[n - k + 1];
                am[i][j] = s;
            }
        m = am;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

SpectralResult spectral_radius(const Graph& g, double tol, std::size_t max_iter, std::size_t exact_max_dim) {
    if (g.empty()) return SpectralResult{1, 0, "acyclic"};
    if (g.size() <= exact_max_dim) return exact_radius(g, tol);
    SpectralResult best{1, 0, "acyclic"};
    for (const auto& comp : components(g)) {
        bool cyclic = comp.size() > 1 || std::count(g[comp[0]].begin(), g[comp[0]].end(), comp[0]) > 0;
        if (!cyclic) continue;
        SpectralResult r = component_radius(g, comp, tol, max_iter);
        if (best.method == "acyclic" || r.radius > best.radius) best = r;
    }
    return best;
}

} // namespace ment
