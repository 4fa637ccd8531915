#include <doctest.h>

#include "ment/realline.hpp"
#include "ment/veins.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace ment;

namespace {

Angle A(long p, long q) { return Angle(p, q); }

// Independent orbit of the rotation cycle: angles whose expansion is the
// Sturmian coding of x -> x + p/q.
std::vector<Angle> rotation_cycle(long p, long q) {
    std::string bits;
    for (long k = 1; k <= q; ++k) bits.push_back((k * p) % q == 0 || (k * p) % q > q - p ? '1' : '0');
    std::vector<Angle> out;
    for (long s = 0; s < q; ++s) out.push_back(from_expansion("", bits.substr(s) + bits.substr(0, s)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Angle random_angle(std::mt19937_64& rng, long max_den) {
    long q = std::uniform_int_distribution<long>(2, max_den)(rng);
    long p = std::uniform_int_distribution<long>(0, q - 1)(rng);
    return A(p, q);
}

bool oracle_real_H(const Angle& t, const Angle& tc) { return member(SetKind::Htree, t, tc); }

} // namespace

TEST_CASE("orbit portrait examples") {
    OrbitPortrait P = orbit_portrait(2, 5);
    CHECK(P.theta0 == A(9, 31));
    CHECK(P.theta1 == A(10, 31));
    CHECK(P.sigma0 == "0100");
    CHECK(P.sigma1 == "0101");
    CHECK(P.tau == A(5, 16));
    CHECK(P.Theta0 == parse_angle("0.(10100)"));
    CHECK(P.Theta1 == parse_angle("0.(00101)"));
    REQUIRE(P.angles.size() == 5);
    OrbitPortrait Q = orbit_portrait(1, 3);
    CHECK(Q.theta0 == A(1, 7));
    CHECK(Q.theta1 == A(2, 7));
    CHECK(Q.tau == A(1, 4));
    CHECK(Q.forbidden.size() == 1);
    OrbitPortrait B = orbit_portrait(1, 2);
    CHECK(B.theta0 == A(1, 3));
    CHECK(B.theta1 == A(2, 3));
    CHECK(B.forbidden.empty());
    CHECK_THROWS_AS(orbit_portrait(2, 4), PreconditionError);
    CHECK_THROWS_AS(orbit_portrait(0, 3), PreconditionError);
    CHECK_THROWS_AS(orbit_portrait(3, 3), PreconditionError);
}

TEST_CASE("portrait angles are a cycle rotated by p/q") {
    for (long q = 2; q <= 12; ++q)
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            OrbitPortrait P = orbit_portrait(p, q);
            REQUIRE(P.angles == rotation_cycle(p, q));
            for (long i = 0; i < q; ++i)
                REQUIRE(double_angle(P.angles[i]) == P.angles[(i + p) % q]);
            // θ0 and θ1 bound the arc containing the critical value side.
            auto i0 = std::find(P.angles.begin(), P.angles.end(), P.theta0) - P.angles.begin();
            REQUIRE(P.angles[(i0 + 1) % q] == P.theta1);
            REQUIRE(P.deltas[1].from == P.theta0);
            REQUIRE(P.deltas[1].to == P.theta1);
            REQUIRE(P.deltas[0].contains(Angle()));
            // The Δ_i are distinct complementary arcs; Δ_1 is the shortest.
            std::set<Rational> starts;
            for (const Arc& d : P.deltas) starts.insert(d.from.value());
            REQUIRE(starts.size() == static_cast<std::size_t>(q));
            for (long i = 2; i < q; ++i) REQUIRE(P.deltas[i].length() == 2 * P.deltas[i - 1].length());
            REQUIRE(P.forbidden.size() == static_cast<std::size_t>(q - 2));
        }
}

TEST_CASE("surgery examples") {
    OrbitPortrait P3 = orbit_portrait(1, 3);
    CHECK(surgery(P3, A(1, 2)) == A(1, 4));
    CHECK(surgery(P3, A(1, 3)) == A(1, 7));
    CHECK(surgery(P3, A(2, 3)) == A(2, 7));
    CHECK(surgery(P3, A(0, 1)) == A(0, 1));
    OrbitPortrait P5 = orbit_portrait(2, 5);
    Leaf l = vein_leaf(P5, A(3, 7));
    CHECK(l.a == A(19, 63));
    CHECK(l.b == A(20, 63));
    OrbitPortrait P2 = orbit_portrait(1, 2);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Angle t = random_angle(rng, 300);
        REQUIRE(surgery(P2, t) == t);
    }
}

TEST_CASE("surgery is strictly increasing") {
    std::mt19937_64 rng(11);
    for (auto [p, q] : {std::pair{1L, 3L}, std::pair{2L, 5L}}) {
        OrbitPortrait P = orbit_portrait(p, q);
        for (int i = 0; i < 10000; ++i) {
            Angle x = random_angle(rng, 200), y = random_angle(rng, 200);
            if (x == y) continue;
            if (y < x) std::swap(x, y);
            REQUIRE(surgery(P, x) < surgery(P, y));
        }
    }
}

TEST_CASE("inverse surgery undoes surgery") {
    std::mt19937_64 rng(13);
    for (auto [p, q] : {std::pair{1L, 3L}, std::pair{2L, 5L}, std::pair{3L, 7L}}) {
        OrbitPortrait P = orbit_portrait(p, q);
        for (int i = 0; i < 1000; ++i) {
            Angle t = random_angle(rng, 200);
            REQUIRE(surgery_inverse(P, surgery(P, t)) == t);
        }
    }
    OrbitPortrait P3 = orbit_portrait(1, 3);
    CHECK(surgery_inverse(P3, A(1, 4)) == A(1, 2));
    // 1/2 sits in a forbidden gap for the 1/3 limb.
    CHECK_THROWS_AS(surgery_inverse(P3, A(1, 2)), PreconditionError);
}

TEST_CASE("surgery commutes with renormalization") {
    std::mt19937_64 rng(17);
    std::vector<Tuning> ws = {basilica_tuning(), {"011", "100"}, {"0111", "1000"}, {"01101", "10010"}};
    for (auto [p, q] : {std::pair{1L, 3L}, std::pair{2L, 5L}, std::pair{1L, 4L}}) {
        OrbitPortrait P = orbit_portrait(p, q);
        for (const Tuning& w : ws) {
            Tuning image{expansion(surgery(P, from_expansion("", w.sigma0))).period,
                         expansion(surgery(P, from_expansion("", w.sigma1))).period};
            REQUIRE(image.sigma0.size() == image.sigma1.size());
            for (int i = 0; i < 200; ++i) {
                Angle t = random_angle(rng, 150);
                REQUIRE(surgery(P, tune(w, t)) == tune(image, t));
            }
        }
    }
}

TEST_CASE("minor leaves") {
    CHECK(is_minor_leaf(Leaf(A(1, 3), A(2, 3))));
    CHECK(is_minor_leaf(Leaf(A(1, 7), A(2, 7))));
    CHECK(is_minor_leaf(Leaf(A(1, 4), A(1, 4))));
    CHECK_FALSE(is_minor_leaf(Leaf(A(1, 5), A(2, 5))));
    // A symmetric leaf is minor exactly when θ is a real parameter angle.
    for (long q = 2; q <= 64; ++q)
        for (long p = 1; p < q; ++p) {
            Angle t(p, q);
            REQUIRE(is_minor_leaf(Leaf(t, reflect(t))) == member(SetKind::Real, t));
        }
}

TEST_CASE("surgery carries real window leaves to minor leaves") {
    for (auto [p, q] : {std::pair{1L, 3L}, std::pair{2L, 5L}})
        for (const Window& w : enumerate_windows(4)) {
            OrbitPortrait P = orbit_portrait(p, q);
            for (const Angle& t : {w.lo, w.hi}) {
                if (t.is_zero()) continue;
                Leaf l = vein_leaf(P, t);
                REQUIRE(is_minor_leaf(l));
                REQUIRE(vein_leaf_from_angle(P, l.a) == l);
            }
        }
}

TEST_CASE("vein Hubbard set is the surgery image of the real one") {
    for (auto [p, q] : {std::pair{1L, 3L}, std::pair{2L, 5L}}) {
        OrbitPortrait P = orbit_portrait(p, q);
        for (const Angle& tc : {A(3, 7), A(2, 5), A(13, 31), A(5, 12), A(1, 2)}) {
            Leaf leaf = vein_leaf(P, tc);
            std::size_t n = 0;
            for (long d : {7L, 12L, 15L, 24L, 31L, 56L, 63L})
                for (long k = 0; k < d; ++k) {
                    Angle t(k, d);
                    bool h = oracle_real_H(t, tc);
                    n += h;
                    REQUIRE(vein_member_H(P, surgery(P, t), leaf) == h);
                }
            CHECK(n > 10);
        }
    }
    OrbitPortrait P5 = orbit_portrait(2, 5);
    auto arcs = vein_forbidden_arcs(P5, vein_leaf(P5, A(1, 2)));
    // Degenerate leaf: J is empty.
    CHECK(arcs.back().from == arcs.back().to);
}
