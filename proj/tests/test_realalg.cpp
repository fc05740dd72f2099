#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cutforge/realalg.hpp"

using namespace cutforge;

namespace {

Poly<Rat> make_poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly<Rat>(std::move(c));
}

RealAlg sqrt2() { return RealAlg(2).root(2); }
RealAlg sqrt3() { return RealAlg(3).root(2); }

}  // namespace

TEST_CASE("polynomial basics") {
    auto p = make_poly({-2, 0, 1});  // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rat(2)) == Rat(2));
    CHECK(p.derivative().degree() == 1);
    auto q = make_poly({-1, 1});
    auto [d, r] = divmod(p, q);
    CHECK(r.degree() == 0);
    CHECK(r[0] == Rat(-1));
    CHECK(gcd_rat(p * q, q * q) == q.monic());
}

TEST_CASE("root isolation: x^2 - 2 brackets both square roots") {
    auto roots = RealAlg::isolate_roots(make_poly({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] < RealAlg(-1));
    CHECK(roots[0] > RealAlg(-2));
    CHECK(roots[1] > RealAlg(1));
    CHECK(roots[1] < RealAlg(2));
}

TEST_CASE("root isolation: x^2 + 1 has no real roots") {
    CHECK(RealAlg::isolate_roots(make_poly({1, 0, 1})).empty());
}

TEST_CASE("root isolation: (x-1)(x-2)(x-3) expanded") {
    // oracle: expand the product by polynomial multiplication
    auto p = make_poly({-1, 1}) * make_poly({-2, 1}) * make_poly({-3, 1});
    CHECK(p == make_poly({-6, 11, -6, 1}));
    auto roots = RealAlg::isolate_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == RealAlg(1));
    CHECK(roots[1] == RealAlg(2));
    CHECK(roots[2] == RealAlg(3));
}

TEST_CASE("zero polynomial rejected, constants have no roots") {
    CHECK_THROWS(RealAlg::isolate_roots(Poly<Rat>()));
    CHECK(RealAlg::isolate_roots(make_poly({7})).empty());
}

TEST_CASE("sqrt2 * sqrt2 == 2") {
    CHECK(sqrt2() * sqrt2() == RealAlg(2));
}

TEST_CASE("sqrt2 + sqrt3 is the (3, 3.2) root of x^4 - 10x^2 + 1") {
    auto s = sqrt2() + sqrt3();
    CHECK(s.sign_of(make_poly({1, 0, -10, 0, 1})) == 0);
    CHECK(s > RealAlg(3));
    CHECK(s < RealAlg(rat(32, 10)));
}

TEST_CASE("sqrt2 - sqrt2 == 0") {
    auto a = sqrt2();
    auto b = sqrt2();
    CHECK(a - b == RealAlg(0));
    CHECK(is_zero(a - a));
}

TEST_CASE("comparisons") {
    CHECK(ra_cmp(sqrt2(), RealAlg(rat(141, 100))) == Ord::GT);
    CHECK(ra_cmp(sqrt2(), sqrt2()) == Ord::EQ);
    CHECK(ra_cmp(-sqrt3(), sqrt2()) == Ord::LT);
    // independent representations of the same value
    RealAlg a(make_poly({-2, 0, 1}), Rat(1), Rat(2));
    RealAlg b(make_poly({-4, 0, 0, 0, 1}), Rat(1), Rat(3));  // x^4 - 4, positive root
    CHECK(a == b);
}

TEST_CASE("roots") {
    CHECK(RealAlg(2).root(2) == sqrt2());
    CHECK(RealAlg(-8).root(3) == RealAlg(-2));
    auto r = sqrt2().root(2);  // 2^(1/4), root of x^4 - 2 in (1, 1.3)
    CHECK(r.sign_of(make_poly({-2, 0, 0, 0, 1})) == 0);
    CHECK(r > RealAlg(1));
    CHECK(r < RealAlg(rat(13, 10)));
    CHECK(r.pow(4) == RealAlg(2));
    CHECK_THROWS(RealAlg(-1).root(2));
}

TEST_CASE("sign_at") {
    CHECK(sqrt2().sign_of(make_poly({-2, 0, 1})) == 0);
    CHECK(sqrt2().sign_of(make_poly({-1, 1})) == 1);
    // (sqrt2)^3 = 2.828... < 3
    CHECK(sqrt2().sign_of(make_poly({-3, 0, 0, 1})) == -1);
}

TEST_CASE("division and inverse") {
    auto a = sqrt2();
    CHECK(a / a == RealAlg(1));
    CHECK(RealAlg(1) / a == a / RealAlg(2));
    CHECK_THROWS(a / RealAlg(0));
}

TEST_CASE("order compatible with arithmetic on random triples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coeff(-6, 6);
    auto random_value = [&]() -> RealAlg {
        while (true) {
            std::vector<Rat> c;
            for (int i = 0; i < 4; ++i) c.emplace_back(coeff(rng));
            Poly<Rat> p(std::move(c));
            if (p.degree() < 1) continue;
            auto roots = RealAlg::isolate_roots(p);
            if (!roots.empty()) return roots[static_cast<std::size_t>(rng() % roots.size())];
        }
    };
    for (int trial = 0; trial < 40; ++trial) {
        RealAlg a = random_value(), b = random_value(), c = random_value();
        Ord ab = ra_cmp(a, b);
        // antisymmetry
        Ord ba = ra_cmp(b, a);
        CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
        // transitivity via sorted copies
        if (ab == Ord::LT && ra_cmp(b, c) == Ord::LT) CHECK(ra_cmp(a, c) == Ord::LT);
        // translation invariance
        CHECK(ra_cmp(a + c, b + c) == ab);
        // positive scaling
        if (a.sign() > 0 && b.sign() > 0 && c.sign() > 0 && ab == Ord::LT)
            CHECK(ra_cmp(a * c, b * c) == Ord::LT);
    }
}

TEST_CASE("isolate_roots of a product merges factor root sets") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-5, 5);
    auto random_poly = [&]() {
        std::vector<Rat> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(coeff(rng));
        return Poly<Rat>(std::move(c));
    };
    for (int trial = 0; trial < 25; ++trial) {
        Poly<Rat> p = random_poly(), q = random_poly();
        if (p.degree() < 1 || q.degree() < 1) continue;
        auto rp = RealAlg::isolate_roots(p);
        auto rq = RealAlg::isolate_roots(q);
        auto rpq = RealAlg::isolate_roots(p * q);
        // union with multiplicity collapse
        std::vector<RealAlg> merged = rp;
        for (const auto& r : rq) {
            bool dup = false;
            for (const auto& m : merged) dup = dup || m == r;
            if (!dup) merged.push_back(r);
        }
        REQUIRE(rpq.size() == merged.size());
        std::sort(merged.begin(), merged.end(),
                  [](const RealAlg& x, const RealAlg& y) { return x < y; });
        for (std::size_t i = 0; i < merged.size(); ++i) CHECK(rpq[i] == merged[i]);
    }
}

TEST_CASE("nth root round trip ra_root(a,n)^n == a") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(1, 30);
    for (int trial = 0; trial < 10; ++trial) {
        RealAlg a{rat(num(rng), num(rng))};
        for (long n : {2L, 3L}) {
            CHECK(a.root(n).pow(n) == a);
        }
    }
    auto v = sqrt2() + RealAlg(1);
    CHECK(v.root(3).pow(3) == v);
}

TEST_CASE("Sturm invariant: every value keeps an isolating count of 1") {
    auto a = sqrt2() + sqrt3();
    CHECK(a.isolating_count() == 1);
    a.refine();
    a.refine();
    CHECK(a.isolating_count() == 1);
    auto b = a * a;
    CHECK(b.isolating_count() == 1);
}
