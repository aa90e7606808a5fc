#include "pwq/centercheck.hpp"
#include "pwq/systems.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace pwq;

TEST_CASE("first integrals verify against their fields") {
    for (auto n : {LoudName::S1, LoudName::S2, LoudName::S3, LoudName::S4})
        CHECK_NOTHROW(first_integral(n));
    auto H1 = first_integral(LoudName::S1);
    CHECK(H1.num.terms().size() == 2);
}

TEST_CASE("sigma along the x-axis is -lambda") {
    for (auto n : {LoudName::S1, LoudName::S2, LoudName::S3, LoudName::S4}) {
        auto s = sigma_series(first_integral(n), BigRational(1), BigRational(0), 10);
        for (int k = 2; k <= 10; ++k) CHECK(s.s[static_cast<std::size_t>(k)] == 0);
    }
}

TEST_CASE("sigma of S1 on the vertical direction is -lambda/(1+2lambda)") {
    auto s = sigma_series(first_integral(LoudName::S1), BigRational(0), BigRational(1), 8);
    // -lambda/(1+2lambda) = -lambda + 2lambda^2 - 4lambda^3 + 8lambda^4 - ...
    BigRational expect(1);
    for (int k = 2; k <= 8; ++k) {
        expect *= -2;
        CHECK(s.s[static_cast<std::size_t>(k)] == -expect);
    }
    auto s2 = sigma_series(first_integral(LoudName::S2), BigRational(0), BigRational(1), 8);
    CHECK(s.s == s2.s);
}

TEST_CASE("sigma involution: sigma(sigma(lambda)) = lambda to the computed order") {
    auto compose = [](const std::vector<BigRational>& f, const std::vector<BigRational>& g,
                      int order) {
        std::vector<BigRational> acc(static_cast<std::size_t>(order) + 1, BigRational(0));
        for (std::size_t j = f.size(); j-- > 0;) {
            // acc = acc*g + f[j]
            std::vector<BigRational> next(acc.size(), BigRational(0));
            for (std::size_t a = 0; a <= static_cast<std::size_t>(order); ++a) {
                if (acc[a] == 0) continue;
                for (std::size_t b = 0; b < g.size() && a + b <= static_cast<std::size_t>(order); ++b)
                    if (g[b] != 0) next[a + b] += acc[a] * g[b];
            }
            next[0] += f[j];
            acc = std::move(next);
        }
        return acc;
    };
    std::mt19937 gen(777);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    for (auto n : {LoudName::S1, LoudName::S2, LoudName::S3, LoudName::S4}) {
        auto H = first_integral(n);
        for (int it = 0; it < 8; ++it) {
            BigRational v1(num(gen), den(gen)), v2(num(gen), den(gen));
            if (v2 == 0) v2 = 1;
            const int order = 9;
            auto s = sigma_series(H, v1, v2, order);
            auto twice = compose(s.s, s.s, order);
            CHECK(twice[1] == 1);
            for (int k = 2; k <= order; ++k) CHECK(twice[static_cast<std::size_t>(k)] == 0);
        }
    }
}

TEST_CASE("numeric agreement at lambda = 1/100") {
    auto H = first_integral(LoudName::S3);
    BigRational v1(1), v2(2, 3);
    auto s = sigma_series(H, v1, v2, 14);
    const double lambda = 0.01;
    double predicted = s.eval(lambda);
    // solve H(L(lambda)) = H(L(sigma)) for sigma < 0 by bisection
    auto Hline = [&](double t) {
        double x = to_double(v1) * t, y = to_double(v2) * t;
        double num = 0, den = 0;
        for (auto& [k, c] : H.num.terms())
            num += to_double(c) * std::pow(x, k.first) * std::pow(y, k.second);
        for (auto& [k, c] : H.den.terms())
            den += to_double(c) * std::pow(x, k.first) * std::pow(y, k.second);
        return num / den;
    };
    double target = Hline(lambda);
    double lo = -2 * lambda, hi = -0.5 * lambda;
    auto g = [&](double t) { return Hline(t) - target; };
    REQUIRE(g(lo) * g(hi) < 0);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (g(lo) * g(mid) <= 0) hi = mid;
        else lo = mid;
    }
    CHECK(std::abs(0.5 * (lo + hi) - predicted) < 1e-10);
}

TEST_CASE("lemma: mixed pairs are centers iff tau = 0 or pair in {S1,S2}") {
    const LoudName all[] = {LoudName::S1, LoudName::S2, LoudName::S3, LoudName::S4};
    const BigRational taus[] = {BigRational(0), BigRational(1, 2), BigRational(-1, 3)};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (auto& tau : taus) {
                auto res = is_piecewise_center(all[i], all[j], tau, 12);
                bool expect_center = (tau == 0) || (i == 0 && j == 1);
                CHECK((res.verdict == CenterVerdict::CenterCertifiedToOrder) == expect_center);
                if (res.verdict == CenterVerdict::NotCenter) CHECK(res.differing_order >= 2);
            }
}

TEST_CASE("pair {S1,S2} is a center for random rational tau") {
    std::mt19937 gen(31415);
    std::uniform_int_distribution<int> num(-9, 9), den(10, 19);
    for (int it = 0; it < 10; ++it) {
        BigRational tau(num(gen), den(gen));
        auto res = is_piecewise_center(LoudName::S1, LoudName::S2, tau, 12);
        CHECK(res.verdict == CenterVerdict::CenterCertifiedToOrder);
    }
}
