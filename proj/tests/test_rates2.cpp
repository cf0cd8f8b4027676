#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "icrates/channel.hpp"
#include "icrates/numerics.hpp"
#include "icrates/rates2.hpp"
#include "test_rng.hpp"

using namespace icrates;

namespace {

// Bisection on the cubic, independent of numerics::find_a0.
double a0_oracle(double p) {
    double lo = 0.0, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (numerics::fn_f(p, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

TEST_CASE("ian symmetric rate") {
    // log2(1 + 100/6), high-precision: 4.142957953842043
    const auto r = rate_sym_ian(Channel2Sym(100, 0.05));
    CHECK(close(r.value, 4.1429579538420430, 1e-12));
    CHECK(r.scheme == Scheme::IAN);
    CHECK(r.active_bound == bound::ian_individual);
    CHECK(close(rate_sym_ian(Channel2Sym(1, 1)).value, 0.58496250072115618, 1e-12));  // log2(1.5)
    CHECK(close(rate_sym_ian(Channel2Sym(3, 1)).value, 0.80735492205760411, 1e-12));  // log2(1.75)
}

TEST_CASE("tdma symmetric rate") {
    CHECK(close(rate_sym_tdma2(100).value, 3.8255258455894643, 1e-12));  // log2(201)/2
    CHECK(rate_sym_tdma2(0.5).value == 0.5);                             // log2(2)/2
    CHECK(rate_sym_tdma2(1.5).value == 1.0);                             // log2(4)/2
    CHECK(rate_sym_tdma2(100).active_bound == bound::tdma);
    CHECK_THROWS_AS(rate_sym_tdma2(0.0), std::domain_error);
}

TEST_CASE("p2p symmetric rate per regime") {
    // noisy, ian side of the crossover (0.05 < 0.06588...)
    const auto noisy_ian = rate_sym_p2p(Channel2Sym(100, 0.05));
    CHECK(close(noisy_ian.value, 4.1429579538420430, 1e-12));
    CHECK(noisy_ian.active_bound == bound::ian_individual);
    CHECK(noisy_ian.scheme == Scheme::P2PCombined);
    CHECK(0.05 < numerics::ian_tdma_crossover(100));

    // noisy, tdma side (crossover < 0.07 < boundary 0.09512)
    const auto noisy_tdma = rate_sym_p2p(Channel2Sym(100, 0.07));
    CHECK(classify2sym(Channel2Sym(100, 0.07)) == Regime2::Noisy);
    CHECK(noisy_tdma.value == rate_sym_tdma2(100).value);
    CHECK(noisy_tdma.active_bound == bound::tdma);

    // weak
    const auto weak = rate_sym_p2p(Channel2Sym(100, 0.5));
    CHECK(close(weak.value, 3.8255258455894643, 1e-12));
    CHECK(weak.active_bound == bound::tdma);

    // strong: min{log2(2), log2(3.5)/2} = 0.90367746102880205
    const auto strong = rate_sym_p2p(Channel2Sym(1, 1.5));
    CHECK(close(strong.value, 0.90367746102880205, 1e-12));
    CHECK(strong.active_bound == bound::sum);

    // very strong: interference-free individual rate
    const auto vs = rate_sym_p2p(Channel2Sym(1, 4));
    CHECK(vs.value == 1.0);
    CHECK(vs.active_bound == bound::individual);
}

TEST_CASE("p2p noisy-regime value is the max of ian and tdma") {
    testutil::Rng rng(707);
    for (int i = 0; i < 2000; ++i) {
        const double p = rng.log_uniform(0.1, 1e5);
        const double a = numerics::noisy_boundary(p) * rng.unit();
        if (a <= 0.0) continue;
        const Channel2Sym ch(p, a);
        const double expect = std::max(rate_sym_ian(ch).value, rate_sym_tdma2(p).value);
        CHECK(close(rate_sym_p2p(ch).value, expect, 1e-12));
    }
}

TEST_CASE("split-scheme symmetric rate") {
    // sum-bound branch: log2(151)/2 + log2(4)/2 - 1
    const auto sum = rate_sym_etw(Channel2Sym(100, 0.5));
    CHECK(close(sum.value, 3.6192023696625395, 1e-12));
    CHECK(sum.active_bound == bound::etw_common_sum);
    CHECK(sum.scheme == Scheme::ETW);

    // at isr = 1: log2(201)/2 + log2(3)/2 - 1
    CHECK(close(rate_sym_etw(Channel2Sym(100, 1)).value, 3.6180070959500424, 1e-12));

    // all-private branch: log2(1 + 100/1.5)
    const auto ap = rate_sym_etw(Channel2Sym(100, 0.005));
    CHECK(close(ap.value, 6.0803734164640200, 1e-12));
    CHECK(ap.active_bound == bound::etw_all_private);

    // individual-bound branch at (100, 0.05): log2(26) - 1
    const auto ind = rate_sym_etw(Channel2Sym(100, 0.05));
    CHECK(close(ind.value, 3.7004397181410922, 1e-12));
    CHECK(ind.active_bound == bound::etw_common_individual);

    CHECK_THROWS_AS(rate_sym_etw(Channel2Sym(100, 2)), std::domain_error);
}

TEST_CASE("split-scheme branch selector") {
    const double a0 = a0_oracle(100.0);
    CHECK(close(a0, 0.22738573917171547, 1e-10));
    CHECK(0.1 < a0);
    CHECK(etw_branch(Channel2Sym(100, 0.1)) == EtwBranch::IndividualBound);
    CHECK(0.5 > a0);
    CHECK(etw_branch(Channel2Sym(100, 0.5)) == EtwBranch::SumBound);
    CHECK(etw_branch(Channel2Sym(100, 0.005)) == EtwBranch::AllPrivate);
    CHECK_THROWS_AS(etw_branch(Channel2Sym(100, 1.5)), std::domain_error);
}

TEST_CASE("split-scheme value is the min of its two terms, branch-consistently") {
    testutil::Rng rng(808);
    int checked = 0;
    while (checked < 2000) {
        const double p = rng.log_uniform(0.1, 1e6);
        if (p <= 1.0) continue;
        const double a = rng.uniform(1.0 / p, 1.0);
        if (a * p <= 1.0) continue;
        ++checked;
        const Channel2Sym ch(p, a);
        const double sum_term = 0.5 * std::log2(1.0 + p + a * p) + 0.5 * std::log2(2.0 + 1.0 / a) - 1.0;
        const double ind_term = std::log2(1.0 + a * p + 1.0 / a) - 1.0;
        const auto r = rate_sym_etw(ch);
        CHECK(close(r.value, std::min(sum_term, ind_term), 1e-12));
        const EtwBranch b = etw_branch(ch);
        if (r.active_bound == bound::etw_common_sum) CHECK(b == EtwBranch::SumBound);
        if (r.active_bound == bound::etw_common_individual) CHECK(b == EtwBranch::IndividualBound);
    }
}

TEST_CASE("noisy regime: ian dominates the split scheme") {
    testutil::Rng rng(909);
    for (int i = 0; i < 2000; ++i) {
        const double p = rng.log_uniform(0.1, 1e4);
        const double a = numerics::noisy_boundary(p) * (0.001 + 0.999 * rng.unit());
        const Channel2Sym ch(p, a);
        const double ian = rate_sym_ian(ch).value;
        CHECK(rate_sym_etw(ch).value <= ian + 1e-12);
        CHECK(rate_sym_p2p(ch).value >= ian - 1e-12);
    }
}

TEST_CASE("weak regime: tdma absorbs the half-sum bound") {
    testutil::Rng rng(1010);
    for (int i = 0; i < 2000; ++i) {
        const double p = rng.log_uniform(0.01, 1e6);
        const double a = rng.unit();
        if (a <= 0.0) continue;
        CHECK(0.5 * std::log2(1.0 + 2.0 * p) >= 0.5 * std::log2(1.0 + p + a * p) - 1e-12);
    }
}

TEST_CASE("split-scheme rate is continuous across its branch switches") {
    for (double p : {5.0, 100.0, 1e4}) {
        for (double a_star : {1.0 / p, a0_oracle(p)}) {
            const double lo = rate_sym_etw(Channel2Sym(p, a_star * (1.0 - 1e-10))).value;
            const double hi = rate_sym_etw(Channel2Sym(p, a_star * (1.0 + 1e-10))).value;
            CHECK(close(lo, hi, 1e-9));
        }
    }
}

TEST_CASE("asymmetric maximum sum rate") {
    // direct-link-limited mixed: log2(1+10/3.5) + log2(6)
    const auto mixed = sum_rate_p2p_asym(Channel2Asym(10, 5, 0.5, 2));
    CHECK(close(mixed.value, 4.5324950808270206, 1e-12));
    CHECK(mixed.active_bound == bound::ian_plus_individual);
    CHECK(mixed.scheme == Scheme::JointCapacity);

    // noisy: 2*log2(1 + 1/1.3)
    const auto noisy = sum_rate_p2p_asym(Channel2Asym(1, 1, 0.3, 0.3));
    CHECK(close(noisy.value, 1.6462444758318414, 1e-12));
    CHECK(noisy.active_bound == bound::ian_sum);

    // weak, symmetric so both max terms agree: log2(2.8)
    const auto weak = sum_rate_p2p_asym(Channel2Asym(1, 1, 0.8, 0.8));
    CHECK(close(weak.value, 1.4854268271702418, 1e-12));
    CHECK(weak.active_bound == bound::mac_sum);

    // cross-link-limited mixed: log2(1 + 2 + 1.4)
    const auto cross = sum_rate_p2p_asym(Channel2Asym(2, 1, 1.4, 0.5));
    CHECK(close(cross.value, std::log2(4.4), 1e-12));
    CHECK(cross.active_bound == bound::mac_sum);

    CHECK_THROWS_AS(sum_rate_p2p_asym(Channel2Asym(2, 1, 1.5, 1.5)), std::domain_error);
}

namespace {

std::vector<RatePair> swapped_sorted(std::vector<RatePair> v) {
    for (auto& p : v) std::swap(p.r1, p.r2);
    std::sort(v.begin(), v.end(), [](const RatePair& a, const RatePair& b) {
        return a.r1 != b.r1 ? a.r1 < b.r1 : a.r2 < b.r2;
    });
    return v;
}

std::vector<RatePair> sorted(std::vector<RatePair> v) {
    std::sort(v.begin(), v.end(), [](const RatePair& a, const RatePair& b) {
        return a.r1 != b.r1 ? a.r1 < b.r1 : a.r2 < b.r2;
    });
    return v;
}

bool same_vertices(const std::vector<RatePair>& a, const std::vector<RatePair>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].r1 != b[i].r1 || a[i].r2 != b[i].r2) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("region vertices: pinned shapes") {
    // interference-free square of side log2(1+P) = 1
    const auto c1p = region_vertices(Channel2Sym(1, 2), Region2::C1Prime);
    REQUIRE(c1p.size() == 4);
    CHECK(c1p[1].r1 == 1.0);
    CHECK(c1p[2].r1 == 1.0);
    CHECK(c1p[2].r2 == 1.0);

    // joint-decoding pentagon at (1,1): corners (1, log2(3)-1) and (log2(3)-1, 1)
    const auto c1 = region_vertices(Channel2Sym(1, 1), Region2::C1);
    REQUIRE(c1.size() == 5);
    CHECK(c1[1].r1 == 1.0);
    CHECK(close(c1[2].r2, 0.58496250072115618, 1e-12));
    CHECK(close(c1[3].r1, 0.58496250072115618, 1e-12));
    CHECK(c1[3].r2 == 1.0);

    // ian square of side log2(1+1/1.5)
    const auto c0 = region_vertices(Channel2Sym(1, 0.5), Region2::C0);
    REQUIRE(c0.size() == 4);
    CHECK(close(c0[2].r1, 0.73696559416620617, 1e-12));
    CHECK(close(c0[2].r2, 0.73696559416620617, 1e-12));
}

TEST_CASE("capacity region in the noisy regime is the union outline") {
    const Channel2Sym ch(1, 0.5);
    REQUIRE(classify2sym(ch) == Regime2::Noisy);
    const auto v = region_vertices(ch, Region2::Capacity);
    const double c = rate_sym_ian(ch).value;
    const double d = std::log2(2.0);
    const double s = std::log2(2.5);
    REQUIRE(v.size() == 8);
    // membership oracle: inside the ian square or the joint pentagon
    auto inside = [&](double r1, double r2) {
        const bool in_c0 = r1 <= c + 1e-12 && r2 <= c + 1e-12;
        const bool in_c1 = r1 <= d + 1e-12 && r2 <= d + 1e-12 && r1 + r2 <= s + 1e-12;
        return in_c0 || in_c1;
    };
    for (const auto& p : v) {
        CHECK(inside(p.r1, p.r2));
        if (p.r1 > 0.0 || p.r2 > 0.0) {
            CHECK_FALSE(inside(p.r1 * (1.0 + 1e-6) + 1e-9, p.r2 * (1.0 + 1e-6) + 1e-9));
        }
    }
    // the ian corner survives in the outline
    bool has_corner = false;
    for (const auto& p : v) has_corner = has_corner || (p.r1 == c && p.r2 == c);
    CHECK(has_corner);
}

TEST_CASE("capacity region follows the regime") {
    CHECK(same_vertices(region_vertices(Channel2Sym(1, 0.8), Region2::Capacity),
                        region_vertices(Channel2Sym(1, 0.8), Region2::C1)));
    CHECK(same_vertices(region_vertices(Channel2Sym(1, 1.5), Region2::Capacity),
                        region_vertices(Channel2Sym(1, 1.5), Region2::C1)));
    CHECK(same_vertices(region_vertices(Channel2Sym(1, 4), Region2::Capacity),
                        region_vertices(Channel2Sym(1, 4), Region2::C1Prime)));
    // sum bound goes slack exactly at isr = 1 + snr
    CHECK(region_vertices(Channel2Sym(1, 2), Region2::C1).size() == 4);
    CHECK(region_vertices(Channel2Sym(1, 1.99), Region2::C1).size() == 5);
}

TEST_CASE("region vertex sets are swap-symmetric") {
    testutil::Rng rng(1111);
    for (int i = 0; i < 200; ++i) {
        const Channel2Sym ch(rng.log_uniform(0.1, 1e3), rng.log_uniform(1e-3, 1e3));
        for (Region2 region : {Region2::C0, Region2::C1, Region2::C1Prime, Region2::Capacity}) {
            const auto v = region_vertices(ch, region);
            CHECK(same_vertices(sorted(v), swapped_sorted(v)));
        }
    }
}

TEST_CASE("region nesting facts") {
    testutil::Rng rng(1212);
    for (int i = 0; i < 500; ++i) {
        const Channel2Sym ch(rng.log_uniform(0.1, 1e4), rng.log_uniform(1e-3, 1e2));
        const double d = std::log2(1.0 + ch.snr);
        // every ian-square vertex satisfies the joint region's individual bounds
        for (const auto& p : region_vertices(ch, Region2::C0)) {
            CHECK(p.r1 <= d + 1e-12);
            CHECK(p.r2 <= d + 1e-12);
        }
    }
    // in the very strong regime the interference-free corner meets the sum bound
    const Channel2Sym vs(1, 4);
    const double d = std::log2(2.0);
    CHECK(2.0 * d <= std::log2(1.0 + vs.snr + vs.isr * vs.snr) + 1e-12);
}

TEST_CASE("region name parsing") {
    CHECK(parse_region2("C0") == Region2::C0);
    CHECK(parse_region2("c1prime") == Region2::C1Prime);
    CHECK(parse_region2("Capacity") == Region2::Capacity);
    CHECK_THROWS_AS(parse_region2("C9"), std::domain_error);
}
