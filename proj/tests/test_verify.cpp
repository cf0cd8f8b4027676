#include <cmath>
#include <string>

#include <doctest.h>

#include "icrates/numerics.hpp"
#include "icrates/rates2.hpp"
#include "icrates/verify.hpp"

using namespace icrates;
using verify::Spec;
using verify::VerifyReport;

namespace {

Spec quick_spec() {
    Spec s;
    s.grid_p = 12;
    s.grid_a = 12;
    s.grid_rho = 5;
    s.samples = 120;
    return s;
}

}  // namespace

TEST_CASE("every suite passes on a reduced grid") {
    for (const auto& id : verify::suite_ids()) {
        const VerifyReport rep = verify::run_suite(id, quick_spec());
        INFO(rep.to_line());
        CHECK(rep.pass);
        CHECK(rep.points_checked > 0);
        CHECK(rep.points_skipped * 20 <= rep.points_checked + rep.points_skipped);
    }
}

TEST_CASE("unknown suite id is rejected") {
    CHECK_THROWS_AS(verify::run_suite("nosuch", quick_spec()), std::domain_error);
}

TEST_CASE("degenerate one-point grid at the noisy boundary still passes") {
    Spec s;
    s.grid_p = 1;
    s.grid_a = 1;
    s.p_min = 100.0;
    s.p_max = 100.0;
    const VerifyReport rep = verify::verify_thm1_noisy(s);
    CHECK(rep.pass);
    CHECK(rep.points_checked == 1);
}

TEST_CASE("20 dB dominance margins at pinned points") {
    // at snr 100, isr 1 the gap is exactly log2(4/3)/2
    const double margin_at_one = rate_sym_p2p(Channel2Sym(100, 1)).value -
                                 rate_sym_etw(Channel2Sym(100, 1)).value;
    CHECK(std::fabs(margin_at_one - 0.20751874963942191) <= 1e-9);
    const double margin_mid = rate_sym_p2p(Channel2Sym(100, 0.5)).value -
                              rate_sym_etw(Channel2Sym(100, 0.5)).value;
    CHECK(std::fabs(margin_mid - 0.20632347592692485) <= 1e-9);
    CHECK(margin_mid > 0.0);
}

TEST_CASE("power-reduction suite: equal powers mean zero margin") {
    Spec s = quick_spec();
    const VerifyReport rep = verify::verify_power_reduction(s);
    CHECK(rep.pass);
    // rho = 1 rows contribute exact zeros, so the worst margin is never above 0
    CHECK(rep.worst_margin <= 0.0);
    CHECK(rep.worst_margin > -1e-12);
    // spot values: noisy pair (P=1, a=0.3, rho=0.5)
    const double full = sum_rate_p2p_asym(Channel2Asym(1, 1, 0.3, 0.3)).value;
    const double reduced = sum_rate_p2p_asym(Channel2Asym(1, 0.5, 0.3, 0.3)).value;
    CHECK(full >= reduced);
    CHECK(std::fabs(full - 1.6462444758318414) <= 1e-12);
    // weak pair (P=1, a=0.8, rho=0.9): log2(2.8) vs log2(2.72)
    const double full_w = sum_rate_p2p_asym(Channel2Asym(1, 1, 0.8, 0.8)).value;
    const double reduced_w = sum_rate_p2p_asym(Channel2Asym(1, 0.9, 0.8, 0.8)).value;
    CHECK(std::fabs(full_w - std::log2(2.8)) <= 1e-12);
    CHECK(std::fabs(reduced_w - std::log2(2.72)) <= 1e-12);
    CHECK(full_w >= reduced_w);
}

TEST_CASE("K=3 dominance suite skips nothing on its constructed grid") {
    const VerifyReport rep = verify::verify_k3_tdma_dominance(quick_spec());
    CHECK(rep.pass);
    CHECK(rep.points_skipped == 0);
    // columns with snr at or below 1 have no isr interval and contribute no points
    CHECK(rep.points_checked < 12L * 12L);
}

TEST_CASE("roots suite reports the snr thresholds") {
    const VerifyReport rep = verify::verify_roots(quick_spec());
    CHECK(rep.pass);
    REQUIRE(rep.notes.size() == 2);
    CHECK(rep.notes[0].find("P' = ") == 0);
    CHECK(rep.notes[0].find("(> 100)") != std::string::npos);
    CHECK(rep.notes[1].find("P'' = ") == 0);
    CHECK(rep.notes[1].find("(> 1000)") != std::string::npos);
}

TEST_CASE("reports are identical across runs and thread counts") {
    for (const auto& id : {std::string("thm1"), std::string("kbound"), std::string("k3")}) {
        Spec s = quick_spec();
        s.threads = 1;
        const std::string single = verify::run_suite(id, s).to_line(false);
        s.threads = 4;
        const std::string pooled = verify::run_suite(id, s).to_line(false);
        const std::string again = verify::run_suite(id, s).to_line(false);
        CHECK(single == pooled);
        CHECK(pooled == again);
    }
}

TEST_CASE("report serialization carries every field") {
    VerifyReport rep;
    rep.suite = "demo";
    rep.pass = true;
    rep.worst_margin = 0.5;
    rep.witness = "P=1 a=2";
    rep.points_checked = 7;
    rep.points_skipped = 1;
    rep.runtime_seconds = 0.25;
    CHECK(rep.to_line(false) == "demo pass=yes worst_margin=0.5 witness=\"P=1 a=2\" points=7 skipped=1");
    CHECK(rep.to_line(true).find("runtime=0.250s") != std::string::npos);
    CHECK(VerifyReport::csv_header(false) == "suite,pass,worst_margin,witness,points,skipped");
    CHECK(rep.to_csv_row(false) == "demo,1,0.5,\"P=1 a=2\",7,1");
}

TEST_CASE("suite order is stable") {
    const auto& ids = verify::suite_ids();
    REQUIRE(ids.size() == 9);
    CHECK(ids.front() == "thm1");
    CHECK(ids.back() == "roots");
    const auto all = verify::verify_all(quick_spec());
    REQUIRE(all.size() == ids.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].suite == ids[i]);
}
