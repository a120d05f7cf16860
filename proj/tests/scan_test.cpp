#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qub/scan.hpp"

using namespace qub;

// The OpenMP kernels must agree with their serial reference runs exactly.

TEST_CASE("beta roundtrip scan: serial and parallel agree and pass") {
    ScanResult s = beta_roundtrip_scan(8, 2, 3, Exec::serial);
    ScanResult p = beta_roundtrip_scan(8, 2, 3, Exec::parallel);
    CHECK(s.pass);
    CHECK(p.pass);
    CHECK(s.items == p.items);
    CHECK(s.failures == p.failures);
}

TEST_CASE("core confluence scan: serial and parallel agree and pass") {
    ScanResult s = core_confluence_scan(5, 2, Exec::serial);
    ScanResult p = core_confluence_scan(5, 2, Exec::parallel);
    CHECK(s.pass);
    CHECK(p.pass);
    CHECK(s.items == p.items);
}

TEST_CASE("chevalley scan: serial and parallel agree and pass") {
    for (long e : {2L, 3L}) {
        ScanResult s = chevalley_scan(e, 2, 3, Exec::serial);
        ScanResult p = chevalley_scan(e, 2, 3, Exec::parallel);
        CHECK(s.pass);
        CHECK(p.pass);
        CHECK(s.items == p.items);
    }
}

TEST_CASE("weight step scan passes") {
    ScanResult p = weight_step_scan(2, 2, 3, Exec::parallel);
    CHECK(p.pass);
}

TEST_CASE("weight-block scan at small rank, both contexts") {
    for (auto [q, ell] : std::vector<std::pair<long, long>>{{3, 13}, {3, 5}}) {
        ModularContext ctx = make_context(q, ell);
        ScanResult s = weight_block_scan(ctx, 4, Exec::serial);
        ScanResult p = weight_block_scan(ctx, 4, Exec::parallel);
        CHECK(s.pass);
        CHECK(p.pass);
        CHECK(s.items == p.items);
    }
}

TEST_CASE("weyl orbit scan at small rank") {
    ModularContext ctx = make_context(3, 13);
    ScanResult p = weyl_orbit_scan(ctx, 3, Exec::parallel);
    CHECK(p.pass);
    CHECK(p.items > 0);
}

TEST_CASE("brauer tree scan at small rank") {
    for (auto [q, ell] : std::vector<std::pair<long, long>>{{3, 13}, {3, 5}}) {
        ModularContext ctx = make_context(q, ell);
        ScanResult p = brauer_tree_scan(ctx, 5, Exec::parallel);
        CHECK(p.pass);
        CHECK(p.items > 0);
    }
}
