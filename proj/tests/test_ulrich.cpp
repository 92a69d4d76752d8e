#include <scrollulrich/tower.hpp>
#include <scrollulrich/ulrich.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

using namespace scrollulrich;

namespace {

std::vector<DivisorClass> ulrich_classes(const ScrollParams& p, const ScanBox& box = {}) {
    std::vector<DivisorClass> out;
    for (const ScanHit& hit : ulrich_scan(p, box))
        if (hit.verdict.status == UlrichStatus::Ulrich) out.push_back(hit.cls);
    return out;
}

}  // namespace

TEST_CASE("the four named constituents carry full vanishing certificates") {
    for (int t : {1, 2, 3}) {
        ScrollParams p = ScrollParams::sporadic(t);
        for (DivisorClass D : {ulrich_L1(), ulrich_L2(p), sporadic_M1(p), sporadic_M2(p)}) {
            UlrichVerdict v = is_ulrich_line(p, D);
            CHECK(v.status == UlrichStatus::Ulrich);
            CHECK_FALSE(v.pruned);
            for (const CohInterval4& tw : v.twists) {
                REQUIRE(tw.all_exact());
                CHECK(tw.all_zero());
            }
        }
    }
}

TEST_CASE("the structure sheaf is rejected, by chi alone in a scan") {
    ScrollParams p = ScrollParams::sporadic(1);
    CHECK(is_ulrich_line(p, DivisorClass{}).status == UlrichStatus::NotUlrich);

    // in a scan the rejection happens at the first twist with chi != 0:
    // chi(-xi) = 0 vacuously, chi(-2xi) = -2 at t = 1
    for (const ScanHit& hit : ulrich_scan(p, ScanBox{0, 0, 0, 0})) {
        REQUIRE(hit.cls == DivisorClass{});
        CHECK(hit.verdict.status == UlrichStatus::NotUlrich);
        CHECK(hit.verdict.pruned);
        CHECK(hit.verdict.pruned_j == 2);
        CHECK(hit.verdict.pruned_chi == -2);
    }
}

TEST_CASE("the involution D -> K + 4xi - D pairs the constituents") {
    for (int t : {1, 2, 5}) {
        ScrollParams p = ScrollParams::sporadic(t);
        CHECK(ulrich_dual(p, sporadic_M1(p)) == sporadic_M2(p));
        CHECK(ulrich_dual(p, sporadic_M2(p)) == sporadic_M1(p));
        CHECK(ulrich_dual(p, ulrich_L1()) == ulrich_L2(p));
        DivisorClass D{3, {-2, 7}};
        CHECK(ulrich_dual(p, ulrich_dual(p, D)) == D);
    }
}

TEST_CASE("every Ulrich class has the forced slope") {
    for (int t : {1, 2, 3}) {
        ScrollParams p = ScrollParams::sporadic(t);
        CHECK(ulrich_slope(p) == 13 * Int(t) - 3);
        for (const DivisorClass& D : ulrich_classes(p)) {
            CHECK(slope(p, FormalSheafClass::line(D)) == Rat(ulrich_slope(p)));
        }
    }
    ScrollParams p2 = ScrollParams::sporadic(2);
    CHECK(slope(p2, FormalSheafClass::line(sporadic_M1(p2))) == 23);
}

TEST_CASE("default-box scan of the sporadic scrolls finds exactly four classes") {
    for (int t : {1, 2, 3}) {
        ScrollParams p = ScrollParams::sporadic(t);
        std::vector<DivisorClass> got = ulrich_classes(p);
        std::vector<DivisorClass> want = {ulrich_L1(), ulrich_L2(p), sporadic_M1(p),
                                          sporadic_M2(p)};
        std::sort(want.begin(), want.end());
        CHECK(got == want);

        // no undecided cells anywhere in the box
        for (const ScanHit& hit : ulrich_scan(p))
            CHECK(hit.verdict.status != UlrichStatus::Undecided);
        // and the Ulrich set is closed under the involution
        for (const DivisorClass& D : got) {
            CHECK(is_ulrich_line(p, ulrich_dual(p, D)).status == UlrichStatus::Ulrich);
        }
    }
}

TEST_CASE("scan results on non-sporadic scrolls") {
    {
        ScrollParams p = ScrollParams::make(0, 4, 5);
        std::vector<DivisorClass> got = ulrich_classes(p);
        std::vector<DivisorClass> want = {ulrich_L2(p), ulrich_L1()};  // (1,-1,3) < (1,2,-1)
        CHECK(got == want);
    }
    CHECK(ulrich_classes(ScrollParams::make(1, 5, 5)).empty());
    CHECK(ulrich_classes(ScrollParams::make(2, 8, 7)).empty());
}

TEST_CASE("boundary parameters outside the admissible range") {
    // (e,b,k) = (0,3,3) fails b - e < k; the checked constructor refuses it,
    // and the unchecked scan finds classes that are NOT the standard pair
    CHECK_THROWS_AS(ScrollParams::make(0, 3, 3), std::invalid_argument);
    ScrollParams p = ScrollParams::unchecked(0, 3, 3);
    std::vector<DivisorClass> got = ulrich_classes(p);
    std::vector<DivisorClass> want = {
        DivisorClass{0, {4, 2}},
        DivisorClass{1, {-1, 2}},
        DivisorClass{1, {2, -1}},
        DivisorClass{2, {-3, -1}},
    };
    CHECK(got == want);
}

TEST_CASE("chi-pruning never mislabels a class") {
    ScrollParams p = ScrollParams::sporadic(1);
    ScanBox box{-2, 4, 4, 4};
    for (const ScanHit& hit : ulrich_scan(p, box)) {
        UlrichVerdict full = is_ulrich_line(p, hit.cls);
        CHECK(hit.verdict.status == full.status);
        if (hit.verdict.pruned) {
            CHECK(hit.verdict.status == UlrichStatus::NotUlrich);
            CHECK(hit.verdict.pruned_chi != 0);
        }
    }
}

TEST_CASE("scan output is ordered and covers the whole box") {
    ScrollParams p = ScrollParams::sporadic(1);
    ScanBox box{-1, 2, 3, 3};
    std::vector<ScanHit> hits = ulrich_scan(p, box);
    CHECK(hits.size() == 4u * 7u * 7u);
    for (std::size_t i = 1; i < hits.size(); ++i) CHECK(hits[i - 1].cls < hits[i].cls);
    CHECK_THROWS_AS(ulrich_scan(p, ScanBox{2, 1, 3, 3}), std::invalid_argument);
}
