#include <doctest.h>

#include "partition_kit/bijection.hpp"
#include "partition_kit/enumerate.hpp"

using namespace pkit;

TEST_CASE("forward map examples") {
    CHECK(bijection_forward(Partition({2, 1}), 3, 2) == Partition({7, 4, 1}));
    CHECK(bijection_forward(Partition(), 0, 3) == Partition());
    CHECK(bijection_forward(Partition({1, 1}), 4, 1) == Partition({5, 4, 2, 1}));
    CHECK_THROWS_AS(bijection_forward(Partition({2, 1, 1}), 2, 1), std::invalid_argument);
}

TEST_CASE("weight and gap laws") {
    auto lambdas = enumerate_partitions(11, ConstraintSpec::any());
    for (const auto& lambda : lambdas)
        for (int64_t d = 0; d <= 3; ++d)
            for (int64_t L : {11L, 22L}) {
                Partition mu = bijection_forward(lambda, L, d);
                CHECK(mu.weight() == lambda.weight() + L + d * L * (L - 1) / 2);
                CHECK(mu.length() == L);
                for (int64_t i = 0; i + 1 < L; ++i) {
                    int64_t li = (i < lambda.length()) ? lambda.parts[i] : 0;
                    int64_t lnext = (i + 1 < lambda.length()) ? lambda.parts[i + 1] : 0;
                    CHECK(mu.parts[i] - mu.parts[i + 1] == li - lnext + d);
                }
            }
}

TEST_CASE("inverse map examples") {
    CHECK(bijection_inverse(Partition({7, 4, 1}), 3, 2) == Partition({2, 1}));
    CHECK(bijection_inverse(Partition(), 0, 1) == Partition());
    CHECK(bijection_inverse(Partition({3, 2, 1}), 3, 1) == Partition());
}

TEST_CASE("inverse rejects bad images with located violations") {
    try {
        bijection_inverse(Partition({7, 4}), 3, 2);
        FAIL("expected BijectionError");
    } catch (const BijectionError& e) {
        CHECK(e.kind == BijectionError::Kind::WrongLength);
    }
    try {
        bijection_inverse(Partition({7, 6, 1}), 3, 2);
        FAIL("expected BijectionError");
    } catch (const BijectionError& e) {
        CHECK(e.kind == BijectionError::Kind::GapTooSmall);
        CHECK(e.index == 1);
    }
    // (9,4,2) is the valid image of (4,1,1); floors are 5,3,1
    CHECK(bijection_inverse(Partition({9, 4, 2}), 3, 2) == Partition({4, 1, 1}));
    try {
        bijection_inverse(Partition({8, 2, 1}), 3, 2);  // gap(1,2)=6 ok, gap(2,3)=1 < 2
        FAIL("expected BijectionError");
    } catch (const BijectionError& e) {
        CHECK(e.kind == BijectionError::Kind::GapTooSmall);
        CHECK(e.index == 2);
    }
    try {
        bijection_inverse(Partition({8, 4, 0}), 3, 4);  // gaps ok; floors 9,5,1
        FAIL("expected BijectionError");
    } catch (const BijectionError& e) {
        CHECK(e.kind == BijectionError::Kind::PartTooSmall);
        CHECK(e.index == 1);
    }
}

TEST_CASE("round trip on all partitions up to 12") {
    for (int64_t n = 0; n <= 12; ++n) {
        auto lambdas = enumerate_partitions(n, ConstraintSpec::any());
        for (const auto& lambda : lambdas)
            for (int64_t d = 0; d <= 3; ++d)
                for (int64_t L : {n, 2 * n}) {
                    Partition mu = bijection_forward(lambda, L, d);
                    CHECK(bijection_inverse(mu, L, d) == lambda);
                }
    }
}

TEST_CASE("bijectivity reports") {
    auto r551 = verify_bijectivity(5, 5, 1);
    CHECK(r551.pairs == 7);
    CHECK(r551.pass);

    auto r0 = verify_bijectivity(0, 0, 2);
    CHECK(r0.pairs == 1);
    CHECK(r0.pass);

    auto r481 = verify_bijectivity(4, 8, 1);
    CHECK(r481.pass);  // image weight 4+8+28 = 40
    CHECK(r481.pairs == 5);
}
