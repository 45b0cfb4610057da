#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincount/partition.hpp"

using namespace lincount;

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition{}.empty());
    CHECK(Partition({2, 2}).size() == 4);
    CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
    // involution on a small sweep
    for (const auto& p : partitions_in_box(BoxShape(3, 4))) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("complement in a box") {
    CHECK(complement_in_box(Partition{2, 1}, BoxShape(2, 3)) == Partition{2, 1});
    CHECK(complement_in_box(Partition{}, BoxShape(2, 2)) == Partition{2, 2});
    CHECK(complement_in_box(Partition{3, 3}, BoxShape(2, 3)) == Partition{});
    CHECK_THROWS_AS(complement_in_box(Partition{4}, BoxShape(2, 3)), Error);

    BoxShape box(3, 4);
    for (const auto& p : partitions_in_box(box)) {
        Partition c = complement_in_box(p, box);
        CHECK(complement_in_box(c, box) == p);
        CHECK(p.size() + c.size() == box.dimension());
    }
}

TEST_CASE("text form round-trips") {
    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(format_partition(Partition{3, 1, 1}) == "3,1,1");
    CHECK(format_partition(Partition{}) == "");
    CHECK_THROWS_AS(parse_partition("1,2"), Error);
    CHECK_THROWS_AS(parse_partition("a"), Error);
    CHECK_THROWS_AS(parse_partition("0"), Error);
    CHECK_THROWS_AS(parse_partition("-1"), Error);
}

TEST_CASE("box enumeration") {
    CHECK(partitions_in_box(BoxShape(2, 2)).size() == 6);  // (), 1, 11, 2, 21, 22
    CHECK(partitions_of_size_in_box(2, BoxShape(2, 2)).size() == 2);
    CHECK(partitions_of_size_in_box(0, BoxShape(2, 2)).size() == 1);
    CHECK(partitions_of_size_in_box(5, BoxShape(2, 2)).empty());
    CHECK(partitions_in_box(BoxShape(3, 0)).size() == 1);
}

TEST_CASE("boxes reject nonsense") {
    CHECK_THROWS_AS(BoxShape(0, 3), Error);
    CHECK_THROWS_AS(BoxShape(2, -1), Error);
    CHECK(BoxShape(2, 0).full() == Partition{});
    CHECK(BoxShape(2, 3).full() == Partition{3, 3});
}
