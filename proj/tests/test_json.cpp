#include "doctest.h"

#include "ivpoly/json_io.hpp"

using namespace ivpoly;

TEST_SUITE("json") {

TEST_CASE("prescribed artifact round trip verifies") {
    PrescribedLengthsArtifact art = construct_prescribed(LengthSpec({1, 1}));
    io::json j = io::prescribed_to_json(art);
    CHECK(j.at("kind") == "prescribed");
    PrescribedLengthsArtifact back = io::prescribed_from_json(j);
    CHECK(back.H == art.H);
    CHECK(back.lengths == art.lengths);
    CHECK(back.design->S == art.design->S);
    CHECK(back.design->R == art.design->R);
    CHECK(back.lift->lifted == art.lift->lifted);
    CHECK(verify_prescribed(back).all_passed());
}

TEST_CASE("degenerate artifact round trip") {
    PrescribedLengthsArtifact art = construct_prescribed(LengthSpec({2}));
    io::json j = io::prescribed_to_json(art);
    CHECK(j.at("design").is_null());
    PrescribedLengthsArtifact back = io::prescribed_from_json(j);
    CHECK(verify_prescribed(back).all_passed());
}

TEST_CASE("transfer artifact round trip verifies") {
    TransferArtifact art = construct_transfer(2);
    io::json j = io::transfer_to_json(art);
    CHECK(j.at("kind") == "transfer");
    TransferArtifact back = io::transfer_from_json(j);
    CHECK(back.R == art.R);
    CHECK(back.a == art.a);
    CHECK(back.H == art.H);
    CHECK(back.G == art.G);
    CHECK(verify_transfer(back).all_passed());
}

TEST_CASE("integers survive as decimal strings beyond double precision") {
    Int big("123456789012345678901234567890");
    io::json j = io::int_to_json(big);
    CHECK(j.is_string());
    CHECK(io::int_from_json(j) == big);
}

TEST_CASE("kind mismatch is rejected") {
    TransferArtifact art = construct_transfer(1);
    io::json j = io::transfer_to_json(art);
    CHECK_THROWS_AS(io::prescribed_from_json(j), std::invalid_argument);
}

}  // TEST_SUITE
