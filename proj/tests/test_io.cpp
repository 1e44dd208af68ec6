#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "bures/io.hpp"
#include "helpers.hpp"

using namespace bures;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("JSON matrix files") {
    const MatrixFile file =
        parse_matrix_text(R"({"n": 2, "data": [[1, 0], [0, 4]]})");
    CHECK(file.n == 2);
    CHECK(file.data == test::diag({1, 4}));

    CHECK_THROWS_AS(parse_matrix_text(R"({"n": 3, "data": [[1, 0], [0, 4]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_text(R"({"data": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("{not json"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text(R"({"n": 2, "data": [[1, 0], [0]]})"),
                    ParseError);
}

TEST_CASE("CSV matrix files infer the dimension") {
    const MatrixFile file = parse_matrix_text("1, 0\n0, 4\n");
    CHECK(file.n == 2);
    CHECK(file.data == test::diag({1, 4}));

    CHECK_THROWS_AS(parse_matrix_text("1, 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1, x\n3, 4\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("nan, 0\n0, 1\n"), ParseError);
}

TEST_CASE("SPD readers gate asymmetry and definiteness") {
    const auto good = write_temp("bures_io_good.json", R"({"n":2,"data":[[2,1],[1,2]]})");
    CHECK(read_spd(good.string()).entries() == test::mat2(2, 1, 1, 2));

    const auto asym = write_temp("bures_io_asym.csv", "1, 0.5\n0.2, 1\n");
    CHECK_THROWS_AS(read_spd(asym.string()), ValidationError);
    CHECK_THROWS_AS(read_tangent(asym.string()), ValidationError);

    // tiny asymmetry is silently symmetrized
    const auto near = write_temp("bures_io_near.csv", "1, 0.5000000000001\n0.5, 1\n");
    CHECK_NOTHROW(read_spd(near.string()));

    const auto indefinite = write_temp("bures_io_indef.csv", "1, 0\n0, -1\n");
    CHECK_THROWS_AS(read_spd(indefinite.string()), NotSpdError);
    CHECK_NOTHROW(read_tangent(indefinite.string()));

    CHECK_THROWS_AS(read_spd("/nonexistent/bures.json"), ParseError);

    std::filesystem::remove(good);
    std::filesystem::remove(asym);
    std::filesystem::remove(near);
    std::filesystem::remove(indefinite);
}

TEST_CASE("deterministic formatting") {
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(-4.0) == "-4");
    CHECK(format_double(0.7071067811865476) == "0.7071067811865476");
    CHECK(format_double(2.25) == "2.25");

    CHECK(format_fixed12(0.0) == "0.000000000000");
    CHECK(format_fixed12(1.4142135623730951) == "1.414213562373");

    CHECK(format_matrix(test::diag({2, -4})) == "2 0\n0 -4\n");
}
