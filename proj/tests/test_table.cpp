#include <doctest.h>

#include "betheotto/table.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

using namespace betheotto;

TEST_SUITE("table") {

TEST_CASE("doubles serialize as shortest round-trip decimals") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-3.5) == "-3.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1e100) == "1e+100");
    CHECK(format_double(0.75) == "0.75");

    // round-trips exactly through parsing
    for (double v : {3.141592653589793, 1.0 / 3.0, 16.532621393673104, 6.02e23, 5e-324}) {
        CAPTURE(v);
        const std::string text = format_double(v);
        double back = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), back);
        REQUIRE(res.ec == std::errc{});
        CHECK(back == v);
    }
}

TEST_CASE("cell rendering") {
    CHECK(format_cell(Cell{std::monostate{}}).empty());
    CHECK(format_cell(Cell{true}) == "true");
    CHECK(format_cell(Cell{false}) == "false");
    CHECK(format_cell(Cell{std::int64_t{42}}) == "42");
    CHECK(format_cell(Cell{std::int64_t{-7}}) == "-7");
    CHECK(format_cell(Cell{std::string{"(1,2)"}}) == "(1,2)");
    CHECK(format_cell(Cell{2.5}) == "2.5");
}

TEST_CASE("row width is enforced") {
    SweepTable table({"a", "b"});
    table.append_row({1.0, 2.0});
    CHECK_THROWS_AS(table.append_row({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(table.append_row({1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK(table.size() == 1);
}

TEST_CASE("named access") {
    SweepTable table({"c", "efficiency"});
    table.append_row({0.5, Cell{std::monostate{}}});
    table.append_row({2.0, 0.73});

    CHECK(table.column_index("c") == 0);
    CHECK(table.column_index("efficiency") == 1);
    CHECK_THROWS_AS((void)table.column_index("nope"), std::out_of_range);
    CHECK(std::get<double>(table.at(1, "efficiency")) == 0.73);
    CHECK(std::holds_alternative<std::monostate>(table.at(0, "efficiency")));
}

TEST_CASE("csv output") {
    SUBCASE("plain table") {
        SweepTable table({"c", "valid_engine", "note"});
        table.append_row({1.5, true, std::string{"ok"}});
        table.append_row({2.0, false, Cell{std::monostate{}}});
        CHECK(to_csv(table) == "c,valid_engine,note\n1.5,true,ok\n2,false,\n");
    }
    SUBCASE("quoting") {
        SweepTable table({"k", "v"});
        table.append_row({std::string{"a,b"}, std::string{"say \"hi\""}});
        table.append_row({std::string{"line\nbreak"}, std::string{"plain"}});
        CHECK(to_csv(table) == "k,v\n\"a,b\",\"say \"\"hi\"\"\"\n\"line\nbreak\",plain\n");
    }
    SUBCASE("header-only table") {
        SweepTable table({"x"});
        CHECK(to_csv(table) == "x\n");
    }
    SUBCASE("stream and string forms agree") {
        SweepTable table({"a"});
        table.append_row({1e-3});
        std::ostringstream os;
        write_csv(table, os);
        CHECK(os.str() == to_csv(table));
        CHECK(os.str() == "a\n0.001\n");
    }
    SUBCASE("serialization is deterministic") {
        SweepTable table({"c", "eta"});
        for (int i = 0; i < 50; ++i) table.append_row({0.1 * i, 0.75 - 1e-3 * i});
        CHECK(to_csv(table) == to_csv(table));
    }
}

} // TEST_SUITE
