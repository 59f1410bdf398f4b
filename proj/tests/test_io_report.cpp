#include <doctest.h>

#include "hookforge/errors.hpp"
#include "hookforge/io.hpp"
#include "hookforge/report.hpp"

using namespace hookforge;

TEST_CASE("object parsing") {
    CHECK(parse_partition_any("4,3,1").object_size() == 8);
    CHECK(parse_partition_any("[4,3,1]").object_size() == 8);
    CHECK(parse_partition_any("").object_size() == 0);
    CHECK(parse_tree_any("0,1,1").object_size() == 3);
    CHECK(parse_solid_any("[[1,1,1],[2,1,1]]").object_size() == 2);
    CHECK(parse_solid_any("{\"cubes\":[[1,1,1]]}").object_size() == 1);
    CHECK(parse_solid_any("{\"matrix\":[[2,1],[1]]}").object_size() == 4);
    CHECK(parse_poset_any("3\n1 < 2\n").object_size() == 3);
    CHECK(parse_ideal_any(R"({"factors":[[0,1,2]],"elements":[[1],[2]]})").object_size() == 2);
    CHECK_THROWS_AS(parse_solid_any("[[1,1]]"), ParseError);
    CHECK_THROWS_AS(parse_solid_any("nonsense"), ParseError);
    CHECK_THROWS_AS(parse_solid_any("[[2,1,1]]"), InvalidObjectError);
    CHECK_THROWS_AS(parse_ideal_any("{\"factors\":[[0]]}"), ParseError);
}

TEST_CASE("weights parse from presets and tables") {
    CHECK(parse_plane_weight("ones").name() == "ones");
    CHECK(parse_plane_weight("axes").name() == "axes");
    const WeightFunction table = parse_plane_weight(R"([[[0,0],"3/2"],[[1,2],4]])");
    CHECK(table.at(0, 0) == BigRat(3, 2));
    CHECK(table.at(1, 2) == 4);
    CHECK(table.at(2, 1) == 0);
    CHECK_THROWS_AS(parse_plane_weight("[[0,0]]"), ParseError);
    CHECK_THROWS_AS(parse_plane_weight(R"([[[0,0],"1/0"]])"), ParseError);

    const ShiftWeight faces = parse_shift_weight("faces", 3, 2);
    CHECK(faces.at({1, 2, 0}) == 1);
    CHECK(faces.at({1, 1, 1}) == 0);
}

TEST_CASE("rational round trips") {
    CHECK(to_string(rat_from_string("22/7")) == "22/7");
    CHECK(to_string(rat_from_string("10/5")) == "2");
    CHECK(to_string(BigRat(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("x"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("stats reports") {
    const AnyObject shape = parse_partition_any("4,3,1");
    const Json hook = stats_report(shape, "hook", "");
    CHECK(hook["product"] == "576");
    CHECK(hook["sum"] == "22");
    CHECK(hook["multiset"][0] == "6");
    CHECK(hook["table"].size() == 8);
    CHECK_FALSE(report_flags_counterexample(hook));

    const Json anti = stats_report(shape, "anti-hook", "");
    CHECK(anti["product"] == "1728");

    const Json weighted = stats_report(shape, "weighted", "axes");
    CHECK(weighted["product"] == "576");
    CHECK(weighted["star_product"] == "1728");
    CHECK(weighted["majorization"] == "majorizes");

    const Json empty = stats_report(parse_partition_any(""), "hook", "");
    CHECK(empty["table"].empty());
    CHECK(empty["product"] == "1");
    CHECK(empty["sum"] == "0");

    const AnyObject tree = parse_tree_any("0,1,1,1,2,3,5,5");
    CHECK(stats_report(tree, "branch", "")["product"] == "192");
    CHECK(stats_report(tree, "distance", "")["product"] == "1152");
    CHECK_THROWS_AS(stats_report(tree, "hook", ""), ParseError);

    const AnyObject solid = parse_solid_any("[[1,1,1],[2,1,1],[1,2,1],[1,1,2]]");
    const Json volumes = stats_report(solid, "V", "");
    CHECK(volumes["majorization"] == "majorizes");
    CHECK(volumes["product"] == "4");
    CHECK(volumes["star_product"] == "8");

    const Json upper = stats_report(parse_poset_any("3\n1 < 2\n1 < 3\n"), "upper-ideal", "");
    CHECK(upper["multiset"] == Json::array({"3", "1", "1"}));
}

TEST_CASE("stats reports round-trip through their JSON text") {
    const Json r = stats_report(parse_partition_any("4,3,1"), "hook", "");
    CHECK(Json::parse(r.dump()) == r);
    const Json w = stats_report(parse_partition_any("3,2"), "weighted", "ones");
    CHECK(Json::parse(w.dump()) == w);
}

TEST_CASE("count reports") {
    const Json syt = count_report(parse_partition_any("4,3,1"), 20);
    CHECK(syt["count"] == "70");
    CHECK(syt["cross_check"]["linear_extensions"] == "70");
    CHECK(syt["cross_check"]["match"] == true);

    const Json it = count_report(parse_tree_any("0,1,1,1,2,3,5,5"), 20);
    CHECK(it["count"] == "210");

    const Json above_limit = count_report(parse_partition_any("4,3,1"), 5);
    CHECK(above_limit["cross_check"]["linear_extensions"].is_null());

    const Json poset = count_report(parse_poset_any("3\n"), 20);
    CHECK(poset["count"] == "6");
    CHECK(poset["method"] == "downset-dp");
    CHECK_THROWS_AS(count_report(parse_poset_any("30\n"), 20), LimitError);
}

TEST_CASE("shuffle reports") {
    const Json plane = shuffle_report(parse_partition_any("3,2"), "[[1,3],[2,2]]", "");
    CHECK(plane["monotone"] == true);
    CHECK(plane["stages"][2]["members"] == Json::parse("[[1,1],[1,2]]"));

    const Json empty = shuffle_report(parse_partition_any("3,2"), "[]", "");
    CHECK(empty["monotone"] == true);

    const Json solid = shuffle_report(parse_solid_any("[[1,1,1],[2,1,1],[1,2,1],[1,1,2]]"),
                                      "[[2,1,1]]", "");
    CHECK(solid["monotone"] == true);
    CHECK(solid["stages"][3]["members"] == Json::parse("[[1,1,1]]"));
    CHECK(solid["checks"][0]["chain"] == Json::parse("[2,2,3,4]"));

    const Json tree = shuffle_report(parse_tree_any("0,1,1,1,2,3,5,5"), "[5]", "");
    CHECK(tree["stages"][1]["members"] == Json::parse("[1]"));

    CHECK_THROWS_AS(shuffle_report(parse_partition_any("3,2"), "[[9,9]]", ""),
                    PreconditionError);
}

TEST_CASE("bounds reports") {
    const Json claw = bounds_report(parse_solid_any("[[1,1,1],[2,1,1],[1,2,1],[1,1,2]]"), 20);
    CHECK(claw["exact"] == "6");
    CHECK(claw["bound_v"] == "6");
    CHECK(claw["bound_vstar"] == "3");
    CHECK(claw["ordering_ok"] == true);
    CHECK_THROWS_AS(bounds_report(parse_partition_any("2,1"), 20), ParseError);
}

TEST_CASE("verify reports") {
    SweepConfig cfg;
    cfg.max_n = 4;
    const SweepResult result = run_theorem("young-hook", cfg);
    const Json r = verify_report(result, cfg);
    CHECK(r["ok"] == true);
    CHECK(r["theorem"] == "young-hook");
    CHECK(r["failures"].empty());
    CHECK(r["config"]["max_n"] == 4);
    CHECK(Json::parse(r.dump()) == r);
}
