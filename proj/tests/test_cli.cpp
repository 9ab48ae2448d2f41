#include "pet/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = pet::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli oddgirth") {
    SUBCASE("method all prints three values and a match flag") {
        auto r = run({"oddgirth", "--n", "11", "--k", "3", "--method", "all"});
        CHECK(r.code == 0);
        CHECK(r.out == "7 7 7 match\n");
    }
    SUBCASE("bipartite instance") {
        auto r = run({"oddgirth", "--n", "6", "--k", "3"});
        CHECK(r.code == 0);
        CHECK(r.out == "bipartite\n");
    }
    SUBCASE("Pet(6,2) has odd girth 3") {
        auto r = run({"oddgirth", "--n", "6", "--k", "2"});
        CHECK(r.code == 0);
        CHECK(r.out == "3\n");
    }
    SUBCASE("every method answers on its own") {
        for (const char* method : {"formula", "ip", "bfs"}) {
            auto r = run({"oddgirth", "--n", "11", "--k", "3", "--method", method});
            CAPTURE(method);
            CHECK(r.code == 0);
            CHECK(r.out == "7\n");
        }
    }
    SUBCASE("bad parameters exit 1") {
        auto r = run({"oddgirth", "--n", "3", "--k", "2"});
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK(!r.err.empty());
    }
    SUBCASE("json output") {
        auto r = run({"--format", "json", "oddgirth", "--n", "11", "--k", "3"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["odd_girth"] == 7);
    }
}

TEST_CASE("cli scan") {
    auto r = run({"scan", "--n-max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n\tk\tformula\tip\tbfs\tmatch\n", 0) == 0);
    SUBCASE("deterministic output") {
        auto r2 = run({"scan", "--n-max", "12"});
        CHECK(r.out == r2.out);
    }
    SUBCASE("json embeds the formula trace") {
        auto rj = run({"--format", "json", "scan", "--n-max", "8"});
        CHECK(rj.code == 0);
        auto j = nlohmann::json::parse(rj.out);
        CHECK(j["mismatches"] == 0);
        bool found_trace = false;
        for (const auto& row : j["rows"])
            if (!row["trace"].is_null() && row["trace"].contains("chosen")) found_trace = true;
        CHECK(found_trace);
    }
}

TEST_CASE("cli bounds") {
    SUBCASE("(11,3) table contains the expected rationals") {
        auto r = run({"bounds", "--n", "11", "--k", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("2+8/21") != std::string::npos);
        CHECK(r.out.find("11/4") != std::string::npos);
    }
    SUBCASE("(25,3) marks C5-colourability") {
        auto r = run({"bounds", "--n", "25", "--k", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("C5-colorable: yes") != std::string::npos);
    }
    SUBCASE("bipartite exits 1") {
        auto r = run({"bounds", "--n", "6", "--k", "3"});
        CHECK(r.code == 1);
        CHECK(r.err.find("bipartite") != std::string::npos);
    }
    SUBCASE("--decimal adds float renderings") {
        auto r = run({"--decimal", "bounds", "--n", "11", "--k", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("(2.75)") != std::string::npos);  // 11/4
    }
    SUBCASE("json schema") {
        auto r = run({"--format", "json", "bounds", "--n", "5", "--k", "2"});
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["n"] == 5);
        CHECK(j["odd_girth"] == 5);
        CHECK(j["best_upper"]["num"] == "3");
        bool found = false;
        for (const auto& entry : j["bounds"])
            if (entry["name"] == "compk_b" && entry["applicable"] == true &&
                entry["value"]["num"] == "30" && entry["value"]["den"] == "11")
                found = true;
        CHECK(found);
    }
}

TEST_CASE("cli hom") {
    SUBCASE("c5 witness for (25,3)") {
        auto r = run({"hom", "c5", "--n", "25", "--k", "3"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["verified"] == true);
        CHECK(j["assignment"].size() == 50);
    }
    SUBCASE("clique witness for (11,3)") {
        auto r = run({"hom", "clique", "--n", "11", "--k", "3"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["verified"] == true);
        CHECK(j["vertices"].size() == 10);
        CHECK(j["solution"]["t"] == 1);
    }
    SUBCASE("pb-circ precondition failure names the condition") {
        auto r = run({"hom", "pb-circ", "--n", "9", "--k", "4"});
        CHECK(r.code == 1);
        CHECK(r.err.find("mod k-1") != std::string::npos);
    }
    SUBCASE("interleave report") {
        auto r = run({"hom", "interleave", "--n", "7", "--k", "2"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["verified"] == true);
        CHECK(j["power"] == 3);
    }
}

TEST_CASE("cli search") {
    SUBCASE("preflight refutation exits 3") {
        auto r = run({"search", "--n", "9", "--k", "3", "--target", "c5"});
        CHECK(r.code == 3);
        CHECK(r.out == "none\n");
    }
    SUBCASE("found map exits 0 with a witness") {
        auto r = run({"search", "--n", "5", "--k", "2", "--target", "circ:3/1"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["verified"] == true);
    }
    SUBCASE("tiny budget exits 4") {
        auto r = run({"search", "--n", "7", "--k", "3", "--target", "c5", "--budget", "2"});
        CHECK(r.code == 4);
        CHECK(r.out == "budget\n");
    }
    SUBCASE("bad target exits 1") {
        auto r = run({"search", "--n", "5", "--k", "2", "--target", "pentagon"});
        CHECK(r.code == 1);
    }
}

TEST_CASE("cli export") {
    SUBCASE("Pet(5,2) edge list bytes") {
        std::string path = "pet_cli_export_test.txt";
        auto r = run({"export", "--n", "5", "--k", "2", "--what", "pet", "--path", path});
        CHECK(r.code == 0);
        std::ifstream in(path);
        std::stringstream content;
        content << in.rdbuf();
        std::string text = content.str();
        CHECK(text.rfind("p 10 15\n", 0) == 0);
        CHECK(text.find("e 0 1\n") != std::string::npos);
        CHECK(std::count(text.begin(), text.end(), '\n') == 16);
        SUBCASE("deterministic bytes") {
            std::string path2 = "pet_cli_export_test2.txt";
            run({"export", "--n", "5", "--k", "2", "--what", "pet", "--path", path2});
            std::ifstream in2(path2);
            std::stringstream content2;
            content2 << in2.rdbuf();
            CHECK(content2.str() == text);
            std::remove(path2.c_str());
        }
        std::remove(path.c_str());
    }
    SUBCASE("unwritable path exits 1") {
        auto r = run({"export", "--n", "5", "--k", "2", "--what", "pet", "--path",
                      "/nonexistent-dir/sub/out.txt"});
        CHECK(r.code == 1);
        CHECK(!r.err.empty());
    }
    SUBCASE("power export") {
        std::string path = "pet_cli_export_power.txt";
        auto r = run({"export", "--n", "5", "--k", "2", "--what", "power:3", "--path", path});
        CHECK(r.code == 0);
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        CHECK(header.rfind("p 10 ", 0) == 0);
        std::remove(path.c_str());
    }
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"oddgirth", "--n", "11"}).code == 1);  // missing --k
}
