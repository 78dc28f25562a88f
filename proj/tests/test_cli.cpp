// SPDX-License-Identifier: Apache-2.0
#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <doctest.h>
#include <json.hpp>

#include "support/subprocess.hpp"

namespace {

namespace fs = std::filesystem;

subprocess::Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), subprocess::cli_path());
    return subprocess::run(args);
}

// RAII temp file
struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& contents) {
        path = fs::temp_directory_path() /
               ("chroma-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++) + ".txt");
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::error_code ec; fs::remove(path, ec); }
    static inline int counter = 0;
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("eval prints model, channels and hex") {
    auto r = cli({"eval", "green!50!red"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "rgb 0.500000 0.500000 0.000000 #808000\n");

    r = cli({"eval", ".", "--current", "blue"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "rgb 0.000000 0.000000 1.000000 #0000FF\n");

    r = cli({"eval", "red", "--model", "cmyk"});
    CHECK(r.out == "cmyk 0.000000 1.000000 1.000000 0.000000 #FF0000\n");

    r = cli({"eval", "--", "-red"});  // leading dash needs the separator
    CHECK(r.exit_code == 0);
    CHECK(r.out == "rgb 0.000000 1.000000 1.000000 #00FFFF\n");
}

TEST_CASE("eval exit codes") {
    CHECK(cli({"eval", "red!!"}).exit_code == 2);         // parse
    CHECK(cli({"eval", "nosuch"}).exit_code == 3);        // undefined
    CHECK(cli({"eval", "."}).exit_code == 4);             // no current color
    CHECK(cli({"eval", "rgb,0:red,1"}).exit_code == 4);   // zero divisor
    CHECK(cli({"--no-such-flag"}).exit_code == 2);        // usage
}

TEST_CASE("eval with a defs script") {
    TempFile defs(
        "definecolor c1 rgb .7,.6,.5\n"
        "colorlet c1a c1\n");
    auto r = cli({"eval", "c1a", "--defs", defs.path.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "rgb 0.700000 0.600000 0.500000 #B39980\n");

    TempFile bad("definecolor c1 rgb .7,.6,.5\nnonsense\n");
    CHECK(cli({"eval", "c1", "--defs", bad.path.string()}).exit_code == 2);
    TempFile undef("colorlet a nosuch\n");
    CHECK(cli({"eval", "red", "--defs", undef.path.string()}).exit_code == 3);
}

TEST_CASE("convert") {
    auto r = cli({"convert", "rgb:.4,.5,.6", "--to", "gray"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "gray 0.481000 #7B7B7B\n");
    CHECK(cli({"convert", "gray:1", "--to", "rgb"}).out ==
          "rgb 1.000000 1.000000 1.000000 #FFFFFF\n");
    CHECK(cli({"convert", "rgb:1,0,0", "--to", "cmyk"}).out ==
          "cmyk 0.000000 1.000000 1.000000 0.000000 #FF0000\n");
    CHECK(cli({"convert", "rgb:1,0", "--to", "cmyk"}).exit_code == 2);
    CHECK(cli({"convert", "lab:1,0,0", "--to", "rgb"}).exit_code == 2);
    CHECK(cli({"convert", "no-colon", "--to", "rgb"}).exit_code == 2);
}

TEST_CASE("swatch text row") {
    auto r = cli({"swatch", "red"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "red  rgb:1.000000,0.000000,0.000000  cmyk:0.000000,1.000000,1.000000,0.000000"
          "  hsb:0.000000,1.000000,1.000000  HTML:#FF0000  gray:0.300000\n");
}

TEST_CASE("swatch error rows keep the run alive") {
    auto r = cli({"swatch", "red", "nosuch"});
    CHECK(r.exit_code == 0);  // one row succeeded
    CHECK(r.out.find("error:") != std::string::npos);
    CHECK(cli({"swatch", "nosuch"}).exit_code == 4);  // every row failed
}

TEST_CASE("swatch model selection and file input") {
    TempFile exprs("# swatch input\nred\n  green  \n");
    auto r = cli({"swatch", "--file", exprs.path.string(), "--models", "gray"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "red  gray:0.300000\ngreen  gray:0.590000\n");
    CHECK(cli({"swatch", "red", "--models", "lab"}).exit_code == 2);
}

TEST_CASE("swatch json shape") {
    auto r = cli({"swatch", "red", "--format", "json"});
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["expr"] == "red");
    CHECK(doc[0]["hex"] == "FF0000");
    CHECK(doc[0]["values"]["rgb"] == nlohmann::json::array({1.0, 0.0, 0.0}));
    CHECK(doc[0]["values"]["cmyk"].size() == 4);
    CHECK(doc[0]["values"]["gray"].size() == 1);
    CHECK(!doc[0]["values"].contains("HTML"));  // carried by "hex"
}

TEST_CASE("swatch html contains an inline-styled cell") {
    auto r = cli({"swatch", "red", "--format", "html"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("<table>") != std::string::npos);
    CHECK(r.out.find("background-color:#FF0000") != std::string::npos);
}

TEST_CASE("series subcommand") {
    TempFile defs(
        "current blue\n"
        "definecolorseries foo rgb last . -.\n"
        "resetcolorseries 5 foo\n");
    auto r = cli({"series", "foo", "--defs", defs.path.string(), "--accesses", "+,+,+"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "0.000000 0.000000 1.000000\n"
          "0.200000 0.200000 0.800000\n"
          "0.400000 0.400000 0.600000\n");

    r = cli({"series", "foo", "--defs", defs.path.string(), "--accesses", "[2] x2"});
    CHECK(r.out == "0.400000 0.400000 0.600000\n0.400000 0.400000 0.600000\n");

    TempFile noreset("definecolorseries foo rgb last red blue\n");
    CHECK(cli({"series", "foo", "--defs", noreset.path.string(), "--accesses", "+"}).exit_code ==
          4);
    CHECK(cli({"series", "foo", "--defs", defs.path.string(), "--accesses", "bogus"}).exit_code ==
          2);
}

TEST_CASE("stripe subcommand") {
    auto r = cli({"stripe", "--rows", "4", "--odd", "a", "--even", "b"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 a\n2 b\n3 a\n4 b\n");

    r = cli({"stripe", "--rows", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());

    TempFile events("before 2 bogus x\n");
    CHECK(cli({"stripe", "--rows", "2", "--odd", "a", "--even", "b", "--events",
               events.path.string()})
              .exit_code == 2);
}

TEST_CASE("stripe trace of the nine-row scenario") {
    TempFile events(
        "before 3 rowcolor blue!25\n"
        "before 5 hide\n"
        "before 7 show\n"
        "cell 9 red!12\n");
    auto r = cli({"stripe", "--rows", "9", "--start", "1", "--odd", "green!25", "--even",
                  "yellow!50", "--command", "hline", "--events", events.path.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "1 green!25\n"
          "2 yellow!50 hline\n"
          "3 blue!25 hline\n"
          "4 yellow!50 hline\n"
          "5 - hline\n"
          "6 - hline\n"
          "7 green!25 hline\n"
          "8 yellow!50 hline\n"
          "9 green!25 hline cell=red!12\n");
}

TEST_CASE("output is deterministic across runs") {
    // "--" so that complement expressions are not mistaken for flags
    std::vector<std::string> args = {"swatch", "--format", "json", "--",
                                     "red", "-JungleGreen", "green!50!red"};
    auto a = cli(args);
    auto b = cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_SUITE_END();
