#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "scottlab/io/config.hpp"
#include "scottlab/io/csv.hpp"
#include "scottlab/io/manifest.hpp"
#include "scottlab/io/sha256.hpp"

using namespace scottlab;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path p = fs::temp_directory_path() / "scottlab_io_test";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("sha256 known vectors") {
    CHECK(io::sha256_hex(std::string("")) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(io::sha256_hex(std::string("abc")) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(io::sha256_hex(std::string("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")) ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // block-boundary lengths
    CHECK(io::sha256_hex(std::string(64, 'a')) ==
          io::sha256_hex(std::string(64, 'a')));
}

TEST_CASE("csv writer: header, width check, deterministic bytes") {
    const fs::path dir = temp_dir();
    const fs::path p1 = dir / "a.csv", p2 = dir / "b.csv";
    for (const fs::path& p : {p1, p2}) {
        io::CsvWriter w(p, {"x", "y"});
        w.row({1.0, 0.1});
        w.row({2.0, 1.0 / 3.0});
        w.close();
    }
    CHECK(slurp(p1) == slurp(p2));
    CHECK(slurp(p1).substr(0, 4) == "x,y\n");

    io::CsvWriter w(dir / "c.csv", {"x"});
    CHECK_THROWS_AS(w.row({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("config: parsing, defaults, resolution record") {
    const fs::path dir = temp_dir();
    const fs::path p = dir / "run.cfg";
    {
        std::ofstream out(p);
        out << "# comment line\n"
            << "scott.alphas = 0,0.2\n"
            << "scott.spacing=0.05   # trailing comment\n"
            << "\n"
            << "unused.key = 3\n";
    }
    auto cfg = io::Config::from_file(p);
    CHECK(cfg.get_double("scott.spacing", 1.0) == doctest::Approx(0.05));
    const auto alphas = cfg.get_double_list("scott.alphas", {});
    REQUIRE(alphas.size() == 2);
    CHECK(alphas[1] == doctest::Approx(0.2));
    CHECK(cfg.get_int("scott.ell_limit", 200) == 200);  // defaulted
    CHECK(cfg.get_bool("scott.flag", true));
    // every read key lands in the resolved map, defaults included
    CHECK(cfg.resolved().count("scott.ell_limit") == 1);
    CHECK(cfg.resolved().at("scott.ell_limit") == "200");
    const auto unused = cfg.unused_keys();
    REQUIRE(unused.size() == 1);
    CHECK(unused[0] == "unused.key");

    const fs::path bad = dir / "bad.cfg";
    {
        std::ofstream out(bad);
        out << "this line has no equals\n";
    }
    CHECK_THROWS_AS(io::Config::from_file(bad), std::invalid_argument);
    CHECK_THROWS_AS(io::Config::from_file(dir / "missing.cfg"), std::invalid_argument);
}

TEST_CASE("manifest: digests match the written files") {
    const fs::path dir = temp_dir();
    const fs::path out = dir / "data.csv";
    {
        io::CsvWriter w(out, {"v"});
        w.row({42.0});
        w.close();
    }
    io::RunManifest m;
    m.command = "test";
    m.version = "scottlab test";
    m.add_output(out, dir);
    CHECK(m.output_digests.at("data.csv") == io::sha256_file(out));
    m.write(dir / "manifest.json");
    const std::string text = slurp(dir / "manifest.json");
    CHECK(text.find("data.csv") != std::string::npos);
    CHECK(text.find(io::sha256_file(out)) != std::string::npos);
}
