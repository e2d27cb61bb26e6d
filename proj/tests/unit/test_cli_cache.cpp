#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "syzygy/error.hpp"

using namespace syzygy;
namespace fs = std::filesystem;

TEST_SUITE("cli") {
  TEST_CASE("cache round trip and corruption") {
    const fs::path dir = fs::temp_directory_path() / "syzygy-unit-cache";
    fs::remove_all(dir);
    cli::Cache c(dir);
    CHECK_FALSE(c.load("classes", "k1").has_value());
    c.store("classes", "k1", "body\nline two\n");
    auto back = c.load("classes", "k1");
    REQUIRE(back.has_value());
    CHECK(*back == "body\nline two\n");
    CHECK(c.hits().size() == 1);
    CHECK(c.misses().size() == 1);

    const fs::path p = c.path_for("classes", "k1");
    std::stringstream ss;
    ss << std::ifstream(p).rdbuf();
    std::string text = ss.str();
    text[text.size() - 3] = 'X';
    std::ofstream(p, std::ios::trunc) << text;
    CHECK_THROWS_AS(c.load("classes", "k1"), CacheCorruption);
    std::ofstream(p, std::ios::trunc) << "no header\n";
    CHECK_THROWS_AS(c.load("classes", "k1"), CacheCorruption);
    fs::remove_all(dir);
  }

  TEST_CASE("disabled cache") {
    cli::Cache c{fs::path()};
    CHECK_FALSE(c.enabled());
    c.store("x", "y", "z");
    CHECK_FALSE(c.load("x", "y").has_value());
  }

  TEST_CASE("sha256 known vector") {
    CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }
}
