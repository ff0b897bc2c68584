#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "octavian/cache.hpp"
#include "octavian/lattice.hpp"

using namespace octavian;
namespace fs = std::filesystem;

namespace {

// A scratch directory per test run; fresh on entry, removed on exit.
struct ScratchDir {
  fs::path dir;
  ScratchDir() {
    dir = fs::temp_directory_path() /
          ("octavian-cache-test-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~ScratchDir() { fs::remove_all(dir); }
  std::string str() const { return dir.string(); }
};

LatticeVector vec24(std::int64_t seed) {
  LatticeVector v(24, 0);
  for (int i = 0; i < 24; ++i) v[i] = seed * 1315423911LL + i * (seed - 7);
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& blob) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(blob.data(), static_cast<std::streamsize>(blob.size()));
}

}  // namespace

TEST_CASE("vector cache files round trip bit exactly") {
  ScratchDir tmp;
  const std::string path = tmp.str() + "/roundtrip.octav";

  std::vector<LatticeVector> in;
  in.push_back(LatticeVector(24, 0));
  in.push_back(vec24(1));
  in.push_back(vec24(-3));
  LatticeVector extremes(24, 0);
  extremes[0] = INT64_MAX;
  extremes[1] = INT64_MIN;
  extremes[2] = -1;
  extremes[23] = 1LL << 62;
  in.push_back(extremes);

  REQUIRE(write_vector_cache(path, 1, in));

  std::vector<LatticeVector> out;
  std::string warning;
  REQUIRE(read_vector_cache(path, 1, &out, &warning));
  CHECK(warning.empty());
  CHECK(out == in);

  // concurrent readers see the same bytes: a second read is identical
  std::vector<LatticeVector> again;
  REQUIRE(read_vector_cache(path, 1, &again, &warning));
  CHECK(again == in);

  // no temporary file left behind by the atomic write
  CHECK(!fs::exists(path + ".tmp"));

  // vectors of the wrong length cannot be serialized at all
  CHECK(!write_vector_cache(tmp.str() + "/bad.octav", 1,
                            {LatticeVector(8, 0)}));
  CHECK(!fs::exists(tmp.str() + "/bad.octav"));
}

TEST_CASE("a missing cache file is a silent miss") {
  ScratchDir tmp;
  std::vector<LatticeVector> out;
  std::string warning = "sentinel";
  CHECK(!read_vector_cache(tmp.str() + "/nothing-here.octav", 1, &out,
                           &warning));
  CHECK(warning == "sentinel");  // untouched: nothing to warn about
}

TEST_CASE("corrupt cache files miss with an explanation") {
  ScratchDir tmp;
  const std::string path = tmp.str() + "/corrupt.octav";
  const std::vector<LatticeVector> in = {vec24(5), vec24(9)};
  REQUIRE(write_vector_cache(path, 1, in));
  const std::string good = slurp(path);
  REQUIRE(good.size() == 22 + 2 * 24 * 8);

  std::vector<LatticeVector> out;
  std::string warning;

  SUBCASE("stale version magic") {
    std::string blob = good;
    blob[5] = '0';  // OCTAV0
    spit(path, blob);
    CHECK(!read_vector_cache(path, 1, &out, &warning));
    CHECK(warning.find("version") != std::string::npos);
  }
  SUBCASE("truncated header") {
    spit(path, good.substr(0, 10));
    CHECK(!read_vector_cache(path, 1, &out, &warning));
    CHECK(!warning.empty());
  }
  SUBCASE("truncated payload") {
    spit(path, good.substr(0, good.size() - 5));
    CHECK(!read_vector_cache(path, 1, &out, &warning));
    CHECK(warning.find("size") != std::string::npos);
  }
  SUBCASE("trailing bytes") {
    spit(path, good + "x");
    CHECK(!read_vector_cache(path, 1, &out, &warning));
    CHECK(!warning.empty());
  }
  SUBCASE("denominator exponent mismatch") {
    CHECK(!read_vector_cache(path, 2, &out, &warning));
    CHECK(warning.find("exponent") != std::string::npos);
  }
  CHECK(warning.find(path) != std::string::npos);
  CHECK(warning.find("recomputing") != std::string::npos);
}

TEST_CASE("cached short vectors agree cold, warm and uncached") {
  ScratchDir tmp;
  // O^3 at norm 1: the 720 one-block unit vectors. Small but genuinely
  // 24-dimensional, which is what the file format stores.
  const IntegerLattice l = IntegerLattice::full_ring(3);
  const std::vector<LatticeVector> fresh = l.short_vectors(1);
  REQUIRE(fresh.size() == 720);

  CacheResult cold = cached_short_vectors(tmp.str(), 0, 0, l, 1);
  CHECK(!cold.from_cache);
  CHECK(cold.wrote);
  CHECK(cold.warning.empty());
  CHECK(cold.vectors == fresh);
  CHECK(fs::exists(short_vector_cache_path(tmp.str(), 0, 0, 1)));

  CacheResult warm = cached_short_vectors(tmp.str(), 0, 0, l, 1);
  CHECK(warm.from_cache);
  CHECK(!warm.wrote);
  CHECK(warm.warning.empty());
  CHECK(warm.vectors == fresh);

  CacheResult off = cached_short_vectors("", 0, 0, l, 1);
  CHECK(!off.from_cache);
  CHECK(!off.wrote);
  CHECK(off.vectors == fresh);
}

TEST_CASE("a stale cache file is recomputed and replaced") {
  ScratchDir tmp;
  const IntegerLattice l = IntegerLattice::full_ring(3);
  const std::string path = short_vector_cache_path(tmp.str(), 0, 0, 1);

  REQUIRE(write_vector_cache(path, 1, {vec24(1)}));
  std::string blob = slurp(path);
  blob[5] = '9';  // wrong version byte
  spit(path, blob);

  CacheResult r = cached_short_vectors(tmp.str(), 0, 0, l, 1);
  CHECK(!r.from_cache);
  CHECK(r.wrote);
  CHECK(r.warning.find("version") != std::string::npos);
  CHECK(r.vectors.size() == 720);

  // the rewritten file is now valid and served as-is
  CacheResult r2 = cached_short_vectors(tmp.str(), 0, 0, l, 1);
  CHECK(r2.from_cache);
  CHECK(r2.vectors == r.vectors);
}

TEST_CASE("cache paths separate every configuration") {
  CHECK(short_vector_cache_path("d", 0, 0, 4) == "d/shortvec-l0-u0-n4.octav");
  CHECK(short_vector_cache_path("/a/b", 12, 239, 6) ==
        "/a/b/shortvec-l12-u239-n6.octav");
  CHECK(short_vector_cache_path("d", 1, 0, 4) !=
        short_vector_cache_path("d", 0, 1, 4));
}
