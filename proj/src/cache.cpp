#include "octavian/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace octavian {

namespace {

constexpr char kMagic[6] = {'O', 'C', 'T', 'A', 'V', '1'};
constexpr std::size_t kHeaderBytes = 6 + 8 + 8;

void put_u64(std::string* s, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) s->push_back(char((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= std::uint64_t(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

}  // namespace

std::string short_vector_cache_path(const std::string& dir, int lambda_index,
                                    int unit_index, int target_norm) {
  std::ostringstream name;
  name << dir << "/shortvec-l" << lambda_index << "-u" << unit_index << "-n"
       << target_norm << ".octav";
  return name.str();
}

bool write_vector_cache(const std::string& path, std::uint64_t denom_exp,
                        const std::vector<LatticeVector>& vectors) {
  for (const LatticeVector& v : vectors)
    if (v.size() != 24) return false;  // the format is 24 coordinates flat
  std::string blob;
  blob.reserve(kHeaderBytes + vectors.size() * 24 * 8);
  blob.append(kMagic, sizeof kMagic);
  put_u64(&blob, denom_exp);
  put_u64(&blob, vectors.size());
  for (const LatticeVector& v : vectors)
    for (std::int64_t x : v) put_u64(&blob, static_cast<std::uint64_t>(x));

  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);

  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) return false;
    f.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!f) return false;
  }
  return std::rename(tmp.c_str(), path.c_str()) == 0;
}

bool read_vector_cache(const std::string& path, std::uint64_t expected_exp,
                       std::vector<LatticeVector>* out,
                       std::string* warning) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;  // cold cache, nothing to report

  std::string blob((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  const auto bad = [&](const std::string& why) {
    if (warning) *warning = "cache file " + path + ": " + why +
                            "; recomputing";
    return false;
  };

  if (blob.size() < kHeaderBytes) return bad("shorter than its header");
  if (blob.compare(0, sizeof kMagic, kMagic, sizeof kMagic) != 0)
    return bad("unrecognized version header '" + blob.substr(0, 6) + "'");
  const std::uint64_t exp = get_u64(blob.data() + 6);
  const std::uint64_t count = get_u64(blob.data() + 14);
  if (exp != expected_exp)
    return bad("denominator exponent " + std::to_string(exp) + " (expected " +
               std::to_string(expected_exp) + ")");
  if (count > (blob.size() / (24 * 8)) + 1) return bad("implausible count");
  if (blob.size() != kHeaderBytes + count * 24 * 8)
    return bad("payload size does not match its count");

  out->clear();
  out->reserve(count);
  const char* p = blob.data() + kHeaderBytes;
  for (std::uint64_t i = 0; i < count; ++i) {
    LatticeVector v(24, 0);
    for (int k = 0; k < 24; ++k, p += 8)
      v[k] = static_cast<std::int64_t>(get_u64(p));
    out->push_back(std::move(v));
  }
  return true;
}

CacheResult cached_short_vectors(const std::string& dir, int lambda_index,
                                 int unit_index, const IntegerLattice& l,
                                 int target_norm, int threads) {
  CacheResult r;
  const std::string path =
      dir.empty() ? std::string()
                  : short_vector_cache_path(dir, lambda_index, unit_index,
                                            target_norm);
  if (!path.empty() &&
      read_vector_cache(path, 1, &r.vectors, &r.warning)) {
    r.from_cache = true;
    return r;
  }
  r.vectors = short_vector_set(l, target_norm, threads).vectors;
  if (!path.empty()) r.wrote = write_vector_cache(path, 1, r.vectors);
  return r;
}

}  // namespace octavian
