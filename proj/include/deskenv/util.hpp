#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deskenv {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Size {
  int w = 0;
  int h = 0;
  friend bool operator==(const Size&, const Size&) = default;
};

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool contains(Point p) const {
    return p.x >= x && p.x < x + w && p.y >= y && p.y < y + h;
  }
  bool contains_rect(const Rect& r) const {
    return r.x >= x && r.y >= y && r.x + r.w <= x + w && r.y + r.h <= y + h;
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// 64-bit FNV-1a. Used for state and raster digests; stable across platforms.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t fnv1a(std::string_view s, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string to_hex(std::uint64_t v);
std::string digest_hex(std::string_view s);
std::string digest_hex(const std::vector<std::uint8_t>& bytes);

// Deterministic splitmix64 stream; identical sequences on every platform,
// unlike <random> distributions.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform in [0, n); n must be > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi);
  bool chance(double p);
};

std::string base64_encode(const std::uint8_t* data, std::size_t len);
std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

// Case-insensitive glob with '*' as the only wildcard.
bool glob_match_ci(std::string_view pattern, std::string_view text);

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Shortest round-trip decimal form of a double (no trailing ".0" for integers).
std::string format_double(double v);

}  // namespace deskenv
