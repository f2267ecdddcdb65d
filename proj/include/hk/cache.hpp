// Persistent colength cache: JSON-lines file keyed by a content digest of the
// exact generator set (with order and characteristic), validated against the
// engine version.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hk/poly.hpp"
#include "hk/version.hpp"

namespace hk {

namespace detail {

// 128-bit FNV-1a over a byte string, rendered as 32 hex digits.
inline std::string fnv128_hex(const std::string& data) {
  // FNV-1a 128-bit prime 2^88 + 2^8 + 0x3b, offset basis per the reference
  // parameters, carried in four 32-bit limbs.
  std::uint32_t h[4] = {0x6295c58du, 0x62b82175u, 0x07bb0142u, 0x6c62272eu}; // little-endian limbs
  for (unsigned char c : data) {
    h[0] ^= c;
    // Multiply the 128-bit value h by the prime 0x0000000001000000000000000000013B:
    // prime = 2^88 + 0x13b, so h*prime = (h << 88) + h*0x13b (mod 2^128).
    std::uint64_t lo[4] = {h[0], h[1], h[2], h[3]};
    std::uint64_t carry = 0;
    std::uint32_t r[4];
    for (int i = 0; i < 4; ++i) {
      std::uint64_t v = lo[i] * 0x13bull + carry;
      r[i] = (std::uint32_t)v;
      carry = v >> 32;
    }
    // add h << 88 : limb 88/32 = shift 2 limbs + 24 bits
    std::uint64_t add2 = (std::uint64_t)r[2] + ((std::uint64_t)h[0] << 24 & 0xffffffffull);
    r[2] = (std::uint32_t)add2;
    std::uint64_t add3 = (std::uint64_t)r[3] + (add2 >> 32) + ((((std::uint64_t)h[1] << 24) | (h[0] >> 8)) & 0xffffffffull);
    r[3] = (std::uint32_t)add3;
    for (int i = 0; i < 4; ++i) h[i] = r[i];
  }
  std::ostringstream out;
  out << std::hex << std::nouppercase;
  for (int i = 3; i >= 0; --i) {
    out.width(8);
    out.fill('0');
    out << h[i];
  }
  return out.str();
}

} // namespace detail

// Canonical digest of a colength problem: characteristic, order, and the
// canonical text of every generator (sorted, so generator order is
// irrelevant), hashed to a stable key.
inline std::string colength_cache_key(const Ambient& amb, const std::vector<Poly>& gens) {
  std::vector<std::string> parts;
  parts.reserve(gens.size());
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < amb.nvars; ++i) names.push_back("v" + std::to_string(i));
  for (const Poly& g : gens)
    if (!g.is_zero()) parts.push_back(poly_to_string(g, names));
  std::sort(parts.begin(), parts.end());
  std::ostringstream buf;
  buf << "p=" << amb.p << ";n=" << amb.nvars << ";ord=" << order_name(amb.order.kind())
      << ";";
  for (const auto& s : parts) buf << s << "|";
  return detail::fnv128_hex(buf.str());
}

// Interface the series driver talks to; implementations must be safe to call
// from multiple threads.
class ColengthCache {
 public:
  virtual ~ColengthCache() = default;
  virtual std::optional<std::uint64_t> get(const std::string& key) = 0;
  virtual void put(const std::string& key, std::uint64_t value) = 0;
};

// Append-only JSON-lines file, one {"key":..,"colength":..,"version":..}
// object per line.  Unreadable lines and entries from other engine versions
// are ignored; rewriting is never needed.
class FileCache : public ColengthCache {
 public:
  explicit FileCache(std::string path) : path_(std::move(path)) { load(); }

  std::optional<std::uint64_t> get(const std::string& key) override {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, std::uint64_t value) override {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = map_.emplace(key, value);
    if (!fresh) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) return; // cache is best-effort; never fail the computation
    out << "{\"key\":\"" << key << "\",\"colength\":" << value << ",\"version\":\""
        << engine_version << "\"}\n";
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
      auto key = field(line, "\"key\":\"");
      auto ver = field(line, "\"version\":\"");
      auto pos = line.find("\"colength\":");
      if (!key || !ver || pos == std::string::npos) continue;
      if (*ver != engine_version) continue;
      std::uint64_t v = 0;
      pos += 11;
      bool any = false;
      while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
        v = v * 10 + (std::uint64_t)(line[pos] - '0');
        ++pos;
        any = true;
      }
      if (any) map_[*key] = v;
    }
  }

  static std::optional<std::string> field(const std::string& line, const std::string& tag) {
    auto pos = line.find(tag);
    if (pos == std::string::npos) return std::nullopt;
    pos += tag.size();
    auto end = line.find('"', pos);
    if (end == std::string::npos) return std::nullopt;
    return line.substr(pos, end - pos);
  }

  std::string path_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::uint64_t> map_;
};

} // namespace hk
