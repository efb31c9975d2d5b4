#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ratios/checks.hpp"
#include "ratios/empirical.hpp"
#include "ratios/error.hpp"
#include "ratios/lfunc.hpp"

namespace ratios {

inline constexpr int kCacheVersion = 1;

struct CacheRecord {
  std::string family;  // "L" for values, "Lderiv" for ∂/∂s
  std::int64_t modulus = 0;
  Complex s;
  Complex value;
  LMethod method = LMethod::direct;
  double err_est = 0.0;
  int version = kCacheVersion;
};

/// One record per line as space-separated key=value pairs, doubles in hex-float.
std::string format_cache_record(const CacheRecord& rec);
/// Throws Errc::io on malformed lines and Errc::version_mismatch on a foreign version.
CacheRecord parse_cache_record(const std::string& line);

/// Append-only L-value cache keyed by (family, modulus, s quantized to 1e-12).
/// Duplicate keys keep the record with the smaller err_est. Readers share a
/// lock; put() takes it exclusively; flush() appends unwritten records.
class LCache final : public LValueMemo {
 public:
  /// Loads `path` when it exists. Throws Errc::io or Errc::version_mismatch.
  explicit LCache(std::string path);
  ~LCache() override;

  std::optional<CacheRecord> get(const std::string& family, std::int64_t modulus, Complex s) const;
  void put(const CacheRecord& rec);
  /// Writes records added since the last flush. Throws Errc::io.
  void flush();
  std::size_t size() const;
  const std::string& path() const noexcept { return path_; }

  bool lookup(std::int64_t d, std::span<const Complex> points, bool with_deriv, LMethod method,
              std::span<LValue> out) const override;
  void offer(std::int64_t d, std::span<const Complex> points, bool with_deriv,
             std::span<const LValue> values) override;

 private:
  using Key = std::tuple<std::string, std::int64_t, std::int64_t, std::int64_t>;
  static Key key_of(const std::string& family, std::int64_t modulus, Complex s);
  bool merge(const CacheRecord& rec);

  std::string path_;
  mutable std::shared_mutex mutex_;
  std::map<Key, CacheRecord> records_;
  std::mutex write_mutex_;
  std::vector<CacheRecord> unwritten_;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Comma-separated table with the fixed header, then `#`-prefixed metadata.
void write_report(std::ostream& os, const ComparisonReport& report, const Metadata& meta);

/// Flat `key = value` document; blank lines and `#` comments ignored.
/// Throws Errc::usage on a line without '='.
std::map<std::string, std::string> parse_config(std::istream& is);

/// Runs every identity suite and prints one line per check. Returns true when all pass.
bool run_selfcheck(std::ostream& os, CheckOptions opt = {});

/// Runs one named suite (gauss, funceq, theta, lemma24, euler, gamma). Throws Errc::usage for other names.
bool run_verify(const std::string& suite, std::ostream& os, CheckOptions opt = {});

/// Exit status for a library error: 2 usage-type, 3 I/O-type, 1 otherwise.
int exit_code_for(Errc code) noexcept;

}  // namespace ratios
