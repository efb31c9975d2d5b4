#include "ratios/harness.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ratios/error.hpp"

namespace ratios {

namespace {

constexpr const char* kCacheHeader = "# ratios L-value cache format=";

std::string hex(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& line) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') throw Error(Errc::io, "bad number in cache line: " + line);
  return v;
}

LMethod parse_method(const std::string& name, const std::string& line) {
  for (LMethod m : {LMethod::hurwitz, LMethod::afe, LMethod::direct}) {
    if (method_name(m) == name) return m;
  }
  throw Error(Errc::io, "unknown method in cache line: " + line);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_result(std::ostream& os, const CheckResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %-22s worst=%.3e tol=%.0e", r.pass() ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                r.tol);
  os << buf;
  if (!r.detail.empty()) os << " at " << r.detail;
  os << '\n';
}

std::vector<CheckResult> run_suite(const std::string& suite, CheckOptions opt) {
  if (suite == "gauss") {
    FactorSieve sieve(1000);
    return {check_gauss(999, 60, sieve, opt)};
  }
  if (suite == "funceq") {
    FactorSieve sieve(1000);
    return {check_funceq(100, {Complex(-0.5, 0.0), Complex(-1.5, 0.3)}, sieve, opt)};
  }
  if (suite == "theta") {
    FactorSieve sieve(1000);
    return {check_theta(50, {0.3, 1.0, 3.0}, sieve, opt)};
  }
  if (suite == "lemma24") {
    FactorSieve sieve(10'000'000);
    return {check_discriminant_series(10'000'000, sieve, opt)};
  }
  if (suite == "euler") {
    FactorSieve sieve(10'000);
    return check_euler(100'000'000, sieve, {}, opt);
  }
  if (suite == "gamma") return check_gamma(opt);
  throw Error(Errc::usage, "unknown suite '" + suite + "'");
}

}  // namespace

std::string format_cache_record(const CacheRecord& rec) {
  std::ostringstream os;
  os << "family=" << rec.family << " modulus=" << rec.modulus << " s_re=" << hex(rec.s.real())
     << " s_im=" << hex(rec.s.imag()) << " val_re=" << hex(rec.value.real()) << " val_im=" << hex(rec.value.imag())
     << " method=" << method_name(rec.method) << " err_est=" << hex(rec.err_est) << " version=" << rec.version;
  return os.str();
}

CacheRecord parse_cache_record(const std::string& line) {
  std::istringstream is(line);
  std::map<std::string, std::string> kv;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(Errc::io, "malformed cache line: " + line);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  auto need = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(Errc::io, std::string("cache line lacks ") + key + ": " + line);
    return it->second;
  };
  CacheRecord rec;
  const std::string& ver = need("version");
  if (ver != std::to_string(kCacheVersion)) {
    throw Error(Errc::version_mismatch, "cache record version " + ver + ", expected " + std::to_string(kCacheVersion));
  }
  rec.family = need("family");
  try {
    rec.modulus = std::stoll(need("modulus"));
  } catch (const std::logic_error&) {
    throw Error(Errc::io, "bad modulus in cache line: " + line);
  }
  rec.s = {parse_double(need("s_re"), line), parse_double(need("s_im"), line)};
  rec.value = {parse_double(need("val_re"), line), parse_double(need("val_im"), line)};
  rec.method = parse_method(need("method"), line);
  rec.err_est = parse_double(need("err_est"), line);
  return rec;
}

LCache::LCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) {
    if (std::filesystem::exists(path_)) throw Error(Errc::io, "cannot read cache " + path_);
    return;
  }
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line.rfind(kCacheHeader, 0) != 0) throw Error(Errc::io, "cache " + path_ + " lacks a format header");
      std::string ver = trim(line.substr(std::string(kCacheHeader).size()));
      if (ver != std::to_string(kCacheVersion)) {
        throw Error(Errc::version_mismatch, "cache " + path_ + " has format " + ver);
      }
      continue;
    }
    if (trim(line).empty() || line[0] == '#') continue;
    merge(parse_cache_record(line));
  }
}

LCache::~LCache() {
  try {
    flush();
  } catch (...) {
  }
}

LCache::Key LCache::key_of(const std::string& family, std::int64_t modulus, Complex s) {
  return {family, modulus, std::llround(s.real() * 1e12), std::llround(s.imag() * 1e12)};
}

bool LCache::merge(const CacheRecord& rec) {
  auto key = key_of(rec.family, rec.modulus, rec.s);
  auto it = records_.find(key);
  if (it == records_.end()) {
    records_.emplace(std::move(key), rec);
    return true;
  }
  if (rec.err_est < it->second.err_est) {
    it->second = rec;
    return true;
  }
  return false;
}

std::optional<CacheRecord> LCache::get(const std::string& family, std::int64_t modulus, Complex s) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(key_of(family, modulus, s));
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void LCache::put(const CacheRecord& rec) {
  bool changed;
  {
    std::unique_lock lock(mutex_);
    changed = merge(rec);
  }
  if (changed) {
    std::lock_guard lock(write_mutex_);
    unwritten_.push_back(rec);
  }
}

void LCache::flush() {
  std::lock_guard lock(write_mutex_);
  if (unwritten_.empty()) return;
  bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(Errc::io, "cannot write cache " + path_);
  if (fresh) out << kCacheHeader << kCacheVersion << '\n';
  for (const auto& rec : unwritten_) out << format_cache_record(rec) << '\n';
  out.flush();
  if (!out) throw Error(Errc::io, "write failed for cache " + path_);
  unwritten_.clear();
}

std::size_t LCache::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

bool LCache::lookup(std::int64_t d, std::span<const Complex> points, bool with_deriv, LMethod method,
                    std::span<LValue> out) const {
  std::shared_lock lock(mutex_);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = records_.find(key_of("L", d, points[i]));
    if (it == records_.end() || it->second.method != method) return false;
    out[i].value = it->second.value;
    out[i].err_est = it->second.err_est;
    out[i].method = method;
    out[i].deriv = 0.0;
    if (with_deriv) {
      auto jt = records_.find(key_of("Lderiv", d, points[i]));
      if (jt == records_.end() || jt->second.method != method) return false;
      out[i].deriv = jt->second.value;
    }
  }
  return true;
}

void LCache::offer(std::int64_t d, std::span<const Complex> points, bool with_deriv,
                   std::span<const LValue> values) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    put({"L", d, points[i], values[i].value, values[i].method, values[i].err_est, kCacheVersion});
    if (with_deriv) put({"Lderiv", d, points[i], values[i].deriv, values[i].method, values[i].err_est, kCacheVersion});
  }
}

void write_report(std::ostream& os, const ComparisonReport& report, const Metadata& meta) {
  os << "X,alpha_re,alpha_im,beta_re,beta_im,emp_re,emp_im,t1_re,t1_im,t2_re,t2_im,abs_err,rel_err\n";
  for (const auto& r : report.rows) {
    const double cols[] = {r.X,
                           r.alpha.real(),
                           r.alpha.imag(),
                           r.beta.real(),
                           r.beta.imag(),
                           r.empirical.real(),
                           r.empirical.imag(),
                           r.term1.real(),
                           r.term1.imag(),
                           r.term2.real(),
                           r.term2.imag(),
                           r.abs_err,
                           r.rel_err};
    for (std::size_t i = 0; i < std::size(cols); ++i) os << (i ? "," : "") << fmt_g(cols[i]);
    os << '\n';
  }
  for (const auto& [k, v] : meta) os << "# " << k << ": " << v << '\n';
  os << "# theorem: " << report.theorem << '\n';
  os << "# fitted_slope: " << fmt_g(report.fitted_slope) << '\n';
  os << "# theorem_exponent: " << fmt_g(report.theorem_exponent) << '\n';
}

std::map<std::string, std::string> parse_config(std::istream& is) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::usage, "config line " + std::to_string(lineno) + " is not key = value");
    }
    out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return out;
}

bool run_selfcheck(std::ostream& os, CheckOptions opt) {
  bool ok = true;
  for (const char* suite : {"gauss", "funceq", "theta", "lemma24", "euler", "gamma"}) {
    for (const auto& r : run_suite(suite, opt)) {
      print_result(os, r);
      ok = ok && r.pass();
    }
  }
  os << (ok ? "selfcheck: all suites pass\n" : "selfcheck: FAILED\n");
  return ok;
}

bool run_verify(const std::string& suite, std::ostream& os, CheckOptions opt) {
  bool ok = true;
  for (const auto& r : run_suite(suite, opt)) {
    print_result(os, r);
    ok = ok && r.pass();
  }
  return ok;
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::usage:
    case Errc::invalid_shifts:
    case Errc::pole_proximity:
      return 2;
    case Errc::io:
    case Errc::version_mismatch:
      return 3;
    default:
      return 1;
  }
}

}  // namespace ratios
