#include "ratios/character.hpp"

#include <numeric>

#include "ratios/error.hpp"

namespace ratios {

DirichletChar jacobi_char(std::uint64_t n) {
  DirichletChar c;
  c.modulus = n;
  c.values.resize(n);
  if (n == 1) {
    c.values[0] = 1;
    return c;
  }
  for (std::uint64_t r = 0; r < n; ++r) c.values[r] = std::int8_t(jacobi(std::int64_t(r), n));
  return c;
}

DirichletChar kronecker_char(std::int64_t d) {
  DirichletChar c;
  std::uint64_t q = d < 0 ? std::uint64_t(-d) : std::uint64_t(d);
  c.modulus = q;
  c.values.resize(q);
  if (q == 1) {
    c.values[0] = 1;
    return c;
  }
  for (std::uint64_t r = 0; r < q; ++r) c.values[r] = std::int8_t(kronecker(d, std::int64_t(r)));
  return c;
}

int psi8(int j, std::int64_t m) {
  if (j == 0) return 1;
  return kronecker(4 * j, m);
}

DirichletChar psi8_char(int j) {
  DirichletChar c;
  if (j == 0) {
    c.modulus = 1;
    c.values = {1};
    return c;
  }
  c.modulus = 8;
  c.values.resize(8);
  for (int r = 0; r < 8; ++r) c.values[r] = std::int8_t(psi8(j, r));
  return c;
}

DirichletChar char_product(const DirichletChar& a, const DirichletChar& b) {
  DirichletChar c;
  c.modulus = std::lcm(a.modulus, b.modulus);
  c.values.resize(c.modulus);
  for (std::uint64_t r = 0; r < c.modulus; ++r) {
    c.values[r] = std::int8_t(a.values[r % a.modulus] * b.values[r % b.modulus]);
  }
  return c;
}

LegendreTable::LegendreTable(std::uint32_t bound) : bound_(bound), spf_(std::size_t(bound) + 1, 0) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      std::uint64_t ip = std::uint64_t(i) * p;
      if (p > spf_[i] || ip > bound) break;
      spf_[ip] = p;
    }
  }
  offset_.assign(std::size_t(bound) + 1, 0);
  std::size_t total = 0;
  for (std::uint32_t p : primes) {
    if (p == 2) continue;
    offset_[p] = std::uint32_t(total);
    total += p;
  }
  symbols_.assign(total, -1);
  for (std::uint32_t p : primes) {
    if (p == 2) continue;
    std::int8_t* row = symbols_.data() + offset_[p];
    row[0] = 0;
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) row[(x * x) % p] = 1;
  }
}

int LegendreTable::symbol(std::int64_t d, std::uint32_t p) const {
  if (p == 2) {
    if ((d & 1) == 0) return 0;
    std::int64_t r = ((d % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  std::int64_t r = d % std::int64_t(p);
  if (r < 0) r += p;
  return symbols_[offset_[p] + std::size_t(r)];
}

void LegendreTable::fill_kronecker(std::int64_t d, std::span<std::int8_t> out) const {
  if (out.empty()) return;
  if (out.size() - 1 > bound_) {
    throw Error(Errc::sieve_too_small, "kronecker table beyond Legendre bound");
  }
  out[0] = (d == 1 || d == -1) ? 1 : 0;
  if (out.size() == 1) return;
  out[1] = 1;
  for (std::size_t m = 2; m < out.size(); ++m) {
    std::uint32_t p = spf_[m];
    if (p == m) {
      out[m] = std::int8_t(symbol(d, p));
    } else {
      out[m] = std::int8_t(out[p] * out[m / p]);
    }
  }
}

}  // namespace ratios
