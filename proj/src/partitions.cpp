#include "gammaft/partitions.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

namespace gammaft {

namespace {

void check_m(int m) {
  if (m < 0) throw std::invalid_argument("partitions: m must be non-negative");
  if (m > kMaxPartitionM)
    throw std::length_error("partitions: m exceeds enumeration cap of 64");
}

void enumerate_rec(int remaining, int part, std::vector<int>& mult, int count,
                   int m, std::vector<PartitionVector>& out) {
  if (remaining == 0) {
    out.push_back(PartitionVector{mult, m, count});
    return;
  }
  if (part == 0) return;
  const int max_count = remaining / part;
  for (int c = max_count; c >= 0; --c) {
    mult[part - 1] = c;
    enumerate_rec(remaining - c * part, part - 1, mult, count + c, m, out);
  }
  mult[part - 1] = 0;
}

}  // namespace

std::vector<PartitionVector> enumerate_partitions(int m) {
  check_m(m);
  std::vector<PartitionVector> out;
  if (m == 0) {
    out.push_back(PartitionVector{{}, 0, 0});
    return out;
  }
  out.reserve(partition_count(m));
  std::vector<int> mult(static_cast<std::size_t>(m), 0);
  enumerate_rec(m, m, mult, 0, m, out);
  std::sort(out.begin(), out.end(),
            [](const PartitionVector& a, const PartitionVector& b) {
              if (a.parts != b.parts) return a.parts > b.parts;
              return a.multiplicities > b.multiplicities;
            });
  return out;
}

std::uint64_t partition_count(int m) {
  check_m(m);
  std::vector<std::uint64_t> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= m; ++part)
    for (int n = part; n <= m; ++n) p[n] += p[n - part];
  return p[m];
}

Rational faa_weight(const PartitionVector& p) {
  Integer denom(1);
  for (std::size_t idx = 0; idx < p.multiplicities.size(); ++idx) {
    const int i = p.multiplicities[idx];
    if (i == 0) continue;
    const unsigned long nu = static_cast<unsigned long>(idx) + 1;
    denom *= factorial(static_cast<unsigned long>(i));
    Integer nu_fac = factorial(nu);
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), nu_fac.get_mpz_t(), static_cast<unsigned long>(i));
    denom *= pw;
  }
  Rational w(Integer(1), denom);
  w.canonicalize();
  return w;
}

std::shared_ptr<const std::vector<PartitionTerm>> partition_terms(int m) {
  check_m(m);
  // One-time build per m; after initialization the slot is immutable, so
  // concurrent readers never contend on a lock.
  static std::array<std::once_flag, kMaxPartitionM + 1> built;
  static std::array<std::shared_ptr<const std::vector<PartitionTerm>>,
                    kMaxPartitionM + 1>
      slots;
  std::call_once(built[static_cast<std::size_t>(m)], [m] {
    long double fac[kMaxPartitionM + 1];
    fac[0] = 1.0L;
    for (int k = 1; k <= kMaxPartitionM; ++k) fac[k] = fac[k - 1] * k;

    auto terms = std::make_shared<std::vector<PartitionTerm>>();
    const auto parts = enumerate_partitions(m);
    terms->reserve(parts.size());
    for (const auto& p : parts) {
      long double denom = 1.0L;
      for (std::size_t idx = 0; idx < p.multiplicities.size(); ++idx) {
        const int i = p.multiplicities[idx];
        if (i == 0) continue;
        denom *= fac[i];
        const long double nf = fac[idx + 1];
        for (int rep = 0; rep < i; ++rep) denom *= nf;
      }
      terms->push_back(PartitionTerm{p.parts, 1.0L / denom});
    }
    slots[static_cast<std::size_t>(m)] = std::move(terms);
  });
  return slots[static_cast<std::size_t>(m)];
}

}  // namespace gammaft
