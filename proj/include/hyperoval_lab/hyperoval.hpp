#ifndef HYPEROVAL_LAB_HYPEROVAL_HPP
#define HYPEROVAL_LAB_HYPEROVAL_HPP

// Monomial hyperovals D(k) = {(1, x, x^k)} + {(0,0,1), (0,1,0)} in PG(2, 2^e).

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "parallel.hpp"

namespace hyperoval_lab {

enum class HyperovalMethod { Determinant, Permutation };

inline const char* method_name(HyperovalMethod m) {
  return m == HyperovalMethod::Determinant ? "det" : "perm";
}

struct HyperovalVerdict {
  unsigned k = 0;
  unsigned e = 0;
  bool is_hyperoval = false;
  std::optional<std::array<Bits, 3>> witness;  // distinct x, y, z with vanishing determinant
  HyperovalMethod method = HyperovalMethod::Permutation;
};

inline constexpr unsigned kDeterminantMaxE = 10;
inline constexpr unsigned kPermutationMaxE = 26;

inline void check_even_k(unsigned k) {
  if (k < 2 || k % 2 != 0) throw PreconditionError("k must be even and at least 2 (got " + std::to_string(k) + ")");
}

/// det [[1,1,1],[x,y,z],[x^k,y^k,z^k]] in characteristic 2.
inline Bits hyperoval_determinant(const FieldCtx& f, unsigned k, Bits x, Bits y, Bits z) {
  const Bits xk = f.pow(x, k), yk = f.pow(y, k), zk = f.pow(z, k);
  return f.mul(x, yk ^ zk) ^ f.mul(y, xk ^ zk) ^ f.mul(z, xk ^ yk);
}

/// Exhaustive check of the determinant over triples x < y < z (by bit value).
/// The witness, if any, is the lexicographically least failing triple.
inline HyperovalVerdict determinant_test(unsigned k, unsigned e) {
  check_even_k(k);
  if (e < 1 || e > kDeterminantMaxE)
    throw PreconditionError("determinant_test supports 1 <= e <= " + std::to_string(kDeterminantMaxE));
  const FieldCtx& f = make_field(e);
  const std::uint64_t q = f.size();
  std::vector<Bits> pk(q);
  for (std::uint64_t x = 0; x < q; ++x) pk[x] = f.pow(static_cast<Bits>(x), k);
  HyperovalVerdict v{k, e, true, std::nullopt, HyperovalMethod::Determinant};
  for (Bits x = 0; x < q; ++x)
    for (Bits y = x + 1; y < q; ++y) {
      const Bits xy = f.mul(x, pk[y]) ^ f.mul(y, pk[x]);
      const Bits sxy = pk[x] ^ pk[y], dxy = x ^ y;
      for (Bits z = y + 1; z < q; ++z) {
        // x y^k + y x^k + z (x^k + y^k) + z^k (x + y)
        if ((xy ^ f.mul(z, sxy) ^ f.mul(pk[z], dxy)) == 0) {
          v.is_hyperoval = false;
          v.witness = std::array<Bits, 3>{x, y, z};
          return v;
        }
      }
    }
  return v;
}

/// s(x) = 1 + x + ... + x^(k-1) by Horner's rule.
inline Bits perm_poly_value(const FieldCtx& f, unsigned k, Bits x) {
  Bits s = 1;
  for (unsigned j = 1; j < k; ++j) s = f.mul(s, x) ^ 1;
  return s;
}

/// D(x^k) is a hyperoval iff s(x) permutes GF(2^e). A collision s(a) = s(b) gives
/// f_k(a, b) = 0, i.e. a vanishing determinant at the triple (1, a, b).
inline HyperovalVerdict perm_poly_test(unsigned k, unsigned e) {
  check_even_k(k);
  if (e < 1 || e > kPermutationMaxE)
    throw PreconditionError("perm_poly_test supports 1 <= e <= " + std::to_string(kPermutationMaxE));
  const FieldCtx& f = make_field(e);
  const std::uint64_t q = f.size();
  std::vector<std::uint64_t> seen((q + 63) / 64, 0);
  HyperovalVerdict v{k, e, true, std::nullopt, HyperovalMethod::Permutation};
  for (std::uint64_t x = 0; x < q; ++x) {
    const Bits s = perm_poly_value(f, k, static_cast<Bits>(x));
    std::uint64_t& word = seen[s / 64];
    const std::uint64_t bit = std::uint64_t{1} << (s % 64);
    if (word & bit) {
      // Witness: the two least preimages of s other than 1. If 1 is involved then s = 0,
      // whose preimages are the k-th roots of unity; there are gcd(k, 2^e-1) >= 3 of them.
      std::vector<Bits> pre;
      for (std::uint64_t t = 0; t < q && pre.size() < 2; ++t)
        if (t != 1 && perm_poly_value(f, k, static_cast<Bits>(t)) == s) pre.push_back(static_cast<Bits>(t));
      if (pre.size() < 2) throw ConsistencyError("perm_poly_test: no witness for a collision");
      const Bits a = pre[0], b = pre[1];
      v.is_hyperoval = false;
      v.witness = std::array<Bits, 3>{1, a, b};
      if (hyperoval_determinant(f, k, 1, a, b) != 0)
        throw ConsistencyError("perm_poly_test: collision witness has nonzero determinant");
      return v;
    }
    word |= bit;
  }
  return v;
}

inline HyperovalVerdict hyperoval_test(unsigned k, unsigned e, HyperovalMethod m) {
  return m == HyperovalMethod::Determinant ? determinant_test(k, e) : perm_poly_test(k, e);
}

/// Exponents projectively equivalent to k: {k, 1/k, 1-k, 1/(1-k), (k-1)/k, k/(k-1)} mod 2^e-1.
inline std::set<std::uint64_t> equivalence_orbit(unsigned k, unsigned e) {
  if (e < 1 || e > 32) throw PreconditionError("equivalence_orbit: e out of range");
  const std::uint64_t n = (std::uint64_t{1} << e) - 1;
  const std::uint64_t kk = k % n, km1 = (k + n - 1) % n;
  if (gcd_u64(k, n) != 1 || gcd_u64(k + n - 1, n) != 1)
    throw PreconditionError("not a hyperoval candidate: gcd(k, 2^e-1) or gcd(k-1, 2^e-1) is not 1");
  if (n == 1) return {0};
  auto inv = [n](std::uint64_t a) {
    // Extended Euclid on signed 128-bit to avoid overflow.
    __int128 t = 0, nt = 1, r = n, nr = a % n;
    while (nr != 0) {
      const __int128 qt = r / nr;
      t -= qt * nt;
      std::swap(t, nt);
      r -= qt * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += n;
    return static_cast<std::uint64_t>(t);
  };
  auto mulm = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  const std::uint64_t one_minus_k = (n + 1 - kk) % n;  // 1 - k
  const std::uint64_t ik = inv(kk), i1mk = inv(one_minus_k), ikm1 = inv(km1);
  return {kk, ik, one_minus_k, i1mk, mulm(km1, ik), mulm(kk, ikm1)};
}

struct ScanRow {
  unsigned k = 0;
  unsigned e = 0;
  std::optional<HyperovalVerdict> verdict;
  std::string rejected;  // nonempty when the row is not evaluated
};

/// Verdict grid over the given k values and e in 1..e_max using the permutation test.
/// Odd k yields rejected rows. Rows are ordered by (k, e) regardless of thread count.
inline std::vector<ScanRow> scan(const std::vector<unsigned>& ks, unsigned e_max, unsigned threads = 0) {
  std::vector<ScanRow> rows;
  for (unsigned k : ks)
    for (unsigned e = 1; e <= e_max; ++e) rows.push_back(ScanRow{k, e, std::nullopt, {}});
  parallel_for(rows.size(), threads, [&rows](std::size_t i) {
    ScanRow& r = rows[i];
    if (r.k < 2 || r.k % 2 != 0) {
      r.rejected = "k must be even";
      return;
    }
    r.verdict = perm_poly_test(r.k, r.e);
  });
  return rows;
}

inline std::vector<ScanRow> scan(unsigned k_max, unsigned e_max, unsigned threads = 0) {
  std::vector<unsigned> ks;
  for (unsigned k = 2; k <= k_max; k += 2) ks.push_back(k);
  return scan(ks, e_max, threads);
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_HYPEROVAL_HPP
