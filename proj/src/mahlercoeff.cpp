#include "mahler/mahlercoeff.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace mahler {

namespace {

Int binom(const Int &n, long k) {
  if (k < 0 || n < k)
    return 0;
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), (unsigned long)k);
  return out;
}

Int factorial(long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), (unsigned long)n);
  return out;
}

// all Taylor coefficients W_0..W_{m-1} of g_n(1+t)^(-m)
std::vector<Rat> taylor_row(int m, int n, int p) {
  Int N = 1;
  for (int i = 0; i < n; ++i)
    N *= p;
  // g(1+t) = sum_i binom(N, i+1) t^i
  std::vector<Rat> g(m);
  for (int i = 0; i < m; ++i)
    g[i] = Rat(binom(N, i + 1));
  // series inverse of g
  std::vector<Rat> inv(m, Rat(0));
  inv[0] = 1 / g[0];
  for (int i = 1; i < m; ++i) {
    Rat acc = 0;
    for (int j = 1; j <= i; ++j)
      if (g[j] != 0)
        acc += g[j] * inv[i - j];
    inv[i] = -acc * inv[0];
  }
  // raise to the m-th power
  std::vector<Rat> out(m, Rat(0));
  out[0] = 1;
  for (int r = 0; r < m; ++r) {
    std::vector<Rat> next(m, Rat(0));
    for (int i = 0; i < m; ++i) {
      if (out[i] == 0)
        continue;
      for (int j = 0; i + j < m; ++j)
        next[i + j] += out[i] * inv[j];
    }
    out = std::move(next);
  }
  return out;
}

std::mutex memo_mutex;
std::map<std::tuple<int, int, int>, std::vector<Rat>> memo;

void partitions_rec(int remaining, int max_part, std::vector<int> &cur,
                    std::vector<std::vector<int>> &out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

} // namespace

Rat v_taylor(int m, int k, int n, int p) {
  if (k < 1 || k > m || n < 0)
    throw Error("coefficient indices out of range");
  return taylor_row(m, n, p)[m - k];
}

std::vector<std::vector<int>> partitions_bounded(int k, long bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int max_part = (int)std::min<long>(k, bound - 1);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (max_part < 1)
    return out;
  partitions_rec(k, max_part, cur, out);
  return out;
}

Rat v_partition(int m, int k, int n, int p) {
  if (k < 1 || k > m || n < 0)
    throw Error("coefficient indices out of range");
  Int N = 1;
  for (int i = 0; i < n; ++i)
    N *= p;
  long bound = N.fits_slong_p() ? N.get_si() : (long)(m + 1);
  Rat total = 0;
  for (const auto &mu : partitions_bounded(m - k, bound)) {
    long len = (long)mu.size();
    std::map<int, long> mult;
    for (int part : mu)
      ++mult[part];
    // multinomial (m-1+len; m-1, l_1, l_2, ...)
    Int multi = factorial(m - 1 + len) / factorial(m - 1);
    for (const auto &[part, l] : mult)
      multi /= factorial(l);
    Rat term(multi);
    for (const auto &[part, l] : mult) {
      Int b = binom(N, part + 1), bp;
      mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), (unsigned long)l);
      term *= Rat(bp);
    }
    Int Np;
    mpz_pow_ui(Np.get_mpz_t(), N.get_mpz_t(), (unsigned long)len);
    term /= Rat(Np);
    if (len % 2)
      term = -term;
    total += term;
  }
  Int Nm;
  mpz_pow_ui(Nm.get_mpz_t(), N.get_mpz_t(), (unsigned long)m);
  total /= Rat(Nm);
  return total;
}

Rat vcoeff(int m, int k, int n, int p) {
  if (k < 1 || k > m || n < 0)
    throw Error("coefficient indices out of range");
  auto key = std::make_tuple(p, n, m);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end())
      return it->second[m - k];
  }
  auto row = taylor_row(m, n, p);
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto [it, inserted] = memo.emplace(key, std::move(row));
  return it->second[m - k];
}

AlgConst v_at(const Point &a, int m, int k, int n, int p) {
  long pn = ipow(p, n);
  return a.pow(k - (long)m * pn).scaled(vcoeff(m, k, n, p));
}

AlgConst v_at(const AlgConst &a, int m, int k, int n, int p) {
  long pn = ipow(p, n);
  return a.pow(k - (long)m * pn).scaled(vcoeff(m, k, n, p));
}

} // namespace mahler
