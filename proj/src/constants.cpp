#include "mahler/constants.hpp"
#include "mahler/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace mahler {

Rat rat_pow(const Rat &base, long e) {
  if (e < 0) {
    if (base == 0)
      throw ZeroDivision("zero to a negative power");
    Rat inv = 1 / base;
    return rat_pow(inv, -e);
  }
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rat out(n, d);
  out.canonicalize();
  return out;
}

std::optional<Rat> rat_root(const Rat &r, long k) {
  if (r <= 0)
    return std::nullopt;
  Int n, d;
  if (!mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), k))
    return std::nullopt;
  if (!mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), k))
    return std::nullopt;
  Rat out(n, d);
  out.canonicalize();
  return out;
}

long smallest_prime_factor(long n) {
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0)
      return q;
  return n;
}

long euler_phi(long n) {
  long out = n;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q)
      continue;
    while (n % q == 0)
      n /= q;
    out -= out / q;
  }
  if (n > 1)
    out -= out / n;
  return out;
}

long ipow(long base, int e) {
  long out = 1;
  while (e-- > 0)
    out *= base;
  return out;
}

bool is_power_of(long n, long p) {
  if (n < 1)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::string rat_str(const Rat &q) { return q.get_str(); }

// ---------------------------------------------------------------- QZ

QZ QZ::of(long long j, long long N) {
  if (N < 0) {
    N = -N;
    j = -j;
  }
  j %= N;
  if (j < 0)
    j += N;
  long long g = std::gcd(j, N);
  if (j == 0)
    return QZ{0, 1};
  return QZ{j / g, N / g};
}

QZ QZ::operator+(const QZ &o) const {
  long long L = std::lcm(N, o.N);
  return of(j * (L / N) + o.j * (L / o.N), L);
}

QZ QZ::operator-() const { return of(-j, N); }

QZ QZ::times(long long k) const {
  __int128 v = (__int128)j * k;
  v %= N;
  return of((long long)v, N);
}

// ---------------------------------------------------------------- cyclotomic data

namespace {

struct CycloData {
  long M = 1;
  long phi = 1;
  // x^i mod Phi_M for 0 <= i < M, sparse
  std::vector<std::vector<std::pair<int, Int>>> pw;
};

std::mutex cyclo_mutex;
std::map<long, std::vector<Int>> cyclo_polys;
std::map<long, std::shared_ptr<const CycloData>> cyclo_data;

std::vector<Int> compute_cyclotomic(long n) {
  std::vector<Int> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d)
      continue;
    const auto &div = cyclotomic_poly(d);
    // exact division by a monic polynomial
    long dn = (long)num.size() - 1, dd = (long)div.size() - 1;
    std::vector<Int> q(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
      Int c = num[i];
      q[i - dd] = c;
      if (c == 0)
        continue;
      for (long k = 0; k <= dd; ++k)
        num[i - dd + k] -= c * div[k];
    }
    num = q;
  }
  return num;
}

std::shared_ptr<const CycloData> data_for(long M) {
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_data.find(M);
    if (it != cyclo_data.end())
      return it->second;
  }
  const auto &poly = cyclotomic_poly(M);
  auto d = std::make_shared<CycloData>();
  d->M = M;
  d->phi = (long)poly.size() - 1;
  std::vector<Int> cur(d->phi, 0);
  cur[0] = 1;
  for (long i = 0; i < M; ++i) {
    if (i > 0) {
      // multiply by x and reduce
      Int top = cur[d->phi - 1];
      for (long k = d->phi - 1; k > 0; --k)
        cur[k] = cur[k - 1];
      cur[0] = 0;
      if (top != 0)
        for (long k = 0; k < d->phi; ++k)
          cur[k] -= top * poly[k];
    }
    std::vector<std::pair<int, Int>> row;
    for (long k = 0; k < d->phi; ++k)
      if (cur[k] != 0)
        row.emplace_back((int)k, cur[k]);
    d->pw.push_back(std::move(row));
  }
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  auto [it, inserted] = cyclo_data.emplace(M, d);
  return it->second;
}

using QVec = std::vector<Rat>;

void qtrim(QVec &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// remainder and quotient of a by b over Q
void qdivmod(QVec a, const QVec &b, QVec &q, QVec &r) {
  qtrim(a);
  long db = (long)b.size() - 1;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  Rat lead_inv = 1 / b.back();
  for (long i = (long)a.size() - 1; i >= db; --i) {
    if (a[i] == 0)
      continue;
    Rat c = a[i] * lead_inv;
    q[i - db] = c;
    for (long k = 0; k <= db; ++k)
      a[i - db + k] -= c * b[k];
  }
  qtrim(a);
  r = a;
}

QVec qmul(const QVec &a, const QVec &b) {
  if (a.empty() || b.empty())
    return {};
  QVec out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (size_t k = 0; k < b.size(); ++k)
      out[i + k] += a[i] * b[k];
  }
  qtrim(out);
  return out;
}

QVec qsub(const QVec &a, const QVec &b) {
  QVec out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i)
    out[i] -= b[i];
  qtrim(out);
  return out;
}

} // namespace

const std::vector<Int> &cyclotomic_poly(long n) {
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_polys.find(n);
    if (it != cyclo_polys.end())
      return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  auto [it, inserted] = cyclo_polys.emplace(n, std::move(poly));
  return it->second;
}

// ---------------------------------------------------------------- Cyc

Cyc::Cyc() : M_(1), c_(1, Rat(0)) {}

Cyc::Cyc(const Rat &q) : M_(1), c_(1, q) {}

Cyc::Cyc(long M, std::vector<Rat> coeffs) : M_(M), c_(std::move(coeffs)) {
  c_.resize(euler_phi(M), Rat(0));
}

Cyc Cyc::zeta(long M, long long j) {
  auto d = data_for(M);
  long long i = j % M;
  if (i < 0)
    i += M;
  std::vector<Rat> c(d->phi, Rat(0));
  for (const auto &[k, v] : d->pw[i])
    c[k] = Rat(v);
  return Cyc(M, std::move(c));
}

Cyc Cyc::embed(long L) const {
  if (L == M_)
    return *this;
  if (L % M_)
    throw Error("conductor does not divide target");
  auto d = data_for(L);
  std::vector<Rat> c(d->phi, Rat(0));
  long step = L / M_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (const auto &[k, v] : d->pw[(i * step) % L])
      c[k] += c_[i] * v;
  }
  return Cyc(L, std::move(c));
}

Cyc Cyc::galois(long u) const {
  auto d = data_for(M_);
  std::vector<Rat> c(d->phi, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    long long idx = ((long long)i * u) % M_;
    if (idx < 0)
      idx += M_;
    for (const auto &[k, v] : d->pw[idx])
      c[k] += c_[i] * v;
  }
  return Cyc(M_, std::move(c));
}

bool Cyc::is_zero() const {
  for (const auto &x : c_)
    if (x != 0)
      return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0)
      return false;
  return true;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto &x : out.c_)
    x = -x;
  return out;
}

Cyc operator+(const Cyc &a, const Cyc &b) {
  if (a.M_ != b.M_) {
    long L = std::lcm(a.M_, b.M_);
    return a.embed(L) + b.embed(L);
  }
  Cyc out = a;
  for (size_t i = 0; i < out.c_.size(); ++i)
    if (b.c_[i] != 0)
      out.c_[i] += b.c_[i];
  return out;
}

Cyc operator-(const Cyc &a, const Cyc &b) { return a + (-b); }

Cyc Cyc::scaled(const Rat &q) const {
  Cyc out = *this;
  for (auto &x : out.c_)
    if (x != 0)
      x *= q;
  return out;
}

Cyc operator*(const Cyc &a, const Cyc &b) {
  if (a.M_ != b.M_) {
    long L = std::lcm(a.M_, b.M_);
    return a.embed(L) * b.embed(L);
  }
  if (a.is_rational())
    return b.scaled(a.c_[0]);
  if (b.is_rational())
    return a.scaled(b.c_[0]);
  auto d = data_for(a.M_);
  long phi = d->phi;
  std::vector<Rat> tmp(2 * phi - 1, Rat(0));
  for (long i = 0; i < phi; ++i) {
    if (a.c_[i] == 0)
      continue;
    for (long k = 0; k < phi; ++k)
      if (b.c_[k] != 0)
        tmp[i + k] += a.c_[i] * b.c_[k];
  }
  std::vector<Rat> c(tmp.begin(), tmp.begin() + phi);
  for (long i = phi; i < 2 * phi - 1; ++i) {
    if (tmp[i] == 0)
      continue;
    for (const auto &[k, v] : d->pw[i % a.M_])
      c[k] += tmp[i] * v;
  }
  return Cyc(a.M_, std::move(c));
}

bool operator==(const Cyc &a, const Cyc &b) { return (a - b).is_zero(); }

Cyc Cyc::inverse() const {
  if (is_zero())
    throw ZeroDivision("inverse of zero");
  if (is_rational())
    return Cyc(1 / c_[0]);
  const auto &poly = cyclotomic_poly(M_);
  QVec r0(poly.begin(), poly.end()), r1 = c_;
  qtrim(r1);
  QVec s0, s1{Rat(1)};
  while (!r1.empty()) {
    QVec q, rem;
    qdivmod(r0, r1, q, rem);
    r0 = r1;
    r1 = rem;
    QVec ns = qsub(s0, qmul(q, s1));
    s0 = s1;
    s1 = ns;
  }
  // s0 * a = r0 (a nonzero constant) modulo Phi_M
  Rat inv_g = 1 / r0[0];
  QVec q, rem;
  qdivmod(s0, QVec(poly.begin(), poly.end()), q, rem);
  rem.resize(euler_phi(M_), Rat(0));
  for (auto &x : rem)
    x *= inv_g;
  return Cyc(M_, rem);
}

Cyc Cyc::minimized() const {
  if (is_rational())
    return Cyc(c_[0]);
  for (long dv = 2; dv < M_; ++dv) {
    if (M_ % dv || dv % 4 == 2)
      continue;
    long ph = euler_phi(dv);
    std::vector<std::vector<Rat>> A(c_.size(), std::vector<Rat>(ph, Rat(0)));
    for (long j = 0; j < ph; ++j) {
      Cyc col = Cyc::zeta(dv, j).embed(M_);
      for (size_t i = 0; i < c_.size(); ++i)
        A[i][j] = col.c_[i];
    }
    if (auto sol = solve_linear(A, c_))
      return Cyc(dv, *sol);
  }
  return *this;
}

std::string Cyc::str() const {
  Cyc m = minimized();
  std::string out;
  for (size_t j = 0; j < m.c_.size(); ++j) {
    const Rat &c = m.c_[j];
    if (c == 0)
      continue;
    std::string term;
    if (j == 0) {
      term = rat_str(c);
    } else {
      std::string z = "zeta(" + std::to_string(m.M_) + ")";
      if (j > 1)
        z += "^" + std::to_string(j);
      if (c == 1)
        term = z;
      else if (c == -1)
        term = "-" + z;
      else
        term = rat_str(c) + "*" + z;
    }
    if (!out.empty() && term[0] != '-')
      out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

} // namespace mahler
