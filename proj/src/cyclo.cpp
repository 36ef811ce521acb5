#include "qhopf/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qhopf {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kFastBound = std::int64_t{1} << 31;
constexpr int kMaxFastPhi = 40;

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) {
  return x >= static_cast<i128>(INT64_MIN) && x <= static_cast<i128>(INT64_MAX);
}

BigInt to_big(i128 x) {
  u128 u = uabs(x);
  BigInt r = BigInt(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += BigInt(static_cast<std::uint64_t>(u));
  return x < 0 ? BigInt(-r) : r;
}

bool big_fits64(const BigInt& x) {
  static const BigInt lo = BigInt(INT64_MIN);
  static const BigInt hi = BigInt(INT64_MAX);
  return x >= lo && x <= hi;
}

}  // namespace

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ScalarError("division by zero in rational");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g == 0) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::string BigRational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
BigRational operator-(const BigRational& a, const BigRational& b) { return a + (-b); }
BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}
BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw ScalarError("division by zero in rational");
  return BigRational(a.num_ * b.den_, a.den_ * b.num_);
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and fields

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw ScalarError("cyclotomic polynomial needs N >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 divided exactly by Phi_d for every proper divisor d.
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto divisor = cyclotomic_polynomial(d);
    int dd = static_cast<int>(divisor.size()) - 1;
    int dp = static_cast<int>(p.size()) - 1;
    std::vector<std::int64_t> quot(dp - dd + 1, 0);
    for (int k = dp; k >= dd; --k) {
      std::int64_t c = p[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (int t = 0; t <= dd; ++t) p[k - dd + t] -= c * divisor[t];
    }
    p = std::move(quot);
  }
  std::lock_guard lock(mu);
  memo.emplace(n, p);
  return p;
}

CycloField::CycloField(int order) : order_(order) {
  poly_ = cyclotomic_polynomial(order);
  phi_ = static_cast<int>(poly_.size()) - 1;
  std::int64_t height = 0;
  for (auto c : poly_) height = std::max(height, abs64(c));
  fast_ok_ = phi_ <= kMaxFastPhi && height <= 1;

  powers_.reserve(order);
  Coeffs cur(phi_, 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    powers_.push_back(cur);
    root_index_.emplace(cur, k);
    // cur <- x * cur mod Phi
    std::int64_t top = cur[phi_ - 1];
    for (int t = phi_ - 1; t > 0; --t) cur[t] = cur[t - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int t = 0; t < phi_; ++t) cur[t] -= top * poly_[t];
    }
  }
}

std::optional<int> CycloField::root_index(const Coeffs& coeffs) const {
  auto it = root_index_.find(coeffs);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

const CycloField& CycloField::get(int order) {
  if (order < 1) throw ScalarError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[order];
  if (!slot) slot = std::make_unique<CycloField>(order);
  return *slot;
}

// ---------------------------------------------------------------------------
// CycloNum: construction and normalization

CycloNum::CycloNum(int order) : field_(&CycloField::get(order)), num_(field_->phi(), 0) {}

CycloNum::CycloNum(int order, std::int64_t value) : CycloNum(order) { num_[0] = value; }

CycloNum::CycloNum(int order, const BigRational& value) : CycloNum(order) {
  std::vector<BigInt> num(field_->phi(), 0);
  num[0] = value.num();
  assign_big(std::move(num), value.den());
}

CycloNum CycloNum::from_coeffs(int order, const std::vector<BigRational>& coeffs) {
  const CycloField& f = CycloField::get(order);
  BigInt den = 1;
  for (const auto& c : coeffs) den = boost::multiprecision::lcm(den, c.den());
  std::vector<BigInt> acc;
  acc.reserve(coeffs.size());
  for (const auto& c : coeffs) acc.push_back(c.num() * (den / c.den()));
  return from_power_basis(f, std::move(acc), std::move(den));
}

CycloNum CycloNum::from_power_basis(const CycloField& f, std::vector<BigInt> acc, BigInt den) {
  const int phi = f.phi();
  const auto& poly = f.poly();
  for (int k = static_cast<int>(acc.size()) - 1; k >= phi; --k) {
    if (acc[k] == 0) continue;
    BigInt c = acc[k];
    for (int t = 0; t <= phi; ++t) acc[k - phi + t] -= c * poly[t];
  }
  acc.resize(phi, 0);
  CycloNum r(f.order());
  r.assign_big(std::move(acc), std::move(den));
  return r;
}

void CycloNum::assign_big(std::vector<BigInt> num, BigInt den) {
  if (den == 0) throw ScalarError("division by zero");
  if (den < 0) {
    den = -den;
    for (auto& c : num) c = -c;
  }
  BigInt g = den;
  for (const auto& c : num) {
    if (g == 1) break;
    if (c != 0) g = boost::multiprecision::gcd(g, c);
  }
  bool all_zero = std::all_of(num.begin(), num.end(), [](const BigInt& c) { return c == 0; });
  if (all_zero) {
    den = 1;
  } else if (g != 1) {
    for (auto& c : num) c /= g;
    den /= g;
  }
  bool small = big_fits64(den);
  for (const auto& c : num) small = small && big_fits64(c);
  if (small) {
    big_.reset();
    num_.assign(num.size(), 0);
    for (std::size_t k = 0; k < num.size(); ++k) num_[k] = static_cast<std::int64_t>(num[k]);
    den_ = static_cast<std::int64_t>(den);
  } else {
    num_.clear();
    den_ = 1;
    big_ = std::make_shared<const Big>(Big{std::move(num), std::move(den)});
  }
}

namespace {

// Normalizes phi int128 numerators over an int128 denominator into r.
void normalize128(i128* acc, int phi, i128 den, Coeffs& num_out,
                  std::int64_t& den_out, bool& overflow) {
  if (den < 0) {
    den = -den;
    for (int k = 0; k < phi; ++k) acc[k] = -acc[k];
  }
  bool all_zero = true;
  u128 g = static_cast<u128>(den);
  for (int k = 0; k < phi; ++k) {
    if (acc[k] == 0) continue;
    all_zero = false;
    if (g != 1) g = gcd_u128(g, uabs(acc[k]));
  }
  if (all_zero) {
    num_out.assign(phi, 0);
    den_out = 1;
    overflow = false;
    return;
  }
  if (g > 1) {
    i128 gi = static_cast<i128>(g);
    for (int k = 0; k < phi; ++k) acc[k] /= gi;
    den /= gi;
  }
  overflow = !fits64(den);
  for (int k = 0; k < phi && !overflow; ++k) overflow = !fits64(acc[k]);
  if (overflow) return;
  num_out.resize(phi);
  for (int k = 0; k < phi; ++k) num_out[k] = static_cast<std::int64_t>(acc[k]);
  den_out = static_cast<std::int64_t>(den);
}

}  // namespace

bool CycloNum::fits_fast() const {
  if (big_ || !field_->fast_ok()) return false;
  if (den_ >= kFastBound) return false;
  for (auto c : num_) {
    if (c >= kFastBound || c <= -kFastBound) return false;
  }
  return true;
}

std::vector<BigInt> CycloNum::big_num() const {
  if (big_) return big_->num;
  std::vector<BigInt> r;
  r.reserve(num_.size());
  for (auto c : num_) r.emplace_back(c);
  return r;
}

BigInt CycloNum::big_den() const { return big_ ? big_->den : BigInt(den_); }

void CycloNum::check_same(const CycloNum& b) const {
  if (field_ != b.field_) {
    throw ScalarError("incompatible scalars: orders " + std::to_string(order()) + " and " +
                      std::to_string(b.order()));
  }
}

// ---------------------------------------------------------------------------
// Arithmetic

CycloNum& CycloNum::operator+=(const CycloNum& b) {
  check_same(b);
  if (b.is_zero()) return *this;
  const int phi = field_->phi();
  if (fits_fast() && b.fits_fast()) {
    i128 acc[kMaxFastPhi];
    i128 den;
    if (den_ == b.den_) {
      for (int k = 0; k < phi; ++k) acc[k] = static_cast<i128>(num_[k]) + b.num_[k];
      den = den_;
    } else {
      for (int k = 0; k < phi; ++k) {
        acc[k] = static_cast<i128>(num_[k]) * b.den_ + static_cast<i128>(b.num_[k]) * den_;
      }
      den = static_cast<i128>(den_) * b.den_;
    }
    bool overflow = false;
    normalize128(acc, phi, den, num_, den_, overflow);
    if (!overflow) return *this;
    std::vector<BigInt> num(phi);
    for (int k = 0; k < phi; ++k) num[k] = to_big(acc[k]);
    assign_big(std::move(num), to_big(den));
    return *this;
  }
  BigInt da = big_den(), db = b.big_den();
  auto na = big_num();
  auto nb = b.big_num();
  for (int k = 0; k < phi; ++k) na[k] = na[k] * db + nb[k] * da;
  assign_big(std::move(na), da * db);
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) { return *this += -b; }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  if (big_) {
    auto num = big_->num;
    for (auto& c : num) c = -c;
    r.assign_big(std::move(num), big_->den);
  } else {
    for (auto& c : r.num_) c = -c;
  }
  return r;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.check_same(b);
  const CycloField& f = *a.field_;
  const int phi = f.phi();
  if (a.is_zero() || b.is_zero()) return CycloNum(f.order());
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.fits_fast() && b.fits_fast()) {
    i128 acc[2 * kMaxFastPhi];
    const int len = 2 * phi - 1;
    std::fill(acc, acc + len, i128{0});
    for (int i = 0; i < phi; ++i) {
      if (a.num_[i] == 0) continue;
      const i128 ai = a.num_[i];
      for (int j = 0; j < phi; ++j) {
        if (b.num_[j] != 0) acc[i + j] += ai * b.num_[j];
      }
    }
    const auto& poly = f.poly();
    for (int k = len - 1; k >= phi; --k) {
      i128 c = acc[k];
      if (c == 0) continue;
      for (int t = 0; t < phi; ++t) {
        if (poly[t] != 0) acc[k - phi + t] -= c * poly[t];
      }
      acc[k] = 0;
    }
    CycloNum r(f.order());
    bool overflow = false;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    normalize128(acc, phi, den, r.num_, r.den_, overflow);
    if (!overflow) return r;
    std::vector<BigInt> num(phi);
    for (int k = 0; k < phi; ++k) num[k] = to_big(acc[k]);
    r.assign_big(std::move(num), to_big(den));
    return r;
  }
  auto na = a.big_num();
  auto nb = b.big_num();
  std::vector<BigInt> acc(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (na[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (nb[j] != 0) acc[i + j] += na[i] * nb[j];
    }
  }
  return CycloNum::from_power_basis(f, std::move(acc), a.big_den() * b.big_den());
}

CycloNum& CycloNum::operator*=(const CycloNum& b) {
  *this = *this * b;
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.field_ != b.field_) return false;
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

bool CycloNum::is_zero() const {
  if (big_) return false;
  for (auto c : num_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNum::is_one() const {
  if (big_ || den_ != 1 || num_[0] != 1) return false;
  for (std::size_t k = 1; k < num_.size(); ++k) {
    if (num_[k] != 0) return false;
  }
  return true;
}

BigRational CycloNum::coeff(int k) const {
  if (big_) return BigRational(big_->num.at(k), big_->den);
  return BigRational(BigInt(num_.at(k)), BigInt(den_));
}

std::vector<BigRational> CycloNum::coeffs() const {
  std::vector<BigRational> r;
  for (int k = 0; k < field_->phi(); ++k) r.push_back(coeff(k));
  return r;
}

std::optional<BigRational> CycloNum::rational() const {
  auto num = big_num();
  for (std::size_t k = 1; k < num.size(); ++k) {
    if (num[k] != 0) return std::nullopt;
  }
  return BigRational(num[0], big_den());
}

std::optional<int> CycloNum::root_exponent() const {
  if (big_ || den_ != 1) return std::nullopt;
  return field_->root_index(num_);
}

CycloNum CycloNum::galois(int k) const {
  const int n = field_->order();
  if (std::gcd(k, n) != 1) throw ScalarError("Galois exponent must be a unit");
  auto num = big_num();
  std::vector<BigInt> acc(field_->phi(), 0);
  for (int j = 0; j < field_->phi(); ++j) {
    if (num[j] == 0) continue;
    const auto& p = field_->power(static_cast<int>(mod(std::int64_t{j} * k, n)));
    for (int t = 0; t < field_->phi(); ++t) {
      if (p[t] != 0) acc[t] += num[j] * p[t];
    }
  }
  CycloNum r(n);
  r.assign_big(std::move(acc), big_den());
  return r;
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw ScalarError("division by zero: inverse of 0");
  const int n = field_->order();
  if (auto k = root_exponent()) return root_of_unity(n, -*k);
  if (auto r = rational()) return CycloNum(n, BigRational(1) / *r);
  // a^{-1} = prod_{sigma != id} sigma(a) / N(a)
  CycloNum prod(n, 1);
  for (int k = 2; k < n; ++k) {
    if (std::gcd(k, n) == 1) prod *= galois(k);
  }
  auto norm = (*this * prod).rational();
  if (!norm) throw ScalarError("internal error: norm is not rational");
  return prod * CycloNum(n, BigRational(1) / *norm);
}

CycloNum CycloNum::pow(std::int64_t e) const {
  const int n = field_->order();
  if (auto k = root_exponent()) return root_of_unity(n, mod(*k * mod(e, n), n));
  if (e < 0) return inv().pow(-e);
  CycloNum result(n, 1);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycloNum CycloNum::times_root(std::int64_t k) const { return *this * root_of_unity(order(), k); }

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < field_->phi(); ++k) {
    BigRational c = coeff(k);
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    if (!first) {
      if (s[0] == '-') {
        os << " - ";
        s.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (k == 0) {
      os << s;
    } else {
      if (s != "1" && s != "-1") os << s << "*";
      if (s == "-1") os << "-";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<double, double> CycloNum::approx() const {
  double re = 0, im = 0;
  const double n = field_->order();
  for (int k = 0; k < field_->phi(); ++k) {
    BigRational c = coeff(k);
    double v = static_cast<double>(c.num()) / static_cast<double>(c.den());
    re += v * std::cos(2 * std::numbers::pi * k / n);
    im += v * std::sin(2 * std::numbers::pi * k / n);
  }
  return {re, im};
}

CycloNum root_of_unity(int order, std::int64_t k) {
  const CycloField& f = CycloField::get(order);
  CycloNum r(order);
  r.num_ = f.power(static_cast<int>(mod(k, order)));
  return r;
}

CycloNum embed(const CycloNum& a, int order) {
  const int n = a.order();
  if (order < 1 || order % n != 0) {
    throw ScalarError("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                      std::to_string(order) + ")");
  }
  const int step = order / n;
  std::vector<BigRational> power(static_cast<std::size_t>((a.field().phi() - 1) * step + 1));
  for (int k = 0; k < a.field().phi(); ++k) power[static_cast<std::size_t>(k * step)] = a.coeff(k);
  return CycloNum::from_coeffs(order, power);
}

}  // namespace qhopf
