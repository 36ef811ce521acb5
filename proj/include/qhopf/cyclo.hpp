#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycloNum stores its value as (sum_k num[k] zeta^k) / den, reduced modulo
// the N-th cyclotomic polynomial, with gcd(num..., den) = 1 and den > 0.
// Coefficients live in int64 while they fit and spill into arbitrary
// precision integers otherwise.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qhopf {

/// int64 coefficient storage; inline for phi(N) <= 20.
using Coeffs = boost::container::small_vector<std::int64_t, 20>;

using BigInt = boost::multiprecision::cpp_int;

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reduced fraction of arbitrary precision integers; zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t n) : num_(n) {}
  BigRational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  std::string to_string() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  BigRational operator-() const { return BigRational(-num_, den_); }
  friend bool operator==(const BigRational&, const BigRational&) = default;

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// Per-order data: phi(N), the cyclotomic polynomial and x^k mod Phi_N.
class CycloField {
 public:
  explicit CycloField(int order);

  int order() const { return order_; }
  int phi() const { return phi_; }
  const std::vector<std::int64_t>& poly() const { return poly_; }
  /// x^k mod Phi_N for 0 <= k < N.
  const Coeffs& power(int k) const { return powers_[k]; }
  bool fast_ok() const { return fast_ok_; }
  /// k with x^k mod Phi_N equal to the given coefficients, if any.
  std::optional<int> root_index(const Coeffs& coeffs) const;

  static const CycloField& get(int order);

 private:
  int order_;
  int phi_;
  bool fast_ok_;
  std::vector<std::int64_t> poly_;
  std::vector<Coeffs> powers_;
  std::map<Coeffs, int> root_index_;
};

/// Coefficients of Phi_N, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

class CycloNum {
 public:
  /// Zero of Q(zeta_order).
  explicit CycloNum(int order = 1);
  CycloNum(int order, std::int64_t value);
  CycloNum(int order, const BigRational& value);
  /// From power-basis coefficients sum c_k zeta^k (any length, reduced here).
  static CycloNum from_coeffs(int order, const std::vector<BigRational>& coeffs);

  int order() const { return field_->order(); }
  const CycloField& field() const { return *field_; }

  bool is_zero() const;
  bool is_one() const;
  /// Canonical coefficient k (0 <= k < phi(N)).
  BigRational coeff(int k) const;
  std::vector<BigRational> coeffs() const;

  CycloNum& operator+=(const CycloNum& b);
  CycloNum& operator-=(const CycloNum& b);
  CycloNum& operator*=(const CycloNum& b);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  CycloNum inv() const;
  CycloNum pow(std::int64_t e) const;
  /// Galois action zeta -> zeta^k, gcd(k, N) = 1.
  CycloNum galois(int k) const;
  /// Multiply by zeta^k.
  CycloNum times_root(std::int64_t k) const;
  /// If this is a root of unity zeta^k, returns k in [0, N).
  std::optional<int> root_exponent() const;
  /// The rational value when this lies in Q.
  std::optional<BigRational> rational() const;

  std::string to_string() const;
  /// Debug-only complex rendering.
  std::pair<double, double> approx() const;

 private:
  struct Big {
    std::vector<BigInt> num;
    BigInt den;
  };

  bool fits_fast() const;
  std::vector<BigInt> big_num() const;
  BigInt big_den() const;
  void assign_big(std::vector<BigInt> num, BigInt den);
  void check_same(const CycloNum& b) const;
  static CycloNum from_power_basis(const CycloField& f, std::vector<BigInt> acc, BigInt den);

  friend CycloNum root_of_unity(int order, std::int64_t k);

  const CycloField* field_;
  Coeffs num_;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

CycloNum root_of_unity(int order, std::int64_t k);
CycloNum embed(const CycloNum& a, int order);
inline CycloNum inv(const CycloNum& a) { return a.inv(); }
inline CycloNum pow(const CycloNum& a, std::int64_t e) { return a.pow(e); }

std::int64_t mod(std::int64_t a, std::int64_t m);

}  // namespace qhopf
