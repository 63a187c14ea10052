// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Semirings used by the sampler and the edit-distance pipeline. A semiring
// is a small value type exposing zero(), one(), add(), mul() and star(); the
// generic algorithms (Lehmann, backward weights) take one by const reference.
// Real, log and tropical semirings are stateless. BinningSemiring<Base>
// carries its order D at run time.

#ifndef LANGGEN_SEMIRING_HPP_
#define LANGGEN_SEMIRING_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "langgen/errors.hpp"

namespace langgen {

template <class S>
concept Semiring = requires(const S& s, const typename S::value_type& a) {
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.add(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.mul(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.star(a) } -> std::convertible_to<typename S::value_type>;
  { s.is_zero(a) } -> std::convertible_to<bool>;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)), shifted by the max so that neither exp overflows.
inline double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// (R>=0, +, *, 0, 1)
struct RealSemiring {
  using value_type = double;
  static constexpr const char* kName = "real";
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double add(double a, double b) const { return a + b; }
  double mul(double a, double b) const { return a * b; }
  double star(double a) const {
    if (!(a < 1.0)) {
      throw DomainError("divergent star: real weight " + std::to_string(a) +
                        " >= 1");
    }
    return 1.0 / (1.0 - a);
  }
  bool is_zero(double a) const { return a == 0.0; }
};

// (R u {-inf}, logaddexp, +, -inf, 0)
struct LogSemiring {
  using value_type = double;
  static constexpr const char* kName = "log";
  double zero() const { return -kInf; }
  double one() const { return 0.0; }
  double add(double a, double b) const { return log_add_exp(a, b); }
  double mul(double a, double b) const {
    if (a == -kInf || b == -kInf) return -kInf;
    return a + b;
  }
  double star(double a) const {
    if (!(a < 0.0)) {
      throw DomainError("divergent star: log weight " + std::to_string(a) +
                        " >= 0");
    }
    return -std::log1p(-std::exp(a));
  }
  bool is_zero(double a) const { return a == -kInf; }
};

// (R>=0 u {inf}, min, +, inf, 0)
struct TropicalSemiring {
  using value_type = double;
  static constexpr const char* kName = "tropical";
  double zero() const { return kInf; }
  double one() const { return 0.0; }
  double add(double a, double b) const { return std::min(a, b); }
  double mul(double a, double b) const { return a + b; }
  double star(double a) const {
    if (a < 0.0) {
      throw DomainError("divergent star: negative tropical cost");
    }
    return 0.0;
  }
  bool is_zero(double a) const { return a == kInf; }
};

// Element of the D-th order binning semiring: bins[i] holds the base weight
// of "exactly i symbols".
template <class Base>
class BinVector {
 public:
  using base_value = typename Base::value_type;

  BinVector() = default;
  BinVector(int order, base_value fill) : bins_(order + 1, fill) {}
  explicit BinVector(std::vector<base_value> bins) : bins_(std::move(bins)) {
    if (bins_.empty()) throw UsageError("a bin vector needs at least one bin");
  }

  int order() const { return static_cast<int>(bins_.size()) - 1; }
  base_value operator[](int i) const { return bins_[i]; }
  base_value& operator[](int i) { return bins_[i]; }
  std::span<const base_value> bins() const { return bins_; }
  std::span<base_value> bins() { return bins_; }

  friend bool operator==(const BinVector&, const BinVector&) = default;

 private:
  std::vector<base_value> bins_;
};

// Log-semiring convolution truncated to out.size() bins. The result is
// exact up to rounding: values are grouped into bands of bounded dynamic
// range and each pair of bands is convolved with scaled reals, so nothing
// underflows however far apart the bins are. Bin i of the result depends
// only on bins 0..i of the inputs.
void log_convolve(std::span<const double> u, std::span<const double> v,
                  std::span<double> out);

template <Semiring Base>
class BinningSemiring {
 public:
  using base_semiring = Base;
  using value_type = BinVector<Base>;

  explicit BinningSemiring(int order, Base base = {})
      : order_(order), base_(base) {
    if (order < 0) throw UsageError("binning semiring order must be >= 0");
  }

  int order() const { return order_; }
  const Base& base() const { return base_; }

  value_type zero() const { return value_type(order_, base_.zero()); }
  value_type one() const {
    value_type v = zero();
    v[0] = base_.one();
    return v;
  }
  // Vector whose only non-zero bin is `index`.
  value_type delta(int index, typename Base::value_type weight) const {
    value_type v = zero();
    if (index <= order_) v[index] = weight;
    return v;
  }

  bool is_zero(const value_type& v) const {
    check(v);
    return std::all_of(v.bins().begin(), v.bins().end(),
                       [&](auto x) { return base_.is_zero(x); });
  }

  value_type add(const value_type& u, const value_type& v) const {
    check(u);
    check(v);
    value_type out = zero();
    for (int i = 0; i <= order_; ++i) out[i] = base_.add(u[i], v[i]);
    return out;
  }

  value_type mul(const value_type& u, const value_type& v) const {
    check(u);
    check(v);
    value_type out = zero();
    if constexpr (std::same_as<Base, LogSemiring>) {
      log_convolve(u.bins(), v.bins(), out.bins());
    } else {
      for (int j = 0; j <= order_; ++j) {
        if (base_.is_zero(u[j])) continue;
        for (int k = 0; j + k <= order_; ++k) {
          out[j + k] = base_.add(out[j + k], base_.mul(u[j], v[k]));
        }
      }
    }
    return out;
  }

  // Closed form: w_i = star(v_0) (x) (one_i (+) sum_{j=1..i} v_j (x) w_{i-j}),
  // filled in increasing i.
  value_type star(const value_type& v) const {
    check(v);
    const auto s0 = base_.star(v[0]);
    value_type w = zero();
    w[0] = s0;
    for (int i = 1; i <= order_; ++i) {
      auto acc = base_.zero();
      for (int j = 1; j <= i; ++j) {
        if (base_.is_zero(v[j])) continue;
        acc = base_.add(acc, base_.mul(v[j], w[i - j]));
      }
      w[i] = base_.mul(s0, acc);
    }
    return w;
  }

 private:
  void check(const value_type& v) const {
    if (v.order() != order_) {
      throw UsageError("bin vector order " + std::to_string(v.order()) +
                       " does not match semiring order " +
                       std::to_string(order_));
    }
  }

  int order_;
  Base base_;
};

using LogBinning = BinningSemiring<LogSemiring>;
using LogBinVector = BinVector<LogSemiring>;

}  // namespace langgen

#endif  // LANGGEN_SEMIRING_HPP_
