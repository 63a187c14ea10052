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

#include "langgen/semiring.hpp"

#include <cmath>
#include <vector>

namespace langgen {
namespace {

// Width of a band in nats. Scaled values lie in (e^-W, 1], so a product of
// two lies above e^-2W and stays a normal double.
constexpr double kBandWidth = 300.0;

struct Band {
  long tag = 0;  // value range (-W(tag+1), -W tag]
  int lo = 0;
  int hi = -1;
  std::vector<double> scaled;  // indices lo..hi, 0 for bins in other bands
};

long band_of(double x) { return static_cast<long>(std::floor(-x / kBandWidth)); }

std::vector<Band> make_bands(std::span<const double> x, std::size_t limit) {
  std::vector<Band> bands;
  const int n = static_cast<int>(std::min(x.size(), limit));
  for (int i = 0; i < n; ++i) {
    if (x[i] == -kInf) continue;
    const long tag = band_of(x[i]);
    Band* band = nullptr;
    for (Band& b : bands) {
      if (b.tag == tag) band = &b;
    }
    if (band == nullptr) {
      bands.push_back(Band{tag, i, i, {}});
      band = &bands.back();
    }
    band->hi = i;
  }
  for (Band& b : bands) {
    b.scaled.assign(b.hi - b.lo + 1, 0.0);
    const double shift = kBandWidth * static_cast<double>(b.tag);
    for (int i = b.lo; i <= b.hi; ++i) {
      if (x[i] != -kInf && band_of(x[i]) == b.tag) {
        b.scaled[i - b.lo] = std::exp(x[i] + shift);
      }
    }
  }
  std::sort(bands.begin(), bands.end(),
            [](const Band& a, const Band& b) { return a.tag < b.tag; });
  return bands;
}

}  // namespace

void log_convolve(std::span<const double> u, std::span<const double> v,
                  std::span<double> out) {
  const int order = static_cast<int>(out.size()) - 1;
  std::fill(out.begin(), out.end(), -kInf);
  if (order < 0) return;
  const auto ubands = make_bands(u, out.size());
  if (ubands.empty()) return;
  const auto vbands = make_bands(v, out.size());
  if (vbands.empty()) return;

  std::vector<double> acc(out.size());
  for (const Band& a : ubands) {
    for (const Band& b : vbands) {
      const int first = a.lo + b.lo;
      if (first > order) continue;
      const int last = std::min(order, a.hi + b.hi);
      std::fill(acc.begin() + first, acc.begin() + last + 1, 0.0);
      for (int j = a.lo; j <= a.hi && j + b.lo <= order; ++j) {
        const double aj = a.scaled[j - a.lo];
        if (aj == 0.0) continue;
        const int kmax = std::min(b.hi, order - j);
        double* dst = acc.data() + j;
        const double* src = b.scaled.data() - b.lo;
        for (int k = b.lo; k <= kmax; ++k) dst[k] += aj * src[k];
      }
      const double shift = kBandWidth * static_cast<double>(a.tag + b.tag);
      for (int i = first; i <= last; ++i) {
        if (acc[i] > 0.0) out[i] = log_add_exp(out[i], std::log(acc[i]) - shift);
      }
    }
  }
}

}  // namespace langgen
