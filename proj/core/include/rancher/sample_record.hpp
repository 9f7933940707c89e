#ifndef RANCHER_SAMPLE_RECORD_HPP
#define RANCHER_SAMPLE_RECORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rancher {

// One checkpoint of a simulated walk. `x`/`y` are the position (the investor
// stores its log price in `x`), `norm` the distance from the origin, `width`
// and `direction` are missing where undefined (zero-norm states). Model
// specific observables (alpha, alpha_prime, d, rmax, rmin, hull_size, ...)
// live in `extras`, insertion-ordered.
struct SampleRecord {
  std::uint64_t n = 0;
  double x = 0.0;
  double y = 0.0;
  double norm = 0.0;
  std::optional<double> width;
  std::optional<double> direction;
  std::vector<std::pair<std::string, double>> extras;
  std::string status;  // empty, or "blowup" on an investor marker row

  std::optional<double> extra(std::string_view key) const {
    for (const auto& [k, v] : extras) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  void set_extra(std::string key, double value) {
    extras.emplace_back(std::move(key), value);
  }
};

}  // namespace rancher

#endif
