#include "rancher/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "rancher/rancher.hpp"
#include "rancher/stats.hpp"

namespace rancher {

namespace {

constexpr double kPi = std::numbers::pi;

struct BinKey {
  bool in_A;
  int dec;
  int blo;
  int bhi;
  auto operator<=>(const BinKey&) const = default;
};

struct Acc {
  std::uint64_t count = 0;
  double sum = 0.0;
  double sumsq = 0.0;
  double max = -std::numeric_limits<double>::infinity();

  void add(double v) {
    ++count;
    sum += v;
    sumsq += v * v;
    max = std::max(max, v);
  }
  void merge(const Acc& o) {
    count += o.count;
    sum += o.sum;
    sumsq += o.sumsq;
    max = std::max(max, o.max);
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double se() const {
    if (count < 2) return 0.0;
    const auto k = static_cast<double>(count);
    const double var = std::max(0.0, (sumsq - sum * sum / k) / (k - 1.0));
    return std::sqrt(var / k);
  }
};

int d_decade_of(double d) {
  if (d <= 1e-9) return kDZeroDecade;
  return std::clamp(static_cast<int>(std::floor(std::log10(d))), -9, 9);
}

int band_of(double a, double eps) {
  if (a < eps) return 0;
  if (a < kPi - eps) return 1;
  return 2;
}

// Per-walk partial results, merged in rep order for determinism.
struct Partial {
  std::map<BinKey, Acc> bins;
  std::uint64_t degenerate_steps = 0;
  std::uint64_t dx_violations = 0;
  double max_abs_dx = 0.0;
  double min_f = std::numeric_limits<double>::infinity();
  Acc gain;        // per-step ||x|| gain, pooled
  Acc mgain_on_A;  // m-step gain conditional on A at the start
  Acc df_off_A;    // pooled delta f on A-complement
  Acc df_on_A;     // pooled delta f on A (max is the bound witness)
  std::uint64_t samples = 0;
};

struct StateF {
  double d, alpha, alpha_prime, f;
  bool in_A;
};

}  // namespace

void DriftConfig::validate() const {
  if (!(c > 0.0)) throw std::invalid_argument("DriftConfig: c must be > 0");
  if (!(d_star > 0.0)) {
    throw std::invalid_argument("DriftConfig: d_star must be > 0");
  }
  if (!(epsilon > 0.0 && epsilon < kPi / 2.0)) {
    throw std::invalid_argument("DriftConfig: epsilon must be in (0, pi/2)");
  }
}

double f_value(double d, double alpha, double alpha_prime,
               const DriftConfig& cfg) {
  if (d < 0.0) throw std::invalid_argument("f_value: d must be >= 0");
  const double root = std::sqrt(d);
  const double cut = cfg.c * root;
  // summed before subtracting so the value is exactly symmetric in the angles
  return d * root -
         (std::min(cut, alpha * d) + std::min(cut, alpha_prime * d));
}

double f_lower_bound(const DriftConfig& cfg) {
  // d^{3/2} - 2c d^{1/2} is minimized at d = 2c/3.
  const double d = 2.0 * cfg.c / 3.0;
  return -(4.0 * cfg.c / 3.0) * std::sqrt(d);
}

SurveyReport run_survey(const SurveyParams& params) {
  params.cfg.validate();
  if (params.m == 0) {
    throw std::invalid_argument("run_survey: m must be >= 1");
  }
  const DriftConfig cfg = params.cfg;
  const std::uint64_t m = params.m;

  std::vector<Partial> parts(params.reps);
  parallel_for(params.reps, params.threads, [&](std::size_t rep) {
    Partial& part = parts[rep];
    RandomStream rs = RandomStream::derive(params.seed, rep);
    RancherWalk walk;

    auto state_f = [&]() -> std::optional<StateF> {
      const auto diag = walk.diagnostics();
      if (!diag) return std::nullopt;
      return StateF{diag->d, diag->alpha, diag->alpha_prime,
                    f_value(diag->d, diag->alpha, diag->alpha_prime, cfg),
                    diag->d < cfg.d_star};
    };

    // ring[n % (m+1)] = (||x_n||, in_A at n if defined)
    std::vector<std::pair<double, std::optional<bool>>> ring(m + 1);
    ring[0] = {0.0, std::nullopt};

    std::optional<StateF> cur = state_f();
    if (cur) ring[0].second = cur->in_A;

    for (std::uint64_t n = 0; n < params.steps; ++n) {
      walk.step(rs);
      const double nrm = norm(walk.position());
      const double dx = walk.last_gain();
      part.gain.add(dx);
      part.max_abs_dx = std::max(part.max_abs_dx, std::fabs(dx));
      // |delta ||x||| <= 1 holds exactly by the triangle inequality; the
      // slack only covers coordinate rounding, which scales with ||x||.
      if (std::fabs(dx) > 1.0 + 1e-12 * std::max(1.0, nrm)) {
        ++part.dx_violations;
      }

      const std::optional<StateF> nxt = state_f();
      if (cur && nxt) {
        const double df = nxt->f - cur->f;
        part.min_f = std::min(part.min_f, cur->f);
        BinKey key{cur->in_A, d_decade_of(cur->d),
                   band_of(cur->alpha, cfg.epsilon),
                   band_of(cur->alpha_prime, cfg.epsilon)};
        if (key.blo > key.bhi) std::swap(key.blo, key.bhi);
        part.bins[key].add(df);
        (cur->in_A ? part.df_on_A : part.df_off_A).add(df);
        ++part.samples;
      } else {
        ++part.degenerate_steps;
      }
      if (nxt) part.min_f = std::min(part.min_f, nxt->f);
      cur = nxt;

      const std::uint64_t idx = n + 1;
      if (idx >= m) {
        const auto& [old_norm, old_in_A] = ring[(idx - m) % (m + 1)];
        if (old_in_A.has_value() && *old_in_A) {
          part.mgain_on_A.add(nrm - old_norm);
        }
      }
      ring[idx % (m + 1)] = {nrm, nxt ? std::optional<bool>(nxt->in_A)
                                      : std::nullopt};
    }
  });

  // Sequential merge in rep order keeps the report independent of the
  // thread count.
  Partial total;
  total.min_f = std::numeric_limits<double>::infinity();
  for (const Partial& p : parts) {
    for (const auto& [key, acc] : p.bins) total.bins[key].merge(acc);
    total.degenerate_steps += p.degenerate_steps;
    total.dx_violations += p.dx_violations;
    total.max_abs_dx = std::max(total.max_abs_dx, p.max_abs_dx);
    total.min_f = std::min(total.min_f, p.min_f);
    total.gain.merge(p.gain);
    total.mgain_on_A.merge(p.mgain_on_A);
    total.df_off_A.merge(p.df_off_A);
    total.df_on_A.merge(p.df_on_A);
    total.samples += p.samples;
  }

  SurveyReport rep;
  rep.samples = total.samples;
  rep.degenerate_steps = total.degenerate_steps;
  rep.dx_violations = total.dx_violations;
  rep.min_f = total.samples ? total.min_f : 0.0;
  rep.max_delta_f_on_A =
      total.df_on_A.count ? total.df_on_A.max : 0.0;
  rep.bound_cap = f_value(cfg.d_star + 1.0, 0.0, 0.0, cfg) + 10.0;
  rep.pooled_gain_mean = total.gain.mean();
  rep.pooled_gain_count = total.gain.count;

  rep.bins.reserve(total.bins.size());
  for (const auto& [key, acc] : total.bins) {
    DriftBin b;
    b.in_A = key.in_A;
    b.d_decade = key.dec;
    b.band_lo = key.blo;
    b.band_hi = key.bhi;
    b.count = acc.count;
    b.mean_delta_f = acc.mean();
    b.se_delta_f = acc.se();
    b.max_delta_f = acc.max;
    rep.bins.push_back(b);
  }

  auto add_cond = [&](std::string name, bool pass, std::uint64_t count,
                      double estimate, double se, std::string note) {
    rep.conditions.push_back(
        {std::move(name), pass, count, estimate, se, std::move(note)});
  };

  add_cond("abs_delta_x_le_1", total.dx_violations == 0, total.gain.count,
           total.max_abs_dx, 0.0,
           "per-step |delta ||x||| <= 1 (slack 1e-12 relative to ||x|| for "
           "coordinate rounding)");
  add_cond("mean_delta_x_nonneg", total.gain.mean() >= -1e-3,
           total.gain.count, total.gain.mean(), total.gain.se(),
           "pooled mean gain >= -1e-3");
  add_cond("m_step_gain_positive_on_A",
           total.mgain_on_A.count > 0 &&
               total.mgain_on_A.mean() > 3.0 * total.mgain_on_A.se(),
           total.mgain_on_A.count, total.mgain_on_A.mean(),
           total.mgain_on_A.se(), "mean m-step gain on A > 0 at 3 se");
  add_cond("f_bounded_below", rep.min_f >= -1.0, total.samples, rep.min_f,
           0.0, "min f >= -1 (analytic bound is -(4c/3)sqrt(2c/3))");
  add_cond("delta_f_bounded_on_A", rep.max_delta_f_on_A <= rep.bound_cap,
           total.df_on_A.count, rep.max_delta_f_on_A, 0.0,
           "max delta f on A <= f(d_star + 1, 0, 0) + 10");
  add_cond("delta_f_negative_off_A",
           total.df_off_A.count > 0 &&
               total.df_off_A.mean() + 3.0 * total.df_off_A.se() < 0.0,
           total.df_off_A.count, total.df_off_A.mean(), total.df_off_A.se(),
           "pooled mean delta f off A < 0 at 3 se");

  // Per-bin version of the negative-drift claim over populated bins.
  std::uint64_t qualifying = 0;
  bool all_neg = true;
  double worst = -std::numeric_limits<double>::infinity();
  for (const DriftBin& b : rep.bins) {
    if (b.in_A || b.count < 10000) continue;
    ++qualifying;
    const double upper = b.mean_delta_f + 3.0 * b.se_delta_f;
    worst = std::max(worst, upper);
    if (!(upper < 0.0)) all_neg = false;
  }
  add_cond("delta_f_negative_off_A_bins", qualifying > 0 && all_neg,
           qualifying,
           qualifying ? worst : 0.0, 0.0,
           "every A-complement bin with >= 1e4 samples: mean + 3 se < 0");

  return rep;
}

SurveyReport drift_survey(const SurveyParams& params) {
  return run_survey(params);
}

SurveyReport hypothesis_check(const SurveyParams& params) {
  return run_survey(params);
}

std::string d_decade_label(int decade) {
  if (decade == kDZeroDecade) return "d~0";
  return "[1e" + std::to_string(decade) + ",1e" + std::to_string(decade + 1) +
         ")";
}

std::string band_label(int band) {
  switch (band) {
    case 0: return "[0,eps)";
    case 1: return "[eps,pi-eps)";
    case 2: return "[pi-eps,pi]";
    default: return "?";
  }
}

}  // namespace rancher
