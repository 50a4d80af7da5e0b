#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "larlens/grokkit/param_vector.hpp"

namespace larlens::grokkit {

struct AdamWConfig {
  double lr = 1e-3;
  double weight_decay = 1.0;
  double beta1 = 0.9;
  double beta2 = 0.98;
  double eps = 1e-8;
  std::int64_t warmup_steps = 10;

  void validate() const;
  // Learning rate for the 1-based optimizer step t: lr * min(1, t / warmup).
  double lr_at(std::int64_t t) const;
};

// Adam with decoupled weight decay: p <- p (1 - lr_t wd) for masked entries,
// then the bias-corrected Adam step.
template <typename Scalar>
class AdamW {
 public:
  AdamW(const AdamWConfig& cfg, std::size_t size, std::vector<unsigned char> decay_mask = {});

  void step(ParamVector<Scalar>& params, const ParamVector<Scalar>& grad);

  std::int64_t steps() const { return t_; }
  const std::vector<double>& first_moment() const { return m_; }
  const std::vector<double>& second_moment() const { return v_; }
  const AdamWConfig& config() const { return cfg_; }

 private:
  AdamWConfig cfg_;
  std::vector<unsigned char> mask_;
  std::vector<double> m_;
  std::vector<double> v_;
  std::int64_t t_ = 0;
};

extern template class AdamW<float>;
extern template class AdamW<double>;

}  // namespace larlens::grokkit
