#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "larlens/grokkit/param_vector.hpp"

namespace larlens::grokkit {

struct ModelConfig {
  std::size_t vocab = 99;
  std::size_t context = 4;
  std::size_t d_model = 128;
  std::size_t d_ff = 512;
  std::size_t heads = 4;
  std::size_t layers = 2;
  double ln_eps = 1e-5;

  void validate() const;
};

// A named block of the flat parameter vector, stored row-major.
struct ParamView {
  std::string name;
  std::size_t offset = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool decay = false;  // weight decay applies (matrices and embeddings)

  std::size_t size() const { return rows * cols; }
};

class ParamLayout {
 public:
  explicit ParamLayout(const ModelConfig& cfg);

  const std::vector<ParamView>& views() const { return views_; }
  const ParamView& find(const std::string& name) const;
  std::size_t size() const { return size_; }
  // 1 where weight decay applies, per parameter.
  std::vector<unsigned char> decay_mask() const;

 private:
  void add(std::string name, std::size_t rows, std::size_t cols, bool decay);

  std::vector<ParamView> views_;
  std::size_t size_ = 0;
};

// Pre-norm decoder-only transformer: token + learned positional embeddings,
// causal multi-head attention without biases, GeLU MLP, final LayerNorm and an
// untied unembedding. Only the last position is read out, so the final block
// evaluates its query path and MLP at that position alone.
template <typename Scalar>
class Transformer {
 public:
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using MapMat = Eigen::Map<Mat>;
  using ConstMapMat = Eigen::Map<const Mat>;

  explicit Transformer(const ModelConfig& cfg);

  const ModelConfig& config() const { return cfg_; }
  const ParamLayout& layout() const { return layout_; }
  ParamVector<Scalar>& params() { return params_; }
  const ParamVector<Scalar>& params() const { return params_; }

  // Embeddings ~ N(0, 1); matrices ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in));
  // biases 0; LayerNorm gains 1.
  void init(std::uint64_t seed);

  MapMat view(const std::string& name);
  ConstMapMat view(const std::string& name) const;

  struct Output {
    Mat logits;  // batch x vocab, last position
    Mat hidden;  // batch x d_model, input to the unembedding
  };

  // tokens: batch * context ids, row-major by sequence.
  Output forward(std::span<const int> tokens) const;

  // Mean cross-entropy at the last position; grad is resized and overwritten.
  double loss_and_grad(std::span<const int> tokens, std::span<const int> targets,
                       ParamVector<Scalar>& grad) const;
  double loss(std::span<const int> tokens, std::span<const int> targets) const;

 private:
  double run(std::span<const int> tokens, std::span<const int> targets, Output* out,
             ParamVector<Scalar>* grad) const;

  ModelConfig cfg_;
  ParamLayout layout_;
  ParamVector<Scalar> params_;
};

extern template class Transformer<float>;
extern template class Transformer<double>;

}  // namespace larlens::grokkit
