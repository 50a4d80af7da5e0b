#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace larlens::grokkit {

// The twelve binary operations, numbered as in the usual grokking task list.
enum class TaskId {
  kAdd = 1,          // x + y
  kSub,              // x - y
  kDiv,              // x / y, y != 0
  kDivOddElseSub,    // x / y if y odd, else x - y
  kSquares,          // x^2 + y^2
  kQuadratic,        // x^2 + xy + y^2
  kQuadraticPlusX,   // x^2 + xy + y^2 + x
  kCubicXy,          // x^3 + xy
  kCubicXy2Y,        // x^3 + xy^2 + y
  kS5Compose,        // x . y
  kS5Conjugate,      // x . y . x^-1
  kS5Sandwich,       // x . y . x
};

struct TaskInfo {
  TaskId id;
  const char* name;
  const char* formula;
  bool permutation_group;
};

const std::vector<TaskInfo>& all_tasks();
const TaskInfo& task_info(TaskId id);
// Accepts the task name ("add", "s5_conj", ...) or its 1-based number.
TaskId parse_task(const std::string& name);

inline constexpr std::uint32_t kS5Order = 120;
inline constexpr std::size_t kContext = 4;  // <a> <op> <b> <=>

struct TaskSpec {
  TaskId task = TaskId::kAdd;
  std::uint32_t modulus = 97;  // prime, or 120 for the S5 tasks
  double train_fraction = 0.5;

  void validate() const;
  std::size_t vocab_size() const { return modulus + 2; }
  int op_token() const { return static_cast<int>(modulus); }
  int eq_token() const { return static_cast<int>(modulus) + 1; }
};

struct Example {
  std::array<int, kContext> tokens{};
  int target = 0;
};

struct Dataset {
  std::vector<Example> train;
  std::vector<Example> val;

  std::size_t total() const { return train.size() + val.size(); }
};

// Every equation of the task in (x, y) row-major order.
std::vector<Example> enumerate_examples(const TaskSpec& spec);

// Uniform random split: floor(fraction * total) training examples.
Dataset build_dataset(const TaskSpec& spec, std::uint64_t seed);

// x o y, or nothing when the pair is excluded from the task.
std::optional<int> apply_task(TaskId id, int x, int y, std::uint32_t modulus);

bool is_prime(std::uint64_t value);

// S5 elements indexed by lexicographic rank of the image tuple
// (p(0), ..., p(4)). Composition is (x . y)(i) = x(y(i)).
using Perm = std::array<int, 5>;
const std::vector<Perm>& s5_elements();
int s5_index(const Perm& perm);
Perm s5_compose(const Perm& x, const Perm& y);
Perm s5_inverse(const Perm& x);

}  // namespace larlens::grokkit
