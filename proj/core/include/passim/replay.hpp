#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "passim/rng.hpp"

namespace passim {

struct Transition {
  Eigen::VectorXd state;
  Eigen::VectorXd action;  // raw pre-decode form
  double reward = 0.0;
  Eigen::VectorXd next_state;
};

/// Bounded FIFO experience store with uniform sampling (with replacement).
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(Transition t);
  std::size_t size() const { return storage_.size(); }
  std::size_t capacity() const { return capacity_; }
  const Transition& at(std::size_t i) const { return storage_[i]; }

  /// Throws std::logic_error when fewer than batch transitions are stored.
  std::vector<const Transition*> sample(Rng& rng, std::size_t batch) const;

 private:
  std::vector<Transition> storage_;
  std::size_t capacity_;
  std::size_t cursor_ = 0;  // next slot to overwrite once full
};

}  // namespace passim
