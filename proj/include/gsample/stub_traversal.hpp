#pragma once

#include <span>
#include <vector>

#include "gsample/graph.hpp"
#include "gsample/rng.hpp"
#include "gsample/trace.hpp"

namespace gsample {

/// One uniform [0,1] index per stub; node v owns degree(v) consecutive stubs.
/// All indices are distinct.
class StubAssignment {
 public:
  StubAssignment() = default;
  /// Takes explicit per-node index lists (validated: values in [0,1], distinct).
  explicit StubAssignment(const std::vector<std::vector<double>>& per_node);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t stub_count() const noexcept { return indices_.size(); }
  std::span<const double> indices(NodeId v) const {
    return {indices_.data() + offsets_[v], indices_.data() + offsets_[v + 1]};
  }
  std::size_t first_stub(NodeId v) const { return offsets_[v]; }
  double index(std::size_t stub) const { return indices_[stub]; }
  NodeId owner(std::size_t stub) const { return owners_[stub]; }
  /// Smallest index among v's stubs (+inf for a degree-0 node).
  double min_index(NodeId v) const;

 private:
  friend StubAssignment assign_stub_indices(std::span<const Degree>, Rng&);
  void build_owners();

  std::vector<std::size_t> offsets_;
  std::vector<double> indices_;
  std::vector<NodeId> owners_;
};

/// Draws independent uniform indices; redraws everything on a collision.
StubAssignment assign_stub_indices(std::span<const Degree> sequence, Rng& rng);

/// Scheduling of the stub queue: FIFO gives BFS, LIFO gives DFS, and
/// randomized FIFO drops each dequeued stub with probability 1 - p (Forest Fire).
struct QueueDiscipline {
  enum class Kind { fifo, lifo, randomized_fifo };
  Kind kind = Kind::fifo;
  double p = 1.0;

  static QueueDiscipline fifo() { return {Kind::fifo, 1.0}; }
  static QueueDiscipline lifo() { return {Kind::lifo, 1.0}; }
  static QueueDiscipline randomized_fifo(double p) { return {Kind::randomized_fifo, p}; }
};

/// What to do when the queue empties before the budget is met.
enum class StubRestart {
  stop,         // report exhaustion (component of the seed is done)
  next_smallest // keep scanning: the unvisited node owning the smallest index becomes a new seed
};

struct StubTraversal {
  Graph realized;     // edges matched so far (partial unless the queue ran dry on a full match)
  SampleTrace trace;  // discovery order
  bool exhausted;     // queue ran empty before the budget was met
};

/// Stub-level traversal with on-the-fly matching: the dequeued stub is paired
/// with the unmatched stub of smallest index. A newly discovered node enqueues
/// its other stubs; a partner whose owner is already sampled is removed from
/// the queue so no edge is walked twice. `rng` is only consulted by the
/// randomized discipline and may be null otherwise. With next_smallest the
/// whole trace follows ascending minimum stub index.
StubTraversal stub_level_traversal(std::span<const Degree> sequence, const StubAssignment& indices,
                                   NodeId seed, QueueDiscipline discipline, std::size_t budget,
                                   Rng* rng = nullptr, StubRestart restart = StubRestart::stop);

/// Owner of the globally smallest stub index: where the index scan starts.
NodeId first_in_scan(const StubAssignment& indices);

}  // namespace gsample
