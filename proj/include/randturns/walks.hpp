#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "randturns/combinatorics.hpp"
#include "randturns/common.hpp"

namespace randturns {

enum class Step : std::uint8_t { Left, Right };

char to_char(Step step);
Step step_from_char(char c);

// Global L/R directions over 2n ticks; closed walks need n of each.
struct StepWord {
  std::vector<Step> steps;

  static StepWord parse(std::string_view text);
  static StepWord lnrn(int n);  // L^n R^n

  std::string str() const;
  int size() const { return static_cast<int>(steps.size()); }
  bool balanced() const;
  bool operator==(const StepWord&) const = default;
};

// Which walker moves at each tick. Walkers are labelled by their initial
// site, 1..p by default.
struct WalkHistory {
  int p = 0;
  std::vector<int> initial_positions;
  std::vector<std::pair<int, Step>> moves;  // (walker label, direction)

  static WalkHistory starting_at_origin(int p);

  StepWord word() const;
  bool operator==(const WalkHistory&) const = default;
};

// Labelled boxes stacked per column above/below an axis. Box t sits in
// column k when walker k moves at tick t, above the axis for L and below
// for R; labels increase moving away from the axis on both sides.
struct SignedDiagram {
  struct Column {
    std::vector<int> above;
    std::vector<int> below;

    bool operator==(const Column&) const = default;
  };
  std::vector<Column> columns;

  int p() const { return static_cast<int>(columns.size()); }
  int box_count() const;
  bool operator==(const SignedDiagram&) const = default;
};

// Step probabilities of the stochastic dynamics; w_left + w_right = 1.
struct ModelParams {
  double w_left = 0.5;
  double w_right = 0.5;
};

void validate(const StepWord& word);
void validate(const WalkHistory& history);  // exclusion at every tick
void validate(const ModelParams& params);

bool is_closed(const WalkHistory& history);

// The word a diagram induces: L where the label sits above the axis.
StepWord word_of(const SignedDiagram& diagram);

// Full admissibility: labels 1..2n once each, each column side increasing
// away from the axis, and the induced walk never violates exclusion.
// require_admissible names the violated condition.
void require_admissible(const SignedDiagram& diagram);
bool is_admissible(const SignedDiagram& diagram);

// Number of walker assignments realizing `word` that return every walker to
// its start. `visit`, when set, receives each closed history in DFS order.
BigInt enumerate_walks(
    int p, const StepWord& word, const Caps& caps = {},
    const std::function<void(const WalkHistory&)>& visit = nullptr);

SignedDiagram walk_to_diagram(const WalkHistory& history);
WalkHistory diagram_to_walk(const SignedDiagram& diagram);

// Prop-style tableau correspondence, defined for diagrams of L^n R^n walks:
// P transposes the region above the axis, Q the time-reversed region below.
TableauPair diagram_to_tableau_pair(const SignedDiagram& diagram);
SignedDiagram tableau_pair_to_diagram(const TableauPair& pair, int p);

struct DiagramWord {
  SignedDiagram diagram;
  StepWord word;

  bool operator==(const DiagramWord&) const = default;
};

// Elementary transposition s_i (1-based, 1 <= i < 2n): swaps letters i and
// i+1 of the word and the boxes labelled i and i+1, propagating a displaced
// same-column pair sideways until the configuration is admissible. Equal
// adjacent letters act as the identity. An involution.
DiagramWord apply_transposition(const SignedDiagram& diagram,
                                const StepWord& word, int i);

// 1-based adjacent-swap indices sorting the word into L^n R^n; bubbles the
// leftmost misplaced L first. Replaying the indices via apply_transposition
// maps any admissible diagram for `word` to one for L^n R^n.
std::vector<int> word_reduction(const StepWord& word);

// Outcome of one chosen walker attempting a drawn direction: the blocked
// walker moves the opposite way with probability one; nullopt when both
// neighbouring sites are occupied.
std::optional<int> resolve_move(const std::vector<int>& positions, int index,
                                Step drawn);

// One tick of the stochastic dynamics: select a walker uniformly, draw a
// direction from params, and reselect until exactly one walker moves.
void stochastic_step(std::vector<int>& positions, const ModelParams& params,
                     std::mt19937_64& gen);

}  // namespace randturns
