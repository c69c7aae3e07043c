#include "randturns/walks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace randturns {

namespace {

struct BoxLocation {
  int column = -1;  // 0-based
  bool above = false;
};

// Walk simulation on the infinite line. Returns a description of the first
// exclusion violation, or nullopt when every tick is legal.
std::optional<std::string> exclusion_violation(
    const std::vector<int>& initial,
    const std::vector<std::pair<int, Step>>& moves) {
  std::vector<int> pos = initial;
  std::set<int> occupied(initial.begin(), initial.end());
  for (std::size_t t = 0; t < moves.size(); ++t) {
    const auto [walker, dir] = moves[t];
    const int from = pos[walker - 1];
    const int to = from + (dir == Step::Left ? -1 : 1);
    if (occupied.count(to)) {
      int blocker = 0;
      for (std::size_t w = 0; w < pos.size(); ++w)
        if (pos[w] == to) blocker = static_cast<int>(w) + 1;
      std::ostringstream msg;
      msg << "step " << t + 1 << ": walker " << walker << " moving "
          << to_char(dir) << " collides with walker " << blocker
          << " at site " << to;
      return msg.str();
    }
    occupied.erase(from);
    occupied.insert(to);
    pos[walker - 1] = to;
  }
  return std::nullopt;
}

// Label -> (column, side) table, checking that labels are 1..B exactly once
// and that each column side increases away from the axis.
std::vector<BoxLocation> box_locations(const SignedDiagram& diagram) {
  const int boxes = diagram.box_count();
  std::vector<BoxLocation> map(boxes + 1);
  auto scan = [&](const std::vector<int>& side, int column, bool above) {
    for (std::size_t r = 0; r < side.size(); ++r) {
      const int label = side[r];
      if (label < 1 || label > boxes)
        throw validation_error("diagram label " + std::to_string(label) +
                               " outside 1.." + std::to_string(boxes));
      if (map[label].column >= 0)
        throw validation_error("diagram label " + std::to_string(label) +
                               " repeated");
      if (r > 0 && side[r - 1] >= label)
        throw validation_error(
            "column " + std::to_string(column + 1) + " labels not increasing " +
            (above ? "above" : "below") + " the axis");
      map[label] = {column, above};
    }
  };
  for (int k = 0; k < diagram.p(); ++k) {
    scan(diagram.columns[k].above, k, true);
    scan(diagram.columns[k].below, k, false);
  }
  return map;
}

std::vector<std::pair<int, Step>> moves_of(
    const std::vector<BoxLocation>& map) {
  std::vector<std::pair<int, Step>> moves;
  moves.reserve(map.size() - 1);
  for (std::size_t t = 1; t < map.size(); ++t)
    moves.emplace_back(map[t].column + 1,
                       map[t].above ? Step::Left : Step::Right);
  return moves;
}

std::vector<int> default_sites(int p) {
  std::vector<int> sites(p);
  std::iota(sites.begin(), sites.end(), 1);
  return sites;
}

SignedDiagram diagram_from_locations(int p,
                                     const std::vector<BoxLocation>& map) {
  SignedDiagram diagram;
  diagram.columns.resize(p);
  // Labels are visited in increasing order, so each side comes out sorted.
  for (std::size_t t = 1; t < map.size(); ++t) {
    auto& column = diagram.columns[map[t].column];
    (map[t].above ? column.above : column.below)
        .push_back(static_cast<int>(t));
  }
  return diagram;
}

std::string dump(const SignedDiagram& diagram) {
  std::ostringstream out;
  for (int k = 0; k < diagram.p(); ++k) {
    out << " col" << k + 1 << "[";
    for (int t : diagram.columns[k].above) out << " " << t;
    out << " |";
    for (int t : diagram.columns[k].below) out << " " << t;
    out << " ]";
  }
  return out.str();
}

}  // namespace

char to_char(Step step) { return step == Step::Left ? 'L' : 'R'; }

Step step_from_char(char c) {
  if (c == 'L' || c == 'l') return Step::Left;
  if (c == 'R' || c == 'r') return Step::Right;
  throw validation_error(std::string("step letter '") + c +
                         "' is neither L nor R");
}

StepWord StepWord::parse(std::string_view text) {
  StepWord word;
  word.steps.reserve(text.size());
  for (char c : text) word.steps.push_back(step_from_char(c));
  return word;
}

StepWord StepWord::lnrn(int n) {
  StepWord word;
  word.steps.assign(n, Step::Left);
  word.steps.insert(word.steps.end(), n, Step::Right);
  return word;
}

std::string StepWord::str() const {
  std::string text;
  text.reserve(steps.size());
  for (Step s : steps) text.push_back(to_char(s));
  return text;
}

bool StepWord::balanced() const {
  const auto lefts = std::count(steps.begin(), steps.end(), Step::Left);
  return 2 * lefts == static_cast<long>(steps.size());
}

WalkHistory WalkHistory::starting_at_origin(int p) {
  WalkHistory history;
  history.p = p;
  history.initial_positions = default_sites(p);
  return history;
}

StepWord WalkHistory::word() const {
  StepWord word;
  word.steps.reserve(moves.size());
  for (const auto& [walker, dir] : moves) word.steps.push_back(dir);
  return word;
}

int SignedDiagram::box_count() const {
  int total = 0;
  for (const auto& column : columns)
    total += static_cast<int>(column.above.size() + column.below.size());
  return total;
}

void validate(const StepWord& word) {
  if (!word.balanced())
    throw validation_error("step word \"" + word.str() +
                           "\" is not balanced");
}

void validate(const WalkHistory& history) {
  if (history.p < 1) throw validation_error("walk needs at least one walker");
  if (static_cast<int>(history.initial_positions.size()) != history.p)
    throw validation_error("initial positions count differs from p");
  for (int k = 1; k < history.p; ++k)
    if (history.initial_positions[k] <= history.initial_positions[k - 1])
      throw validation_error("initial positions must be strictly increasing");
  for (const auto& [walker, dir] : history.moves)
    if (walker < 1 || walker > history.p)
      throw validation_error("move references walker " +
                             std::to_string(walker));
  if (auto violation =
          exclusion_violation(history.initial_positions, history.moves))
    throw validation_error("walk violates exclusion: " + *violation);
}

void validate(const ModelParams& params) {
  if (params.w_left < 0 || params.w_right < 0 ||
      std::abs(params.w_left + params.w_right - 1.0) > 1e-12)
    throw validation_error("step probabilities must be >= 0 and sum to 1");
}

bool is_closed(const WalkHistory& history) {
  std::vector<int> net(history.p, 0);
  for (const auto& [walker, dir] : history.moves)
    net[walker - 1] += dir == Step::Left ? -1 : 1;
  return std::all_of(net.begin(), net.end(), [](int d) { return d == 0; });
}

StepWord word_of(const SignedDiagram& diagram) {
  const auto map = box_locations(diagram);
  StepWord word;
  word.steps.reserve(map.size() - 1);
  for (std::size_t t = 1; t < map.size(); ++t)
    word.steps.push_back(map[t].above ? Step::Left : Step::Right);
  return word;
}

void require_admissible(const SignedDiagram& diagram) {
  const auto map = box_locations(diagram);
  if (auto violation =
          exclusion_violation(default_sites(diagram.p()), moves_of(map))) {
    // Walker k is the walker of column k, so the message names the columns
    // whose ordering condition fails.
    throw validation_error("inadmissible diagram: " + *violation);
  }
}

bool is_admissible(const SignedDiagram& diagram) {
  try {
    require_admissible(diagram);
    return true;
  } catch (const validation_error&) {
    return false;
  }
}

BigInt enumerate_walks(int p, const StepWord& word, const Caps& caps,
                       const std::function<void(const WalkHistory&)>& visit) {
  if (p < 1) throw validation_error("enumerate_walks requires p >= 1");
  validate(word);
  const int steps = word.size();
  if (!caps.unlimited && steps > caps.walk_max_steps)
    throw resource_limit_error("enumerate_walks: word length " +
                               std::to_string(steps) + " exceeds cap " +
                               std::to_string(caps.walk_max_steps));

  // Directions still to come strictly after index t.
  std::vector<int> left_after(steps + 1, 0), right_after(steps + 1, 0);
  for (int t = steps - 1; t >= 0; --t) {
    left_after[t] = left_after[t + 1] + (word.steps[t] == Step::Left ? 1 : 0);
    right_after[t] =
        right_after[t + 1] + (word.steps[t] == Step::Right ? 1 : 0);
  }

  std::vector<int> pos = default_sites(p);
  std::vector<std::pair<int, Step>> chosen;
  chosen.reserve(steps);
  BigInt count = 0;
  // owed_left: net L moves required to return the walkers right of their
  // start; owed_right symmetric. Both must stay within the suffix budget.
  int owed_left = 0, owed_right = 0;

  auto dfs = [&](auto&& self, int t) -> void {
    if (t == steps) {
      ++count;  // budgets forced closure
      if (visit) {
        WalkHistory history = WalkHistory::starting_at_origin(p);
        history.moves = chosen;
        visit(history);
      }
      return;
    }
    const Step dir = word.steps[t];
    for (int k = 0; k < p; ++k) {
      const int disp = pos[k] - (k + 1);
      int new_left = owed_left, new_right = owed_right;
      if (dir == Step::Left) {
        if (k > 0 && pos[k] - 1 == pos[k - 1]) continue;  // site occupied
        disp > 0 ? --new_left : ++new_right;
      } else {
        if (k + 1 < p && pos[k] + 1 == pos[k + 1]) continue;
        disp < 0 ? --new_right : ++new_left;
      }
      if (new_left > left_after[t + 1] || new_right > right_after[t + 1])
        continue;  // cannot be closed any more
      pos[k] += dir == Step::Left ? -1 : 1;
      chosen.emplace_back(k + 1, dir);
      std::swap(owed_left, new_left);
      std::swap(owed_right, new_right);
      self(self, t + 1);
      std::swap(owed_left, new_left);
      std::swap(owed_right, new_right);
      chosen.pop_back();
      pos[k] -= dir == Step::Left ? -1 : 1;
    }
  };
  dfs(dfs, 0);
  return count;
}

SignedDiagram walk_to_diagram(const WalkHistory& history) {
  validate(history);
  if (!is_closed(history))
    throw validation_error("walk_to_diagram requires a closed history");
  for (int k = 0; k < history.p; ++k)
    if (history.initial_positions[k] != k + 1)
      throw validation_error("diagrams are defined for walks starting at 1..p");
  SignedDiagram diagram;
  diagram.columns.resize(history.p);
  for (std::size_t t = 0; t < history.moves.size(); ++t) {
    const auto& [walker, dir] = history.moves[t];
    auto& column = diagram.columns[walker - 1];
    (dir == Step::Left ? column.above : column.below)
        .push_back(static_cast<int>(t) + 1);
  }
  return diagram;
}

WalkHistory diagram_to_walk(const SignedDiagram& diagram) {
  const auto map = box_locations(diagram);
  WalkHistory history = WalkHistory::starting_at_origin(diagram.p());
  history.moves = moves_of(map);
  if (auto violation =
          exclusion_violation(history.initial_positions, history.moves))
    throw validation_error("inadmissible diagram: " + *violation);
  return history;
}

TableauPair diagram_to_tableau_pair(const SignedDiagram& diagram) {
  require_admissible(diagram);
  const int boxes = diagram.box_count();
  const int n = boxes / 2;
  if (word_of(diagram) != StepWord::lnrn(n))
    throw validation_error(
        "tableau correspondence requires the step word L^n R^n");

  TableauPair pair;
  for (const auto& column : diagram.columns) {
    if (column.above.empty()) break;
    // Row k of P is column k read away from the axis.
    pair.p.rows.push_back(column.above);
    // Row k of Q is column k below the axis, relabelled t -> 2n+1-t, which
    // reverses the reading order. This is the diagram of the time-reversed
    // walk, so it is again standard.
    std::vector<int> row(column.below.size());
    for (std::size_t r = 0; r < column.below.size(); ++r)
      row[column.below.size() - 1 - r] = boxes + 1 - column.below[r];
    pair.q.rows.push_back(std::move(row));
  }
  validate(pair);
  return pair;
}

SignedDiagram tableau_pair_to_diagram(const TableauPair& pair, int p) {
  validate(pair);
  if (static_cast<int>(pair.p.rows.size()) > p)
    throw validation_error("tableau has more rows than walkers");
  const int boxes = 2 * pair.p.size();
  SignedDiagram diagram;
  diagram.columns.resize(p);
  for (std::size_t k = 0; k < pair.p.rows.size(); ++k) {
    diagram.columns[k].above = pair.p.rows[k];
    const auto& qrow = pair.q.rows[k];
    std::vector<int> below(qrow.size());
    for (std::size_t r = 0; r < qrow.size(); ++r)
      below[r] = boxes + 1 - qrow[qrow.size() - 1 - r];
    diagram.columns[k].below = std::move(below);
  }
  require_admissible(diagram);
  return diagram;
}

DiagramWord apply_transposition(const SignedDiagram& diagram,
                                const StepWord& word, int i) {
  validate(word);
  if (word_of(diagram) != word)
    throw validation_error("diagram does not realize the given word");
  require_admissible(diagram);
  const int boxes = diagram.box_count();
  if (i < 1 || i >= boxes)
    throw validation_error("transposition index " + std::to_string(i) +
                           " outside 1.." + std::to_string(boxes - 1));
  if (word.steps[i - 1] == word.steps[i]) return {diagram, word};

  StepWord swapped = word;
  std::swap(swapped.steps[i - 1], swapped.steps[i]);

  auto map = box_locations(diagram);
  const BoxLocation at_i = map[i];
  const BoxLocation at_next = map[i + 1];
  map[i] = at_next;
  map[i + 1] = at_i;

  const int p = diagram.p();
  if (at_i.column != at_next.column) {
    // Distinct walkers swap their move times; admissibility carries over.
    SignedDiagram result = diagram_from_locations(p, map);
    require_admissible(result);
    return {result, swapped};
  }

  // Both boxes belong to one walker, which now makes two opposite moves in
  // a row. Box i above the axis means an L-then-R excursion whose blocker
  // can only be the next walker to the left, so the pair migrates leftward;
  // below the axis the excursion points right and migrates rightward. The
  // vacated walker simply stands still for those two ticks.
  const int start = at_i.column;
  const int direction = map[i].above ? -1 : 1;
  for (int column = start; column >= 0 && column < p; column += direction) {
    map[i].column = column;
    map[i + 1].column = column;
    SignedDiagram candidate = diagram_from_locations(p, map);
    if (is_admissible(candidate)) return {candidate, swapped};
  }
  throw std::logic_error(
      "no admissible placement while transposing boxes " + std::to_string(i) +
      "," + std::to_string(i + 1) + " of word " + word.str() + " on" +
      dump(diagram));
}

std::vector<int> word_reduction(const StepWord& word) {
  validate(word);
  std::vector<Step> steps = word.steps;
  std::vector<int> indices;
  for (;;) {
    int swap_at = -1;
    for (std::size_t t = 0; t + 1 < steps.size(); ++t) {
      if (steps[t] == Step::Right && steps[t + 1] == Step::Left) {
        swap_at = static_cast<int>(t);
        break;
      }
    }
    if (swap_at < 0) break;
    std::swap(steps[swap_at], steps[swap_at + 1]);
    indices.push_back(swap_at + 1);  // 1-based transposition index
  }
  return indices;
}

std::optional<int> resolve_move(const std::vector<int>& positions, int index,
                                Step drawn) {
  const std::set<int> occupied(positions.begin(), positions.end());
  const int from = positions[index];
  const int preferred = from + (drawn == Step::Left ? -1 : 1);
  if (!occupied.count(preferred)) return preferred;
  const int fallback = 2 * from - preferred;
  if (!occupied.count(fallback)) return fallback;
  return std::nullopt;
}

void stochastic_step(std::vector<int>& positions, const ModelParams& params,
                     std::mt19937_64& gen) {
  validate(params);
  if (positions.empty())
    throw validation_error("stochastic_step requires at least one walker");
  if (std::set<int>(positions.begin(), positions.end()).size() !=
      positions.size())
    throw validation_error("walker positions must be distinct");
  for (;;) {
    const auto k =
        static_cast<int>(rng::uniform_index(gen, positions.size()));
    const Step drawn =
        rng::canonical(gen) < params.w_left ? Step::Left : Step::Right;
    if (auto to = resolve_move(positions, k, drawn)) {
      positions[k] = *to;
      return;
    }
    // Both neighbours occupied: select another walker. The outermost
    // walkers always have a free side, so this terminates.
  }
}

}  // namespace randturns
