#include <algorithm>
#include <unordered_map>

#include "platkit/braided_surface.hpp"
#include "platkit/errors.hpp"

namespace platkit {

std::string to_string(HurwitzResult::Verdict v) {
  switch (v) {
    case HurwitzResult::Verdict::Equivalent:
      return "Equivalent";
    case HurwitzResult::Verdict::NotEquivalent:
      return "NotEquivalent";
    case HurwitzResult::Verdict::Unknown:
      break;
  }
  return "Unknown";
}

namespace {

struct EntryImage {
  ArtinImage image;
  ArtinImage inverse;
};

using State = std::vector<EntryImage>;

struct StateKey {
  std::vector<ArtinImage> images;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (const auto& img : k.images) h = (h ^ img.hash()) * 0x100000001b3ull;
    return h;
  }
};

StateKey key_of(const State& s) {
  StateKey k;
  k.images.reserve(s.size());
  for (const auto& e : s) k.images.push_back(e.image);
  return k;
}

State state_of(const BraidSystem& s) {
  State out;
  for (const auto& e : s.entries()) {
    const BraidWord w = expand_entry(e).freely_reduced();
    out.push_back({ArtinImage::of(w), ArtinImage::of(w.inverse())});
  }
  return out;
}

State apply_move(const State& s, const SlideMove& mv) {
  State out = s;
  const EntryImage& a = s[mv.j - 1];
  const EntryImage& b = s[mv.j];
  if (mv.direction == SlideDirection::Forward) {
    out[mv.j - 1] = {compose(compose(a.image, b.image), a.inverse),
                     compose(compose(a.image, b.inverse), a.inverse)};
    out[mv.j] = a;
  } else {
    out[mv.j - 1] = b;
    out[mv.j] = {compose(compose(b.inverse, a.image), b.image),
                 compose(compose(b.inverse, a.inverse), b.image)};
  }
  return out;
}

std::vector<int> sorted_exponent_sums(const BraidSystem& s) {
  std::vector<int> out;
  for (const auto& e : s.entries()) out.push_back(exponent_sum(expand_entry(e)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sorted_cycle_types(const BraidSystem& s) {
  std::vector<std::vector<int>> out;
  for (const auto& e : s.entries()) out.push_back(permutation_of(expand_entry(e)).cycle_type());
  std::sort(out.begin(), out.end());
  return out;
}

struct Node {
  State state;
  int parent = -1;
  SlideMove move;
};

}  // namespace

HurwitzResult hurwitz_search(const BraidSystem& s1, const BraidSystem& s2, std::size_t budget) {
  using Verdict = HurwitzResult::Verdict;
  HurwitzResult result;
  auto reject = [&](std::string reason) {
    result.verdict = Verdict::NotEquivalent;
    result.reason = std::move(reason);
    return result;
  };
  if (s1.degree() != s2.degree()) return reject("degree mismatch");
  if (s1.size() != s2.size()) return reject("entry count mismatch");
  try {
    if (!braids_equal(boundary_braid(s1), boundary_braid(s2))) return reject("boundary braids differ");
  } catch (const ResourceError& e) {
    result.reason = e.what();
    return result;
  }
  if (sorted_exponent_sums(s1) != sorted_exponent_sums(s2)) return reject("exponent-sum multisets differ");
  if (sorted_cycle_types(s1) != sorted_cycle_types(s2)) return reject("cycle-type multisets differ");

  if (budget == 0) {
    result.reason = "budget exhausted";
    return result;
  }

  try {
    const StateKey target = key_of(state_of(s2));
    std::vector<Node> nodes;
    std::unordered_map<StateKey, int, StateKeyHash> seen;
    nodes.push_back({state_of(s1), -1, {}});
    seen.emplace(key_of(nodes[0].state), 0);

    auto found = [&](int index) {
      for (int i = index; nodes[i].parent >= 0; i = nodes[i].parent) result.moves.push_back(nodes[i].move);
      std::reverse(result.moves.begin(), result.moves.end());
      result.verdict = Verdict::Equivalent;
      result.nodes = nodes.size();
      return result;
    };
    if (seen.begin()->first == target) return found(0);

    std::vector<SlideMove> moves;
    for (int j = 1; j < s1.size(); ++j) {
      moves.push_back({j, SlideDirection::Forward});
      moves.push_back({j, SlideDirection::Inverse});
    }

    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      const std::int64_t width = static_cast<std::int64_t>(moves.size());
      const std::int64_t jobs = static_cast<std::int64_t>(frontier.size()) * width;
      std::vector<State> children(jobs);
      bool overflow = false;
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t job = 0; job < jobs; ++job) {
        try {
          children[job] = apply_move(nodes[frontier[job / width]].state, moves[job % width]);
        } catch (const ResourceError&) {
#pragma omp atomic write
          overflow = true;
        }
      }
      if (overflow) throw ResourceError("Artin image limit reached during orbit search");

      std::vector<int> next;
      for (std::int64_t job = 0; job < jobs; ++job) {
        StateKey key = key_of(children[job]);
        if (seen.contains(key)) continue;
        if (nodes.size() >= budget) {
          result.verdict = Verdict::Unknown;
          result.reason = "budget exhausted";
          result.nodes = nodes.size();
          return result;
        }
        const int index = static_cast<int>(nodes.size());
        const bool hit = key == target;
        seen.emplace(std::move(key), index);
        nodes.push_back({std::move(children[job]), frontier[job / width], moves[job % width]});
        if (hit) return found(index);
        next.push_back(index);
      }
      frontier = std::move(next);
    }
    result.nodes = nodes.size();
    return reject("slide orbit enumerated (" + std::to_string(nodes.size()) + " systems) without a match");
  } catch (const ResourceError& e) {
    result.verdict = Verdict::Unknown;
    result.reason = e.what();
    return result;
  }
}

}  // namespace platkit
