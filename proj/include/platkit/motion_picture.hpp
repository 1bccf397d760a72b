#pragma once

#include <string>
#include <vector>

#include "platkit/banded.hpp"
#include "platkit/braided_surface.hpp"
#include "platkit/plat.hpp"

namespace platkit {

/// One level of a motion picture.  Kinds: "caps" (minima, `pairs` wickets
/// opening upward), "braid", "bands" (the word with band markers attached),
/// "cups" (maxima).
struct Still {
  double level = 0.0;
  std::string kind;
  std::string label;
  BraidWord word;
  int pairs = 0;
  std::vector<Band> bands;

  friend bool operator==(const Still&, const Still&) = default;
};

struct MotionPictureDocument {
  std::string source;
  std::vector<Still> stills;  ///< ordered by level

  friend bool operator==(const MotionPictureDocument&, const MotionPictureDocument&) = default;
};

MotionPictureDocument motion_picture(const PlatDiagram& d);
/// Normal plat form of a compiled plan: strip boundaries and band levels.
MotionPictureDocument motion_picture(const BraidedSurfacePlan& plan);
/// Sections of the plat closure of a braid system: each monodromy entry
/// u sigma^e u^-1 appears as a band on the running product.
MotionPictureDocument motion_picture(const BraidSystem& s);

/// Throws DomainError when levels decrease or strand counts differ.
void validate(const MotionPictureDocument& doc);

/// Stills side by side; strands as polylines with over/under gaps, bands as
/// labelled rectangles.
std::string render_svg(const MotionPictureDocument& doc);

}  // namespace platkit
