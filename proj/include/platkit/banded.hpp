#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "platkit/braid.hpp"
#include "platkit/braided_surface.hpp"
#include "platkit/hilden.hpp"
#include "platkit/plat.hpp"
#include "platkit/stabilization.hpp"

namespace platkit {

/// A half-twisted band joining strands `slot` and `slot+1` at height `time`.
struct Band {
  int slot = 1;
  int sign = 1;
  double time = 0.5;

  friend bool operator==(const Band&, const Band&) = default;
};

/// A plat-closed base braid with bands in normal banded-braid form.
class BandedBraid {
 public:
  BandedBraid() = default;
  /// Validates slots, signs and times; stores the bands sorted by time.
  BandedBraid(BraidWord base, std::vector<Band> bands);

  const BraidWord& base() const { return base_; }
  const std::vector<Band>& bands() const { return bands_; }

 private:
  BraidWord base_{2};
  std::vector<Band> bands_;
};

/// Result of inserting band crossings into a word.
struct Surgery {
  BraidWord word;
  std::vector<std::size_t> inserted;  ///< letter index of each band, in time order
};

/// Inserts sigma_slot^sign for each band.  A band at time t goes after every
/// base letter whose level (k + 1/2) / length lies strictly below t.
Surgery surger(const BraidWord& base, const std::vector<Band>& bands);

BraidWord surgery_result(const BandedBraid& bb);

/// Heights in (0,1) that make `surger` insert at the given sorted points of
/// a word of the given length; ties are spread evenly.
std::vector<double> marker_times(const std::vector<std::size_t>& points, std::size_t length);

struct AdmissibilityReport {
  int c1 = 0;  ///< components of the plat closure of the base
  int c2 = 0;  ///< components after surgery
  TrivialityVerdict base_verdict = TrivialityVerdict::NotTrivial;
  TrivialityVerdict surgery_verdict = TrivialityVerdict::NotTrivial;
  /// Both closures are consistent with trivial links.  A necessary
  /// condition only, since the bracket does not detect every knot.
  bool admissible = false;
};

AdmissibilityReport admissibility_report(const BandedBraid& bb, const BracketOptions& options = {});

/// c1 + c2 - (number of bands): minima disks, maxima disks, one saddle per band.
int realizing_euler_char(const BandedBraid& bb, const AdmissibilityReport* report = nullptr);

struct Certificates {
  Lambda lambda;   ///< over m0 = base strands / 2
  Lambda lambda1;  ///< over c1
  Lambda lambda2;  ///< over c2
  HildenExpression gamma, gamma_prime, delta, delta_prime;  ///< in K_2|lambda|

  friend bool operator==(const Certificates&, const Certificates&) = default;
};

/// One horizontal strip E_i of the base square, with its lower and upper
/// sections, its left and right side braids read upward, and the band
/// markers on its middle level (strips 1, 3 and 5).
struct Strip {
  std::string name;
  BraidWord lower;
  BraidWord upper;
  BraidWord left_up;
  BraidWord right_up;
  BraidWord band_level;          ///< section carrying the band markers
  std::vector<Band> band_markers;
};

/// Combinatorial description of the braided surface whose plat closure
/// realizes the banded link.
struct BraidedSurfacePlan {
  int degree = 2;
  Certificates certificates;
  BraidWord beta1, beta2, alpha1, alpha2, alpha1_star, alpha2_star;
  std::array<Strip, 7> strips;
  /// One entry per source band, sign = band sign, in time order.
  std::vector<MonodromyEntry> band_branches;
  /// Branch points that replace the stabilisation bands below and above.
  std::vector<MonodromyEntry> lower_stabilization_branches;
  std::vector<MonodromyEntry> upper_stabilization_branches;
  /// Boundary read along the positively oriented boundary of the square,
  /// starting at the lower-left corner: left side up, top, right side down,
  /// bottom reversed.  Equal to gamma^-1 delta delta' gamma'^-1.
  BraidWord boundary;
  int chi = 0;

  int branch_count() const;
  /// All branch points in Hurwitz arc order (top strip first); the product
  /// of the entries equals `boundary`.
  BraidSystem system() const;
};

/// Builds the plan and checks every certificate.  Throws DomainError on
/// size mismatch or inadmissibility, VerificationError when a certificate
/// does not hold.
BraidedSurfacePlan compile_surface(const BandedBraid& bb, const Certificates& certs,
                                   const BracketOptions& options = {});

struct CertificateBounds {
  int max_total = 4;        ///< upper bound on |lambda|
  int max_hilden_len = 4;   ///< factors for gamma' and delta'
  int max_left_len = 2;     ///< factors for gamma and delta
};

/// Bounded search; nullopt means the budget ran out (or the banded braid is
/// not admissible), never that certificates do not exist.
std::optional<Certificates> search_certificates(const BandedBraid& bb, const CertificateBounds& bounds,
                                                const BracketOptions& options = {});

}  // namespace platkit
