#include "platkit/motion_picture.hpp"

#include <cstdlib>
#include <iomanip>
#include <set>
#include <sstream>

#include "platkit/errors.hpp"

namespace platkit {

MotionPictureDocument motion_picture(const PlatDiagram& d) {
  const int n = d.word.strands();
  const BraidWord id = BraidWord::identity(n);
  MotionPictureDocument doc{"plat", {}};
  doc.stills.push_back({0.0, "caps", "bottom wickets", id, n / 2, {}});
  doc.stills.push_back({0.5, "braid", "plat braid", d.word, 0, {}});
  doc.stills.push_back({1.0, "cups", "top wickets", id, n / 2, {}});
  return doc;
}

MotionPictureDocument motion_picture(const BraidedSurfacePlan& plan) {
  const int n = plan.degree;
  const BraidWord id = BraidWord::identity(n);
  const auto t = [](int i) { return i / 7.0; };
  const auto mid = [](int i) { return (i + 0.5) / 7.0; };
  MotionPictureDocument doc{"plan", {}};
  auto& s = doc.stills;
  s.push_back({t(0), "caps", "minimal disks", id, n / 2, {}});
  s.push_back({t(1), "braid", "alpha1*", plan.alpha1_star, 0, {}});
  s.push_back({mid(1), "bands", "B1-", plan.strips[1].band_level, 0, plan.strips[1].band_markers});
  s.push_back({t(2), "braid", "alpha1", plan.alpha1, 0, {}});
  s.push_back({t(3), "braid", "beta1", plan.beta1, 0, {}});
  s.push_back({mid(3), "bands", "B1", plan.strips[3].band_level, 0, plan.strips[3].band_markers});
  s.push_back({t(4), "braid", "beta2", plan.beta2, 0, {}});
  s.push_back({t(5), "braid", "alpha2", plan.alpha2, 0, {}});
  s.push_back({mid(5), "bands", "B1+", plan.strips[5].band_level, 0, plan.strips[5].band_markers});
  s.push_back({t(6), "braid", "alpha2*", plan.alpha2_star, 0, {}});
  s.push_back({t(7), "cups", "maximal disks", id, n / 2, {}});
  return doc;
}

MotionPictureDocument motion_picture(const BraidSystem& sys) {
  const int n = sys.degree();
  const BraidWord id = BraidWord::identity(n);
  const int r = sys.size();
  const double step = 1.0 / (2.0 * r + 2.0);
  MotionPictureDocument doc{"system", {}};
  doc.stills.push_back({0.0, "caps", "wickets", id, n / 2, {}});
  BraidWord running = id;
  doc.stills.push_back({step, "braid", "section 0", running, 0, {}});
  for (int k = 0; k < r; ++k) {
    const BraidWord entry = expand_entry(sys[k]);
    std::optional<MonodromyEntry> me;
    if (const auto* direct = std::get_if<MonodromyEntry>(&sys[k])) {
      me = *direct;
    } else {
      me = as_monodromy_entry(entry);
    }
    const double band_level = step * (2 * k + 2);
    if (me) {
      // running * u * u^-1 with a band between u and u^-1.
      const BraidWord before = running * me->conjugator * me->conjugator.inverse();
      const std::size_t point = running.length() + me->conjugator.length();
      const auto times = marker_times({point}, before.length());
      doc.stills.push_back({band_level, "bands", "branch " + std::to_string(k + 1), before, 0,
                            {Band{me->index, me->sign, times[0]}}});
    }
    running = running * entry;
    doc.stills.push_back({band_level + step, "braid", "section " + std::to_string(k + 1), running, 0, {}});
  }
  doc.stills.push_back({1.0, "cups", "wickets", id, n / 2, {}});
  return doc;
}

void validate(const MotionPictureDocument& doc) {
  for (std::size_t i = 0; i < doc.stills.size(); ++i) {
    const Still& s = doc.stills[i];
    if (i > 0 && s.level < doc.stills[i - 1].level) throw DomainError("stills must be ordered by level");
    if (i > 0 && s.word.strands() != doc.stills[0].word.strands()) {
      throw DomainError("stills must share a strand count");
    }
    static const std::set<std::string> kinds{"caps", "braid", "bands", "cups"};
    if (!kinds.contains(s.kind)) throw DomainError("unknown still kind '" + s.kind + "'");
    for (const auto& b : s.bands) {
      if (b.slot < 1 || b.slot >= s.word.strands()) throw DomainError("band marker slot out of range");
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kGap = 24.0;     // between strands
constexpr double kRow = 22.0;     // per crossing row
constexpr double kMargin = 20.0;
constexpr double kLabel = 18.0;

struct Canvas {
  std::ostringstream body;

  void line(double x1, double y1, double x2, double y2, const char* stroke = "#222") {
    body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
  }
  void arc(double x1, double x2, double y, bool opens_up) {
    const double r = (x2 - x1) / 2;
    body << "<path d=\"M " << x1 << ' ' << y << " A " << r << ' ' << r << " 0 0 " << (opens_up ? 0 : 1)
         << ' ' << x2 << ' ' << y << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"2\"/>\n";
  }
  void text(double x, double y, const std::string& s, int size = 11) {
    body << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"" << size
         << "\">" << s << "</text>\n";
  }
  void rect(double x, double y, double w, double h, const std::string& label) {
    body << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
         << "\" fill=\"#f4c542\" stroke=\"#806000\" stroke-width=\"1\"/>\n";
    text(x + w / 2 - 3, y + h - 4, label, 10);
  }
};

// Draws a braid (bottom to top) with band rows occupying the inserted slots.
void draw_word(Canvas& c, double x0, double y_bottom, const BraidWord& word, const std::vector<Band>& bands) {
  const int n = word.strands();
  const Surgery surgery = surger(word, bands);
  std::set<std::size_t> band_rows(surgery.inserted.begin(), surgery.inserted.end());
  const auto& letters = surgery.word.letters();
  auto x = [&](int strand) { return x0 + (strand - 1) * kGap; };
  for (std::size_t row = 0; row < letters.size(); ++row) {
    const double y1 = y_bottom - row * kRow;
    const double y2 = y1 - kRow;
    const int g = letters[row];
    const int i = std::abs(g);
    const bool is_band = band_rows.contains(row);
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      c.line(x(j), y1, x(j), y2);
    }
    if (is_band) {
      c.line(x(i), y1, x(i), y2);
      c.line(x(i + 1), y1, x(i + 1), y2);
      c.rect(x(i) + 2, y1 - kRow * 0.75, kGap - 4, kRow * 0.5, g > 0 ? "+" : "-");
      continue;
    }
    // sigma_i: strand i passes over strand i+1.
    const double over_from = g > 0 ? x(i) : x(i + 1);
    const double over_to = g > 0 ? x(i + 1) : x(i);
    c.line(over_from, y1, over_to, y2);
    const double under_from = over_to;
    const double under_to = over_from;
    const double mx = (under_from + under_to) / 2, my = (y1 + y2) / 2;
    const double dx = (under_to - under_from) * 0.2, dy = (y2 - y1) * 0.2;
    c.line(under_from, y1, mx - dx, my - dy);
    c.line(mx + dx, my + dy, under_to, y2);
  }
  if (letters.empty()) {
    for (int j = 1; j <= n; ++j) c.line(x(j), y_bottom, x(j), y_bottom - kRow);
  }
}

}  // namespace

std::string render_svg(const MotionPictureDocument& doc) {
  validate(doc);
  std::size_t tallest = 1;
  int strands = 2;
  for (const auto& s : doc.stills) {
    tallest = std::max(tallest, s.word.length() + s.bands.size());
    strands = s.word.strands();
  }
  const double panel_w = (strands - 1) * kGap + 2 * kMargin;
  const double panel_h = static_cast<double>(tallest) * kRow + 2 * kMargin + kLabel;
  const double width = panel_w * static_cast<double>(std::max<std::size_t>(doc.stills.size(), 1));

  Canvas c;
  for (std::size_t k = 0; k < doc.stills.size(); ++k) {
    const Still& s = doc.stills[k];
    const double x0 = k * panel_w + kMargin;
    const double y_bottom = panel_h - kMargin - kLabel;
    std::ostringstream caption;
    caption << std::setprecision(3) << "t=" << s.level << ' ' << s.label;
    c.text(x0 - kMargin + 4, panel_h - 6, caption.str());
    if (s.kind == "caps" || s.kind == "cups") {
      const bool caps = s.kind == "caps";
      const double y = caps ? y_bottom - kRow : y_bottom - 2 * kRow;
      for (int p = 0; p < s.pairs; ++p) {
        const double xa = x0 + (2 * p) * kGap, xb = xa + kGap;
        c.arc(xa, xb, y, caps);
      }
      continue;
    }
    draw_word(c, x0, y_bottom, s.word, s.bands);
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << panel_h
      << "\" viewBox=\"0 0 " << width << ' ' << panel_h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << c.body.str() << "</svg>\n";
  return out.str();
}

}  // namespace platkit
