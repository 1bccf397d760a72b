#include "platkit/io.hpp"

#include <fstream>
#include <sstream>

#include "platkit/errors.hpp"

namespace platkit::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

json band_json(const Band& b) { return {{"slot", b.slot}, {"sign", b.sign}, {"time", b.time}}; }

double parse_time(const json& t) {
  if (t.is_number()) return t.get<double>();
  if (t.is_string()) {
    const std::string s = t.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return std::stod(s);
      const double num = std::stod(s.substr(0, slash));
      const double den = std::stod(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in band time");
      return num / den;
    } catch (const std::logic_error&) {
      throw ParseError("bad band time '" + s + "'");
    }
  }
  throw ParseError("band time must be a number or a 'p/q' string");
}

Band band_from_json(const json& j) {
  if (!j.contains("time")) throw ParseError("missing field 'time'");
  return {field<int>(j, "slot"), field<int>(j, "sign"), parse_time(j.at("time"))};
}

}  // namespace

BraidSystem braid_system_from_json(const json& j) {
  const int degree = field<int>(j, "degree");
  if (degree < 1) throw ParseError("degree must be positive");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw ParseError("missing array 'entries'");
  std::vector<SystemEntry> entries;
  for (const auto& e : j.at("entries")) {
    if (e.is_string()) {
      entries.emplace_back(parse_braid(e.get<std::string>(), degree));
    } else if (e.is_object()) {
      MonodromyEntry me{parse_braid(field<std::string>(e, "conjugator"), degree), field<int>(e, "index"),
                        field<int>(e, "sign")};
      entries.emplace_back(std::move(me));
    } else {
      throw ParseError("entry must be a braid-word string or {conjugator, index, sign}");
    }
  }
  try {
    return BraidSystem(degree, std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const BraidSystem& s) {
  json entries = json::array();
  for (const auto& e : s.entries()) {
    if (const auto* me = std::get_if<MonodromyEntry>(&e)) {
      entries.push_back({{"conjugator", me->conjugator.to_string()}, {"index", me->index}, {"sign", me->sign}});
    } else {
      entries.push_back(std::get<BraidWord>(e).to_string());
    }
  }
  return {{"degree", s.degree()}, {"entries", entries}};
}

BandedBraid banded_from_json(const json& j) {
  const int strands = field<int>(j, "strands");
  const BraidWord base = parse_braid(j.contains("base") ? field<std::string>(j, "base") : "", strands);
  std::vector<Band> bands;
  if (j.contains("bands")) {
    if (!j.at("bands").is_array()) throw ParseError("'bands' must be an array");
    for (const auto& b : j.at("bands")) bands.push_back(band_from_json(b));
  }
  try {
    return BandedBraid(base, std::move(bands));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const BandedBraid& bb) {
  json bands = json::array();
  for (const auto& b : bb.bands()) bands.push_back(band_json(b));
  return {{"strands", bb.base().strands()}, {"base", bb.base().to_string()}, {"bands", bands}};
}

Certificates certificates_from_json(const json& j) {
  Certificates c;
  c.lambda = parse_lambda(field<std::string>(j, "lambda"));
  c.lambda1 = parse_lambda(field<std::string>(j, "lambda1"));
  c.lambda2 = parse_lambda(field<std::string>(j, "lambda2"));
  const int m = c.lambda.total();
  auto expr = [&](const char* key) {
    return parse_expression_tokens(j.contains(key) ? field<std::string>(j, key) : "", m);
  };
  c.gamma = expr("gamma");
  c.gamma_prime = expr("gamma_prime");
  c.delta = expr("delta");
  c.delta_prime = expr("delta_prime");
  return c;
}

json to_json(const Certificates& c) {
  return {{"lambda", c.lambda.to_string()},
          {"lambda1", c.lambda1.to_string()},
          {"lambda2", c.lambda2.to_string()},
          {"gamma", format_expression_tokens(c.gamma)},
          {"gamma_prime", format_expression_tokens(c.gamma_prime)},
          {"delta", format_expression_tokens(c.delta)},
          {"delta_prime", format_expression_tokens(c.delta_prime)}};
}

namespace {

json entry_json(const MonodromyEntry& me) {
  return {{"conjugator", me.conjugator.to_string()}, {"index", me.index}, {"sign", me.sign}};
}

}  // namespace

json to_json(const BraidedSurfacePlan& plan) {
  json strips = json::array();
  for (const auto& s : plan.strips) {
    json markers = json::array();
    for (const auto& b : s.band_markers) markers.push_back(band_json(b));
    strips.push_back({{"name", s.name},
                      {"lower", s.lower.to_string()},
                      {"upper", s.upper.to_string()},
                      {"left_up", s.left_up.to_string()},
                      {"right_up", s.right_up.to_string()},
                      {"band_level", s.band_level.to_string()},
                      {"bands", markers}});
  }
  auto entries = [](const std::vector<MonodromyEntry>& list) {
    json out = json::array();
    for (const auto& e : list) out.push_back(entry_json(e));
    return out;
  };
  return {{"degree", plan.degree},
          {"certificates", to_json(plan.certificates)},
          {"sections",
           {{"alpha1_star", plan.alpha1_star.to_string()},
            {"alpha1", plan.alpha1.to_string()},
            {"beta1", plan.beta1.to_string()},
            {"beta2", plan.beta2.to_string()},
            {"alpha2", plan.alpha2.to_string()},
            {"alpha2_star", plan.alpha2_star.to_string()}}},
          {"strips", strips},
          {"band_branches", entries(plan.band_branches)},
          {"lower_stabilization_branches", entries(plan.lower_stabilization_branches)},
          {"upper_stabilization_branches", entries(plan.upper_stabilization_branches)},
          {"braid_system", to_json(plan.system())},
          {"boundary", plan.boundary.to_string()},
          {"boundary_convention", "lower-left corner; left side up, top, right side down, bottom reversed"},
          {"chi", plan.chi}};
}

json to_json(const HurwitzResult& r) {
  json moves = json::array();
  for (const auto& mv : r.moves) {
    moves.push_back({{"j", mv.j}, {"direction", mv.direction == SlideDirection::Forward ? "forward" : "inverse"}});
  }
  return {{"verdict", to_string(r.verdict)}, {"moves", moves}, {"reason", r.reason}, {"nodes", r.nodes}};
}

MotionPictureDocument motion_picture_from_json(const json& j) {
  MotionPictureDocument doc;
  doc.source = field<std::string>(j, "source");
  if (!j.contains("stills") || !j.at("stills").is_array()) throw ParseError("missing array 'stills'");
  for (const auto& s : j.at("stills")) {
    Still st;
    st.level = field<double>(s, "level");
    st.kind = field<std::string>(s, "kind");
    st.label = s.contains("label") ? field<std::string>(s, "label") : "";
    st.word = parse_braid(field<std::string>(s, "word"), field<int>(s, "strands"));
    st.pairs = s.contains("pairs") ? field<int>(s, "pairs") : 0;
    if (s.contains("bands")) {
      for (const auto& b : s.at("bands")) st.bands.push_back(band_from_json(b));
    }
    doc.stills.push_back(std::move(st));
  }
  try {
    validate(doc);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return doc;
}

json to_json(const MotionPictureDocument& doc) {
  json stills = json::array();
  for (const auto& s : doc.stills) {
    json bands = json::array();
    for (const auto& b : s.bands) bands.push_back(band_json(b));
    stills.push_back({{"level", s.level},
                      {"kind", s.kind},
                      {"label", s.label},
                      {"strands", s.word.strands()},
                      {"word", s.word.to_string()},
                      {"pairs", s.pairs},
                      {"bands", bands}});
  }
  return {{"source", doc.source}, {"stills", stills}};
}

BraidSystem braid_system_from_inline(std::string_view entries, int degree) {
  std::vector<SystemEntry> out;
  if (entries.find_first_not_of(" \t") != std::string_view::npos) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t semi = entries.find(';', pos);
      const auto piece = entries.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
      BraidWord w = parse_braid(piece, degree);
      if (auto me = as_monodromy_entry(w)) {
        out.emplace_back(std::move(*me));
      } else {
        out.emplace_back(std::move(w));
      }
      if (semi == std::string_view::npos) break;
      pos = semi + 1;
    }
  }
  return BraidSystem(degree, std::move(out));
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace platkit::io
