#include "platkit/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "platkit/banded.hpp"
#include "platkit/errors.hpp"
#include "platkit/io.hpp"
#include "platkit/motion_picture.hpp"

namespace platkit::cli {

namespace {

using io::json;

constexpr std::size_t kDefaultHurwitzBudget = 200000;

std::size_t default_hurwitz_budget() {
  if (const char* env = std::getenv("PLATKIT_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
    throw ParseError(std::string("PLATKIT_BUDGET must be a non-negative integer, got '") + env + "'");
  }
  return kDefaultHurwitzBudget;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string entry_text(const SystemEntry& e) {
  if (const auto* me = std::get_if<MonodromyEntry>(&e)) {
    return "conjugator=\"" + me->conjugator.to_string() + "\" index=" + std::to_string(me->index) +
           " sign=" + std::to_string(me->sign);
  }
  return "word=\"" + std::get<BraidWord>(e).to_string() + "\"";
}

void print_system(std::ostream& out, const BraidSystem& s) {
  out << "degree=" << s.degree() << "\n";
  out << "r=" << s.size() << "\n";
  for (int i = 0; i < s.size(); ++i) out << "entry." << i + 1 << "=" << entry_text(s[i]) << "\n";
}

/// Shared input and output flags; subcommands bind the ones they use.
struct Options {
  int strands = 0;
  int degree = 0;
  int budget = -1;
  int max_len = 4;
  int bound = 2;
  bool json = false;
  std::string out_path;

  std::vector<std::string> words;
  std::string file;
  std::string file2;
  std::string entries;
  bool entries_given = false;

  std::string method = "auto";
  std::string expr;
  int l = -1;
  std::string lambda;
  int j = 1;
  std::string direction = "forward";
  std::string certs;
  bool search = false;
  int max_left_len = 2;
  std::string system_file;
  std::string banded_file;
  std::string input_doc;
};

class Runner {
 public:
  Runner(Options& o, std::ostream& out) : o_(o), out_(out) {}

  BraidWord word(std::size_t i = 0) const {
    if (o_.strands < 1) throw ParseError("--strands is required");
    if (i >= o_.words.size()) throw ParseError("missing braid word argument");
    return parse_braid(o_.words[i], o_.strands);
  }

  BracketOptions bracket_options() const {
    BracketOptions opts;
    if (o_.budget >= 0) opts.crossing_budget = o_.budget;
    if (o_.method == "auto") {
      opts.method = BracketMethod::Auto;
    } else if (o_.method == "state-sum") {
      opts.method = BracketMethod::StateSum;
    } else if (o_.method == "transfer") {
      opts.method = BracketMethod::Transfer;
    } else {
      throw ParseError("--method must be auto, state-sum or transfer");
    }
    return opts;
  }

  BraidSystem system_from(const std::string& path) const {
    if (o_.entries_given) {
      if (o_.degree < 1) throw ParseError("--degree is required with --entries");
      return io::braid_system_from_inline(o_.entries, o_.degree);
    }
    if (path.empty()) throw ParseError("expected a braid-system file or --degree/--entries");
    return io::braid_system_from_json(io::parse_json_text(io::read_file(path)));
  }

  BandedBraid banded_from(const std::string& path) const {
    if (path.empty()) throw ParseError("expected a banded-braid file");
    return io::banded_from_json(io::parse_json_text(io::read_file(path)));
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  int parse() {
    const BraidWord w = word();
    if (o_.json) {
      emit({{"strands", w.strands()},
            {"word", w.to_string()},
            {"length", w.length()},
            {"exponent_sum", exponent_sum(w)},
            {"permutation", permutation_of(w).images()},
            {"freely_reduced", w.freely_reduced().to_string()}});
      return kOk;
    }
    out_ << "strands=" << w.strands() << "\n"
         << "word=" << w.to_string() << "\n"
         << "length=" << w.length() << "\n"
         << "exponent_sum=" << exponent_sum(w) << "\n"
         << "permutation=" << join(permutation_of(w).images()) << "\n"
         << "freely_reduced=" << w.freely_reduced().to_string() << "\n";
    return kOk;
  }

  int equal() {
    const bool eq = braids_equal(word(0), word(1));
    if (o_.json) {
      emit({{"equal", eq}});
    } else {
      out_ << "equal=" << bool_text(eq) << "\n";
    }
    return eq ? kOk : kPropertyFailure;
  }

  int plat_components() {
    const int c = component_count(plat_close(word()));
    if (o_.json) {
      emit({{"components", c}});
    } else {
      out_ << c << "\n";
    }
    return kOk;
  }

  int bracket() {
    const PlatDiagram d = plat_close(word());
    const auto opts = bracket_options();
    const LaurentPoly p = kauffman_bracket(d, opts);
    const int c = component_count(d);
    const TrivialityVerdict v = trivial_link_check(d, opts);
    if (o_.json) {
      emit({{"bracket", p.to_string()}, {"components", c}, {"trivial_link_check", to_string(v)}});
    } else {
      out_ << "bracket=" << p.to_string() << "\n"
           << "components=" << c << "\n"
           << "trivial_link_check=" << to_string(v) << "\n";
    }
    return kOk;
  }

  int pd() {
    out_ << export_pd(plat_close(word()));
    return kOk;
  }

  int adequate() {
    const BraidWord w = word();
    if (w.strands() % 2 != 0) throw DomainError("adequacy needs an even number of strands");
    const int m = w.strands() / 2;
    if (!o_.expr.empty()) {
      const HildenExpression e = parse_expression_tokens(o_.expr, m);
      const bool ok = verify_membership(w, e);
      if (o_.json) {
        emit({{"verified", ok}, {"expression", format_expression(e)}});
      } else {
        out_ << "verified=" << bool_text(ok) << "\n";
      }
      return ok ? kOk : kPropertyFailure;
    }
    if (!preserves_pairing(w)) {
      if (o_.json) {
        emit({{"adequate", false}, {"reason", "permutation does not preserve the pairing"}});
      } else {
        out_ << "adequate=false\nreason=permutation does not preserve the pairing\n";
      }
      return kPropertyFailure;
    }
    MembershipSearchStats stats;
    const auto found = search_membership(w, o_.max_len, &stats);
    if (!found) {
      if (o_.json) {
        emit({{"adequate", nullptr}, {"reason", "no expression within --max-len"}, {"nodes", stats.nodes}});
      } else {
        out_ << "adequate=unknown\nreason=no expression within --max-len\nnodes=" << stats.nodes << "\n";
      }
      return kBudgetExhausted;
    }
    if (o_.json) {
      emit({{"adequate", true},
            {"expression", format_expression_tokens(*found)},
            {"m", found->m},
            {"nodes", stats.nodes}});
    } else {
      out_ << "adequate=true\n"
           << "m=" << found->m << "\n"
           << "expression=" << format_expression_tokens(*found) << "\n"
           << "nodes=" << stats.nodes << "\n";
    }
    return kOk;
  }

  int stabilize() {
    const BraidWord w = word();
    const bool by_l = o_.l >= 0;
    const bool by_lambda = !o_.lambda.empty();
    if (by_l == by_lambda) throw ParseError("give exactly one of --l and --lambda");
    const BraidWord r = by_l ? l_stabilize(w, o_.l) : lambda_stabilize(w, parse_lambda(o_.lambda));
    if (o_.json) {
      emit({{"strands", r.strands()}, {"word", r.to_string()}});
    } else {
      out_ << "strands=" << r.strands() << "\nword=" << r.to_string() << "\n";
    }
    return kOk;
  }

  int slide() {
    const BraidSystem s = system_from(o_.file);
    SlideDirection dir;
    if (o_.direction == "forward") {
      dir = SlideDirection::Forward;
    } else if (o_.direction == "inverse") {
      dir = SlideDirection::Inverse;
    } else {
      throw ParseError("--direction must be forward or inverse");
    }
    const BraidSystem r = platkit::slide(s, o_.j, dir);
    if (o_.json) {
      emit(io::to_json(r));
    } else {
      print_system(out_, r);
    }
    return kOk;
  }

  int hurwitz() {
    if (o_.file.empty() || o_.file2.empty()) throw ParseError("hurwitz needs two braid-system files");
    const BraidSystem a = system_from(o_.file);
    const BraidSystem b = system_from(o_.file2);
    const std::size_t budget = o_.budget >= 0 ? static_cast<std::size_t>(o_.budget) : default_hurwitz_budget();
    const HurwitzResult r = hurwitz_search(a, b, budget);
    if (o_.json) {
      emit(io::to_json(r));
    } else {
      out_ << "verdict=" << to_string(r.verdict) << "\n";
      std::string moves;
      for (const auto& mv : r.moves) {
        if (!moves.empty()) moves += ' ';
        moves += (mv.direction == SlideDirection::Forward ? "F" : "I") + std::to_string(mv.j);
      }
      out_ << "moves=" << moves << "\n"
           << "nodes=" << r.nodes << "\n"
           << "reason=" << r.reason << "\n";
    }
    switch (r.verdict) {
      case HurwitzResult::Verdict::Equivalent:
        return kOk;
      case HurwitzResult::Verdict::NotEquivalent:
        return kPropertyFailure;
      case HurwitzResult::Verdict::Unknown:
        break;
    }
    return kBudgetExhausted;
  }

  int surface_invariants() {
    const BraidSystem s = system_from(o_.file);
    json j;
    j["degree"] = s.degree();
    j["r"] = s.size();
    j["boundary"] = boundary_braid(s).to_string();
    j["two_dimensional"] = is_two_dimensional(s);
    if (s.degree() % 2 == 0) j["chi"] = euler_char_plat(s);
    try {
      const BranchSigns b = branch_signs(s);
      j["positive"] = b.positive;
      j["negative"] = b.negative;
    } catch (const DomainError&) {
    }
    if (const auto e = normal_euler(s)) j["normal_euler"] = *e;
    if (s.degree() == 2) {
      try {
        j["type"] = classify_degree2(s).to_string();
      } catch (const DomainError&) {
      }
    }
    if (o_.json) {
      emit(j);
      return kOk;
    }
    static const char* const order[] = {"degree",   "r",        "chi",          "positive", "negative",
                                        "normal_euler", "type", "two_dimensional", "boundary"};
    for (const char* key : order) {
      if (!j.contains(key)) {
        out_ << key << "=n/a\n";
        continue;
      }
      const auto& v = j.at(key);
      out_ << key << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return kOk;
  }

  int to_genuine_plat() {
    const BraidSystem r = platkit::to_genuine_plat(system_from(o_.file));
    if (o_.json) {
      emit(io::to_json(r));
    } else {
      print_system(out_, r);
    }
    return kOk;
  }

  int ribbon_check() {
    const bool ok = ribbon_symmetric_check(system_from(o_.file));
    if (o_.json) {
      emit({{"ribbon", ok}});
    } else {
      out_ << "ribbon: " << bool_text(ok) << "\n";
    }
    return ok ? kOk : kPropertyFailure;
  }

  int banded_check() {
    const BandedBraid bb = banded_from(o_.file);
    const AdmissibilityReport r = admissibility_report(bb, bracket_options());
    const int chi = realizing_euler_char(bb, &r);
    const BraidWord after = surgery_result(bb);
    if (o_.json) {
      emit({{"c1", r.c1},
            {"c2", r.c2},
            {"base_verdict", to_string(r.base_verdict)},
            {"surgery_verdict", to_string(r.surgery_verdict)},
            {"surgery_word", after.to_string()},
            {"admissible", r.admissible},
            {"chi", chi}});
    } else {
      out_ << "c1=" << r.c1 << "\n"
           << "c2=" << r.c2 << "\n"
           << "base_verdict=" << to_string(r.base_verdict) << "\n"
           << "surgery_verdict=" << to_string(r.surgery_verdict) << "\n"
           << "surgery_word=" << after.to_string() << "\n"
           << "admissible=" << bool_text(r.admissible) << "\n"
           << "chi=" << chi << "\n";
    }
    return r.admissible ? kOk : kPropertyFailure;
  }

  std::optional<BraidedSurfacePlan> plan_from(const std::string& banded_path) {
    const BandedBraid bb = banded_from(banded_path);
    const auto opts = bracket_options();
    if (!o_.certs.empty()) {
      if (o_.search) throw ParseError("give either --certs or --search, not both");
      const Certificates c = io::certificates_from_json(io::parse_json_text(io::read_file(o_.certs)));
      return compile_surface(bb, c, opts);
    }
    if (!o_.search) throw ParseError("compile needs --certs FILE or --search");
    CertificateBounds bounds;
    bounds.max_total = o_.bound;
    bounds.max_hilden_len = o_.max_len;
    bounds.max_left_len = o_.max_left_len;
    const auto found = search_certificates(bb, bounds, opts);
    if (!found) return std::nullopt;
    return compile_surface(bb, *found, opts);
  }

  int compile() {
    const auto plan = plan_from(o_.file);
    if (!plan) {
      if (o_.json) {
        emit({{"compiled", false}, {"reason", "no certificates within the search bounds"}});
      } else {
        out_ << "compiled=false\nreason=no certificates within the search bounds\n";
      }
      return kBudgetExhausted;
    }
    const json j = io::to_json(*plan);
    if (!o_.out_path.empty()) io::write_file(o_.out_path, j.dump(2) + "\n");
    if (o_.json) {
      emit(j);
      return kOk;
    }
    out_ << "compiled=true\n"
         << "degree=" << plan->degree << "\n"
         << "branch_points=" << plan->branch_count() << "\n"
         << "band_branches=" << plan->band_branches.size() << "\n"
         << "chi=" << plan->chi << "\n"
         << "boundary=" << plan->boundary.to_string() << "\n"
         << "certificates=" << io::to_json(plan->certificates).dump() << "\n";
    return kOk;
  }

  int export_mp() {
    MotionPictureDocument doc;
    const int sources = static_cast<int>(!o_.words.empty()) + static_cast<int>(!o_.system_file.empty()) +
                        static_cast<int>(!o_.banded_file.empty()) + static_cast<int>(!o_.input_doc.empty());
    if (sources != 1) throw ParseError("export-mp needs exactly one of WORD, --system, --banded, --input");
    if (!o_.words.empty()) {
      doc = motion_picture(plat_close(word()));
    } else if (!o_.system_file.empty()) {
      doc = motion_picture(system_from(o_.system_file));
    } else if (!o_.banded_file.empty()) {
      const auto plan = plan_from(o_.banded_file);
      if (!plan) {
        out_ << "compiled=false\n";
        return kBudgetExhausted;
      }
      doc = motion_picture(*plan);
    } else {
      doc = io::motion_picture_from_json(io::parse_json_text(io::read_file(o_.input_doc)));
    }
    const std::string text = io::to_json(doc).dump(2) + "\n";
    if (o_.out_path.empty()) {
      out_ << text;
      return kOk;
    }
    const bool svg = o_.out_path.size() >= 4 && o_.out_path.compare(o_.out_path.size() - 4, 4, ".svg") == 0;
    io::write_file(o_.out_path, svg ? render_svg(doc) : text);
    out_ << "stills=" << doc.stills.size() << "\nwritten=" << o_.out_path << "\n";
    return kOk;
  }

 private:
  Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"platkit: plat forms of braids, braid systems and banded links", "platkit"};
  app.require_subcommand(1, 1);
  Options o;
  Runner runner(o, out);
  std::function<int()> action;

  auto add = [&](const char* name, const char* help, int (Runner::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, &runner, fn] { action = [&runner, fn] { return (runner.*fn)(); }; });
    sub->add_flag("--json", o.json, "Emit a JSON document");
    return sub;
  };
  auto words = [&](CLI::App* sub, int n) {
    sub->add_option("--strands", o.strands, "Number of strands")->required();
    sub->add_option("words", o.words, "Braid words: signed generator indices")->required()->expected(n);
  };
  auto system_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Braid-system JSON file");
    sub->add_option("--degree", o.degree, "Degree for --entries");
    sub->add_option("--entries", o.entries, "Inline entries separated by ';'")
        ->each([&](const std::string&) { o.entries_given = true; });
  };
  auto bracket_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Bracket work allowance in crossings (default 24)");
    sub->add_option("--method", o.method, "auto, state-sum or transfer");
  };
  auto plan_flags = [&](CLI::App* sub) {
    sub->add_option("--certs", o.certs, "Certificates JSON file");
    sub->add_flag("--search", o.search, "Search for certificates");
    sub->add_option("--bound", o.bound, "Search bound on |lambda|");
    sub->add_option("--max-len", o.max_len, "Search bound on Hilden factors");
    sub->add_option("--max-left-len", o.max_left_len, "Search bound on the left Hilden factors");
    bracket_flags(sub);
  };

  words(add("parse", "Parse and describe a braid word", &Runner::parse), 1);
  words(add("equal", "Decide equality of two braids", &Runner::equal), 2);
  words(add("plat-components", "Components of the plat closure", &Runner::plat_components), 1);
  {
    auto* sub = add("bracket", "Kauffman bracket of the plat closure", &Runner::bracket);
    words(sub, 1);
    bracket_flags(sub);
  }
  words(add("pd", "Planar-diagram listing of the plat closure", &Runner::pd), 1);
  {
    auto* sub = add("adequate", "Search or verify a Hilden-subgroup expression", &Runner::adequate);
    words(sub, 1);
    sub->add_option("--max-len", o.max_len, "Search bound on factors");
    sub->add_option("--expr", o.expr, "Expression tokens to verify, e.g. \"g0 g1^-1\"");
  }
  {
    auto* sub = add("stabilize", "l- or lambda-stabilization", &Runner::stabilize);
    words(sub, 1);
    sub->add_option("--l", o.l, "Number of trivial strand pairs");
    sub->add_option("--lambda", o.lambda, "Comma-separated lambda");
  }
  {
    auto* sub = add("slide", "Apply one slide move", &Runner::slide);
    system_input(sub);
    sub->add_option("--j", o.j, "1-based position");
    sub->add_option("--direction", o.direction, "forward or inverse");
  }
  {
    auto* sub = add("hurwitz", "Bounded Hurwitz-equivalence search", &Runner::hurwitz);
    sub->add_option("file", o.file, "First braid-system file")->required();
    sub->add_option("file2", o.file2, "Second braid-system file")->required();
    sub->add_option("--budget", o.budget, "Node budget (default $PLATKIT_BUDGET or 200000)");
  }
  system_input(add("surface-invariants", "Euler characteristic, signs, normal Euler number",
                   &Runner::surface_invariants));
  system_input(add("to-genuine-plat", "Genuine plat presentation", &Runner::to_genuine_plat));
  system_input(add("ribbon-check", "Symmetric ribbon shape (b, b^-1)", &Runner::ribbon_check));
  {
    auto* sub = add("banded-check", "Admissibility of a banded braid", &Runner::banded_check);
    sub->add_option("file", o.file, "Banded-braid JSON file")->required();
    bracket_flags(sub);
  }
  {
    auto* sub = add("compile", "Compile a banded braid into a braided surface", &Runner::compile);
    sub->add_option("file", o.file, "Banded-braid JSON file")->required();
    sub->add_option("--out", o.out_path, "Write the plan JSON here");
    plan_flags(sub);
  }
  {
    auto* sub = add("export-mp", "Export a motion picture (JSON, or SVG with --out x.svg)", &Runner::export_mp);
    sub->add_option("--strands", o.strands, "Number of strands for WORD");
    sub->add_option("words", o.words, "Braid word of a plat diagram")->expected(0, 1);
    sub->add_option("--system", o.system_file, "Braid-system JSON file");
    sub->add_option("--banded", o.banded_file, "Banded-braid JSON file (with --certs or --search)");
    sub->add_option("--input", o.input_doc, "Existing motion-picture JSON document");
    sub->add_option("--out", o.out_path, "Output path; .svg renders the stills");
    plan_flags(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPropertyFailure;
  }
}

}  // namespace platkit::cli
