#include "platkit/hilden.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "platkit/errors.hpp"

namespace platkit {

std::vector<BraidWord> hilden_generators(int m) {
  if (m < 1) throw DomainError("Hilden subgroup needs m >= 1");
  const int n = 2 * m;
  std::vector<BraidWord> gens;
  gens.emplace_back(n, std::vector<int>{1});
  if (m == 1) return gens;
  gens.emplace_back(n, std::vector<int>{2, 1, 3, 2});
  for (int i = 1; i <= m - 1; ++i) {
    gens.emplace_back(n, std::vector<int>{2 * i, 2 * i - 1, -(2 * i + 1), -(2 * i)});
  }
  return gens;
}

bool preserves_pairing(const BraidWord& w) {
  if (w.strands() % 2 != 0) throw DomainError("preserves_pairing needs an even strand count");
  const Permutation pi = permutation_of(w);
  for (int k = 1; k <= w.strands(); k += 2) {
    const int a = pi(k), b = pi(k + 1);
    if ((a + 1) / 2 != (b + 1) / 2) return false;
  }
  return true;
}

BraidWord expand_expression(const HildenExpression& e) {
  const auto gens = hilden_generators(e.m);
  std::vector<int> letters;
  for (const auto& f : e.factors) {
    if (f.generator < 0 || f.generator >= static_cast<int>(gens.size())) {
      throw DomainError("Hilden generator index " + std::to_string(f.generator) +
                        " out of range for m=" + std::to_string(e.m));
    }
    if (f.exponent != 1 && f.exponent != -1) throw DomainError("Hilden exponent must be +1 or -1");
    const BraidWord piece = f.exponent > 0 ? gens[f.generator] : gens[f.generator].inverse();
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  }
  return BraidWord(2 * e.m, std::move(letters));
}

bool verify_membership(const BraidWord& w, const HildenExpression& e) {
  if (w.strands() != 2 * e.m) {
    throw DomainError("verify_membership: braid has " + std::to_string(w.strands()) +
                      " strands, expression lives in B_" + std::to_string(2 * e.m));
  }
  return braids_equal(w, expand_expression(e));
}

namespace {

struct ImageHash {
  std::size_t operator()(const ArtinImage& img) const { return img.hash(); }
};

struct Node {
  ArtinImage image;
  int parent = -1;
  HildenFactor last;
  int exp_sum = 0;
};

}  // namespace

std::optional<HildenExpression> search_membership(const BraidWord& w, int max_len,
                                                  MembershipSearchStats* stats) {
  if (w.strands() % 2 != 0) throw DomainError("search_membership needs an even strand count");
  if (!preserves_pairing(w)) return std::nullopt;
  const int m = w.strands() / 2;
  const auto gens = hilden_generators(m);

  std::vector<HildenFactor> alphabet;
  std::vector<ArtinImage> factor_images;
  std::vector<int> factor_exp;
  int max_step = 0;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    for (int sign : {1, -1}) {
      const BraidWord piece = sign > 0 ? gens[g] : gens[g].inverse();
      alphabet.push_back({g, sign});
      factor_images.push_back(ArtinImage::of(piece));
      factor_exp.push_back(exponent_sum(piece));
      max_step = std::max(max_step, std::abs(exponent_sum(piece)));
    }
  }

  const ArtinImage target = ArtinImage::of(w.freely_reduced());
  const int target_exp = exponent_sum(w);

  std::vector<Node> nodes;
  std::unordered_map<ArtinImage, int, ImageHash> seen;
  nodes.push_back({ArtinImage::identity(w.strands()), -1, {}, 0});
  seen.emplace(nodes[0].image, 0);

  auto build = [&](int index) {
    HildenExpression e{m, {}};
    for (int i = index; nodes[i].parent >= 0; i = nodes[i].parent) e.factors.push_back(nodes[i].last);
    std::reverse(e.factors.begin(), e.factors.end());
    return e;
  };

  auto finish = [&](int index, int depth) -> std::optional<HildenExpression> {
    if (stats) *stats = {nodes.size(), depth};
    HildenExpression e = build(index);
    if (!verify_membership(w, e)) throw VerificationError("membership search produced a bad certificate");
    return e;
  };

  if (nodes[0].image == target) return finish(0, 0);

  std::vector<int> frontier{0};
  for (int depth = 1; depth <= max_len && !frontier.empty(); ++depth) {
    const int remaining = max_len - depth;
    const std::size_t width = alphabet.size();
    const std::int64_t jobs = static_cast<std::int64_t>(frontier.size() * width);
    std::vector<ArtinImage> children(jobs);
    std::vector<char> live(jobs, 0);

    // Children are computed in parallel; insertion happens serially in
    // (parent, factor) order so the first hit is the least shortest word.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t job = 0; job < jobs; ++job) {
      const Node& parent = nodes[frontier[job / width]];
      const std::size_t f = job % width;
      const int exp = parent.exp_sum + factor_exp[f];
      if (std::abs(target_exp - exp) > remaining * max_step) continue;
      children[job] = compose(parent.image, factor_images[f]);
      live[job] = 1;
    }

    std::vector<int> next;
    for (std::int64_t job = 0; job < jobs; ++job) {
      if (!live[job]) continue;
      auto [it, inserted] = seen.try_emplace(std::move(children[job]), static_cast<int>(nodes.size()));
      if (!inserted) continue;
      const int parent = frontier[job / width];
      const std::size_t f = job % width;
      nodes.push_back({it->first, parent, alphabet[f], nodes[parent].exp_sum + factor_exp[f]});
      const int index = static_cast<int>(nodes.size()) - 1;
      if (nodes[index].image == target) return finish(index, depth);
      next.push_back(index);
    }
    frontier = std::move(next);
  }
  if (stats) *stats = {nodes.size(), max_len};
  return std::nullopt;
}

// ---------------------------------------------------------------------------

HildenExpression parse_expression_tokens(std::string_view tokens, int m) {
  if (m < 1) throw ParseError("expression needs m >= 1");
  HildenExpression e{m, {}};
  std::istringstream in{std::string(tokens)};
  std::string tok;
  const int gen_count = m == 1 ? 1 : m + 1;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 'g') throw ParseError("bad Hilden token '" + tok + "'");
    std::string_view body(tok);
    body.remove_prefix(1);
    int exponent = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      if (body.substr(caret) != "^-1") throw ParseError("bad Hilden exponent in '" + tok + "'");
      exponent = -1;
      body = body.substr(0, caret);
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), index);
    if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
      throw ParseError("bad Hilden generator index in '" + tok + "'");
    }
    if (index < 0 || index >= gen_count) {
      throw ParseError("generator " + tok + " out of range for m=" + std::to_string(m));
    }
    e.factors.push_back({index, exponent});
  }
  return e;
}

HildenExpression parse_expression(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos || text.substr(start, 2) != "m=") {
    throw ParseError("expression must start with a line 'm=<int>'");
  }
  std::size_t eol = text.find('\n', start);
  std::string header(text.substr(start + 2, eol == std::string_view::npos ? std::string_view::npos
                                                                            : eol - start - 2));
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(header, &used);
    if (header.find_first_not_of(" \t\r", used) != std::string::npos) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("bad expression header 'm=" + header + "'");
  }
  std::string_view rest = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
  return parse_expression_tokens(rest, m);
}

std::string format_expression_tokens(const HildenExpression& e) {
  std::string out;
  for (std::size_t i = 0; i < e.factors.size(); ++i) {
    if (i) out += ' ';
    out += "g" + std::to_string(e.factors[i].generator);
    if (e.factors[i].exponent < 0) out += "^-1";
  }
  return out;
}

std::string format_expression(const HildenExpression& e) {
  return "m=" + std::to_string(e.m) + "\n" + format_expression_tokens(e) + "\n";
}

}  // namespace platkit
