#include "platkit/stabilization.hpp"

#include <charconv>
#include <numeric>

#include "platkit/errors.hpp"

namespace platkit {

Lambda::Lambda(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("lambda needs at least one entry");
  for (int l : entries_) {
    if (l < 0) throw DomainError("lambda entries must be non-negative");
  }
}

int Lambda::partial(int i) const {
  if (i < 0 || i > m()) throw DomainError("lambda partial-sum index out of range");
  return std::accumulate(entries_.begin(), entries_.begin() + i, m());
}

bool Lambda::precedes(const Lambda& other) const {
  if (other.m() != m()) throw DomainError("lambda comparison across different m");
  for (int i = 0; i < m(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

std::string Lambda::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Lambda parse_lambda(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
      throw ParseError("bad lambda entry '" + std::string(field) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Lambda(std::move(entries));
}

BraidWord l_stabilize(const BraidWord& w, int l) {
  if (w.strands() % 2 != 0) throw DomainError("stabilization needs an even strand count");
  if (l < 0) throw DomainError("stabilization length must be non-negative");
  const int m = w.strands() / 2;
  std::vector<int> letters = w.letters();
  for (int k = m; k <= m + l - 1; ++k) letters.push_back(2 * k);
  return BraidWord(2 * (m + l), std::move(letters));
}

BraidWord tau(int i, int strands) {
  if (strands % 2 != 0) throw DomainError("tau lives on an even strand count");
  if (i < 1 || i > strands / 2 - 1) {
    throw DomainError("tau index " + std::to_string(i) + " out of range for B_" + std::to_string(strands));
  }
  return BraidWord(strands, {2 * i, 2 * i - 1, 2 * i + 1, 2 * i});
}

BraidWord t_conjugator(int i, int j, int m, int strands) {
  const int top = strands / 2;  // |lambda|
  if (i < 1 || i > m) throw DomainError("T_{i,j}: i out of range");
  if (j < m - 1 || j > top - 1) throw DomainError("T_{i,j}: j out of range");
  std::vector<int> letters;
  for (int k = i; k <= m - 1; ++k) {
    const auto t = tau(k, strands);
    letters.insert(letters.end(), t.letters().begin(), t.letters().end());
  }
  for (int k = m; k <= j; ++k) {
    const auto t = tau(k, strands).inverse();
    letters.insert(letters.end(), t.letters().begin(), t.letters().end());
  }
  return BraidWord(strands, std::move(letters));
}

namespace {

BraidWord build_t_lambda(const Lambda& lambda, bool with_runs, std::vector<std::size_t>* run_positions) {
  const int m = lambda.m();
  const int strands = 2 * lambda.total();
  std::vector<int> letters;
  for (int i = 1; i <= m; ++i) {
    const int lo = lambda.partial(i - 1);
    const int hi = lambda.partial(i);
    if (hi == lo) continue;  // T X T^-1 with an empty run is the identity
    const BraidWord conj = t_conjugator(i, lo - 1, m, strands);
    letters.insert(letters.end(), conj.letters().begin(), conj.letters().end());
    if (with_runs) {
      for (int k = lo; k <= hi - 1; ++k) {
        if (run_positions) run_positions->push_back(letters.size());
        letters.push_back(2 * k);
      }
    }
    const BraidWord inv = conj.inverse();
    letters.insert(letters.end(), inv.letters().begin(), inv.letters().end());
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace

BraidWord t_lambda(const Lambda& lambda) { return build_t_lambda(lambda, true, nullptr); }

BraidWord t_lambda_without_runs(const Lambda& lambda) { return build_t_lambda(lambda, false, nullptr); }

std::vector<std::size_t> t_lambda_run_positions(const Lambda& lambda) {
  std::vector<std::size_t> positions;
  build_t_lambda(lambda, true, &positions);
  return positions;
}

BraidWord lambda_stabilize(const BraidWord& w, const Lambda& lambda) {
  if (w.strands() != 2 * lambda.m()) {
    throw DomainError("lambda has " + std::to_string(lambda.m()) + " entries but the braid has " +
                      std::to_string(w.strands()) + " strands");
  }
  return embed(w, 2 * lambda.total()) * t_lambda(lambda);
}

}  // namespace platkit
