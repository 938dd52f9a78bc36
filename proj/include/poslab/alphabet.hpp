#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace poslab {

// A letter is an index into the alphabet of the graph/automaton it appears in.
using Letter = int;

// Finite alphabet. Symbols are display names; every symbol also carries an
// integer value, used by weighted and priority-based objectives. For plain
// symbolic alphabets the value is the index.
class Alphabet {
 public:
  Alphabet() = default;

  static Alphabet symbols(std::vector<std::string> names) {
    Alphabet a;
    a.syms_ = std::move(names);
    a.vals_.resize(a.syms_.size());
    for (size_t i = 0; i < a.syms_.size(); ++i) a.vals_[i] = static_cast<long long>(i);
    a.weighted_ = false;
    return a;
  }

  // Integer interval [lo, hi]; symbol names are the decimal values.
  static Alphabet weights(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Alphabet::weights: empty interval");
    Alphabet a;
    for (long long w = lo; w <= hi; ++w) {
      a.syms_.push_back(std::to_string(w));
      a.vals_.push_back(w);
    }
    a.weighted_ = true;
    return a;
  }

  int size() const { return static_cast<int>(syms_.size()); }
  const std::string& name(Letter c) const { return syms_.at(static_cast<size_t>(c)); }
  long long value(Letter c) const { return vals_.at(static_cast<size_t>(c)); }
  bool weighted() const { return weighted_; }

  std::optional<Letter> find(const std::string& sym) const {
    for (size_t i = 0; i < syms_.size(); ++i)
      if (syms_[i] == sym) return static_cast<Letter>(i);
    return std::nullopt;
  }

  Letter require(const std::string& sym) const {
    auto c = find(sym);
    if (!c) throw std::invalid_argument("unknown letter: " + sym);
    return *c;
  }

  // Letter whose value is v (weight alphabets).
  Letter of_value(long long v) const {
    for (size_t i = 0; i < vals_.size(); ++i)
      if (vals_[i] == v) return static_cast<Letter>(i);
    throw std::invalid_argument("no letter with value " + std::to_string(v));
  }

  bool has_value(long long v) const {
    for (long long x : vals_)
      if (x == v) return true;
    return false;
  }

  bool operator==(const Alphabet& o) const { return syms_ == o.syms_ && vals_ == o.vals_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> syms_;
  std::vector<long long> vals_;
  bool weighted_ = false;
};

}  // namespace poslab
