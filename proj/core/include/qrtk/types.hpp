#pragma once

#include <cassert>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrtk {

/// Malformed input text (QDIMACS, proof trace, circuit description).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was applied outside its precondition.
struct rule_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration or evaluation exceeded its variable budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Quantifier { exists, forall };

inline Quantifier invert(Quantifier q) {
  return q == Quantifier::exists ? Quantifier::forall : Quantifier::exists;
}

/// A Boolean variable, identified by a positive 1-based index.
class Variable {
 public:
  Variable() = default;
  explicit Variable(int id) : id_(id) { assert(id > 0); }

  int id() const { return id_; }
  bool valid() const { return id_ > 0; }

  friend bool operator==(Variable, Variable) = default;
  friend auto operator<=>(Variable, Variable) = default;

 private:
  int id_ = 0;
};

/// A variable or its negation. Stored in DIMACS encoding (+v / -v).
/// Literals order by variable id, positive polarity first.
class Literal {
 public:
  Literal() = default;
  Literal(Variable v, bool positive) : code_(positive ? v.id() : -v.id()) {}

  static Literal from_dimacs(int code) {
    assert(code != 0);
    Literal l;
    l.code_ = code;
    return l;
  }

  int dimacs() const { return code_; }
  Variable var() const { return Variable(std::abs(code_)); }
  bool positive() const { return code_ > 0; }
  bool valid() const { return code_ != 0; }
  Literal complement() const { return from_dimacs(-code_); }

  friend bool operator==(Literal, Literal) = default;
  friend bool operator<(Literal a, Literal b) {
    if (a.var() != b.var()) return a.var() < b.var();
    return a.positive() && !b.positive();
  }

 private:
  int code_ = 0;
};

std::string to_string(Literal l);
std::string to_string(const std::vector<Literal>& lits);

namespace detail {

/// Sorts and removes duplicates in place.
void normalize_literals(std::vector<Literal>& lits);

/// First variable occurring with both polarities in a sorted literal set.
std::optional<Variable> complementary_variable(const std::vector<Literal>& sorted);

bool sorted_contains(const std::vector<Literal>& sorted, Literal l);
bool sorted_contains_var(const std::vector<Literal>& sorted, Variable v);

struct MergeResult {
  std::vector<Literal> literals;
  std::optional<Variable> clash;
};

/// Union of two sorted literal sets with both polarities of `pivot` dropped.
/// Reports the first remaining variable that occurs with both polarities.
MergeResult merge_excluding(const std::vector<Literal>& a, const std::vector<Literal>& b,
                            Variable pivot);

}  // namespace detail

/// A disjunction of literals, kept as a sorted duplicate-free sequence.
/// May be tautological; the calculi reject tautologies where their rules demand it.
class Clause {
 public:
  Clause() = default;

  static Clause of(std::vector<Literal> lits) {
    detail::normalize_literals(lits);
    Clause c;
    c.lits_ = std::move(lits);
    return c;
  }

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Literal l) const { return detail::sorted_contains(lits_, l); }
  bool contains_var(Variable v) const { return detail::sorted_contains_var(lits_, v); }
  bool tautological() const { return detail::complementary_variable(lits_).has_value(); }

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> lits_;
};

/// A conjunction of literals, kept sorted and duplicate-free.
/// Never contains a variable with both polarities.
class Term {
 public:
  Term() = default;

  /// nullopt when the literals contain a complementary pair.
  static std::optional<Term> consistent_of(std::vector<Literal> lits) {
    detail::normalize_literals(lits);
    if (detail::complementary_variable(lits)) return std::nullopt;
    Term t;
    t.lits_ = std::move(lits);
    return t;
  }

  /// Throws rule_error on a complementary pair.
  static Term of(std::vector<Literal> lits);

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Literal l) const { return detail::sorted_contains(lits_, l); }
  bool contains_var(Variable v) const { return detail::sorted_contains_var(lits_, v); }

  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::vector<Literal> lits_;
};

/// A partial mapping from variables to truth constants.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars) : values_(static_cast<std::size_t>(num_vars) + 1, kUnset) {}

  int num_vars() const { return static_cast<int>(values_.size()) - 1; }

  void set(Variable v, bool value) {
    grow(v);
    values_[static_cast<std::size_t>(v.id())] = value ? 1 : 0;
  }

  void unset(Variable v) {
    if (v.id() < static_cast<int>(values_.size())) values_[static_cast<std::size_t>(v.id())] = kUnset;
  }

  std::optional<bool> value(Variable v) const {
    if (v.id() >= static_cast<int>(values_.size())) return std::nullopt;
    auto raw = values_[static_cast<std::size_t>(v.id())];
    if (raw == kUnset) return std::nullopt;
    return raw == 1;
  }

  bool assigns(Variable v) const { return value(v).has_value(); }

  /// True when the literal is assigned and made true.
  bool satisfies(Literal l) const {
    auto val = value(l.var());
    return val && *val == l.positive();
  }

  /// True when the literal is assigned and made false.
  bool falsifies(Literal l) const {
    auto val = value(l.var());
    return val && *val != l.positive();
  }

 private:
  static constexpr signed char kUnset = -1;

  void grow(Variable v) {
    if (v.id() >= static_cast<int>(values_.size()))
      values_.resize(static_cast<std::size_t>(v.id()) + 1, kUnset);
  }

  std::vector<signed char> values_ = {kUnset};
};

}  // namespace qrtk
