#include "edmn/dmn/cell.hpp"

#include <algorithm>

#include "edmn/error.hpp"

namespace edmn::dmn {

std::string to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

Cell Cell::any() { return Cell(); }

Cell Cell::test(CompareOp op, std::string value) {
  Cell c;
  c.kind_ = Kind::Test;
  c.op_ = op;
  c.values_ = {std::move(value)};
  return c;
}

Cell Cell::range(std::string lo, std::string hi, bool lo_inclusive, bool hi_inclusive) {
  Cell c;
  c.kind_ = Kind::Range;
  c.values_ = {std::move(lo), std::move(hi)};
  c.lo_inclusive_ = lo_inclusive;
  c.hi_inclusive_ = hi_inclusive;
  return c;
}

Cell Cell::enumeration(std::vector<std::string> values) {
  if (values.empty()) throw ModelError("empty enumeration cell");
  Cell c;
  c.kind_ = Kind::Enumeration;
  c.values_ = std::move(values);
  return c;
}

Cell Cell::either(Cell lhs, Cell rhs) {
  if (!lhs.objective() || !rhs.objective())
    throw ModelError("'|' joins plain value conditions only, got " + lhs.to_string() + " | " +
                     rhs.to_string());
  Cell c;
  c.kind_ = Kind::Or;
  c.children_ = {std::move(lhs), std::move(rhs)};
  return c;
}

Cell Cell::not_known() {
  Cell c;
  c.kind_ = Kind::NotKnown;
  return c;
}

Cell Cell::not_known_that(Cell inner) {
  if (!inner.objective())
    throw ModelError("!K[...] takes a plain value condition, got " + inner.to_string());
  Cell c;
  c.kind_ = Kind::NotKnownThat;
  c.children_ = {std::move(inner)};
  return c;
}

bool Cell::objective() const {
  switch (kind_) {
    case Kind::Test:
    case Kind::Range:
    case Kind::Enumeration:
      return true;
    case Kind::Or:
      return children_[0].objective() && children_[1].objective();
    default:
      return false;
  }
}

bool Cell::negative_knowledge() const {
  return kind_ == Kind::NotKnown || kind_ == Kind::NotKnownThat;
}

namespace {

ValueIndex resolve(const logic::Sort& sort, const std::string& value) {
  auto v = sort.index_of(value);
  if (!v) throw ModelError("value " + value + " is not in sort " + sort.name());
  return *v;
}

bool ordered(CompareOp op) {
  return op != CompareOp::Eq && op != CompareOp::Ne;
}

}  // namespace

void Cell::validate(const logic::Sort& sort) const {
  switch (kind_) {
    case Kind::Any:
    case Kind::NotKnown:
      return;
    case Kind::Test:
      if (ordered(op_) && !sort.is_integer())
        throw ModelError("comparison " + to_string() + " on non-ordered sort " + sort.name());
      if (ordered(op_)) {
        try {
          std::stoll(values_[0]);
        } catch (const std::exception&) {
          throw ModelError("comparison bound " + values_[0] + " is not an integer");
        }
        return;
      }
      resolve(sort, values_[0]);
      return;
    case Kind::Range:
      if (!sort.is_integer())
        throw ModelError("range " + to_string() + " on non-ordered sort " + sort.name());
      for (const auto& v : values_) {
        try {
          std::stoll(v);
        } catch (const std::exception&) {
          throw ModelError("range bound " + v + " is not an integer");
        }
      }
      return;
    case Kind::Enumeration:
      for (const auto& v : values_) resolve(sort, v);
      return;
    case Kind::Or:
    case Kind::NotKnownThat:
      for (const auto& c : children_) c.validate(sort);
      return;
  }
}

std::vector<ValueIndex> Cell::admitted(const logic::Sort& sort) const {
  std::vector<ValueIndex> out;
  for (ValueIndex v = 0; v < sort.size(); ++v)
    if (classical_match(*this, sort, v)) out.push_back(v);
  return out;
}

std::string Cell::to_string() const {
  switch (kind_) {
    case Kind::Any: return "-";
    case Kind::Test: return op_ == CompareOp::Eq ? values_[0] : dmn::to_string(op_) + " " + values_[0];
    case Kind::Range: {
      bool plain = lo_inclusive_ && hi_inclusive_;
      std::string body = values_[0] + ".." + values_[1];
      if (plain) return body;
      return std::string(lo_inclusive_ ? "[" : "(") + body + (hi_inclusive_ ? "]" : ")");
    }
    case Kind::Enumeration: {
      std::string out = "{";
      for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? ", " : "") + values_[i];
      return out + "}";
    }
    case Kind::Or: return children_[0].to_string() + " | " + children_[1].to_string();
    case Kind::NotKnown: return "!K";
    case Kind::NotKnownThat: return "!K[" + children_[0].to_string() + "]";
  }
  return {};
}

bool Cell::operator==(const Cell& other) const {
  return kind_ == other.kind_ && op_ == other.op_ && values_ == other.values_ &&
         lo_inclusive_ == other.lo_inclusive_ && hi_inclusive_ == other.hi_inclusive_ &&
         children_ == other.children_;
}

bool classical_match(const Cell& cell, const logic::Sort& sort, ValueIndex v) {
  using Kind = Cell::Kind;
  switch (cell.kind()) {
    case Kind::Any: return true;
    case Kind::NotKnown:
    case Kind::NotKnownThat:
      return false;
    case Kind::Test: {
      if (cell.op() == CompareOp::Eq) return v == resolve(sort, cell.values()[0]);
      if (cell.op() == CompareOp::Ne) return v != resolve(sort, cell.values()[0]);
      long long x = sort.integer_value(v);
      long long bound = std::stoll(cell.values()[0]);
      switch (cell.op()) {
        case CompareOp::Lt: return x < bound;
        case CompareOp::Le: return x <= bound;
        case CompareOp::Gt: return x > bound;
        case CompareOp::Ge: return x >= bound;
        default: return false;
      }
    }
    case Kind::Range: {
      long long x = sort.integer_value(v);
      long long lo = std::stoll(cell.values()[0]);
      long long hi = std::stoll(cell.values()[1]);
      bool above = cell.lo_inclusive() ? x >= lo : x > lo;
      bool below = cell.hi_inclusive() ? x <= hi : x < hi;
      return above && below;
    }
    case Kind::Enumeration:
      return std::any_of(cell.values().begin(), cell.values().end(),
                         [&](const std::string& s) { return resolve(sort, s) == v; });
    case Kind::Or:
      return classical_match(cell.children()[0], sort, v) ||
             classical_match(cell.children()[1], sort, v);
  }
  return false;
}

namespace {

const logic::Sort& variable_sort(const logic::Vocabulary& vocabulary, const std::string& variable) {
  auto i = vocabulary.find_symbol(variable);
  if (!i) throw ModelError("unknown variable " + variable);
  return vocabulary.sort_of(*i);
}

}  // namespace

Formula objective_formula(const Cell& cell, const logic::Vocabulary& vocabulary,
                          const std::string& variable) {
  const auto& sort = variable_sort(vocabulary, variable);
  switch (cell.kind()) {
    case Cell::Kind::Test:
      if (cell.op() == CompareOp::Eq) return Formula::equals(vocabulary, variable, cell.values()[0]);
      if (cell.op() == CompareOp::Ne)
        return Formula::negation(Formula::equals(vocabulary, variable, cell.values()[0]));
      return Formula::member(vocabulary, variable, cell.admitted(sort));
    case Cell::Kind::Range:
      return Formula::member(vocabulary, variable, cell.admitted(sort));
    case Cell::Kind::Enumeration: {
      std::vector<Formula> atoms;
      for (const auto& v : cell.values()) atoms.push_back(Formula::equals(vocabulary, variable, v));
      return Formula::disjunction(std::move(atoms));
    }
    case Cell::Kind::Or: {
      // Flatten nested '|' into one disjunction.
      std::vector<Formula> parts;
      for (const auto& c : cell.children()) {
        auto f = objective_formula(c, vocabulary, variable);
        if (f.kind() == Formula::Kind::Or)
          parts.insert(parts.end(), f.children().begin(), f.children().end());
        else
          parts.push_back(std::move(f));
      }
      return Formula::disjunction(std::move(parts));
    }
    default:
      throw ModelError("cell " + cell.to_string() + " has no objective reading");
  }
}

Formula constraint_to_formula(const Cell& cell, const logic::Vocabulary& vocabulary,
                              const std::string& variable, const std::string& theory) {
  switch (cell.kind()) {
    case Cell::Kind::Any:
      return Formula::top();
    case Cell::Kind::NotKnown:
      return Formula::forall(vocabulary, variable_sort(vocabulary, variable).name(),
                             [&](std::string_view v) {
                               return Formula::negation(
                                   Formula::know(theory, Formula::equals(vocabulary, variable, v)));
                             });
    case Cell::Kind::NotKnownThat:
      return Formula::negation(
          Formula::know(theory, objective_formula(cell.children()[0], vocabulary, variable)));
    default:
      return Formula::know(theory, objective_formula(cell, vocabulary, variable));
  }
}

}  // namespace edmn::dmn
