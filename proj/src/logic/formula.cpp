#include "edmn/logic/formula.hpp"

#include <algorithm>
#include <set>

#include "edmn/error.hpp"

namespace edmn::logic {

struct Formula::Node {
  Kind kind = Kind::True;
  std::string symbol;
  std::string value;
  std::string theory;
  std::vector<Formula> children;
};

namespace {

const std::string kEmpty;

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

}  // namespace

Formula::Formula() : node_(top().node_) {}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, {}, {}, {}, {}});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::make_shared<const Node>(Node{Kind::False, {}, {}, {}, {}});
  return Formula(node);
}

Formula Formula::prop(const Vocabulary& vocabulary, std::string_view name) {
  auto i = vocabulary.find_symbol(name);
  if (!i) throw FormulaError("unknown symbol " + std::string(name));
  if (vocabulary.symbol(*i).kind != SymbolKind::Proposition)
    throw FormulaError(std::string(name) + " is not a proposition");
  return Formula(std::make_shared<const Node>(Node{Kind::Prop, std::string(name), {}, {}, {}}));
}

Formula Formula::equals(const Vocabulary& vocabulary, std::string_view constant,
                        std::string_view value) {
  auto i = vocabulary.find_symbol(constant);
  if (!i) throw FormulaError("unknown symbol " + std::string(constant));
  if (vocabulary.symbol(*i).kind != SymbolKind::Constant)
    throw FormulaError(std::string(constant) + " is not a constant");
  const Sort& sort = vocabulary.sort_of(*i);
  auto v = sort.index_of(value);
  if (!v)
    throw FormulaError("value " + std::string(value) + " is not in sort " + sort.name());
  return Formula(std::make_shared<const Node>(
      Node{Kind::Eq, std::string(constant), sort.value(*v), {}, {}}));
}

Formula Formula::member(const Vocabulary& vocabulary, std::string_view constant,
                        std::span<const ValueIndex> values) {
  auto i = vocabulary.find_symbol(constant);
  if (!i) throw FormulaError("unknown symbol " + std::string(constant));
  const Sort& sort = vocabulary.sort_of(*i);
  std::vector<Formula> atoms;
  for (ValueIndex v : values) atoms.push_back(equals(vocabulary, constant, sort.value(v)));
  return disjunction(std::move(atoms));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {}, {std::move(f)}}));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return top();
  if (parts.size() == 1) return std::move(parts.front());
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, {}, std::move(parts)}));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  if (parts.empty()) return bottom();
  if (parts.size() == 1) return std::move(parts.front());
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {}, std::move(parts)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::know(std::string theory, Formula f) {
  if (theory.empty()) throw FormulaError("K operator without theory");
  if (f.contains_knowledge()) throw FormulaError("nested K operators are not supported");
  return Formula(
      std::make_shared<const Node>(Node{Kind::Know, {}, {}, std::move(theory), {std::move(f)}}));
}

Formula Formula::exists(const Vocabulary& vocabulary, std::string_view sort,
                        const std::function<Formula(std::string_view)>& body) {
  auto s = vocabulary.find_sort(sort);
  if (!s) throw FormulaError("unknown sort " + std::string(sort));
  std::vector<Formula> parts;
  for (const auto& v : vocabulary.sort(*s).values()) parts.push_back(body(v));
  return disjunction(std::move(parts));
}

Formula Formula::forall(const Vocabulary& vocabulary, std::string_view sort,
                        const std::function<Formula(std::string_view)>& body) {
  auto s = vocabulary.find_sort(sort);
  if (!s) throw FormulaError("unknown sort " + std::string(sort));
  std::vector<Formula> parts;
  for (const auto& v : vocabulary.sort(*s).values()) parts.push_back(body(v));
  return conjunction(std::move(parts));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::symbol() const noexcept { return node_->symbol; }
const std::string& Formula::value() const noexcept { return node_->value; }
const std::string& Formula::theory() const noexcept { return node_->theory; }
const std::vector<Formula>& Formula::children() const noexcept { return node_->children; }

bool Formula::contains_knowledge() const {
  if (kind() == Kind::Know) return true;
  return std::any_of(children().begin(), children().end(),
                     [](const Formula& c) { return c.contains_knowledge(); });
}

bool Formula::fully_epistemic() const {
  switch (kind()) {
    case Kind::Know:
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Prop:
    case Kind::Eq:
      return false;
    default:
      return std::all_of(children().begin(), children().end(),
                         [](const Formula& c) { return c.fully_epistemic(); });
  }
}

std::vector<std::string> Formula::symbols() const {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind() == Kind::Prop || f.kind() == Kind::Eq) out.insert(f.symbol());
    for (const auto& c : f.children()) walk(c);
  };
  walk(*this);
  return {out.begin(), out.end()};
}

std::vector<Formula> Formula::knowledge_nodes() const {
  std::vector<Formula> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind() == Kind::Know) {
      out.push_back(f);
      return;
    }
    for (const auto& c : f.children()) walk(c);
  };
  walk(*this);
  return out;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Prop: return symbol();
    case Kind::Eq: return symbol() + " = " + value();
    case Kind::Know: return "K[" + theory() + "][" + children()[0].to_string() + "]";
    case Kind::Not: {
      const auto& c = children()[0];
      std::string inner = c.to_string();
      if (precedence(c.kind()) < precedence(Kind::Not) || c.kind() == Kind::Eq)
        return "!(" + inner + ")";
      return "!" + inner;
    }
    default: break;
  }
  const char* op = kind() == Kind::And ? " & " : kind() == Kind::Or ? " | " : " => ";
  std::string out;
  for (std::size_t i = 0; i < children().size(); ++i) {
    if (i) out += op;
    const auto& c = children()[i];
    std::string inner = c.to_string();
    // Same-precedence children are parenthesized so the rendering is unambiguous.
    if (precedence(c.kind()) <= precedence(kind()))
      out += "(" + inner + ")";
    else
      out += inner;
  }
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || symbol() != other.symbol() || value() != other.value() ||
      theory() != other.theory() || children().size() != other.children().size())
    return false;
  for (std::size_t i = 0; i < children().size(); ++i)
    if (!(children()[i] == other.children()[i])) return false;
  return true;
}

BoundFormula::BoundFormula(const Formula& f, const Vocabulary& vocabulary) {
  compile(f, vocabulary);
}

std::uint32_t BoundFormula::compile(const Formula& f, const Vocabulary& vocabulary) {
  using Kind = Formula::Kind;
  auto index = static_cast<std::uint32_t>(ops_.size());
  ops_.push_back(Op{f.kind(), 0, 0, {}});
  switch (f.kind()) {
    case Kind::Know:
      throw FormulaError("K operator in an objective formula: " + f.to_string());
    case Kind::Prop:
    case Kind::Eq: {
      auto s = vocabulary.find_symbol(f.symbol());
      if (!s) throw FormulaError("symbol " + f.symbol() + " is not in the vocabulary");
      const auto& sym = vocabulary.symbol(*s);
      ops_[index].symbol = static_cast<std::uint32_t>(*s);
      if (f.kind() == Kind::Prop) {
        if (sym.kind != SymbolKind::Proposition)
          throw FormulaError(f.symbol() + " is not a proposition");
      } else {
        if (sym.kind != SymbolKind::Constant) throw FormulaError(f.symbol() + " is not a constant");
        auto v = vocabulary.sort_of(*s).index_of(f.value());
        if (!v) throw FormulaError("value " + f.value() + " is not in the sort of " + f.symbol());
        ops_[index].value = *v;
      }
      break;
    }
    default: {
      std::vector<std::uint32_t> kids;
      for (const auto& c : f.children()) kids.push_back(compile(c, vocabulary));
      ops_[index].children = std::move(kids);
      break;
    }
  }
  return index;
}

bool BoundFormula::eval_at(std::uint32_t at, std::span<const ValueIndex> values) const {
  using Kind = Formula::Kind;
  const Op& op = ops_[at];
  switch (op.kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Prop: return values[op.symbol] != 0;
    case Kind::Eq: return values[op.symbol] == op.value;
    case Kind::Not: return !eval_at(op.children[0], values);
    case Kind::And:
      for (auto c : op.children)
        if (!eval_at(c, values)) return false;
      return true;
    case Kind::Or:
      for (auto c : op.children)
        if (eval_at(c, values)) return true;
      return false;
    case Kind::Implies:
      return !eval_at(op.children[0], values) || eval_at(op.children[1], values);
    case Kind::Know: break;
  }
  throw FormulaError("unexpected node in bound formula");
}

bool eval_ground(const Structure& s, const Formula& f) {
  return BoundFormula(f, s.vocabulary()).eval(s.values());
}

}  // namespace edmn::logic
