#include "screwinv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace screwinv {

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])) ||
        !std::all_of(n.begin(), n.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!index_.emplace(n, i).second)
      throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

VarSetPtr VariableSet::make(std::vector<std::string> names) {
  return VarSetPtr(new VariableSet(std::move(names)));
}

std::optional<std::size_t> VariableSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown variable '" + std::string(name) + "'");
}

bool same_variables(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r = *this;
  for (auto& e : r.exps_) e *= k;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder::TermOrder(VarSetPtr vars, std::vector<std::size_t> priority)
    : vars_(std::move(vars)), priority_(std::move(priority)) {
  for (std::size_t i = 0; i < priority_.size(); ++i)
    if (priority_[i] != i) natural_ = false;
}

TermOrder TermOrder::lex(VarSetPtr vars) {
  std::vector<std::size_t> p(vars->size());
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(std::move(vars), std::move(p));
}

TermOrder TermOrder::lex(VarSetPtr vars, const std::vector<std::string>& priority) {
  if (priority.size() != vars->size())
    throw std::invalid_argument("term order must list every variable exactly once");
  std::vector<std::size_t> p;
  std::vector<bool> seen(vars->size(), false);
  for (const auto& name : priority) {
    const std::size_t i = vars->index_of(name);
    if (seen[i]) throw std::invalid_argument("variable '" + name + "' repeated in term order");
    seen[i] = true;
    p.push_back(i);
  }
  return TermOrder(std::move(vars), std::move(p));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (natural_) return a <=> b;
  for (std::size_t i : priority_) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::header() const {
  std::string s = "order: lex";
  for (std::size_t i : priority_) s += " " + vars_->name(i);
  return s;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool descending(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

Polynomial::Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("polynomial requires a variable set");
}

Polynomial::Polynomial(VarSetPtr vars, const Rational& constant) : Polynomial(std::move(vars)) {
  if (constant != 0) terms_.push_back({Monomial::unit(vars_->size()), constant});
}

Polynomial::Polynomial(VarSetPtr vars, std::vector<Term> terms) : Polynomial(std::move(vars)) {
  for (const auto& t : terms)
    if (t.monomial.size() != vars_->size())
      throw std::invalid_argument("monomial length does not match variable set");
  std::sort(terms.begin(), terms.end(), descending);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
    } else {
      if (!terms_.empty() && terms_.back().coefficient == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coefficient == 0) terms_.pop_back();
}

Polynomial Polynomial::variable(VarSetPtr vars, std::string_view name) {
  const std::size_t i = vars->index_of(name);
  Monomial m = Monomial::variable(vars->size(), i);
  return monomial(std::move(vars), std::move(m));
}

Polynomial Polynomial::monomial(VarSetPtr vars, Monomial m, Rational c) {
  Polynomial p(std::move(vars));
  if (m.size() != p.vars_->size())
    throw std::invalid_argument("monomial length does not match variable set");
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_unit()) return terms_.back().coefficient;
  return Rational(0);
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.monomial.degree()));
  return d;
}

bool Polynomial::uses(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const Term& t) { return t.monomial[index] > 0; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial > x; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Rational(0);
}

void Polynomial::require_same(const Polynomial& other) const {
  if (!same_variables(vars_, other.vars_))
    throw VariableMismatch("polynomials are over different variable sets");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same(other);
  Polynomial r(vars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    const auto c = a->monomial <=> b->monomial;
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Rational s = a->coefficient + b->coefficient;
      if (s != 0) r.terms_.push_back({a->monomial, std::move(s)});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, other.terms_.end());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same(other);
  if (is_zero() || other.is_zero()) return Polynomial(vars_);
  if (other.terms_.size() == 1)
    return times_term(other.terms_[0].monomial, other.terms_[0].coefficient);
  if (terms_.size() == 1) return other.times_term(terms_[0].monomial, terms_[0].coefficient);

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, 0);
      it->second += s.coefficient * t.coefficient;
    }
  }
  Polynomial r(vars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), descending);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial r = *this;
  // Multiplication by a monomial preserves the order of terms.
  for (auto& t : r.terms_) {
    t.monomial *= m;
    t.coefficient *= c;
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(vars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_variables(vars_, other.vars_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != other.terms_[i].monomial ||
        terms_[i].coefficient != other.terms_[i].coefficient)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Leading terms

Term leading_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  if (!same_variables(f.variables(), order.variables()))
    throw VariableMismatch("term order is over a different variable set");
  const auto& terms = f.terms();
  if (order.is_natural()) return terms.front();
  auto best = terms.begin();
  for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
    if (order.less(best->monomial, it->monomial)) best = it;
  return *best;
}

Monomial leading_monomial(const Polynomial& f, const TermOrder& order) {
  return leading_term(f, order).monomial;
}

Polynomial make_monic(const Polynomial& f, const TermOrder& order) {
  return f.scaled(Rational(1) / leading_term(f, order).coefficient);
}

// ---------------------------------------------------------------------------
// Substitution and evaluation

Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images,
                      const VarSetPtr& target) {
  const auto& vars = *f.variables();
  if (images.size() != vars.size())
    throw std::invalid_argument("substitution needs one slot per variable");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] && !same_variables(images[i]->variables(), target))
      throw VariableMismatch("substitution image for '" + vars.name(i) +
                             "' is over a different variable set");
    if (!images[i] && f.uses(i))
      throw std::invalid_argument("no image for variable '" + vars.name(i) + "'");
  }

  // powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<Polynomial>> powers(vars.size());
  auto power = [&](std::size_t i, Exponent k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Rational(1));
    while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
    return cache[k];
  };

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial p(target, t.coefficient);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (t.monomial[i] > 0) p = p * power(i, t.monomial[i]);
    for (const auto& s : p.terms()) {
      auto [it, inserted] = acc.try_emplace(s.monomial, 0);
      it->second += s.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return Polynomial(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                      const VarSetPtr& target) {
  const auto& vars = *f.variables();
  std::vector<std::optional<Polynomial>> slots(vars.size());
  for (const auto& [name, image] : images)
    if (auto i = vars.find(name)) slots[*i] = image;
  return substitute(f, slots, target);
}

Polynomial change_variables(const Polynomial& f, const VarSetPtr& target) {
  if (same_variables(f.variables(), target)) return Polynomial(target, f.terms());
  const auto& vars = *f.variables();
  std::vector<std::optional<std::size_t>> map(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) map[i] = target->find(vars.name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i])
        throw std::invalid_argument("variable '" + vars.name(i) + "' absent from target set");
      m[*map[i]] = t.monomial[i];
    }
    terms.push_back({std::move(m), t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.variables()->size())
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& t : f.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Exponent k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Rational evaluate(const Polynomial& f, const std::map<std::string, Rational>& point) {
  const auto& vars = *f.variables();
  std::vector<Rational> dense(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars.name(i));
    if (it != point.end()) {
      dense[i] = it->second;
    } else if (f.uses(i)) {
      throw std::invalid_argument("no value for variable '" + vars.name(i) + "'");
    }
  }
  return evaluate(f, dense);
}

std::map<long, Polynomial> homogeneous_components(const Polynomial& f,
                                                  const std::vector<bool>& mask) {
  std::map<long, std::vector<Term>> parts;
  for (const auto& t : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) d += t.monomial[i];
    parts[d].push_back(t);
  }
  std::map<long, Polynomial> out;
  for (auto& [d, terms] : parts) out.emplace(d, Polynomial(f.variables(), std::move(terms)));
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSetPtr& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial(vars_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term(bool negative) {
    skip_ws();
    Term t{Monomial::unit(vars_->size()), Rational(1)};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num{digits()};
      Integer den{1};
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = Integer{digits()};
        if (den == 0) throw ParseError("zero denominator", at);
      }
      t.coefficient = Rational(num, den);
      need_factor = false;
    }
    for (;;) {
      if (need_factor) {
        factor(t.monomial);
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      need_factor = true;
    }
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  void factor(Monomial& m) {
    skip_ws();
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected identifier");
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = vars_->find(name);
    if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    Exponent power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.size() > 9) throw ParseError("exponent too large", at);
      power = static_cast<Exponent>(std::stoul(d));
    }
    m[*index] += power;
  }

  std::string_view text_;
  const VarSetPtr& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const VarSetPtr& vars) { return Parser(text, vars).run(); }

// ---------------------------------------------------------------------------
// Formatting

std::string format(const Polynomial& f, const TermOrder& order) {
  if (!same_variables(f.variables(), order.variables()))
    throw VariableMismatch("term order is over a different variable set");
  if (f.is_zero()) return "0";

  std::vector<const Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  if (!order.is_natural())
    std::sort(terms.begin(), terms.end(), [&order](const Term* a, const Term* b) {
      return order.less(b->monomial, a->monomial);
    });

  const auto& vars = *f.variables();
  std::ostringstream out;
  bool first = true;
  for (const Term* t : terms) {
    const bool negative = t->coefficient < 0;
    const Rational magnitude = negative ? Rational(-t->coefficient) : t->coefficient;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    if (magnitude != 1 || t->monomial.is_unit()) {
      out << to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i : order.priority()) {
      const Exponent e = t->monomial[i];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << vars.name(i);
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

std::string format(const Polynomial& f) { return format(f, TermOrder::lex(f.variables())); }

}  // namespace screwinv
