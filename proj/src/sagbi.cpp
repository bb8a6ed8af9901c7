#include "screwinv/sagbi.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace screwinv {

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet::GeneratorSet(TermOrder order) : order_(std::move(order)) {}

GeneratorSet::GeneratorSet(TermOrder order, const std::vector<Polynomial>& gens)
    : GeneratorSet(std::move(order)) {
  for (const auto& g : gens) insert(g);
}

void GeneratorSet::push_monic(const Polynomial& g) {
  Polynomial monic = make_monic(g, order_);
  leads_.push_back(leading_monomial(monic, order_));
  gens_.push_back(std::move(monic));
}

std::optional<std::size_t> GeneratorSet::insert(const Polynomial& candidate) {
  if (!same_variables(candidate.variables(), variables()))
    throw VariableMismatch("generator is over a different variable set");
  Polynomial r = subduct(candidate, *this).remainder;
  if (r.is_constant()) return std::nullopt;
  push_monic(r);
  return gens_.size() - 1;
}

std::optional<GeneratorExponents> GeneratorSet::factor(const Monomial& m) const {
  GeneratorExponents exps(gens_.size(), 0);
  std::unordered_set<Monomial, MonomialHash> dead;
  const auto& priority = order_.priority();

  // Any factorization must use a generator whose leading monomial contains the
  // highest-priority variable present in the target.
  std::function<bool(const Monomial&)> search = [&](const Monomial& target) -> bool {
    if (target.is_unit()) return true;
    if (dead.count(target)) return false;
    std::size_t pivot = 0;
    for (std::size_t v : priority) {
      if (target[v] > 0) {
        pivot = v;
        break;
      }
    }
    for (std::size_t i = 0; i < leads_.size(); ++i) {
      const Monomial& lm = leads_[i];
      if (lm[pivot] == 0 || !lm.divides(target)) continue;
      ++exps[i];
      if (search(target / lm)) return true;
      --exps[i];
    }
    dead.insert(target);
    return false;
  };

  if (!search(m)) return std::nullopt;
  return exps;
}

// ---------------------------------------------------------------------------
// Products and certificates

namespace {

class PowerCache {
 public:
  explicit PowerCache(const GeneratorSet& basis) : basis_(basis), powers_(basis.size()) {}

  const Polynomial& power(std::size_t i, Exponent k) {
    auto& cache = powers_[i];
    if (cache.empty()) cache.emplace_back(basis_.variables(), Rational(1));
    while (cache.size() <= k) cache.push_back(cache.back() * basis_[i]);
    return cache[k];
  }

  Polynomial product(const GeneratorExponents& e) {
    Polynomial p(basis_.variables(), Rational(1));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) p = p * power(i, e[i]);
    return p;
  }

 private:
  const GeneratorSet& basis_;
  std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace

Polynomial generator_product(const GeneratorSet& basis, const GeneratorExponents& e) {
  if (e.size() > basis.size()) throw std::invalid_argument("exponent vector longer than basis");
  PowerCache cache(basis);
  return cache.product(e);
}

Polynomial evaluate_certificate(const std::vector<CertificateTerm>& certificate,
                                const GeneratorSet& basis) {
  PowerCache cache(basis);
  Polynomial sum(basis.variables());
  for (const auto& t : certificate) sum += cache.product(t.exponents).scaled(t.coefficient);
  return sum;
}

// ---------------------------------------------------------------------------
// Subduction

SubductionResult subduct(const Polynomial& f, const GeneratorSet& basis) {
  if (!same_variables(f.variables(), basis.variables()))
    throw VariableMismatch("subduction across different variable sets");
  SubductionResult result{f, {}};
  PowerCache cache(basis);
  const TermOrder& order = basis.order();
  while (!result.remainder.is_zero()) {
    const Term lt = leading_term(result.remainder, order);
    auto e = basis.factor(lt.monomial);
    if (!e) break;
    // Generators are monic, so the product has leading term exactly lt.monomial.
    result.remainder -= cache.product(*e).scaled(lt.coefficient);
    assert(result.remainder.is_zero() ||
           order.less(leading_monomial(result.remainder, order), lt.monomial));
    result.certificate.push_back({lt.coefficient, std::move(*e)});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Tete-a-tetes

namespace {

bool leq(const GeneratorExponents& x, const GeneratorExponents& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

}  // namespace

std::vector<TeteATete> tete_a_tetes(const GeneratorSet& basis, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const std::size_t n = basis.size();
  const std::size_t nvars = basis.variables()->size();
  std::vector<std::uint64_t> degs(n);
  for (std::size_t i = 0; i < n; ++i) degs[i] = basis.leading(i).degree();

  // Every exponent vector whose leading-monomial product fits the bound,
  // grouped by that product.
  std::unordered_map<Monomial, std::vector<GeneratorExponents>, MonomialHash> reps;
  GeneratorExponents e(n, 0);
  const auto bound = static_cast<std::uint64_t>(degree_bound);
  std::function<void(std::size_t, std::uint64_t, const Monomial&)> walk =
      [&](std::size_t i, std::uint64_t deg, const Monomial& m) {
        if (i == n) {
          if (deg > 0) reps[m].push_back(e);
          return;
        }
        walk(i + 1, deg, m);
        Monomial cur = m;
        std::uint64_t d = deg;
        while (degs[i] > 0 && d + degs[i] <= bound) {
          cur *= basis.leading(i);
          d += degs[i];
          ++e[i];
          walk(i + 1, d, cur);
        }
        e[i] = 0;
      };
  walk(0, 0, Monomial::unit(nvars));

  std::set<std::pair<GeneratorExponents, GeneratorExponents>> seen;
  std::vector<TeteATete> found;
  for (const auto& [m, list] : reps) {
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        const auto& p = list[x];
        const auto& q = list[y];
        bool overlap = false;
        for (std::size_t i = 0; i < n && !overlap; ++i) overlap = p[i] > 0 && q[i] > 0;
        // An overlapping pair is a multiple of a lower-degree relation.
        if (overlap) continue;
        auto key = p > q ? std::make_pair(p, q) : std::make_pair(q, p);
        if (seen.insert(key).second) found.push_back({key.first, key.second, m});
      }
    }
  }

  std::vector<TeteATete> minimal;
  for (const auto& t : found) {
    bool decomposable = false;
    for (const auto& u : found) {
      if (&u == &t) continue;
      if ((leq(u.a, t.a) && leq(u.b, t.b)) || (leq(u.b, t.a) && leq(u.a, t.b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) minimal.push_back(t);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const TeteATete& l, const TeteATete& r) {
    const auto c = basis.order().compare(l.monomial, r.monomial);
    if (c != 0) return c < 0;
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });
  return minimal;
}

Polynomial tete_a_tete_polynomial(const TeteATete& t, const GeneratorSet& basis) {
  PowerCache cache(basis);
  return cache.product(t.a) - cache.product(t.b);
}

// ---------------------------------------------------------------------------
// Completion

namespace {

/// Exponent vectors with trailing zeros trimmed, so relations stay comparable
/// as the basis grows.
GeneratorExponents trimmed(GeneratorExponents e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

}  // namespace

SagbiResult sagbi_construct(const GeneratorSet& seed, int degree_bound, int max_iterations) {
  if (seed.empty()) throw std::invalid_argument("SAGBI construction needs a nonempty seed");
  if (degree_bound < 1 || max_iterations < 1)
    throw std::invalid_argument("SAGBI bounds must be at least 1");

  SagbiResult result{seed, false, degree_bound, 0};
  GeneratorSet& basis = result.basis;
  const TermOrder& order = basis.order();
  std::set<std::pair<GeneratorExponents, GeneratorExponents>> processed;

  while (result.iterations < max_iterations) {
    ++result.iterations;
    std::vector<TeteATete> fresh;
    for (auto& t : tete_a_tetes(basis, degree_bound))
      if (processed.emplace(trimmed(t.a), trimmed(t.b)).second) fresh.push_back(std::move(t));

    // Subduct against an immutable snapshot; the pass's insertions come after.
    const GeneratorSet& snapshot = basis;
    std::vector<std::optional<Polynomial>> reduced(fresh.size());
    detail::parallel_for(fresh.size(), [&](std::size_t i) {
      reduced[i] = subduct(tete_a_tete_polynomial(fresh[i], snapshot), snapshot).remainder;
    });
    std::vector<Polynomial> remainders;
    for (auto& r : reduced)
      if (!r->is_constant()) remainders.push_back(make_monic(*r, order));
    std::stable_sort(remainders.begin(), remainders.end(),
                     [&order](const Polynomial& l, const Polynomial& r) {
                       return order.less(leading_monomial(l, order), leading_monomial(r, order));
                     });

    std::size_t added = 0;
    for (const auto& r : remainders)
      if (basis.insert(r)) ++added;
    if (added == 0) {
      result.complete = true;
      break;
    }
  }
  return result;
}

Membership is_member(const Polynomial& f, const SagbiResult& result) {
  SubductionResult s = subduct(f, result.basis);
  const bool member = s.remainder.is_constant();
  return {member, member || result.complete, std::move(s)};
}

bool verify_sagbi(const GeneratorSet& basis, const std::vector<Polynomial>& witnesses) {
  return std::all_of(witnesses.begin(), witnesses.end(), [&basis](const Polynomial& w) {
    return subduct(w, basis).remainder.is_constant();
  });
}

std::vector<Polynomial> eliminate(const GeneratorSet& basis,
                                  const std::vector<std::string>& group_variables,
                                  const VarSetPtr& target) {
  std::vector<std::size_t> idx;
  for (const auto& name : group_variables) idx.push_back(basis.variables()->index_of(name));
  std::vector<Polynomial> out;
  for (const auto& g : basis.generators()) {
    const bool free = std::none_of(idx.begin(), idx.end(), [&g](std::size_t i) { return g.uses(i); });
    if (free) out.push_back(change_variables(g, target));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basis files

BasisFileError::BasisFileError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool header(const std::string& line, const std::string& key, std::string& rest) {
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string::npos || line.compare(first, key.size() + 1, key + ":") != 0)
    return false;
  rest = line.substr(first + key.size() + 1);
  return true;
}

}  // namespace

BasisFile parse_basis_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<TermOrder> order;
  std::vector<std::string> eliminate;
  std::vector<Polynomial> polys;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string rest;
    if (header(line, "order", rest)) {
      auto w = words(rest);
      if (w.empty() || w.front() != "lex")
        throw BasisFileError("only 'order: lex <vars>' is supported", lineno, first);
      w.erase(w.begin());
      try {
        order = TermOrder::lex(VariableSet::make(w));
      } catch (const std::exception& e) {
        throw BasisFileError(e.what(), lineno, first);
      }
      continue;
    }
    if (!order) throw BasisFileError("expected 'order:' header first", lineno, first);
    if (header(line, "eliminate", rest)) {
      eliminate = words(rest);
      for (const auto& v : eliminate)
        if (!order->variables()->find(v))
          throw BasisFileError("unknown variable '" + v + "' in eliminate", lineno, first);
      continue;
    }
    if (header(line, "complete", rest) || header(line, "degree_bound", rest) ||
        header(line, "iterations", rest))
      continue;
    try {
      polys.push_back(parse(line, order->variables()));
    } catch (const ParseError& e) {
      throw BasisFileError(e.what(), lineno, e.position());
    }
  }
  if (!order) throw BasisFileError("missing 'order:' header", lineno, 0);
  return {*order, std::move(eliminate), std::move(polys)};
}

std::string format_basis_file(const BasisFile& file) {
  std::string out = file.order.header() + "\n";
  if (!file.eliminate.empty()) {
    out += "eliminate:";
    for (const auto& v : file.eliminate) out += " " + v;
    out += "\n";
  }
  for (const auto& p : file.polynomials) out += format(p, file.order) + "\n";
  return out;
}

std::string format_sagbi_result(const SagbiResult& result) {
  std::string out = result.basis.order().header() + "\n";
  out += std::string("complete: ") + (result.complete ? "true" : "false") + "\n";
  out += "degree_bound: " + std::to_string(result.degree_bound) + "\n";
  out += "iterations: " + std::to_string(result.iterations) + "\n";
  for (const auto& g : result.basis.generators()) out += format(g, result.basis.order()) + "\n";
  return out;
}

}  // namespace screwinv
