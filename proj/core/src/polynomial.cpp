#include "shfc/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "shfc/errors.hpp"

namespace shfc {

template <class K>
Ring<K>::Ring(K field, int num_vars) : field_(std::move(field)), num_vars_(num_vars) {
  if (num_vars < 2 || num_vars > kMaxVars) {
    throw DomainError("number of variables must lie in [2, " + std::to_string(kMaxVars) + "]");
  }
}

template class Ring<PrimeField>;
template class Ring<RationalField>;

namespace {

template <class T>
bool term_before(const T& a, const T& b) {
  return grevlex_compare(a.mono, b.mono) > 0;
}

}  // namespace

template <class K>
Polynomial<K> Polynomial<K>::constant(const Ring<K>& ring, const Element& c) {
  return monomial(ring, Monomial{}, c);
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(const Ring<K>& ring, const Monomial& m, const Element& c) {
  Polynomial p(ring);
  if (!ring.field().is_zero(c)) p.terms_.push_back(Term{m, c});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::variable(const Ring<K>& ring, int k) {
  if (k < 0 || k >= ring.num_vars()) throw DomainError("variable index out of range");
  return monomial(ring, Monomial::variable(k), ring.field().one());
}

template <class K>
Polynomial<K> Polynomial<K>::from_terms(const Ring<K>& ring, std::vector<Term> terms) {
  const K& f = ring.field();
  std::sort(terms.begin(), terms.end(), term_before<Term>);
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
      if (f.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!f.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class K>
bool Polynomial<K>::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

template <class K>
std::optional<int> Polynomial<K>::degree() const noexcept {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mono.degree();
}

template <class K>
typename Polynomial<K>::Element Polynomial<K>::constant_coefficient() const {
  return coefficient(Monomial{});
}

template <class K>
typename Polynomial<K>::Element Polynomial<K>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return ring_.field().zero();
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const Element& c) const {
  return times_term(Monomial{}, c);
}

template <class K>
Polynomial<K> Polynomial<K>::times_term(const Monomial& m, const Element& c) const {
  const K& f = ring_.field();
  Polynomial p(ring_);
  if (f.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a term preserves the order and, in a field, never
  // produces zero coefficients.
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono * m, f.mul(t.coeff, c)});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::substitute_powers(int q) const {
  if (q < 1) throw DomainError("power substitution needs q >= 1");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{t.mono.scaled(q), t.coeff});
  return from_terms(ring_, std::move(terms));
}

template <class K>
Polynomial<K> Polynomial<K>::pow(unsigned e) const {
  Polynomial result = constant(ring_, ring_.field().one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class K>
typename Polynomial<K>::Element Polynomial<K>::evaluate(std::span<const Element> point) const {
  const K& f = ring_.field();
  if (static_cast<int>(point.size()) != ring_.num_vars()) throw DomainError("evaluation point has wrong length");
  Element sum = f.zero();
  for (const auto& t : terms_) {
    Element v = t.coeff;
    for (int k = 0; k < ring_.num_vars(); ++k) {
      for (int e = 0; e < t.mono[k]; ++e) v = f.mul(v, point[k]);
    }
    sum = f.add(sum, v);
  }
  return sum;
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, ring_.field().neg(t.coeff)});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::combine(const Polynomial& b, bool subtract) const {
  if (!(ring_ == b.ring_)) throw RingMismatch();
  const K& f = ring_.field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    int c = i == terms_.size()   ? -1
            : j == b.terms_.size() ? 1
                                   : grevlex_compare(terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      const Term& t = b.terms_[j++];
      r.terms_.push_back(Term{t.mono, subtract ? f.neg(t.coeff) : t.coeff});
    } else {
      Element s = subtract ? f.sub(terms_[i].coeff, b.terms_[j].coeff) : f.add(terms_[i].coeff, b.terms_[j].coeff);
      if (!f.is_zero(s)) r.terms_.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& b) const {
  if (!(ring_ == b.ring_)) throw RingMismatch();
  const K& f = ring_.field();
  std::vector<Term> terms;
  terms.reserve(terms_.size() * b.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : b.terms_) terms.push_back(Term{s.mono * t.mono, f.mul(s.coeff, t.coeff)});
  }
  return from_terms(ring_, std::move(terms));
}

template <class K>
bool Polynomial<K>::operator==(const Polynomial& other) const {
  if (!(ring_ == other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) ||
        !ring_.field().equal(terms_[i].coeff, other.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  const K& f = ring_.field();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string c = f.to_string(terms_[i].coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Monomial& m = terms_[i].mono;
    std::string vars;
    for (int k = 0; k < ring_.num_vars(); ++k) {
      if (m[k] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(k);
      if (m[k] > 1) vars += "^" + std::to_string(m[k]);
    }
    if (vars.empty()) {
      out += c;
    } else if (c == "1") {
      out += vars;
    } else {
      out += c + "*" + vars;
    }
  }
  return out;
}

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    char c = peek();
    ++pos_;
    return c;
  }
  std::string_view digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int small_integer(PolyLexer& lex, std::string_view d) {
  if (d.size() > 6) lex.fail("exponent or index too large");
  return std::stoi(std::string(d));
}

}  // namespace

template <class K>
Polynomial<K> parse_polynomial(const Ring<K>& ring, std::string_view text) {
  using Term = typename Polynomial<K>::Term;
  const K& f = ring.field();
  PolyLexer lex(text);
  std::vector<Term> terms;
  if (lex.done()) lex.fail("empty polynomial");
  bool first = true;
  while (!lex.done()) {
    bool negative = false;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.take();
      negative = c == '-';
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;

    typename K::Element coeff = f.one();
    Monomial mono;
    bool need_variables = true;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      coeff = f.from_decimal(lex.digits());
      need_variables = lex.peek() == '*';
      if (need_variables) lex.take();
    }
    while (need_variables) {
      if (lex.peek() != 'x') lex.fail("expected a variable x<k>");
      lex.take();
      int k = small_integer(lex, lex.digits());
      if (k >= ring.num_vars()) lex.fail("variable x" + std::to_string(k) + " outside the ring");
      int e = 1;
      if (lex.peek() == '^') {
        lex.take();
        e = small_integer(lex, lex.digits());
      }
      mono.set(k, mono[k] + e);
      need_variables = lex.peek() == '*';
      if (need_variables) lex.take();
    }
    terms.push_back(Term{mono, negative ? f.neg(coeff) : coeff});
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <class K>
Polynomial<K> poly_arith(PolyOp op, const Polynomial<K>& f, const Polynomial<K>& g) {
  switch (op) {
    case PolyOp::add:
      return f + g;
    case PolyOp::sub:
      return f - g;
    case PolyOp::mul:
      return f * g;
  }
  throw DomainError("unknown polynomial operation");
}

template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;
template Polynomial<PrimeField> parse_polynomial(const Ring<PrimeField>&, std::string_view);
template Polynomial<RationalField> parse_polynomial(const Ring<RationalField>&, std::string_view);
template Polynomial<PrimeField> poly_arith(PolyOp, const Polynomial<PrimeField>&, const Polynomial<PrimeField>&);
template Polynomial<RationalField> poly_arith(PolyOp, const Polynomial<RationalField>&,
                                              const Polynomial<RationalField>&);

}  // namespace shfc
