#include "birat/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace birat {

namespace {

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_[Monomial(p.ctx_->size())] = canon(c);
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  Polynomial p(std::move(ctx));
  if (index >= p.ctx_->size()) throw Error("variable index out of range");
  Monomial m(p.ctx_->size());
  m.exps[index] = 1;
  p.terms_[m] = 1;
  return p;
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (m.size() != p.ctx_->size()) throw Error("monomial size mismatch");
  if (c != 0) p.terms_[std::move(m)] = canon(c);
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == 1;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exps[var]);
  return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, canon(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_ctx(const Polynomial& g) const {
  if (!same_context(ctx_, g.ctx_)) throw Error("polynomial context mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_ctx(g);
  Polynomial r = *this;
  for (const auto& [m, c] : g.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  check_ctx(g);
  Polynomial r = *this;
  for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ctx_);
  if (c == 0) return r;
  Rational cc = canon(c);
  for (const auto& [m, k] : terms_) r.terms_[m] = k * cc;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_ctx(g);
  Polynomial r(ctx_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : g.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error("negative power");
  Polynomial r = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
  return same_context(ctx_, g.ctx_) && terms_ == g.terms_;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

Polynomial Polynomial::lift_to(const ContextPtr& target) const {
  std::vector<int> where(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    where[i] = target->index_of(ctx_->name(i));
    if (where[i] < 0) throw Error("lift: variable " + ctx_->name(i) + " missing in target context");
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm(target->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) mm.exps[where[i]] = m.exps[i];
    r.add_term(mm, c);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ctx_->size()) throw Error("substitute: wrong image count");
  ContextPtr tgt = images.empty() ? ctx_ : images.front().context();
  Polynomial r(tgt);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(tgt, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.exps[i] > 0) t = t * images[i].pow(m.exps[i]);
    r = r + t;
  }
  return r;
}

namespace {

// Serialized term order: total degree descending, lex descending.
bool print_before(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return print_before(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    Rational c = t->second;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Rational a = neg ? Rational(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
      int e = t->first.exps[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->name(i);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << birat::to_string(a);
    } else {
      if (a != 1) out << birat::to_string(a) << "*";
      out << mono;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const ContextPtr& ctx;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  std::string read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("expected integer at position " + std::to_string(start) + " in: " + s);
    return s.substr(start, pos - start);
  }

  std::string read_identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    }
    if (pos == start) throw Error("expected identifier at position " + std::to_string(start) + " in: " + s);
    return s.substr(start, pos - start);
  }

  // factor := integer [ '/' integer ] | identifier [ '^' integer ]
  Polynomial parse_factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_integer();
      if (eat('/')) {
        std::string den = read_integer();
        return Polynomial::constant(ctx, parse_rational(num + "/" + den));
      }
      return Polynomial::constant(ctx, parse_rational(num));
    }
    std::string name = read_identifier();
    int idx = ctx->index_of(name);
    if (idx < 0) throw Error("unknown variable '" + name + "' in: " + s);
    int e = 1;
    if (eat('^')) e = std::stoi(read_integer());
    Monomial m(ctx->size());
    m.exps[static_cast<std::size_t>(idx)] = e;
    return Polynomial::monomial(ctx, m, 1);
  }

  Polynomial parse_term() {
    Polynomial t = parse_factor();
    while (eat('*')) t = t * parse_factor();
    return t;
  }

  Polynomial parse() {
    Polynomial r = Polynomial::zero(ctx);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      Polynomial t = parse_term();
      r = neg ? r - t : r + t;
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        throw Error("unexpected character '" + std::string(1, s[pos]) + "' in: " + s);
    }
    return r;
  }
};

}  // namespace

Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text) {
  Parser p{ctx, text};
  p.skip_ws();
  if (p.pos >= text.size()) throw Error("empty polynomial literal");
  Polynomial r = p.parse();
  return r;
}

}  // namespace birat
