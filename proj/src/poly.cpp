#include "exgeo/poly.hpp"

#include <sstream>

namespace exgeo {

namespace {
void trim(Poly::Exps& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

void Poly::add_term(Exps e, Rational c) {
  if (c.is_zero()) return;
  trim(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exps e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

Poly Poly::derivative(int k) const {
  Poly r;
  const std::size_t idx = static_cast<std::size_t>(k - 1);
  for (const auto& [e, c] : terms_) {
    if (idx >= e.size() || e[idx] == 0) continue;
    Exps d = e;
    const int power = d[idx];
    d[idx] -= 1;
    r.add_term(std::move(d), Rational(power) * c);
  }
  return r;
}

Rational Poly::eval(const VecQ& point) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) term *= point(static_cast<long>(i));
    acc += term;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << " x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

FormP lift(const Form<Rational>& f) {
  FormP out(f.space(), f.degree());
  for (const auto& [m, c] : f.terms()) out.add_term(m, Poly(c));
  return out;
}

FormP exterior_d(const FormP& f) {
  const int n = f.dim();
  FormP out(f.space(), f.degree() + 1);
  if (f.degree() + 1 > n) return out;
  for (const auto& [m, c] : f.terms())
    for (int k = 1; k <= n; ++k) {
      Poly dk = c.derivative(k);
      if (dk.is_zero()) continue;
      FormP dxk(f.space(), 1);
      dxk.add_term(mask_from_indices({k}), Poly(1L));
      FormP term(f.space(), f.degree());
      term.add_term(m, std::move(dk));
      out += wedge(dxk, term);
    }
  return out;
}

std::vector<Poly> position_field(int n) {
  std::vector<Poly> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) v.push_back(Poly::var(k));
  return v;
}

Form<Rational> eval_at(const FormP& f, const VecQ& point) {
  Form<Rational> out(f.space(), f.degree());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.eval(point));
  return out;
}

}  // namespace exgeo
