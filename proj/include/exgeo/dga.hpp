#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "exgeo/eigen_support.hpp"
#include "exgeo/errors.hpp"

namespace exgeo {

/// Finitely generated graded-commutative differential algebra with declared
/// generator degrees, monomial relations, and differential rules, over an
/// exact coefficient field K (Rational or CRational). The coefficient ring is
/// K[t] when extended by the cone variable t, with d(t^a m) contributing
/// a t^{a-1} dt ^ m.
///
/// Monomials store sorted generator ids; odd-degree generators square to
/// zero, even-degree generators may repeat. d^2 = 0 on every generator is
/// validated by validate(); rule edits re-require validation before d is
/// usable.
template <typename K>
class FormalDGA {
 public:
  struct Generator {
    std::string name;
    int degree;
  };
  using Mono = std::vector<int>;      // sorted generator ids
  using Coeff = std::map<int, K>;     // t-power -> coefficient
  using Element = std::map<Mono, Coeff>;

  FormalDGA(std::vector<Generator> gens, bool extend_by_t)
      : gens_(std::move(gens)), has_t_(extend_by_t) {
    if (has_t_) {
      dt_id_ = static_cast<int>(gens_.size());
      gens_.push_back({"dt", 1});
      rules_[dt_id_] = Element{};  // d(dt) = 0
    }
  }

  int id_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name) return static_cast<int>(i);
    throw InvalidInputError("FormalDGA: unknown generator " + name);
  }
  int dt_id() const {
    if (!has_t_) throw InvalidInputError("FormalDGA: not extended by t");
    return dt_id_;
  }
  int degree_of_gen(int id) const { return gens_[static_cast<std::size_t>(id)].degree; }

  Element zero() const { return {}; }
  Element one() const {
    Element e;
    e[Mono{}][0] = K(1);
    return e;
  }
  Element gen(const std::string& name) const {
    Element e;
    e[Mono{static_cast<int>(id_of(name))}][0] = K(1);
    return e;
  }

  void set_rule(const std::string& name, Element rhs) {
    rules_[id_of(name)] = std::move(rhs);
    validated_ = false;
  }
  void add_relation(const std::vector<std::string>& names) {
    Mono m;
    for (const auto& n : names) m.push_back(id_of(n));
    std::sort(m.begin(), m.end());
    relations_.push_back(std::move(m));
  }

  /// Checks d(d(g)) = 0 for every generator; throws InvalidInputError on
  /// failure. Construction of differentials requires a validated algebra.
  void validate() {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      auto it = rules_.find(static_cast<int>(i));
      if (it == rules_.end())
        throw InvalidInputError("FormalDGA: no differential rule for " + gens_[i].name);
      if (!is_zero(d_raw(it->second)))
        throw InvalidInputError("FormalDGA: d^2 != 0 on generator " + gens_[i].name);
    }
    validated_ = true;
  }

  // ---- algebra operations ----

  Element add(const Element& a, const Element& b) const {
    Element r = a;
    for (const auto& [m, c] : b)
      for (const auto& [p, v] : c) accumulate(&r, m, p, v);
    return r;
  }
  Element negate(const Element& a) const {
    Element r;
    for (const auto& [m, c] : a)
      for (const auto& [p, v] : c) r[m][p] = -v;
    return r;
  }
  Element sub(const Element& a, const Element& b) const { return add(a, negate(b)); }
  Element scale(const K& s, const Element& a) const {
    Element r;
    if (s == K(0)) return r;
    for (const auto& [m, c] : a)
      for (const auto& [p, v] : c) {
        K prod = s * v;
        if (!(prod == K(0))) r[m][p] = prod;
      }
    return r;
  }
  Element times_t(const Element& a, int power) const {
    if (!has_t_ && power != 0)
      throw InvalidInputError("FormalDGA: algebra is not extended by t");
    Element r;
    for (const auto& [m, c] : a)
      for (const auto& [p, v] : c) r[m][p + power] = v;
    return r;
  }

  Element wedge(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Mono merged;
        const int sign = merge_monomials(ma, mb, &merged);
        if (sign == 0 || killed_by_relation(merged)) continue;
        for (const auto& [pa, va] : ca)
          for (const auto& [pb, vb] : cb) {
            K prod = va * vb;
            if (sign < 0) prod = -prod;
            accumulate(&r, merged, pa + pb, prod);
          }
      }
    return r;
  }

  Element d(const Element& a) const {
    if (!validated_)
      throw InvalidInputError("FormalDGA: differential used before validate()");
    return d_raw(a);
  }

  /// Differential without the d^2 = 0 certificate; used to exhibit the exact
  /// obstruction term of an inconsistent rule set.
  Element d_raw(const Element& a) const {
    Element r;
    for (const auto& [m, c] : a) {
      // coefficient part: d(t^p) = p t^{p-1} dt
      if (has_t_) {
        for (const auto& [p, v] : c) {
          if (p == 0) continue;
          Element dtm;
          dtm[Mono{dt_id_}][0] = K(1);
          Element mono_elem;
          mono_elem[m][0] = K(Rational(p)) * v;
          auto term = wedge(dtm, mono_elem);
          for (const auto& [mm, cc] : term)
            for (const auto& [pp, vv] : cc) accumulate(&r, mm, pp + (p - 1), vv);
        }
      }
      // Leibniz over the monomial
      for (std::size_t pos = 0; pos < m.size(); ++pos) {
        int presign = 1;
        for (std::size_t q = 0; q < pos; ++q)
          if (degree_of_gen(m[q]) % 2 != 0) presign = -presign;
        auto rule_it = rules_.find(m[pos]);
        if (rule_it == rules_.end())
          throw InvalidInputError("FormalDGA: missing rule in d()");
        Element prefix = one(), suffix = one();
        Mono mp(m.begin(), m.begin() + static_cast<long>(pos));
        Mono ms(m.begin() + static_cast<long>(pos) + 1, m.end());
        prefix.clear();
        prefix[mp][0] = K(1);
        suffix.clear();
        suffix[ms][0] = K(1);
        Element term = wedge(wedge(prefix, rule_it->second), suffix);
        for (const auto& [mm, cc] : term)
          for (const auto& [pp, vv] : cc)
            for (const auto& [p, v] : c) {
              K prod = v * vv;
              if (presign < 0) prod = -prod;
              accumulate(&r, mm, pp + p, prod);
            }
      }
    }
    return r;
  }

  bool is_zero(const Element& a) const {
    for (const auto& [m, c] : a)
      for (const auto& [p, v] : c)
        if (!(v == K(0))) return false;
    return true;
  }
  bool equal(const Element& a, const Element& b) const { return is_zero(sub(a, b)); }

  int degree(const Element& a) const {
    for (const auto& [m, c] : a) {
      int deg = 0;
      for (int id : m) deg += degree_of_gen(id);
      return deg;
    }
    return 0;
  }

  std::string str(const Element& a) const {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a)
      for (const auto& [p, v] : c) {
        if (v == K(0)) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_str(v) << ")";
        if (p != 0) os << " t^" << p;
        for (int id : m) os << " " << gens_[static_cast<std::size_t>(id)].name;
      }
    return first ? "0" : os.str();
  }

  const std::vector<Generator>& generators() const { return gens_; }

 private:
  static std::string coeff_str(const K& v);

  static void accumulate(Element* r, const Mono& m, int p, const K& v) {
    if (v == K(0)) return;
    auto& coeff = (*r)[m];
    auto it = coeff.find(p);
    if (it == coeff.end()) {
      coeff.emplace(p, v);
    } else {
      it->second += v;
      if (it->second == K(0)) coeff.erase(it);
    }
    if (coeff.empty()) r->erase(m);
  }

  // Koszul merge of two sorted monomials; 0 when an odd generator repeats.
  int merge_monomials(const Mono& a, const Mono& b, Mono* out) const {
    out->clear();
    out->reserve(a.size() + b.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    // Track the parity of the total degree of the remaining part of `a`.
    std::vector<int> suffix_parity(a.size() + 1, 0);
    for (long k = static_cast<long>(a.size()) - 1; k >= 0; --k)
      suffix_parity[static_cast<std::size_t>(k)] =
          (suffix_parity[static_cast<std::size_t>(k) + 1] +
           degree_of_gen(a[static_cast<std::size_t>(k)])) % 2;
    while (i < a.size() && j < b.size()) {
      if (a[i] <= b[j]) {
        out->push_back(a[i++]);
      } else {
        // b[j] jumps over the remaining a-part
        if (degree_of_gen(b[j]) % 2 != 0 && suffix_parity[i] != 0) sign = -sign;
        out->push_back(b[j++]);
      }
    }
    while (i < a.size()) out->push_back(a[i++]);
    while (j < b.size()) out->push_back(b[j++]);
    // odd generators may not repeat
    for (std::size_t k = 0; k + 1 < out->size(); ++k)
      if ((*out)[k] == (*out)[k + 1] && degree_of_gen((*out)[k]) % 2 != 0) return 0;
    return sign;
  }

  bool killed_by_relation(const Mono& m) const {
    for (const auto& rel : relations_) {
      std::size_t i = 0, j = 0;
      bool contains = true;
      while (i < rel.size()) {
        while (j < m.size() && m[j] < rel[i]) ++j;
        if (j >= m.size() || m[j] != rel[i]) {
          contains = false;
          break;
        }
        ++i;
        ++j;
      }
      if (contains) return true;
    }
    return false;
  }

  std::vector<Generator> gens_;
  bool has_t_ = false;
  int dt_id_ = -1;
  std::map<int, Element> rules_;
  std::vector<Mono> relations_;
  bool validated_ = false;
};

template <>
inline std::string FormalDGA<Rational>::coeff_str(const Rational& v) {
  return v.str();
}
template <>
inline std::string FormalDGA<CRational>::coeff_str(const CRational& v) {
  return v.str();
}

/// Conjugation of a complex DGA element under a generator involution.
FormalDGA<CRational>::Element dga_conj(const FormalDGA<CRational>& dga,
                                       const FormalDGA<CRational>::Element& a,
                                       const std::map<int, int>& swap);

}  // namespace exgeo
