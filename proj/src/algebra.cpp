#include "qlie/algebra.hpp"

#include <sstream>

namespace qlie {

AlgebraElement::AlgebraElement(const BasisElement& b, LaurentPoly c) {
  if (!c.is_zero()) terms_.emplace(b, std::move(c));
}

LaurentPoly AlgebraElement::coeff(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void AlgebraElement::add_term(const BasisElement& b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out;
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const LaurentPoly& c) const {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [b, v] : terms_) {
    LaurentPoly p = v * c;
    if (!p.is_zero()) out.terms_.emplace(b, std::move(p));
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << b.to_string();
  }
  return os.str();
}

namespace {

using K = BasisKind;

LaurentPoly qpow(std::int64_t k) { return LaurentPoly::q_power(k); }

std::int64_t prod(int a, int b) { return static_cast<std::int64_t>(a) * b; }

}  // namespace

AlgebraElement basis_bracket(const BasisElement& a, const BasisElement& b) {
  const K ka = a.kind(), kb = b.kind();

  // degree operators act diagonally by the degree components
  if (ka == K::D1 || ka == K::D2) {
    const int eig = (ka == K::D1) ? b.degree().d1 : b.degree().d2;
    return eig == 0 ? AlgebraElement{}
                    : AlgebraElement(b, LaurentPoly::constant(eig));
  }
  if (kb == K::D1 || kb == K::D2) return -basis_bracket(b, a);

  if (ka == K::D) {
    if (kb == K::E) return AlgebraElement(b, LaurentPoly::constant(2));
    if (kb == K::F) return AlgebraElement(b, LaurentPoly::constant(-2));
    return {};
  }
  if (kb == K::D) return -basis_bracket(b, a);

  const Degree m = a.degree(), k = b.degree();

  if ((ka == K::E && kb == K::E) || (ka == K::F && kb == K::F)) return {};
  if ((ka == K::G && kb == K::H) || (ka == K::H && kb == K::G)) return {};

  if (ka == K::G && kb == K::F)
    return AlgebraElement(BasisElement::at(K::F, m + k), -qpow(prod(m.d1, k.d2)));
  if (ka == K::H && kb == K::F)
    return AlgebraElement(BasisElement::at(K::F, m + k), qpow(prod(m.d2, k.d1)));
  if (ka == K::G && kb == K::E)
    return AlgebraElement(BasisElement::at(K::E, m + k), qpow(prod(m.d2, k.d1)));
  if (ka == K::H && kb == K::E)
    return AlgebraElement(BasisElement::at(K::E, m + k), -qpow(prod(m.d1, k.d2)));

  if ((ka == K::G && kb == K::G) || (ka == K::H && kb == K::H)) {
    LaurentPoly c = qpow(prod(m.d2, k.d1)) - qpow(prod(k.d2, m.d1));
    return AlgebraElement(BasisElement::at(ka, m + k), std::move(c));
  }

  if (ka == K::E && kb == K::F) {
    const Degree s = m + k;
    // branch chosen structurally: both degrees zero
    if (s.is_zero()) return AlgebraElement(BasisElement::d(), qpow(prod(m.d2, k.d1)));
    AlgebraElement out(BasisElement::at(K::G, s), qpow(prod(m.d2, k.d1)));
    out.add_term(BasisElement::at(K::H, s), -qpow(prod(k.d2, m.d1)));
    return out;
  }
  if (ka == K::F && kb == K::E) return -basis_bracket(b, a);
  if ((ka == K::E || ka == K::F) && (kb == K::G || kb == K::H))
    return -basis_bracket(b, a);

  return {};
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms())
      out += basis_bracket(bx, by).scaled(cx * cy);
  return out;
}

}  // namespace qlie
