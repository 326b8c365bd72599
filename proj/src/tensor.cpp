#include "qlie/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace qlie {

bool TensorKeyLess::operator()(const TensorKey& a, const TensorKey& b) const {
  int ta = 0, tb = 0;
  for (const auto& x : a) ta += x.degree().total();
  for (const auto& x : b) tb += x.degree().total();
  if (ta != tb) return ta < tb;
  return a < b;  // slotwise canonical order
}

TensorElement::TensorElement(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("tensor arity must be >= 1");
}

LaurentPoly TensorElement::coeff(const TensorKey& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TensorElement::add_term(const TensorKey& t, const LaurentPoly& c) {
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tensor term arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  if (rhs.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [t, c] : rhs.terms_) add_term(t, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  if (rhs.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [t, c] : rhs.terms_) add_term(t, -c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out(arity_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
  return out;
}

TensorElement TensorElement::scaled(const LaurentPoly& c) const {
  TensorElement out(arity_);
  if (c.is_zero()) return out;
  for (const auto& [t, v] : terms_) {
    LaurentPoly p = v * c;
    if (!p.is_zero()) out.terms_.emplace(t, std::move(p));
  }
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) os << "(x)";
      os << t[i].to_string();
    }
  }
  return os.str();
}

Degree tuple_degree(const TensorKey& t) {
  Degree d{};
  for (const auto& b : t) d = d + b.degree();
  return d;
}

TensorElement tensor_product(const std::vector<AlgebraElement>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_product of no factors");
  std::vector<std::pair<TensorKey, LaurentPoly>> acc{{{}, LaurentPoly::constant(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<TensorKey, LaurentPoly>> next;
    next.reserve(acc.size() * f.term_count());
    for (const auto& [key, c] : acc)
      for (const auto& [b, cb] : f.terms()) {
        TensorKey nk = key;
        nk.push_back(b);
        next.emplace_back(std::move(nk), c * cb);
      }
    acc = std::move(next);
  }
  TensorElement out(static_cast<int>(factors.size()));
  for (auto& [k, c] : acc) out.add_term(k, c);
  return out;
}

TensorElement twist(const TensorElement& t) {
  if (t.arity() != 2) throw std::invalid_argument("twist requires arity 2");
  TensorElement out(2);
  for (const auto& [key, c] : t.terms()) out.add_term({key[1], key[0]}, c);
  return out;
}

TensorElement cyclic(const TensorElement& t) {
  if (t.arity() != 3) throw std::invalid_argument("cyclic requires arity 3");
  TensorElement out(3);
  for (const auto& [key, c] : t.terms()) out.add_term({key[1], key[2], key[0]}, c);
  return out;
}

TensorElement diag_action(const BasisElement& x, const TensorElement& t) {
  TensorElement out(t.arity());
  for (const auto& [key, c] : t.terms()) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      AlgebraElement br = basis_bracket(x, key[i]);
      for (const auto& [nb, cc] : br.terms()) {
        TensorKey nk = key;
        nk[i] = nb;
        out.add_term(nk, c * cc);
      }
    }
  }
  return out;
}

TensorElement diag_action(const AlgebraElement& x, const TensorElement& t) {
  TensorElement out(t.arity());
  for (const auto& [bx, cx] : x.terms()) out += diag_action(bx, t).scaled(cx);
  return out;
}

TensorElement wedge(const AlgebraElement& a, const AlgebraElement& b) {
  return tensor_product({a, b}) - tensor_product({b, a});
}

bool in_im_one_minus_tau(const TensorElement& t) {
  if (t.arity() != 2)
    throw std::invalid_argument("in_im_one_minus_tau requires arity 2");
  return (t + twist(t)).is_zero();
}

TensorElement graded_component(const TensorElement& t, Degree d) {
  TensorElement out(t.arity());
  for (const auto& [key, c] : t.terms())
    if (tuple_degree(key) == d) out.add_term(key, c);
  return out;
}

}  // namespace qlie
