#include "qlie/basis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlie {

bool order_less(std::span<const std::int64_t> i, std::span<const std::int64_t> j) {
  if (i.size() != j.size())
    throw std::invalid_argument("order_less: tuple length mismatch");
  std::int64_t si = 0, sj = 0;
  for (auto v : i) si += v;
  for (auto v : j) sj += v;
  if (si != sj) return si < sj;
  for (std::size_t p = 0; p < i.size(); ++p)
    if (i[p] != j[p]) return i[p] < j[p];
  return false;
}

const char* kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::E: return "E";
    case BasisKind::F: return "F";
    case BasisKind::G: return "G";
    case BasisKind::H: return "H";
    case BasisKind::D: return "D";
    case BasisKind::D1: return "D1";
    case BasisKind::D2: return "D2";
  }
  return "?";
}

BasisElement BasisElement::at(BasisKind kind, Degree deg) {
  switch (kind) {
    case BasisKind::E:
    case BasisKind::F:
      break;
    case BasisKind::G:
    case BasisKind::H:
      if (deg.is_zero())
        throw std::invalid_argument("G/H do not exist at degree (0,0)");
      break;
    case BasisKind::D:
    case BasisKind::D1:
    case BasisKind::D2:
      if (!deg.is_zero())
        throw std::invalid_argument("degree operators carry no degree");
      break;
  }
  if (deg.d1 < 0 || deg.d2 < 0)
    throw std::invalid_argument("basis degree must be componentwise nonnegative");
  return BasisElement(kind, deg);
}

std::string BasisElement::to_string() const {
  if (is_degree_operator()) return kind_name(kind_);
  std::ostringstream os;
  os << kind_name(kind_) << "[" << deg_.d1 << "," << deg_.d2 << "]";
  return os.str();
}

BasisElement parse_basis_element(const std::string& text) {
  if (text == "D") return BasisElement::d();
  if (text == "D1") return BasisElement::d1();
  if (text == "D2") return BasisElement::d2();
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0)
    throw std::invalid_argument("cannot parse basis element '" + text + "'");
  const std::string head = text.substr(0, colon);
  BasisKind kind;
  if (head == "E") kind = BasisKind::E;
  else if (head == "F") kind = BasisKind::F;
  else if (head == "G") kind = BasisKind::G;
  else if (head == "H") kind = BasisKind::H;
  else throw std::invalid_argument("unknown basis kind '" + head + "'");
  const std::string rest = text.substr(colon + 1);
  auto comma = rest.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected 'K:d1,d2' in '" + text + "'");
  int d1 = 0, d2 = 0;
  try {
    std::size_t used = 0;
    d1 = std::stoi(rest.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    d2 = std::stoi(rest.substr(comma + 1), &used);
    if (used != rest.size() - comma - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad degree in '" + text + "'");
  }
  return BasisElement::at(kind, Degree{d1, d2});
}

std::vector<BasisElement> basis_at(Degree d) {
  if (d.d1 < 0 || d.d2 < 0) return {};
  if (d.is_zero())
    return {BasisElement::at(BasisKind::E, {}), BasisElement::at(BasisKind::F, {}),
            BasisElement::d(), BasisElement::d1(), BasisElement::d2()};
  return {BasisElement::at(BasisKind::E, d), BasisElement::at(BasisKind::F, d),
          BasisElement::at(BasisKind::G, d), BasisElement::at(BasisKind::H, d)};
}

std::vector<BasisElement> basis_up_to(int n) {
  if (n < 0) throw std::invalid_argument("basis_up_to: negative bound");
  std::vector<Degree> degs;
  for (int d1 = 0; d1 <= n; ++d1)
    for (int d2 = 0; d2 + d1 <= n; ++d2) degs.push_back({d1, d2});
  std::sort(degs.begin(), degs.end());
  std::vector<BasisElement> out;
  for (Degree d : degs)
    for (const auto& b : basis_at(d)) out.push_back(b);
  return out;
}

TriangularPart triangular_component(const BasisElement& b) {
  switch (b.kind()) {
    case BasisKind::F: return TriangularPart::Minus;
    case BasisKind::E: return TriangularPart::Plus;
    default: return TriangularPart::Cartan;
  }
}

std::vector<BasisElement> max_commutative_basis(int n) {
  if (n < 0) throw std::invalid_argument("max_commutative_basis: negative bound");
  std::vector<BasisElement> out{BasisElement::d(), BasisElement::d1()};
  for (int m = 1; m <= n; ++m) {
    out.push_back(BasisElement::at(BasisKind::G, {0, m}));
    out.push_back(BasisElement::at(BasisKind::H, {0, m}));
  }
  return out;
}

}  // namespace qlie
