#include "lietrees/nc_poly.hpp"

#include "lietrees/errors.hpp"

namespace lietrees {

NcPoly NcPoly::constant(std::size_t alphabet, std::size_t truncation, const BigInt& c) {
  NcPoly p(alphabet, truncation);
  p.add({}, c);
  return p;
}

NcPoly NcPoly::letter(std::size_t alphabet, std::size_t truncation, unsigned i) {
  NcPoly p(alphabet, truncation);
  if (truncation >= 1) p.add({static_cast<std::uint8_t>(i)}, 1);
  return p;
}

void NcPoly::add(const Word& w, const BigInt& c) {
  if (w.size() > truncation_)
    throw DomainError("word of length " + std::to_string(w.size()) + " exceeds truncation " +
                      std::to_string(truncation_));
  for (auto x : w)
    if (x < 1 || x > alphabet_) throw DomainError("letter X" + std::to_string(x) + " outside the alphabet");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

NcPoly NcPoly::homogeneous_part(std::size_t degree) const { return degree_range(degree, degree); }

NcPoly NcPoly::degree_range(std::size_t lo, std::size_t hi) const {
  NcPoly p(alphabet_, truncation_);
  for (const auto& [w, c] : terms_)
    if (w.size() >= lo && w.size() <= hi) p.terms_.emplace(w, c);
  return p;
}

NcPoly NcPoly::truncated(std::size_t truncation) const {
  NcPoly p(alphabet_, truncation);
  for (const auto& [w, c] : terms_)
    if (w.size() <= truncation) p.terms_.emplace(w, c);
  return p;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const BigInt& s) {
  if (s == 0) terms_.clear();
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly p(std::max(a.alphabet_, b.alphabet_), std::min(a.truncation_, b.truncation_));
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    if (wa.size() > p.truncation_) break;  // words are sorted by length
    for (const auto& [wb, cb] : b.terms_) {
      if (wa.size() + wb.size() > p.truncation_) break;
      w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      p.add(w, ca * cb);
    }
  }
  return p;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + c.get_str();
    if (w.empty()) continue;
    out += "·";
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? " X" : "X") + std::to_string(w[k]);
  }
  return out;
}

}  // namespace lietrees
