#include "sharp/mu_scalar.hpp"

#include "sharp/errors.hpp"

namespace sharp {

GaussRational MuScalar::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GaussRational() : it->second;
}

void MuScalar::add_term(int k, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussRational MuScalar::evaluate(const GaussRational& value) const {
  GaussRational sum;
  for (const auto& [k, c] : terms_) {
    if (k < 0 && value.is_zero()) throw PreconditionError("mu^" + std::to_string(k) + " has a pole at mu = 0");
    sum += c * pow(value, k);
  }
  return sum;
}

MuScalar MuScalar::operator-() const {
  MuScalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

MuScalar& MuScalar::operator+=(const MuScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MuScalar& MuScalar::operator-=(const MuScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MuScalar& MuScalar::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

MuScalar operator*(const MuScalar& a, const MuScalar& b) {
  MuScalar r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

std::string to_string(const MuScalar& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (auto it = m.terms().rbegin(); it != m.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")";
    if (it->first != 0) out += "*mu^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace sharp
