#include "elias/series.hpp"

#include <algorithm>
#include <sstream>

namespace elias {

SeriesElement SeriesElement::monomial(int branches, int branch, Z exp, Rational c) {
  SeriesElement f(branches);
  if (c != 0) f.coeffs[static_cast<std::size_t>(branch)][exp] = std::move(c);
  return f;
}

bool SeriesElement::is_zero() const {
  for (const auto& b : coeffs)
    if (!b.empty()) return false;
  return true;
}

void SeriesElement::set(int branch, Z exp, Rational c) {
  auto& m = coeffs[static_cast<std::size_t>(branch)];
  if (c == 0)
    m.erase(exp);
  else
    m[exp] = std::move(c);
}

Rational SeriesElement::get(int branch, Z exp) const {
  const auto& m = coeffs[static_cast<std::size_t>(branch)];
  auto it = m.find(exp);
  return it == m.end() ? Rational(0) : it->second;
}

SeriesElement& SeriesElement::add_scaled(const SeriesElement& other, const Rational& c) {
  for (int b = 0; b < branches(); ++b) {
    for (const auto& [e, v] : other.coeffs[static_cast<std::size_t>(b)]) {
      Rational nv = get(b, e) + c * v;
      set(b, e, nv);
    }
  }
  return *this;
}

std::string SeriesElement::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < branches(); ++b) {
    for (const auto& [e, v] : coeffs[static_cast<std::size_t>(b)]) {
      Rational c = v;
      if (first) {
        if (c < 0) {
          os << '-';
          c = -c;
        }
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      if (c != 1 || e == 0) {
        os << c;
        if (e != 0) os << '*';
      }
      if (e != 0) {
        os << names[static_cast<std::size_t>(b)];
        if (e != 1) os << '^' << e;
      }
    }
  }
  if (first) os << '0';
  return os.str();
}

BranchedRingModel BranchedRingModel::semigroup_ring(SemigroupPtr H, Z truncation,
                                                    bool enforce_minimum) {
  Z minimum = 2 * (H->frobenius() + 1) + 2 * H->max_generator();
  if (truncation == 0) truncation = minimum;
  if (enforce_minimum && truncation < minimum)
    throw TruncationTooSmall("semigroup model needs truncation >= " + std::to_string(minimum) +
                             ", got " + std::to_string(truncation));
  if (truncation < 2) throw TruncationTooSmall("truncation must be at least 2");
  BranchedRingModel m;
  m.kind_ = Kind::Semigroup;
  m.branches_ = 1;
  m.truncation_ = truncation;
  m.lower_bound_ = H->max_generator() + 1;
  m.H_ = std::move(H);
  return m;
}

BranchedRingModel BranchedRingModel::semigroup_ring_for(SemigroupPtr H, Z max_value) {
  Z v = std::max<Z>(max_value, 0);
  Z n = 2 * (v + H->frobenius() + 1) + 2 * H->max_generator();
  return semigroup_ring(std::move(H), n);
}

BranchedRingModel BranchedRingModel::axis_ring(int branches, Z truncation, bool enforce_minimum) {
  if (branches < 2) throw InvalidGenerator("axis ring needs at least 2 branches");
  if (branches > 26) throw InvalidGenerator("axis ring branch names limited to a..z");
  if (enforce_minimum && truncation < 4)
    throw TruncationTooSmall("axis model needs truncation >= 4");
  if (truncation < 2) throw TruncationTooSmall("truncation must be at least 2");
  BranchedRingModel m;
  m.kind_ = Kind::Axis;
  m.branches_ = branches;
  m.truncation_ = truncation;
  m.lower_bound_ = 2;
  return m;
}

std::vector<std::string> BranchedRingModel::branch_names() const {
  if (kind_ == Kind::Semigroup) return {"t"};
  std::vector<std::string> names;
  for (int b = 0; b < branches_; ++b) names.push_back(std::string(1, static_cast<char>('a' + b)));
  return names;
}

BranchedRingModel BranchedRingModel::with_truncation(Z n) const {
  BranchedRingModel m = *this;
  m.truncation_ = n;
  return m;
}

std::vector<SeriesElement> BranchedRingModel::maximal_ideal_generators() const {
  std::vector<SeriesElement> gens;
  if (kind_ == Kind::Semigroup) {
    for (Z g : H_->generators()) gens.push_back(SeriesElement::monomial(1, 0, g));
  } else {
    for (int b = 0; b < branches_; ++b) gens.push_back(SeriesElement::monomial(branches_, b, 1));
  }
  return gens;
}

Z BranchedRingModel::max_generator_degree() const {
  return kind_ == Kind::Semigroup ? H_->max_generator() : 1;
}

bool BranchedRingModel::in_ring_below(const SeriesElement& f, Z limit) const {
  if (f.branches() != branches_) return false;
  for (int b = 0; b < branches_; ++b) {
    for (const auto& [e, v] : f.coeffs[static_cast<std::size_t>(b)]) {
      if (e >= limit) continue;
      if (e < 0) return false;
      if (kind_ == Kind::Semigroup && !H_->contains(e)) return false;
    }
  }
  if (kind_ == Kind::Axis) {
    // all branch constant terms must agree
    Rational c0 = f.get(0, 0);
    for (int b = 1; b < branches_; ++b)
      if (f.get(b, 0) != c0) return false;
  }
  return true;
}

SeriesElement BranchedRingModel::multiply(const SeriesElement& a, const SeriesElement& b) const {
  SeriesElement out(branches_);
  for (int br = 0; br < branches_; ++br) {
    const auto& am = a.coeffs[static_cast<std::size_t>(br)];
    const auto& bm = b.coeffs[static_cast<std::size_t>(br)];
    auto& om = out.coeffs[static_cast<std::size_t>(br)];
    for (const auto& [ea, va] : am) {
      for (const auto& [eb, vb] : bm) {
        Z e = ea + eb;
        if (e >= truncation_) continue;
        if (e < -lower_bound_)
          throw InternalDisagreement("series product fell below the exponent floor");
        auto [it, inserted] = om.try_emplace(e, va * vb);
        if (!inserted) {
          it->second += va * vb;
          if (it->second == 0) om.erase(it);
        }
      }
    }
  }
  return out;
}

std::vector<SeriesElement> BranchedRingModel::ring_monomials() const {
  std::vector<SeriesElement> mons;
  if (kind_ == Kind::Semigroup) {
    for (Z h = 0; h < truncation_; ++h)
      if (H_->contains(h)) mons.push_back(SeriesElement::monomial(1, 0, h));
  } else {
    SeriesElement one(branches_);
    for (int b = 0; b < branches_; ++b) one.set(b, 0, 1);
    mons.push_back(one);
    for (int b = 0; b < branches_; ++b)
      for (Z j = 1; j < truncation_; ++j)
        mons.push_back(SeriesElement::monomial(branches_, b, j));
  }
  return mons;
}

int BranchedRingModel::coord(int branch, Z exp) const {
  Z width = truncation_ + lower_bound_;
  return branch * static_cast<int>(width) + static_cast<int>(exp + lower_bound_);
}

std::pair<int, Z> BranchedRingModel::coord_info(int c) const {
  Z width = truncation_ + lower_bound_;
  int branch = c / static_cast<int>(width);
  Z exp = static_cast<Z>(c % static_cast<int>(width)) - lower_bound_;
  return {branch, exp};
}

linalg::SparseVec BranchedRingModel::to_vec(const SeriesElement& f) const {
  linalg::SparseVec v;
  for (int b = 0; b < branches_; ++b)
    for (const auto& [e, c] : f.coeffs[static_cast<std::size_t>(b)]) {
      if (e >= truncation_ || e < -lower_bound_)
        throw InternalDisagreement("series exponent outside the model window");
      v.push(coord(b, e), c);
    }
  std::sort(v.terms.begin(), v.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

SeriesElement BranchedRingModel::from_vec(const linalg::SparseVec& v) const {
  SeriesElement f(branches_);
  for (const auto& [c, val] : v.terms) {
    auto [branch, exp] = coord_info(c);
    f.set(branch, exp, val);
  }
  return f;
}

}  // namespace elias
