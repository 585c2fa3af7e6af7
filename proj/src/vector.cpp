#include "bjorth/vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bjorth/errors.hpp"

namespace bjorth {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sizes " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

bool Vector::is_exact_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](double c) { return c == 0.0; });
}

Vector Vector::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > coords_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "slice out of range");
  }
  return Vector(std::vector<double>(coords_.begin() + offset,
                                    coords_.begin() + offset + len));
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other[i];
  return *this;
}

Vector& Vector::operator*=(double c) {
  for (double& x : coords_) x *= c;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator-(Vector a) {
  for (double& x : a.coords()) x = -x;
  return a;
}
Vector operator*(double c, Vector v) { return v *= c; }
Vector operator*(Vector v, double c) { return v *= c; }

Vector concat(std::span<const Vector> parts) {
  std::vector<double> out;
  for (const Vector& p : parts) {
    out.insert(out.end(), p.coords().begin(), p.coords().end());
  }
  return Vector(std::move(out));
}

double euclidean_norm(const Vector& v) {
  double scale = 0.0;
  for (double c : v.coords()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double c : v.coords()) {
    const double r = c / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

double max_abs_diff(const Vector& a, const Vector& b) {
  require_same_size(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    if (i) out += ", ";
    out += buf;
  }
  return out + ")";
}

double functional_apply(const Functional& f, const Vector& v) {
  require_same_size(f.size(), v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += f[i] * v[i];
  return sum;
}

}  // namespace bjorth
