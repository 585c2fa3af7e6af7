#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bjorth {

/// Coordinate tuple in the ambient R^n of a normed space. The space, not the
/// vector, decides which norm applies.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim, 0.0) {}
  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }

  /// Exactly zero in every coordinate.
  bool is_exact_zero() const noexcept;

  /// Contiguous slice [offset, offset + len).
  Vector slice(std::size_t offset, std::size_t len) const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double c);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(double c, Vector v);
Vector operator*(Vector v, double c);

/// Concatenation of part vectors, used for l-infinity sums.
Vector concat(std::span<const Vector> parts);

double euclidean_norm(const Vector& v);
double max_abs_diff(const Vector& a, const Vector& b);

std::string to_string(const Vector& v);

/// A linear functional in dual coordinates; acts by the coordinate dot product.
class Functional {
 public:
  Functional() = default;
  explicit Functional(std::vector<double> coords) : coords_(std::move(coords)) {}
  Functional(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  std::vector<double> coords_;
};

/// f(v). Throws kDimensionMismatch when sizes differ.
double functional_apply(const Functional& f, const Vector& v);

}  // namespace bjorth
