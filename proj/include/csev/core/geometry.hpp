#pragma once

#include <cmath>

namespace csev::core {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a * s; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

  [[nodiscard]] double norm() const { return std::hypot(x, y); }

  // Zero-length vectors normalize to +x so downstream contact math stays deterministic.
  [[nodiscard]] Vec2 normalized() const {
    const double n = norm();
    if (n <= 0.0) return {1.0, 0.0};
    return {x / n, y / n};
  }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  [[nodiscard]] bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  [[nodiscard]] Vec2 clamp(Vec2 p) const {
    return {std::fmin(std::fmax(p.x, x_min), x_max), std::fmin(std::fmax(p.y, y_min), y_max)};
  }

  [[nodiscard]] Rect inset(double margin) const {
    return {x_min + margin, y_min + margin, x_max - margin, y_max - margin};
  }

  [[nodiscard]] Vec2 center() const { return {(x_min + x_max) * 0.5, (y_min + y_max) * 0.5}; }

  [[nodiscard]] double width() const { return x_max - x_min; }
  [[nodiscard]] double height() const { return y_max - y_min; }
};

// Minimum distance from segment [a, b] to point p.
inline double segment_point_distance(Vec2 a, Vec2 b, Vec2 p) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 <= 0.0) return distance(a, p);
  double t = dot(p - a, ab) / len2;
  t = std::fmin(std::fmax(t, 0.0), 1.0);
  return distance(a + ab * t, p);
}

}  // namespace csev::core
