#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dpbps {

enum class SurfaceKind { P2, P1xP1, Blowup };

/// A del Pezzo surface: P^2, P^1 x P^1, or the blowup S_r of P^2 in r general
/// points (1 <= r <= 8). P^2 is treated as S_0 wherever r matters.
class Surface {
 public:
  static Surface p2() { return Surface(SurfaceKind::P2, 0); }
  static Surface p1xp1() { return Surface(SurfaceKind::P1xP1, 0); }
  /// S_r; r = 0 gives P^2.
  static Surface blowup(int r);

  SurfaceKind kind() const { return kind_; }
  /// Number of blown-up points (0 for P^2 and P^1 x P^1).
  int r() const { return r_; }
  int rank() const { return kind_ == SurfaceKind::P1xP1 ? 2 : r_ + 1; }
  int euler() const { return kind_ == SurfaceKind::P1xP1 ? 4 : r_ + 3; }
  /// True for P^2 and S_r, i.e. surfaces with the basis (h; e_1..e_r).
  bool is_plane_blowup() const { return kind_ != SurfaceKind::P1xP1; }

  /// "P2", "P1xP1" or "S<r>".
  std::string name() const;

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  Surface(SurfaceKind kind, int r) : kind_(kind), r_(r) {}
  SurfaceKind kind_;
  int r_;
};

/// A divisor class written in the basis (h; e_1..e_r), meaning
/// d*h - sum a_i e_i with coeffs = (d, a_1, .., a_r), or (a, b) meaning
/// a*h1 + b*h2 on P^1 x P^1.
struct DivClass {
  std::vector<std::int64_t> coeffs;

  DivClass() = default;
  explicit DivClass(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}

  std::size_t size() const { return coeffs.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs[i]; }
  bool is_zero() const;

  DivClass& operator+=(const DivClass& o);
  DivClass& operator-=(const DivClass& o);
  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator*(std::int64_t k, DivClass a);
  DivClass operator-() const { return -1 * *this; }

  friend bool operator==(const DivClass&, const DivClass&) = default;
  friend auto operator<=>(const DivClass&, const DivClass&) = default;
};

/// Throws InvalidClass unless the class has the surface's rank.
void require_class(const Surface& s, const DivClass& c);

/// Build a class, checking its length against the surface.
DivClass make_class(const Surface& s, std::vector<std::int64_t> coeffs);
DivClass zero_class(const Surface& s);
/// e_i on S_r (1-based).
DivClass exceptional(const Surface& s, int i);
/// The pullback of the hyperplane class h (P^2 / S_r only).
DivClass hyperplane(const Surface& s);

std::int64_t intersect(const Surface& s, const DivClass& a, const DivClass& b);
DivClass canonical_class(const Surface& s);
DivClass anticanonical_class(const Surface& s);
/// Anticanonical degree w = (-K).beta.
std::int64_t degree_w(const Surface& s, const DivClass& beta);
/// p_a = beta(beta+K)/2 + 1.
std::int64_t arithmetic_genus(const Surface& s, const DivClass& beta);

/// "(d;a1,...,ar)", "(d)" on P^2, "(a,b)" on P^1 x P^1.
std::string format_class(const Surface& s, const DivClass& c);
/// "S5:(4;2,1,1,1,1)".
std::string format_token(const Surface& s, const DivClass& c);

Surface parse_surface(std::string_view text);
DivClass parse_class(const Surface& s, std::string_view text);

struct Token {
  Surface surface;
  DivClass beta;
};
Token parse_token(std::string_view text);

}  // namespace dpbps
