#include "dpbps/lattice.hpp"

#include <charconv>
#include <sstream>

#include "dpbps/error.hpp"

namespace dpbps {

Surface Surface::blowup(int r) {
  if (r < 0 || r > 8) throw Error(ErrorKind::InvalidClass, "S_r needs 0 <= r <= 8, got " + std::to_string(r));
  return r == 0 ? p2() : Surface(SurfaceKind::Blowup, r);
}

std::string Surface::name() const {
  switch (kind_) {
    case SurfaceKind::P2: return "P2";
    case SurfaceKind::P1xP1: return "P1xP1";
    case SurfaceKind::Blowup: return "S" + std::to_string(r_);
  }
  return "?";
}

bool DivClass::is_zero() const {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

DivClass& DivClass::operator+=(const DivClass& o) {
  if (o.size() != size()) throw Error(ErrorKind::InvalidClass, "adding classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
  if (o.size() != size()) throw Error(ErrorKind::InvalidClass, "subtracting classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

DivClass operator*(std::int64_t k, DivClass a) {
  for (auto& c : a.coeffs) c *= k;
  return a;
}

void require_class(const Surface& s, const DivClass& c) {
  if (static_cast<int>(c.size()) != s.rank())
    throw Error(ErrorKind::InvalidClass, "class of length " + std::to_string(c.size()) + " on " + s.name() +
                                             " (rank " + std::to_string(s.rank()) + ")");
}

DivClass make_class(const Surface& s, std::vector<std::int64_t> coeffs) {
  DivClass c(std::move(coeffs));
  require_class(s, c);
  return c;
}

DivClass zero_class(const Surface& s) { return DivClass(std::vector<std::int64_t>(static_cast<std::size_t>(s.rank()), 0)); }

DivClass exceptional(const Surface& s, int i) {
  if (!s.is_plane_blowup() || i < 1 || i > s.r()) throw Error(ErrorKind::InvalidClass, "no exceptional class e" + std::to_string(i) + " on " + s.name());
  DivClass c = zero_class(s);
  c.coeffs[static_cast<std::size_t>(i)] = -1;
  return c;
}

DivClass hyperplane(const Surface& s) {
  if (!s.is_plane_blowup()) throw Error(ErrorKind::InvalidClass, "P1xP1 has no hyperplane class h");
  DivClass c = zero_class(s);
  c.coeffs[0] = 1;
  return c;
}

std::int64_t intersect(const Surface& s, const DivClass& a, const DivClass& b) {
  require_class(s, a);
  require_class(s, b);
  if (s.kind() == SurfaceKind::P1xP1) return a[0] * b[1] + a[1] * b[0];
  std::int64_t v = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) v -= a[i] * b[i];
  return v;
}

DivClass anticanonical_class(const Surface& s) {
  if (s.kind() == SurfaceKind::P1xP1) return DivClass({2, 2});
  std::vector<std::int64_t> c(static_cast<std::size_t>(s.rank()), 1);
  c[0] = 3;
  return DivClass(std::move(c));
}

DivClass canonical_class(const Surface& s) { return -anticanonical_class(s); }

std::int64_t degree_w(const Surface& s, const DivClass& beta) {
  return intersect(s, anticanonical_class(s), beta);
}

std::int64_t arithmetic_genus(const Surface& s, const DivClass& beta) {
  const std::int64_t twice = intersect(s, beta, beta) - degree_w(s, beta);
  if (twice % 2 != 0)
    throw Error(ErrorKind::Internal, "beta^2 + K.beta is odd for " + format_class(s, beta));
  return twice / 2 + 1;
}

std::string format_class(const Surface& s, const DivClass& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == 1) os << (s.is_plane_blowup() ? ";" : ",");
    else if (i > 1) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

std::string format_token(const Surface& s, const DivClass& c) { return s.name() + ":" + format_class(s, c); }

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::Parse, "cannot parse '" + std::string(text) + "': " + why);
}

std::int64_t parse_int(std::string_view whole, std::string_view part) {
  std::int64_t v = 0;
  if (part.empty()) parse_fail(whole, "empty integer");
  auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
  if (ec != std::errc() || ptr != part.data() + part.size()) parse_fail(whole, "bad integer '" + std::string(part) + "'");
  return v;
}

std::vector<std::int64_t> parse_list(std::string_view whole, std::string_view body) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    out.push_back(parse_int(whole, body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Surface parse_surface(std::string_view text) {
  if (text == "P2") return Surface::p2();
  if (text == "P1xP1") return Surface::p1xp1();
  if (text.size() == 2 && text[0] == 'S' && text[1] >= '1' && text[1] <= '8') return Surface::blowup(text[1] - '0');
  parse_fail(text, "surface must be P2, P1xP1 or S1..S8");
}

DivClass parse_class(const Surface& s, std::string_view text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') parse_fail(text, "class must be parenthesised");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> coeffs;
  if (s.kind() == SurfaceKind::P2) {
    coeffs.push_back(parse_int(text, body));
  } else if (s.kind() == SurfaceKind::P1xP1) {
    coeffs = parse_list(text, body);
  } else {
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) parse_fail(text, "expected (d;a1,...,ar)");
    coeffs.push_back(parse_int(text, body.substr(0, semi)));
    auto rest = parse_list(text, body.substr(semi + 1));
    coeffs.insert(coeffs.end(), rest.begin(), rest.end());
  }
  return make_class(s, std::move(coeffs));
}

Token parse_token(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) parse_fail(text, "expected SURFACE:CLASS");
  Surface s = parse_surface(text.substr(0, colon));
  return Token{s, parse_class(s, text.substr(colon + 1))};
}

}  // namespace dpbps
