#include "dpbps/blowdown.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "dpbps/classes.hpp"
#include "dpbps/error.hpp"

namespace dpbps {

std::string_view to_string(ContractionStatus status) {
  switch (status) {
    case ContractionStatus::Identity: return "Identity";
    case ContractionStatus::Complete: return "Complete";
    case ContractionStatus::Incomplete: return "Incomplete";
  }
  return "?";
}

DivClass apply_word(const Surface& s, DivClass x, const std::vector<DivClass>& word) {
  for (const auto& alpha : word) x = reflect(s, x, alpha);
  return x;
}

namespace {

// Depth-first search for `need` more lines, disjoint from everything chosen.
bool extend_disjoint(const Surface& s, const std::vector<DivClass>& lines, std::size_t start,
                     std::vector<DivClass>& chosen, std::size_t need, std::vector<DivClass>& extra) {
  if (extra.size() == need) return true;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const DivClass& l = lines[i];
    bool ok = std::none_of(chosen.begin(), chosen.end(), [&](const DivClass& c) { return c == l || intersect(s, c, l) != 0; });
    if (!ok) continue;
    chosen.push_back(l);
    extra.push_back(l);
    if (extend_disjoint(s, lines, i + 1, chosen, need, extra)) return true;
    chosen.pop_back();
    extra.pop_back();
  }
  return false;
}

// Finds reflections carrying the exceptional configuration (hclass; config)
// to the standard basis (h; e_1..e_r). The degree of hclass drops strictly
// under each Cremona reflection h - e_i - e_j - e_k; transpositions then sort
// the lines.
std::optional<std::vector<DivClass>> normalize_configuration(const Surface& s, DivClass hclass,
                                                             std::vector<DivClass> config) {
  const int r = s.r();
  const DivClass h = hyperplane(s);
  std::vector<DivClass> word;
  auto apply = [&](const DivClass& alpha) {
    hclass = reflect(s, hclass, alpha);
    for (auto& e : config) e = reflect(s, e, alpha);
    word.push_back(alpha);
  };

  const int max_steps = 64 * s.rank();
  while (hclass != h) {
    if (r < 3 || static_cast<int>(word.size()) > max_steps) return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return hclass[static_cast<std::size_t>(a)] > hclass[static_cast<std::size_t>(b)]; });
    DivClass alpha = h - exceptional(s, idx[0]) - exceptional(s, idx[1]) - exceptional(s, idx[2]);
    if (intersect(s, hclass, alpha) >= 0) return std::nullopt;
    apply(alpha);
  }
  for (int i = 1; i <= r; ++i) {
    const DivClass& e = config[static_cast<std::size_t>(i - 1)];
    int j = 0;
    for (int k = i; k <= r; ++k)
      if (e == exceptional(s, k)) j = k;
    if (j == 0) return std::nullopt;
    if (j != i) apply(exceptional(s, i) - exceptional(s, j));
  }
  return word;
}

Contraction identity(const Surface& s, const DivClass& beta, ContractionStatus status) {
  Contraction c{s, beta, s, beta, 0, {}, {}, status};
  return c;
}

}  // namespace

Contraction contract(const Surface& s, const DivClass& beta) {
  std::vector<DivClass> lines_l = orthogonal_lines(s, beta);  // throws NotNef
  if (s.kind() != SurfaceKind::Blowup || lines_l.empty() || intersect(s, beta, beta) <= 0)
    return identity(s, beta, ContractionStatus::Identity);

  const int r = s.r();
  const int eta = static_cast<int>(lines_l.size());
  Contraction out = identity(s, beta, ContractionStatus::Incomplete);
  out.eta = eta;
  out.contracted_lines = lines_l;

  std::vector<DivClass> chosen = lines_l;
  std::vector<DivClass> extra;
  const auto& all_lines = enumerate_lines(s);
  if (extend_disjoint(s, all_lines, 0, chosen, static_cast<std::size_t>(r - eta), extra)) {
    std::vector<DivClass> config = extra;
    config.insert(config.end(), lines_l.begin(), lines_l.end());
    // -K = 3h - sum e_i, so h = (-K + sum E_i) / 3 for any exceptional configuration.
    DivClass sum = anticanonical_class(s);
    for (const auto& e : config) sum += e;
    for (auto c : sum.coeffs)
      if (c % 3 != 0) throw Error(ErrorKind::Internal, "disjoint lines do not form an exceptional configuration");
    DivClass hclass(sum.coeffs);
    for (auto& c : hclass.coeffs) c /= 3;
    auto word = normalize_configuration(s, hclass, config);
    if (!word) return out;
    DivClass moved = apply_word(s, beta, *word);
    for (int i = r - eta + 1; i <= r; ++i)
      if (moved[static_cast<std::size_t>(i)] != 0) throw Error(ErrorKind::Internal, "contracted coordinate is nonzero");
    out.weyl_word = std::move(*word);
    out.target_surface = Surface::blowup(r - eta);
    out.target_class = DivClass(std::vector<std::int64_t>(moved.coeffs.begin(), moved.coeffs.begin() + (r - eta + 1)));
    out.status = ContractionStatus::Complete;
    return out;
  }

  if (eta != r - 1) return out;
  // r - 1 disjoint lines that blow down to P^1 x P^1: the two rulings are the
  // conics orthogonal to every contracted line.
  std::vector<DivClass> rulings;
  for (const auto& c : enumerate_conics(s))
    if (std::all_of(lines_l.begin(), lines_l.end(), [&](const DivClass& l) { return intersect(s, c, l) == 0; }))
      rulings.push_back(c);
  if (rulings.size() != 2 || intersect(s, rulings[0], rulings[1]) != 1) return out;
  const DivClass& h1 = rulings[0];
  const DivClass& h2 = rulings[1];
  const DivClass& l0 = lines_l[0];
  // Standard model: S_r -> S_2 -> P1xP1 with h1 = h - e1, h2 = h - e2 and the
  // last contraction along h - e1 - e2.
  std::vector<DivClass> config{h2 - l0, h1 - l0};
  config.insert(config.end(), lines_l.begin() + 1, lines_l.end());
  auto word = normalize_configuration(s, h1 + h2 - l0, config);
  if (!word) return out;
  DivClass moved = apply_word(s, beta, *word);
  for (int i = 3; i <= r; ++i)
    if (moved[static_cast<std::size_t>(i)] != 0) throw Error(ErrorKind::Internal, "contracted coordinate is nonzero");
  if (moved[0] != moved[1] + moved[2]) throw Error(ErrorKind::Internal, "class is not a pullback from P1xP1");
  out.weyl_word = std::move(*word);
  out.target_surface = Surface::p1xp1();
  out.target_class = DivClass({moved[1], moved[2]});
  out.status = ContractionStatus::Complete;
  return out;
}

}  // namespace dpbps

namespace dpbps {

DivClass pull_back(const Surface& from, const DivClass& c, const Surface& to) {
  require_class(from, c);
  if (from == to) return c;
  if (to.kind() == SurfaceKind::P1xP1 || (from.kind() == SurfaceKind::P1xP1 && to.r() < 2) || from.r() > to.r())
    throw Error(ErrorKind::InvalidClass, "no blowup map " + to.name() + " -> " + from.name());
  DivClass out = zero_class(to);
  if (from.kind() == SurfaceKind::P1xP1) {
    out.coeffs[0] = c[0] + c[1];
    out.coeffs[1] = c[0];
    out.coeffs[2] = c[1];
  } else {
    for (std::size_t i = 0; i < c.size(); ++i) out.coeffs[i] = c[i];
  }
  return out;
}

}  // namespace dpbps
