#include "slopekit/layered.hpp"

#include <string>

#include "slopekit/detail/checked.hpp"
#include "slopekit/error.hpp"

namespace slopekit {

BasicSlice::BasicSlice(Slope front, Slope back, Sign sign) : front_(front), back_(back), sign_(sign) {
  if (!farey_adjacent(front_, back_)) {
    throw DomainError(ErrorCode::NotAdjacent,
                      "basic slice " + to_string(front_) + " -> " + to_string(back_) + " is not a Farey edge");
  }
}

namespace {

FareyPath checked_chain(std::vector<Slope> slopes, std::size_t sign_count) {
  if (slopes.size() < 2) throw DomainError(ErrorCode::OutOfDomain, "slice path needs at least two slopes");
  if (slopes.size() != sign_count + 1) {
    throw DomainError(ErrorCode::OutOfDomain, "slice path has " + std::to_string(slopes.size()) + " slopes but " +
                                                  std::to_string(sign_count) + " signs");
  }
  return FareyPath(std::move(slopes));
}

}  // namespace

SlicePath::SlicePath(std::vector<Slope> slopes, std::vector<Sign> signs)
    : chain_(checked_chain(std::move(slopes), signs.size())), signs_(std::move(signs)) {}

BasicSlice SlicePath::slice(std::size_t i) const { return BasicSlice(slopes().at(i), slopes().at(i + 1), signs_.at(i)); }

SlicePath SlicePath::negated() const {
  std::vector<Sign> flipped;
  flipped.reserve(signs_.size());
  for (const Sign s : signs_) flipped.push_back(-s);
  return SlicePath(slopes(), std::move(flipped));
}

SlicePath concatenate(const SlicePath& a, const SlicePath& b) {
  if (a.slopes().back() != b.slopes().front()) {
    throw DomainError(ErrorCode::NotAdjacent, "cannot stack slice paths: " + to_string(a.slopes().back()) +
                                                  " != " + to_string(b.slopes().front()));
  }
  std::vector<Slope> slopes = a.slopes();
  slopes.insert(slopes.end(), b.slopes().begin() + 1, b.slopes().end());
  std::vector<Sign> signs = a.signs();
  signs.insert(signs.end(), b.signs().begin(), b.signs().end());
  return SlicePath(std::move(slopes), std::move(signs));
}

namespace {

// The primitive vector along `next` making det(from, .) = +1.
CurveClass positively_oriented_after(const CurveClass& from, const Slope& next) {
  const CurveClass v = next.direction();
  const Int d = det(from, v);
  if (d == 1) return v;
  if (d == -1) return -v;
  throw DomainError(ErrorCode::NotAdjacent, to_string(from.slope()) + " and " + to_string(next) + " are not Farey neighbours");
}

EulerClass signed_difference(Sign sign, const CurveClass& from, const CurveClass& to) {
  const Vec2 d = to.vec() - from.vec();
  return sign == Sign::Plus ? d : -d;
}

}  // namespace

EulerClass slice_euler_contribution(const BasicSlice& slice) {
  const CurveClass front = slice.front().direction();
  const CurveClass back = positively_oriented_after(front, slice.back());
  return signed_difference(slice.sign(), front, back);
}

std::vector<CurveClass> chain_representatives(const SlicePath& path) {
  std::vector<CurveClass> reps{path.slopes().front().direction()};
  for (std::size_t i = 1; i < path.slopes().size(); ++i) {
    reps.push_back(positively_oriented_after(reps.back(), path.slopes()[i]));
  }
  return reps;
}

std::vector<EulerClass> slice_contributions(const SlicePath& path) {
  const auto reps = chain_representatives(path);
  std::vector<EulerClass> out;
  out.reserve(path.slice_count());
  for (std::size_t i = 0; i < path.slice_count(); ++i) {
    out.push_back(signed_difference(path.signs()[i], reps[i], reps[i + 1]));
  }
  return out;
}

EulerClass relative_euler_class(const SlicePath& path) {
  EulerClass total;
  for (const EulerClass& c : slice_contributions(path)) total += c;
  return total;
}

bool is_universally_tight(const SlicePath& path) {
  for (const Sign s : path.signs()) {
    if (s != path.signs().front()) return false;
  }
  return true;
}

bool is_mixed_torus(const SlicePath& path, std::size_t interface) {
  if (interface == 0 || interface >= path.slice_count()) {
    throw DomainError(ErrorCode::BoundaryInterface,
                      "interface " + std::to_string(interface) + " is not interior to a path of " +
                          std::to_string(path.slice_count()) + " slices");
  }
  return path.signs()[interface - 1] != path.signs()[interface];
}

std::vector<Int> negative_continued_fraction(const Slope& s) {
  if (s.is_infinite() || compare_affine(s, Slope(-1)) > 0) {
    throw DomainError(ErrorCode::OutOfDomain, "continued fraction needs a finite slope <= -1, got " + to_string(s));
  }
  std::vector<Int> coefficients;
  if (s == Slope(-1)) return coefficients;

  Int p = s.p();
  Int q = s.q();
  for (;;) {
    const Int r = detail::floor_div(p, q);
    coefficients.push_back(r);
    const Int remainder = detail::checked_sub(p, detail::checked_mul(r, q));  // (p/q - r) * q, in [0, q)
    if (remainder == 0) break;
    // Next term is -1 / (p/q - r) = -q / remainder.
    p = -q;
    q = remainder;
  }
  return coefficients;
}

Int count_tight_solid_torus(const Slope& boundary_slope) {
  const std::vector<Int> cf = negative_continued_fraction(boundary_slope);
  if (cf.empty()) return 1;
  Int count = cf.back();
  for (std::size_t i = 0; i + 1 < cf.size(); ++i) count = detail::checked_mul(count, cf[i] + 1);
  return count < 0 ? -count : count;
}

}  // namespace slopekit
