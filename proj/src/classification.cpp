#include "canonica/classification.hpp"

#include <algorithm>

#include "canonica/errors.hpp"

namespace canonica {

std::string_view to_string(TrigonalShape shape) {
  switch (shape) {
    case TrigonalShape::None: return "NONE";
    case TrigonalShape::ShapeI: return "SHAPE_I";
    case TrigonalShape::ShapeII: return "SHAPE_II";
    case TrigonalShape::ShapeIII: return "SHAPE_III";
  }
  return "?";
}

std::string_view to_string(EbLabel label) {
  switch (label) {
    case EbLabel::Quadrics: return "QUADRICS";
    case EbLabel::TrigonalGorenstein: return "TRIGONAL_GORENSTEIN";
    case EbLabel::PlaneQuintic: return "PLANE_QUINTIC";
    case EbLabel::Kunz: return "KUNZ";
  }
  return "?";
}

CurveClass classify(const NumericalSemigroup& s) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "S = N has no cusp");
  if (s.genus() <= 1)
    throw Error(ErrorKind::GenusTooSmall,
                "genus " + std::to_string(s.genus()) + " is below 2");
  const int gamma = s.frobenius();
  const KappaSet k = kappa_set(s);

  CurveClass c;
  for (int a : k.below)
    if (!s.contains(a)) ++c.eta;

  // <K> up to gamma; K already contains everything above gamma.
  const auto closure = semigroup_closure(k.below, gamma);
  for (int a : closure)
    if (!k.contains(a)) ++c.mu;

  c.gorenstein = c.eta == 0;
  c.kunz = c.eta == 1;
  c.nearly_gorenstein = c.mu == 1;
  c.hyperelliptic = s.contains(2);
  return c;
}

TrigonalShape trigonal_shape(const NumericalSemigroup& s) {
  if (s.is_trivial() || s.genus() < 2)
    throw Error(ErrorKind::GenusTooSmall, "trigonal shape needs genus >= 2");
  const int alpha = s.multiplicity();
  const int gamma = s.frobenius();

  if (alpha >= 3) {
    // I: one run of elements starting at alpha, then gaps, then everything.
    int x = alpha;
    while (x <= gamma && s.contains(x)) ++x;
    if (x <= gamma) {
      bool rest_gaps = true;
      for (int y = x; y <= gamma; ++y)
        if (s.contains(y)) rest_gaps = false;
      if (rest_gaps) return TrigonalShape::ShapeI;
    }
    // II: alpha, alpha+2, ..., alpha+2k, then everything.
    if (gamma > alpha) {
      bool alternating = true;
      for (int y = alpha; y <= gamma; ++y)
        if (s.contains(y) != ((y - alpha) % 2 == 0)) alternating = false;
      if (alternating) return TrigonalShape::ShapeII;
    }
  }
  if (alpha == 3 && s.conductor() != alpha) return TrigonalShape::ShapeIII;
  return TrigonalShape::None;
}

EbConditions eb_conditions(const NumericalSemigroup& s) {
  EbConditions e;
  if (s.is_trivial()) return e;
  const int g = s.genus();
  e.hyperelliptic = s.contains(2);
  static const int quintic_gens[] = {4, 5};
  e.plane_quintic = s == NumericalSemigroup::from_generators(quintic_gens);
  if (is_symmetric(s) && !e.hyperelliptic) {
    std::vector<int> shifted;  // gaps of {0, g, g+1, ..., 2g-2, 2g, ->}
    for (int x = 1; x <= g - 1; ++x) shifted.push_back(x);
    shifted.push_back(2 * g - 1);
    const int trig_gens[] = {3, g + 1};
    const bool trig = (g + 1) % 3 != 0 &&
                      s == NumericalSemigroup::from_generators(trig_gens);
    e.trigonal_gorenstein = s.gaps() == shifted || trig;
  }
  e.kunz = is_pseudo_symmetric(s);
  return e;
}

EbLabel eb_classify(const NumericalSemigroup& s) {
  if (s.is_trivial()) throw Error(ErrorKind::TrivialSemigroup, "S = N has no cusp");
  if (s.genus() < 3)
    throw Error(ErrorKind::GenusTooSmall,
                "genus " + std::to_string(s.genus()) + " is below 3");
  const CurveClass c = classify(s);
  if (!c.gorenstein && !c.nearly_gorenstein)
    throw Error(ErrorKind::NotLinearlyNormal,
                "S is neither symmetric nor nearly Gorenstein (mu = " +
                    std::to_string(c.mu) + ")");
  const EbConditions e = eb_conditions(s);
  if (e.hyperelliptic) return EbLabel::Quadrics;
  if (e.plane_quintic) return EbLabel::PlaneQuintic;
  if (e.trigonal_gorenstein) return EbLabel::TrigonalGorenstein;
  if (e.kunz) return EbLabel::Kunz;
  return EbLabel::Quadrics;
}

}  // namespace canonica
