#pragma once

#include <string_view>

#include "canonica/semigroup.hpp"

namespace canonica {

enum class TrigonalShape { None, ShapeI, ShapeII, ShapeIII };
enum class EbLabel { Quadrics, TrigonalGorenstein, PlaneQuintic, Kunz };

std::string_view to_string(TrigonalShape shape);
std::string_view to_string(EbLabel label);

struct CurveClass {
  int eta = 0;  // #(K \ S) in [0, gamma]
  int mu = 0;   // #(<K> \ K) in [0, gamma]
  bool gorenstein = false;
  bool nearly_gorenstein = false;
  bool kunz = false;
  bool hyperelliptic = false;
};

/// eta, mu and the flags, all from value sets. Throws TrivialSemigroup,
/// GenusTooSmall (g <= 1).
CurveClass classify(const NumericalSemigroup& s);

/// Shapes are tested in the order I, II, III; the first match wins.
TrigonalShape trigonal_shape(const NumericalSemigroup& s);

/// The structural predicates behind the four labels, evaluated
/// independently of each other (used for the exclusivity check).
struct EbConditions {
  bool hyperelliptic = false;
  bool plane_quintic = false;        // S = <4,5>
  bool trigonal_gorenstein = false;  // symmetric, S = {0,g,..,2g-2,2g,->} or <3,g+1>
  bool kunz = false;                 // pseudo-symmetric
};
EbConditions eb_conditions(const NumericalSemigroup& s);

/// Throws GenusTooSmall (g < 3) and NotLinearlyNormal (neither Gorenstein
/// nor nearly Gorenstein).
EbLabel eb_classify(const NumericalSemigroup& s);

}  // namespace canonica
