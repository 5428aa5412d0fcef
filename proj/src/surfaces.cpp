#include "gauge/surfaces.hpp"

#include <sstream>

namespace gauge {

SurfaceValidity validate_surface(int g, int r, int a) {
  if (g < 0) return {false, "g < 0"};
  if (r < 0) return {false, "r < 0"};
  if (a != 0 && a != 1) return {false, "a not in {0,1}"};
  if (a == 0) {
    if (r < 1) return {false, "r < 1"};
    if (r > g + 1) return {false, "r > g+1"};
    if ((r - (g + 1)) % 2 != 0) return {false, "r != g+1 mod 2"};
  } else {
    if (r > g) return {false, "r > g"};
  }
  return {true, ""};
}

SurfaceType SurfaceType::make(int g, int r, int a) {
  SurfaceValidity v = validate_surface(g, r, a);
  if (!v.valid) throw UsageError("invalid surface type (" + std::to_string(g) + "," +
                                 std::to_string(r) + "," + std::to_string(a) + "): " + v.reason);
  SurfaceType t;
  t.g = g;
  t.r = r;
  t.a = a;
  return t;
}

SurfaceCase case_of(const SurfaceType& t) {
  if (t.r == 0) return SurfaceCase::NoFixedCircles;
  return t.a == 0 ? SurfaceCase::OrientableQuotient : SurfaceCase::NonorientableQuotient;
}

int g_prime(const SurfaceType& t) {
  if (t.a == 0) return t.g - t.r + 1;
  return (t.g - t.r) % 2 == 0 ? t.g - t.r : t.g - t.r - 1;
}

int eta(const SurfaceType& t) { return (t.r > 0 && t.a == 1) ? 1 : 0; }

SurfaceType reduced_type(const SurfaceType& t) {
  return SurfaceType::make(t.g - g_prime(t), t.r, t.a);
}

std::vector<SurfaceType> enumerate_surfaces(int g_max) {
  if (g_max < 0) throw UsageError("g_max must be non-negative");
  std::vector<SurfaceType> out;
  for (int g = 0; g <= g_max; ++g)
    for (int r = 0; r <= g + 1; ++r)
      for (int a = 0; a <= 1; ++a)
        if (validate_surface(g, r, a).valid) out.push_back(SurfaceType::make(g, r, a));
  return out;
}

std::string render(const SurfaceType& t) {
  std::ostringstream os;
  os << "(" << t.g << "," << t.r << "," << t.a << ")";
  return os.str();
}

}  // namespace gauge
