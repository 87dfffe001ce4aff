#pragma once

#include <string>
#include <vector>

#include "ratk/sphere.hpp"

namespace ratk {

struct RenderSpec {
  enum class Mode { Parameter, Dynamic };
  double x0 = -2.0, y0 = -1.5, x1 = 1.0, y1 = 1.5;  // rect corners
  long width = 64, height = 64;
  Mode mode = Mode::Parameter;
  Complex c{0.0, 0.0};  // dynamic-plane parameter
  long max_iter = 256;
};

/// Binary PPM (P6) escape-time image, byte-deterministic for fixed
/// inputs. Parameter mode colors c by the escape step of the critical
/// orbit; dynamic mode colors starting points under z^2 + c. Points that
/// never certify escape within the budget render black.
std::vector<unsigned char> render_ppm(const RenderSpec& spec);

}  // namespace ratk
