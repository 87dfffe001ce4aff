#include "ratk/render.hpp"

#include <cmath>

#include "ratk/errors.hpp"

namespace ratk {

namespace {

long escape_step(Complex z0, Complex c, long max_iter) {
  // |z| > max(2, |c|), compared through the squared modulus so the
  // boundary case is not blurred by a sqrt round trip.
  const double bail_sq = std::max(4.0, std::norm(c));
  Complex z = z0;
  for (long step = 0; step <= max_iter; ++step) {
    if (std::norm(z) > bail_sq) return step;
    z = z * z + c;
  }
  return -1;  // not certified within budget
}

void put_pixel(std::vector<unsigned char>& out, long steps) {
  if (steps < 0) {
    out.insert(out.end(), {0, 0, 0});
    return;
  }
  const unsigned s = static_cast<unsigned>(steps);
  out.push_back(static_cast<unsigned char>(32 + (s * 37) % 224));
  out.push_back(static_cast<unsigned char>(16 + (s * 73) % 240));
  out.push_back(static_cast<unsigned char>(64 + (s * 151) % 192));
}

}  // namespace

std::vector<unsigned char> render_ppm(const RenderSpec& spec) {
  if (spec.width < 1 || spec.height < 1 || spec.width > 8192 || spec.height > 8192) {
    throw ValidationError("resolution must be within 1..8192 per side");
  }
  if (!(spec.x1 > spec.x0) || !(spec.y1 > spec.y0)) {
    throw ValidationError("rectangle must have positive extent");
  }
  if (spec.max_iter < 1) throw ValidationError("max_iter must be >= 1");

  const std::string header = "P6\n" + std::to_string(spec.width) + " " +
                             std::to_string(spec.height) + "\n255\n";
  std::vector<unsigned char> out(header.begin(), header.end());
  out.reserve(out.size() + static_cast<size_t>(spec.width) * spec.height * 3);

  const double dx = (spec.x1 - spec.x0) / static_cast<double>(spec.width);
  const double dy = (spec.y1 - spec.y0) / static_cast<double>(spec.height);
  for (long py = 0; py < spec.height; ++py) {
    const double y = spec.y1 - (static_cast<double>(py) + 0.5) * dy;  // top row first
    for (long px = 0; px < spec.width; ++px) {
      const double x = spec.x0 + (static_cast<double>(px) + 0.5) * dx;
      const Complex point(x, y);
      long steps;
      if (spec.mode == RenderSpec::Mode::Parameter) {
        steps = escape_step(Complex(0.0, 0.0), point, spec.max_iter);
      } else {
        steps = escape_step(point, spec.c, spec.max_iter);
      }
      put_pixel(out, steps);
    }
  }
  return out;
}

}  // namespace ratk
