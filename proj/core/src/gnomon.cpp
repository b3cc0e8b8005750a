#include "eulerbrick/gnomon.hpp"

#include <ostream>
#include <sstream>

#include "eulerbrick/factor.hpp"

namespace eulerbrick {

GnomonDescriptor GnomonDescriptor::on_base(u64 base, u64 thickness) {
  if (thickness == 0) throw InvalidInput("gnomon thickness must be positive");
  GnomonDescriptor g;
  g.base = base;
  g.thickness = thickness;
  const u64 middle = add_checked(mul_checked(2, base, "2*base"), thickness, "middle term");
  g.area = mul_checked(middle, thickness, "gnomon area");
  g.first = 2 * base + 1;
  g.middle = HalfInteger::of(middle);
  g.last = add_checked(middle, thickness - 1, "last term");
  return g;
}

std::vector<u64> GnomonDescriptor::terms() const {
  std::vector<u64> out;
  out.reserve(thickness);
  for (u64 v = first; v <= last; v += 2) out.push_back(v);
  return out;
}

ConnectedGnomons connected_gnomons(const PrimitiveTriple& tr) {
  const auto& g = tr.gen;
  return {GnomonDescriptor::on_base(tr.x, mul_checked(2, mul_checked(g.t, g.t))),
          GnomonDescriptor::on_base(tr.y, mul_checked(g.l, g.l))};
}

u64 map_leg(const GeneratingSquare& gen, LegDirection direction) {
  gen.validate();
  if (direction == LegDirection::x_to_y) {
    // ((l + 2t)^2 - l^2) / 2
    return mul_checked(2 * gen.t, add_checked(gen.l, gen.t), "x -> y");
  }
  // (l + t)^2 - t^2
  return mul_checked(gen.l, add_checked(gen.l, mul_checked(2, gen.t)), "y -> x");
}

GnomonDescriptor transform_gnomon(u64 area, u64 new_thickness) {
  if (area == 0 || new_thickness == 0) throw InvalidInput("area and thickness must be positive");
  if (area % new_thickness != 0) {
    throw NotRepresentable("thickness " + std::to_string(new_thickness) + " does not divide area " +
                           std::to_string(area));
  }
  const u64 middle = area / new_thickness;
  if (middle < new_thickness) {
    throw NotRepresentable("middle term " + std::to_string(middle) + " below thickness " +
                           std::to_string(new_thickness));
  }
  if ((middle - new_thickness) % 2 != 0) {
    throw NotRepresentable("middle term " + std::to_string(middle) + " and thickness " +
                           std::to_string(new_thickness) + " differ in parity");
  }
  return GnomonDescriptor::on_base((middle - new_thickness) / 2, new_thickness);
}

GnomonDescriptor scale_gnomon(const GnomonDescriptor& g, u64 k) {
  if (k == 0) throw InvalidInput("scale factor must be positive");
  return GnomonDescriptor::on_base(mul_checked(k, g.base), mul_checked(k, g.thickness));
}

std::vector<u64> admissible_thicknesses(u64 area) {
  std::vector<u64> out;
  for (u64 d : divisors(factorize(area))) {
    const u64 s = area / d;
    if (s >= d && (s - d) % 2 == 0) out.push_back(d);
  }
  return out;
}

bool is_tail_of(const GnomonDescriptor& shorter, const GnomonDescriptor& longer) {
  return shorter.thickness <= longer.thickness && shorter.last == longer.last;
}

bool is_head_of(const GnomonDescriptor& shorter, const GnomonDescriptor& longer) {
  return shorter.thickness <= longer.thickness && shorter.first == longer.first;
}

void write_terms(std::ostream& os, const GnomonDescriptor& g) {
  u64 column = 0;
  for (u64 v = g.first; v <= g.last; v += 2) {
    if (column != 0) os << ' ';
    os << v;
    if (++column == 10) {
      os << '\n';
      column = 0;
    }
  }
  if (column != 0) os << '\n';
}

std::string format_terms(const GnomonDescriptor& g) {
  std::ostringstream os;
  write_terms(os, g);
  return os.str();
}

}  // namespace eulerbrick
