#include "circech/homotopy_type.hpp"

#include <stdexcept>

#include "circech/errors.hpp"

namespace circech {

HomotopyType HomotopyType::odd_sphere(int l) {
  if (l < 0) throw DomainError("odd sphere index must be >= 0");
  return HomotopyType(Kind::kOddSphere, l, 0);
}

HomotopyType HomotopyType::wedge(std::int64_t a, int l) {
  if (a < 0 || l < 0) throw DomainError("wedge parameters must be >= 0");
  if (a == 0) l = 0;
  return HomotopyType(Kind::kWedgeEven, l, a);
}

int HomotopyType::sphere_dimension() const noexcept {
  return kind_ == Kind::kOddSphere ? 2 * l_ + 1 : 2 * l_;
}

std::int64_t HomotopyType::euler_characteristic() const noexcept {
  return kind_ == Kind::kOddSphere ? 0 : a_ + 1;
}

std::vector<std::int64_t> HomotopyType::betti() const {
  if (kind_ == Kind::kOddSphere) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(2 * l_ + 2), 0);
    b.front() = 1;
    b.back() = 1;
    return b;
  }
  if (l_ == 0) return {a_ + 1};
  std::vector<std::int64_t> b(static_cast<std::size_t>(2 * l_ + 1), 0);
  b.front() = 1;
  b.back() = a_;
  return b;
}

std::string HomotopyType::display() const {
  const std::string sphere = "S^" + std::to_string(sphere_dimension());
  if (kind_ == Kind::kOddSphere) return sphere;
  if (a_ == 0) return "point";
  if (a_ == 1) return sphere;
  return "wedge^" + std::to_string(a_) + "(" + sphere + ")";
}

HomotopyType homotopy_type_from_betti(const std::vector<std::int64_t>& betti) {
  if (betti.empty() || betti.front() < 1) {
    throw std::logic_error("Betti vector of a nonempty complex needs b_0 >= 1");
  }
  if (betti.size() == 1) return HomotopyType::wedge(betti.front() - 1, 0);
  if (betti.front() != 1) {
    throw std::logic_error("disconnected complex with higher homology is not a wedge of spheres");
  }
  std::size_t degree = 0;
  for (std::size_t d = 1; d < betti.size(); ++d) {
    if (betti[d] == 0) continue;
    if (degree != 0) throw std::logic_error("homology in two positive degrees is not a wedge of spheres");
    degree = d;
  }
  if (degree == 0) return HomotopyType::point();
  const auto l = static_cast<int>(degree / 2);
  if (degree % 2 == 1) {
    if (betti[degree] != 1) throw std::logic_error("an odd-degree class must be a single sphere");
    return HomotopyType::odd_sphere(l);
  }
  return HomotopyType::wedge(betti[degree], l);
}

}  // namespace circech
