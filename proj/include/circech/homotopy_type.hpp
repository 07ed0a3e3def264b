#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace circech {

// Homotopy type of a Cech complex of circular arcs: either a single odd
// sphere S^(2l+1) or a bouquet of a even spheres S^(2l).
//
// Bouquets with a == 0 are all the one-point space, so the factory folds them
// onto wedge(0, 0). Equality and ordering therefore compare spaces, not the
// way they were spelled.
class HomotopyType {
 public:
  enum class Kind { kOddSphere, kWedgeEven };

  static HomotopyType odd_sphere(int l);
  static HomotopyType wedge(std::int64_t a, int l);
  static HomotopyType point() { return wedge(0, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_odd_sphere() const noexcept { return kind_ == Kind::kOddSphere; }
  int l() const noexcept { return l_; }
  // Number of wedge summands; 0 for odd spheres.
  std::int64_t a() const noexcept { return a_; }

  // Dimension of the spheres involved (0 for the point).
  int sphere_dimension() const noexcept;

  // 0 for odd spheres, a + 1 for bouquets.
  std::int64_t euler_characteristic() const noexcept;

  // Reduced-free Betti vector b_0, b_1, ... with trailing zeros trimmed.
  std::vector<std::int64_t> betti() const;

  // "point", "S^3", "S^0", "wedge^4(S^2)".
  std::string display() const;

  friend auto operator<=>(const HomotopyType&, const HomotopyType&) = default;

 private:
  HomotopyType(Kind kind, int l, std::int64_t a) : kind_(kind), l_(l), a_(a) {}

  Kind kind_;
  int l_;
  std::int64_t a_;
};

// Inverse of HomotopyType::betti for vectors that come from a wedge of
// spheres. Throws std::logic_error for anything else.
HomotopyType homotopy_type_from_betti(const std::vector<std::int64_t>& betti);

}  // namespace circech
