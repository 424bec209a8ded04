#include "gfc/blade.hpp"

#include "gfc/errors.hpp"
#include "gfc/signature.hpp"

namespace gfc {

Blade Blade::generator(int index) {
  if (index < 1 || index > max_dim) {
    throw DomainError("generator index " + std::to_string(index) + " outside 1.." +
                      std::to_string(max_dim));
  }
  return Blade(1u << (index - 1));
}

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    std::uint32_t bit = generator(i).mask();
    if (mask & bit) throw DomainError("repeated generator e" + std::to_string(i) + " in blade");
    mask |= bit;
  }
  return Blade(mask);
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  out.reserve(grade());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string to_string(Blade b, int dim) {
  if (b.is_scalar()) return "Id";
  std::vector<int> idx = b.indices();
  std::string out = "e";
  if (dim <= 9) {
    for (int i : idx) out += static_cast<char>('0' + i);
    return out;
  }
  if (idx.size() == 1) return out + std::to_string(idx.front());
  out += '{';
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(idx[k]);
  }
  return out + '}';
}

}  // namespace gfc
