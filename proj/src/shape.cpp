#include "effalg/shape.hpp"

#include <charconv>
#include <sstream>

#include "effalg/errors.hpp"

namespace effalg {

Shape::Shape(std::vector<int> top) : top_(std::move(top)) {
  if (top_.empty()) throw InputError("shape must have rank >= 1");
  for (int ui : top_) {
    if (ui < 1) throw InputError("shape entries must be >= 1, got " + std::to_string(ui));
  }
  for (int ui : top_) {
    size_ *= static_cast<std::int64_t>(ui) + 1;
    if (size_ > kMaxCarrier) {
      size_ = kMaxCarrier + 1;
      break;
    }
  }
}

void Shape::require_carrier_limit() const {
  if (!fits_carrier_limit()) {
    throw CarrierTooLarge("carrier of E_" + to_string() + " exceeds the limit of " +
                          std::to_string(kMaxCarrier) + " elements");
  }
}

Index Shape::index_of(std::span<const int> coords) const {
  if (coords.size() != top_.size()) throw InputError("coordinate vector has wrong rank");
  std::int64_t index = 0;
  std::int64_t stride = 1;
  for (std::size_t i = 0; i < top_.size(); ++i) {
    if (coords[i] < 0 || coords[i] > top_[i]) throw InputError("coordinate out of range");
    index += coords[i] * stride;
    stride *= top_[i] + 1;
  }
  return static_cast<Index>(index);
}

std::vector<int> Shape::coords_of(Index index) const {
  std::vector<int> coords(top_.size());
  for (std::size_t i = 0; i < top_.size(); ++i) {
    coords[i] = index % (top_[i] + 1);
    index /= top_[i] + 1;
  }
  return coords;
}

bool Shape::contains(std::span<const int> coords) const {
  if (coords.size() != top_.size()) return false;
  for (std::size_t i = 0; i < top_.size(); ++i) {
    if (coords[i] < 0 || coords[i] > top_[i]) return false;
  }
  return true;
}

bool Shape::homogeneous() const noexcept {
  for (int ui : top_) {
    if (ui != top_.front()) return false;
  }
  return true;
}

bool Shape::boolean() const noexcept { return homogeneous() && top_.front() == 1; }

std::string Shape::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < top_.size(); ++i) out << (i ? "," : "") << top_[i];
  out << ')';
  return out.str();
}

Shape parse_shape(const std::string& text) {
  std::vector<int> top;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string_view part(text.data() + pos, comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw InputError("cannot parse shape '" + text + "'");
    }
    top.push_back(value);
    pos = comma + 1;
  }
  return Shape(std::move(top));
}

}  // namespace effalg
