#ifndef USEQ_VERSION_HPP
#define USEQ_VERSION_HPP

namespace useq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace useq

#endif  // USEQ_VERSION_HPP
