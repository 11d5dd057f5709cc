#ifndef CISSA_VERSION_HPP
#define CISSA_VERSION_HPP

namespace cissa {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cissa

#endif
