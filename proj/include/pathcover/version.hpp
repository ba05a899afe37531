#ifndef PATHCOVER_VERSION_HPP
#define PATHCOVER_VERSION_HPP

namespace pathcover {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pathcover

#endif
