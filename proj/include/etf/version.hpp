#ifndef ETF_VERSION_HPP
#define ETF_VERSION_HPP

namespace etf {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace etf

#endif  // ETF_VERSION_HPP
