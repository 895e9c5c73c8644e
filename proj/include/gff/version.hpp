#ifndef GFF_VERSION_HPP
#define GFF_VERSION_HPP

namespace gff {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace gff

#endif  // GFF_VERSION_HPP
