#ifndef YTWO_ERROR_HPP
#define YTWO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ytwo {

enum class Errc {
  NotUnit,
  ZeroInput,
  BadModulus,
  EvenN,
  NonUnitNorm,
  UnsupportedForm,
  IndexOutOfRange,
  BadParams,
  MixedAmbient,
  NotCliffordGroup,
  NegativeK,
  OddM,
  BadM,
  CapExceeded,
  Mismatch,
  Unsupported,
};

inline std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::NotUnit: return "NotUnit";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::BadModulus: return "BadModulus";
    case Errc::EvenN: return "EvenN";
    case Errc::NonUnitNorm: return "NonUnitNorm";
    case Errc::UnsupportedForm: return "UnsupportedForm";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BadParams: return "BadParams";
    case Errc::MixedAmbient: return "MixedAmbient";
    case Errc::NotCliffordGroup: return "NotCliffordGroup";
    case Errc::NegativeK: return "NegativeK";
    case Errc::OddM: return "OddM";
    case Errc::BadM: return "BadM";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Mismatch: return "Mismatch";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ytwo

#endif  // YTWO_ERROR_HPP
