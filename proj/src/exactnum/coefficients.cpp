#include "newform_weyl/exactnum/coefficients.hpp"

namespace nw {

std::string_view to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::Full:
      return "full";
    case CoefficientKind::Newform:
      return "newform";
  }
  return "unknown";
}

}  // namespace nw
