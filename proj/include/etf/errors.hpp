#ifndef ETF_ERRORS_HPP
#define ETF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etf {

enum class ErrorCode {
  kNonHermitian,
  kNonUnimodular,
  kNotTight,
  kNotEquiangular,
  kNotEtf,
  kOrthogonalSet,
  kFullDimension,
  kZeroFirstRowEntry,
  kZeroTripleProduct,
  kNotNormalized,
  kIndexOutOfRange,
  kSearchBudgetExceeded,
  kTooLarge,
  kSizeBudget,
  kInvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kNonUnimodular: return "NonUnimodular";
    case ErrorCode::kNotTight: return "NotTight";
    case ErrorCode::kNotEquiangular: return "NotEquiangular";
    case ErrorCode::kNotEtf: return "NotEtf";
    case ErrorCode::kOrthogonalSet: return "OrthogonalSet";
    case ErrorCode::kFullDimension: return "FullDimension";
    case ErrorCode::kZeroFirstRowEntry: return "ZeroFirstRowEntry";
    case ErrorCode::kZeroTripleProduct: return "ZeroTripleProduct";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSizeBudget: return "SizeBudget";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace etf

#endif  // ETF_ERRORS_HPP
