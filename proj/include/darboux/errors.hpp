#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace darboux {

// Base for all domain errors. `name()` is the stable identifier surfaced by
// the CLI (stderr) and by verification-report witnesses.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}

  const std::string& name() const { return name_; }

private:
  std::string name_;
};

struct NonzeroRemainder : Error {
  explicit NonzeroRemainder(const std::string& d = {}) : Error("NonzeroRemainder", d) {}
};

struct UnsupportedSpec : Error {
  explicit UnsupportedSpec(const std::string& d = {}) : Error("UnsupportedSpec", d) {}
};

struct InsufficientMoments : Error {
  explicit InsufficientMoments(const std::string& d = {}) : Error("InsufficientMoments", d) {}
};

struct IrrationalSupport : Error {
  explicit IrrationalSupport(const std::string& d = {}) : Error("IrrationalSupport", d) {}
};

struct NonpositiveSupport : Error {
  explicit NonpositiveSupport(const std::string& d = {}) : Error("NonpositiveSupport", d) {}
};

struct SingularHankel : Error {
  explicit SingularHankel(const std::string& d = {}) : Error("SingularHankel", d) {}
};

struct PivotOnSpectrum : Error {
  explicit PivotOnSpectrum(const std::string& d = {}) : Error("PivotOnSpectrum", d) {}
};

struct DegenerateMoments : Error {
  explicit DegenerateMoments(int rank, const std::string& d = {})
      : Error("DegenerateMoments", "rank " + std::to_string(rank) + (d.empty() ? "" : "; " + d)),
        rank(rank) {}
  int rank;
};

struct OddGeneralizedTruncation : Error {
  explicit OddGeneralizedTruncation(const std::string& d = {})
      : Error("OddGeneralizedTruncation", d) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& d = {}) : Error("LengthMismatch", d) {}
};

struct SingularPivot : Error {
  explicit SingularPivot(int index, const std::string& d = {})
      : Error("SingularPivot", "index " + std::to_string(index) + (d.empty() ? "" : "; " + d)),
        index(index) {}
  int index;
};

struct SignConditionViolated : Error {
  explicit SignConditionViolated(int index, const std::string& d = {})
      : Error("SignConditionViolated",
              "index " + std::to_string(index) + (d.empty() ? "" : "; " + d)),
        index(index) {}
  int index;
};

struct NotStieltjes : Error {
  explicit NotStieltjes(const std::string& d = {}) : Error("NotStieltjes", d) {}
};

struct DepthExceeded : Error {
  explicit DepthExceeded(const std::string& d = {}) : Error("DepthExceeded", d) {}
};

struct InvalidShift : Error {
  explicit InvalidShift(const std::string& d = {}) : Error("InvalidShift", d) {}
};

struct ParseFailure : Error {
  explicit ParseFailure(const std::string& d = {}) : Error("ParseFailure", d) {}
};

}  // namespace darboux
