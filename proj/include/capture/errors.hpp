#pragma once

#include <stdexcept>
#include <string>

namespace capture {

// Every domain error carries a stable name so the CLI can report it and
// callers can dispatch without string-matching free-form messages.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define CAPTURE_DEFINE_ERROR(NAME)                          \
  class NAME : public Error {                               \
  public:                                                   \
    explicit NAME(const std::string& detail = {})           \
        : Error(#NAME, detail) {}                           \
  }

CAPTURE_DEFINE_ERROR(ParseError);
CAPTURE_DEFINE_ERROR(EmptyWord);
CAPTURE_DEFINE_ERROR(NotAdmissible);
CAPTURE_DEFINE_ERROR(BoundaryAngle);
CAPTURE_DEFINE_ERROR(EmptyCylinder);
CAPTURE_DEFINE_ERROR(Straddles);
CAPTURE_DEFINE_ERROR(AmbiguousPairing);
CAPTURE_DEFINE_ERROR(NotInU0);
CAPTURE_DEFINE_ERROR(NoCaseMatched);
CAPTURE_DEFINE_ERROR(FirstLetterNotBC);
CAPTURE_DEFINE_ERROR(Undecided);
CAPTURE_DEFINE_ERROR(NotEligible);
CAPTURE_DEFINE_ERROR(IdenticalSequences);
CAPTURE_DEFINE_ERROR(Unclassifiable);
CAPTURE_DEFINE_ERROR(PartialOverlap);
CAPTURE_DEFINE_ERROR(DecompositionFailed);
CAPTURE_DEFINE_ERROR(OutOfCatalog);
CAPTURE_DEFINE_ERROR(NotTailOpposite);
CAPTURE_DEFINE_ERROR(SpuriousOccurrence);
CAPTURE_DEFINE_ERROR(BadSplit);
CAPTURE_DEFINE_ERROR(EmptyWindow);
CAPTURE_DEFINE_ERROR(SpecInvalid);

#undef CAPTURE_DEFINE_ERROR

// Parse failures additionally report where in the input they happened.
class WordParseError : public Error {
public:
  WordParseError(std::size_t offset, const std::string& detail)
      : Error("ParseError",
              detail + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace capture
