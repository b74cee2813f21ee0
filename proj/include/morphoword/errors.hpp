// Error types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphoword {

/// Base class of all errors thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values over incompatible alphabets were combined.
class alphabet_mismatch_error : public error {
 public:
  using error::error;
};

/// Malformed textual input: morphism rules, number literals, words.
class parse_error : public error {
 public:
  using error::error;
};

/// A lazy morphic image scanned `budget` consecutive empty letter images
/// without producing output; the image is possibly a finite word.
class fuel_exhausted_error : public error {
 public:
  explicit fuel_exhausted_error(std::size_t budget)
      : error("morphic image produced no letter after scanning " +
              std::to_string(budget) +
              " consecutive empty images (scan budget " +
              std::to_string(budget) + "); the image may be finite"),
        budget_(budget) {}

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

/// An enumeration exceeded its configured size cap.
class limit_exceeded_error : public error {
 public:
  using error::error;
};

/// Arithmetic left the exactly-representable range.
class overflow_error : public error {
 public:
  using error::error;
};

/// A symbolic result disagrees with a conclusive brute-force verdict.
/// Carries a structured JSON counterexample report.
class verification_error : public error {
 public:
  verification_error(const std::string& what, std::string report_json)
      : error(what), report_(std::move(report_json)) {}

  const std::string& report() const { return report_; }

 private:
  std::string report_;
};

}  // namespace morphoword
