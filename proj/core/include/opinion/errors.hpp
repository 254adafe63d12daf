#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opinion {

// Malformed content in an input file; carries the location for diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  size_t line() const { return line_; }

 private:
  std::string file_;
  size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested word was never observed in the co-occurrence corpus.
class NotInCorpusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace opinion
