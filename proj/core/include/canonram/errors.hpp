#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace canonram {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CANONRAM_ERROR(Name)                  \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

CANONRAM_ERROR(NotAClique);
CANONRAM_ERROR(CountOverflow);
CANONRAM_ERROR(WeightExceedsCap);
CANONRAM_ERROR(TooManyEdges);
CANONRAM_ERROR(TooLarge);
CANONRAM_ERROR(TooFewVertices);
CANONRAM_ERROR(NotComplete);
CANONRAM_ERROR(NotBounded);
CANONRAM_ERROR(NoWitness);
CANONRAM_ERROR(SequenceTooShort);
CANONRAM_ERROR(EmptyFinalSet);
CANONRAM_ERROR(RangeViolation);
CANONRAM_ERROR(HypothesisViolated);
CANONRAM_ERROR(InvariantBreach);

#undef CANONRAM_ERROR

/// Malformed input file; carries the 1-based line number of the first offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace canonram
