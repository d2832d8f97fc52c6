#pragma once

#include <stdexcept>
#include <string>

namespace dqlin {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// scalar layer
struct DivisionByNonAppreciable : Error { using Error::Error; };
struct ZeroQuaternion : Error { using Error::Error; };
struct NonAppreciable : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };

// matrix layer
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct NotAdjointStructured : Error { using Error::Error; };
struct OddLength : Error { using Error::Error; };

// eigen layer
struct NotHermitian : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct DegenerateCluster : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct MultiplicityMismatch : Error { using Error::Error; };

// low-rank layer
struct BadRank : Error { using Error::Error; };
struct SpectralGapViolation : Error { using Error::Error; };
struct ZeroDominant : Error { using Error::Error; };

// applications layer
struct InfeasibleCount : Error { using Error::Error; };
struct NonUnitEntry : Error { using Error::Error; };
struct CalibrationFailure : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NoGroundTruth : Error { using Error::Error; };
struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& msg, int line_no) : Error(msg), line(line_no) {}
};

}  // namespace dqlin
