#pragma once

#include <stdexcept>
#include <string>

namespace padmm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph construction and spectral utilities.
class InvalidEdge : public Error { public: using Error::Error; };
class DisconnectedGraph : public Error { public: using Error::Error; };
class NotSymmetric : public Error { public: using Error::Error; };
class NotPSD : public Error { public: using Error::Error; };
class ZeroMatrix : public Error { public: using Error::Error; };

// Model and solver.
class NonFinite : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class NonFiniteObjective : public Error { public: using Error::Error; };
class SolverDidNotConverge : public Error { public: using Error::Error; };

// Engine and privacy.
class ScheduleInvalid : public Error { public: using Error::Error; };
class ThetaConditionViolated : public Error { public: using Error::Error; };
class InvalidScale : public Error { public: using Error::Error; };
class IsolatedNode : public Error { public: using Error::Error; };

// Analysis.
class NotInColumnSpace : public Error { public: using Error::Error; };
class NotStronglyConvex : public Error { public: using Error::Error; };
class UnknownSchedule : public Error { public: using Error::Error; };
class IterationOutOfRange : public Error { public: using Error::Error; };
class LengthMismatch : public Error { public: using Error::Error; };

// Data pipeline.
class EmptyAfterFiltering : public Error { public: using Error::Error; };
class UnknownLabelValue : public Error { public: using Error::Error; };
class TooManyNodes : public Error { public: using Error::Error; };

// Generic argument/configuration/IO failures.
class InvalidArgument : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

}  // namespace padmm
