#ifndef CSF_ERRORS_HPP
#define CSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csf {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Curve speed |u'| fell below the regularity threshold.
class DegenerateParametrizationError : public Error {
public:
    using Error::Error;
};

/// u'' x u' vanishes at some node; the Frenet frame is undefined there.
class InflectionDegeneracyError : public Error {
public:
    InflectionDegeneracyError(const std::string& msg, int node_index)
        : Error(msg), node(node_index) {}
    int node;
};

/// A time step produced a non-finite or irregular curve.
class StepFailureError : public Error {
public:
    using Error::Error;
};

/// Not enough qualifying snapshots for the singularity fit.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Rescaling requested at or past the singular time.
class InvalidTimeError : public Error {
public:
    using Error::Error;
};

/// Trajectory does not meet the shape required by an analysis routine.
class InvalidTrajectoryError : public Error {
public:
    using Error::Error;
};

/// A PointFrame violates its orthonormality invariants.
class InvalidFrameError : public Error {
public:
    using Error::Error;
};

/// Unknown scenario name or incomplete/unknown parameters.
class ScenarioError : public Error {
public:
    using Error::Error;
};

/// Bad configuration file or option value.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure, reported with the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace csf

#endif
