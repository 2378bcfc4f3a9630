#ifndef HELIOWEED_ERRORS_HPP
#define HELIOWEED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace helioweed {

/* Input fails a type or range invariant. CLI maps this to exit code 2. */
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/* Calendar day outside [1, 365]. */
class DayOutOfRange : public ValidationError {
public:
    explicit DayOutOfRange(int day)
        : ValidationError("day_of_year " + std::to_string(day) + " outside [1, 365]") {}
};

/* The window equation's arccos argument fell below -1: the sun would never
   leave the threshold cone, a regime outside the model's validity. */
class ArgumentBelowNegativeOne : public ValidationError {
public:
    ArgumentBelowNegativeOne(double argument)
        : ValidationError("window equation argument " + std::to_string(argument) +
                          " below -1; inputs outside the model's validity range") {}
};

/* Dose requested at zero delivered flux. */
class ZeroFlux : public ValidationError {
public:
    ZeroFlux() : ValidationError("delivered flux is zero; no dose can accumulate") {}
};

/* Infeasibility-class conditions. CLI maps these to exit code 3. */
class InfeasibilityError : public std::runtime_error {
public:
    explicit InfeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

/* Every day in the planning horizon has an empty solar window. */
class NoWindow : public InfeasibilityError {
public:
    explicit NoWindow(const std::string& detail)
        : InfeasibilityError("no usable solar window in the horizon: " + detail) {}
};

/* The mapping pass fits in neither daylight gap around the solar window. */
class MappingDoesNotFit : public InfeasibilityError {
public:
    explicit MappingDoesNotFit(const std::string& detail)
        : InfeasibilityError("mapping pass does not fit outside the solar window: " + detail) {}
};

}  // namespace helioweed

#endif
