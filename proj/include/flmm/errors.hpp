#pragma once

#include <stdexcept>
#include <string>

namespace flmm {

// Exit-code families used by the CLI: 2 validation, 3 numerical/regularity, 4 I/O.
struct Error : std::runtime_error {
    Error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

  private:
    int code_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(2, what) {}
};

struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(3, what) {}
};

// Greeks requested at tau <= 0 or sigma == 0; the limits are +-inf, callers decide.
struct DegenerateExpiryError : NumericalError {
    explicit DegenerateExpiryError(const std::string& what) : NumericalError(what) {}
};

// Appendix condition (3) violated: 1 - lambda*Gamma11 fell below delta0.
struct RegularityError : NumericalError {
    RegularityError(const std::string& what, double t, double s1, double s2, double denom)
        : NumericalError(what), t(t), s1(s1), s2(s2), denom(denom) {}
    double t, s1, s2, denom;
};

struct NonpositivePriceError : NumericalError {
    explicit NonpositivePriceError(const std::string& what) : NumericalError(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(4, what) {}
};

}  // namespace flmm
