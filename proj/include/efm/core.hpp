#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace efm {

using Rational = mpq_class;

// num/den in canonical form; the two-argument mpq_class constructor does not reduce.
inline Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

enum class ErrorKind {
    InvalidParameters,
    InvalidInput,
    NotACorner,
    MoveNotApplicable,
    InvalidResult,
    InvalidRectangles,
    TooManyRows,
    InsufficientVariables,
    NotReconstructible,
    DegenerateWeight,
    ParamMismatch,
    NotMinimal,
    NotMinimalizable,
    PropertyViolation,
    CaseValidationFailed,
    RoundTripFailed,
    RestrictionLeak,
    InconsistentParameters,
    BudgetExceeded,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Reduced "num/den", or just "num" for integers.
std::string to_string(const Rational& r);
// Accepts "n", "-n", "n/d"; rejects decimals and exponents.
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& r);

// Exact half-integer held as twice its value.
struct HalfInt {
    std::int64_t twice = 0;

    static HalfInt from_int(std::int64_t v) { return {2 * v}; }
    static HalfInt from_twice(std::int64_t t) { return {t}; }

    bool is_integer() const { return twice % 2 == 0; }
    Rational to_rational() const { return ratio(static_cast<long>(twice), 2); }

    HalfInt operator-() const { return {-twice}; }
    HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    HalfInt operator+(std::int64_t k) const { return {twice + 2 * k}; }
    HalfInt operator-(std::int64_t k) const { return {twice - 2 * k}; }
    auto operator<=>(const HalfInt&) const = default;
};

HalfInt abs(HalfInt h);
// "5/2", "-3", "0".
std::string to_string(HalfInt h);
HalfInt parse_half_int(std::string_view text);

using Weight = std::vector<HalfInt>;

std::string to_string(const Weight& w);
// "[0,-1,1/2]" or "0,-1,1/2".
Weight parse_weight(std::string_view text);
// Parse "5,5,2" (brackets optional) into integers.
std::vector<int> parse_int_list(std::string_view text);

} // namespace efm
