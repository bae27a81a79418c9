#include "efm/core.hpp"

#include <cctype>

namespace efm {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotACorner: return "NotACorner";
    case ErrorKind::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorKind::InvalidResult: return "InvalidResult";
    case ErrorKind::InvalidRectangles: return "InvalidRectangles";
    case ErrorKind::TooManyRows: return "TooManyRows";
    case ErrorKind::InsufficientVariables: return "InsufficientVariables";
    case ErrorKind::NotReconstructible: return "NotReconstructible";
    case ErrorKind::DegenerateWeight: return "DegenerateWeight";
    case ErrorKind::ParamMismatch: return "ParamMismatch";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotMinimalizable: return "NotMinimalizable";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::CaseValidationFailed: return "CaseValidationFailed";
    case ErrorKind::RoundTripFailed: return "RoundTripFailed";
    case ErrorKind::RestrictionLeak: return "RestrictionLeak";
    case ErrorKind::InconsistentParameters: return "InconsistentParameters";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_signed_digits(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_signed_digits(s))
        throw Error(ErrorKind::InvalidInput, "not an exact integer: '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s));
}

std::vector<std::string_view> split_list(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']')
            throw Error(ErrorKind::InvalidInput, "unbalanced brackets");
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<std::string_view> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    mpz_class num = parse_integer(trim(text.substr(0, slash)));
    auto den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '-')
        throw Error(ErrorKind::InvalidInput, "denominator must be positive");
    mpz_class den = parse_integer(den_text);
    if (den == 0)
        throw Error(ErrorKind::InvalidInput, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

HalfInt abs(HalfInt h) { return h.twice < 0 ? -h : h; }

std::string to_string(HalfInt h)
{
    if (h.twice % 2 == 0)
        return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

HalfInt parse_half_int(std::string_view text)
{
    Rational r = parse_rational(text);
    Rational t = 2 * r;
    if (!is_integer(t))
        throw Error(ErrorKind::InvalidInput, "not a half-integer: '" + std::string(text) + "'");
    if (!t.get_num().fits_slong_p())
        throw Error(ErrorKind::InvalidInput, "half-integer out of range");
    return HalfInt::from_twice(t.get_num().get_si());
}

std::string to_string(const Weight& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(w[i]);
    }
    return out + "]";
}

Weight parse_weight(std::string_view text)
{
    Weight w;
    for (auto item : split_list(text))
        w.push_back(parse_half_int(item));
    return w;
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    for (auto item : split_list(text)) {
        mpz_class v = parse_integer(item);
        if (!v.fits_sint_p())
            throw Error(ErrorKind::InvalidInput, "integer out of range");
        out.push_back(static_cast<int>(v.get_si()));
    }
    return out;
}

} // namespace efm
