#include <bondlab/rational.hpp>
#include <bondlab/error.hpp>

namespace bondlab {

auto to_string(const Rational & r) -> std::string
{
    return numerator(r).str() + "/" + denominator(r).str();
}

auto parse_rational(std::string_view text) -> Rational
{
    try {
        auto slash = text.find('/');
        BigInt p(std::string(text.substr(0, slash)));
        BigInt q = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(text.substr(slash + 1)));
        if (q == 0)
            throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    catch (const Error &) {
        throw;
    }
    catch (const std::exception &) {
        throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    }
}

} // namespace bondlab
