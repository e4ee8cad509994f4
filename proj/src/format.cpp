#include "hcf/format.hpp"

#include <sstream>

namespace hcf {

std::string format_gaussian_int(const GaussianInt& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.re != 0) out += g.re.str();
    if (g.im != 0) {
        if (g.im == 1)
            out += out.empty() ? "i" : "+i";
        else if (g.im == -1)
            out += "-i";
        else {
            if (g.im > 0 && !out.empty()) out += "+";
            out += g.im.str() + "i";
        }
    }
    return out;
}

GaussianInt parse_gaussian_int(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw error("bad Gaussian integer \"" + text + "\": " + why);
    };
    bool have_re = false, have_im = false;
    BigInt re = 0, im = 0;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-'");
        }
        std::string digits;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
        bool imag = pos < text.size() && text[pos] == 'i';
        if (imag) ++pos;
        if (digits.empty() && !imag) fail("expected digits or 'i'");
        BigInt mag = digits.empty() ? BigInt(1) : BigInt(digits);
        if (imag) {
            if (have_im) fail("two imaginary parts");
            have_im = true;
            im = sign * mag;
        } else {
            if (have_re) fail("two real parts");
            have_re = true;
            re = sign * mag;
        }
    }
    if (!have_re && !have_im) fail("empty");
    return {re, im};
}

std::string format_gaussian_rational(const GaussianRational& q) {
    if (q.is_gaussian_int()) return format_gaussian_int(q.num());
    std::string n = format_gaussian_int(q.num());
    bool simple = q.num().re == 0 || q.num().im == 0;
    return (simple ? n : "(" + n + ")") + "/" + q.den().str();
}

std::string format_field_element(const FieldElement& v) {
    if (v.is_rational()) return format_gaussian_rational(v.rational());
    std::ostringstream os;
    const auto& f = *v.field();
    std::string d = format_gaussian_int(GaussianInt(f.m(), f.n()));
    if (!v.x().is_zero()) os << format_gaussian_rational(v.x()) << " + ";
    os << "(" << format_gaussian_rational(v.y()) << ")*sqrt(" << d << ")";
    return os.str();
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::H: return "H";
        case Algorithm::T: return "T";
        case Algorithm::D: return "D";
    }
    return "?";
}

std::string status_string(ExpansionStatus s) {
    switch (s) {
        case ExpansionStatus::Finite: return "finite";
        case ExpansionStatus::Periodic: return "periodic";
        case ExpansionStatus::MinusOneTail: return "minus-one-tail";
        case ExpansionStatus::Truncated: return "truncated";
    }
    return "?";
}

namespace {
std::string join(const std::vector<PartialQuotient>& qs, const char* sep) {
    std::string out;
    for (size_t i = 0; i < qs.size(); ++i) {
        if (i) out += sep;
        out += format_gaussian_int(qs[i].value);
    }
    return out;
}
} // namespace

std::string format_expansion_human(const Expansion& e) {
    std::string out = "[" + format_gaussian_int(e.initial) + ";";
    bool any = false;
    if (!e.preperiod.empty()) {
        out += " " + join(e.preperiod, ", ");
        any = true;
    }
    if (!e.period.empty()) {
        out += any ? ", " : " ";
        out += "over(" + join(e.period, ", ") + ")";
        any = true;
    }
    out += "]";
    return out;
}

std::string format_expansion_paper(const Expansion& e) {
    std::string out = "[" + format_gaussian_int(e.initial) + ";";
    if (!e.preperiod.empty()) {
        out += join(e.preperiod, ",");
        if (!e.period.empty()) out += ",";
    }
    if (!e.period.empty()) out += "\\overline{" + join(e.period, ",") + "}";
    out += "]";
    return out;
}

} // namespace hcf
