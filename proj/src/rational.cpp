#include "tropical/rational.hpp"

#include <cctype>
#include <numeric>

#include "tropical/error.hpp"

namespace trop {

namespace {

bool valid_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s) {
    if (!valid_integer_text(s)) throw ValidationError("not a rational number: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    std::string den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ValidationError("not a rational number: '" + s + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vec to_rational(const IntVec& v) {
    Vec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

bool is_zero(const IntVec& v) {
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

long long content(const IntVec& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

bool is_primitive(const IntVec& v) { return content(v) == 1; }

IntVec negate(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

std::pair<IntVec, Rational> primitive_part(const Vec& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : v) {
        Integer k = x.get_num() * (l / x.get_den());
        ints.push_back(k);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    }
    if (g == 0) throw PreconditionError("primitive part of the zero vector");
    IntVec u;
    for (auto& k : ints) {
        Integer q = k / g;
        if (!q.fits_slong_p()) throw PreconditionError("direction entry out of range");
        u.push_back(q.get_si());
    }
    Rational c(g, l);
    c.canonicalize();
    return {u, c};
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const Vec& a, const IntVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) s += a[i] * static_cast<long>(b[i]);
    return s;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (sgn(base) == 0) throw PreconditionError("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

}  // namespace trop
