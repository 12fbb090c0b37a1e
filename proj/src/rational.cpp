#include "hamgraph/rational.hpp"

#include <cctype>
#include <numeric>

namespace hg {

static bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Q parse_rational(const std::string& s) {
    size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    size_t slash = s.find('/');
    bool ok = slash == std::string::npos ? all_digits(s, start, s.size())
                                         : all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
    if (!ok) throw Error("BadRational", "not a rational: '" + s + "'");
    std::string t = s[0] == '+' ? s.substr(1) : s;
    Q q;
    if (slash == std::string::npos) {
        q = Q(Z(t));
    } else {
        Z d(s.substr(slash + 1));
        if (d == 0) throw Error("BadRational", "zero denominator: '" + s + "'");
        q = Q(Z(t.substr(0, t.find('/'))), d);
        q.canonicalize();
    }
    return q;
}

std::string str(const Q& q) { return q.get_str(); }
std::string str(const Z& z) { return z.get_str(); }

long to_ll(const Z& z) {
    if (!z.fits_slong_p()) throw Error("Overflow", "integer too large: " + z.get_str());
    return z.get_si();
}

Z floor_div(const Z& a, const Z& b) {
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Z floor_q(const Q& q) { return floor_div(q.get_num(), q.get_den()); }

long gcd_ll(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace hg
