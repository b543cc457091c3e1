#include "bcnqkit/rat.hpp"

#include <ostream>
#include <sstream>

namespace bcnq {

std::string Rat::approx_decimal(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    if (is_zero()) return "0";
    // 4 bits per decimal digit is a comfortable overestimate of the needed precision.
    mpf_class f(v_, static_cast<unsigned>((sig_digits + 8) * 4));
    mp_exp_t exp10 = 0;
    std::string mant = f.get_str(exp10, 10, static_cast<std::size_t>(sig_digits));
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    while (mant.size() < static_cast<std::size_t>(sig_digits)) mant.push_back('0');
    std::ostringstream os;
    if (neg) os << '-';
    os << mant[0];
    if (mant.size() > 1) os << '.' << mant.substr(1);
    os << 'e' << (exp10 - 1);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace bcnq
