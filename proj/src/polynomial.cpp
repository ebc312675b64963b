#include "trimres/polynomial.hpp"

#include <sstream>

namespace trimres {

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [e, c] = *it;
        std::int64_t lifted = field_.lift(c);
        if (first) {
            if (lifted < 0) os << "-";
        } else {
            os << (lifted < 0 ? " - " : " + ");
        }
        first = false;
        std::int64_t a = lifted < 0 ? -lifted : lifted;
        bool has_var = degree(e) > 0;
        if (a != 1 || !has_var) os << a;
        bool star = (a != 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

}  // namespace trimres
