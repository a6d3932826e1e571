#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include <ordcalc.hpp>

namespace acceptance {

using namespace ordcalc;

struct Result {
    bool pass = true;
    std::string detail;
};

/// Counts checks and keeps the first failure message.
class Tally {
public:
    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++checks_;
        if (ok) return;
        if (failures_++ == 0) first_ = describe();
    }
    std::uint64_t checks() const { return checks_; }
    std::uint64_t failures() const { return failures_; }

    Result result(const std::string& what) const {
        std::ostringstream s;
        s << checks_ << " " << what << ", " << failures_ << " failures";
        if (failures_) s << "; first: " << first_;
        return {failures_ == 0, s.str()};
    }

private:
    std::uint64_t checks_ = 0, failures_ = 0;
    std::string first_;
};

inline Ordinal nat(std::uint64_t k) { return Ordinal(k); }
inline const Ordinal& omega() {
    static const Ordinal w = Ordinal::omega();
    return w;
}

Result criterion_1();
Result criterion_2();
Result criterion_3();
Result criterion_4();
Result criterion_5();
Result criterion_6();
Result criterion_7();
Result criterion_8();
Result criterion_9();
Result criterion_10();
Result criterion_11();
Result criterion_12();

}  // namespace acceptance
