#pragma once

#include <sstream>
#include <string>
#include <utility>

#include "opk/errors.hpp"
#include "opk/operad.hpp"

namespace opk {

// Runs the instances of one law into a shared report: failures carry the
// law name, window_error counts as a skip (aggregated on destruction, never
// silently dropped), and collection stops once the failure budget is spent.
class LawScope {
public:
    LawScope(CheckReport& report, std::string law, int max_failures)
        : report_(report), law_(std::move(law)), max_failures_(max_failures) {}

    ~LawScope() {
        if (window_skips_ > 0) {
            std::ostringstream os;
            os << law_ << ": " << window_skips_
               << " instance(s) outside stored windows";
            report_.skip(os.str());
        }
    }

    bool saturated() const {
        return static_cast<int>(report_.failures.size()) >= max_failures_;
    }

    template <typename Fn>
    void instance(Fn&& fn) {
        if (saturated()) return;
        try {
            fn();
            ++report_.checked;
        } catch (const window_error&) {
            ++window_skips_;
        }
    }

    void fail_instance(const std::string& detail) {
        report_.fail(law_ + ": " + detail);
    }

private:
    CheckReport& report_;
    std::string law_;
    int max_failures_;
    long long window_skips_ = 0;
};

}  // namespace opk
